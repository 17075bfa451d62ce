#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "persuasion/best_response.hpp"
#include "persuasion/instance.hpp"
#include "persuasion/leakage.hpp"
#include "persuasion/scheme.hpp"
#include "persuasion/simplex.hpp"

namespace persuasion {

inline constexpr int kLpMaxN = 12;  // 2 * 2^12 = 8192 variables

// Variable layout shared by the LP builders: mu0 over profile ranks in
// lexicographic order, then mu1. For the binary builders rank r corresponds
// to the bitstring s_1...s_n read as a binary number (s_1 most significant).
inline int lp_var_mu(int state, std::uint64_t rank, std::uint64_t total) {
  return static_cast<int>(static_cast<std::uint64_t>(state) * total + rank);
}

// The k-worst-case persuasiveness LP: maximize the no-leak expected utility
// subject to
//   (1) private persuasiveness per receiver (both signal values),
//   (2) one inequality per (receiver, leak set J with 1 <= |J| <= k, sign
//       pattern), enumerated in canonical order,
//   (3) both distributions normalized (nonnegativity is implicit).
// k = 0 gives OPT-private, k = n-1 gives OPT-public.
inline LinearProgram build_persuasive_lp(const Instance& instance, int k) {
  const int n = instance.n();
  if (n > kLpMaxN)
    throw SizeRefusal("persuasive LP needs 2*2^" + std::to_string(n) + " = " +
                      std::to_string(2 * (std::uint64_t{1} << n)) +
                      " variables; supported up to n = " + std::to_string(kLpMaxN));
  if (k < 0 || k > n - 1) throw std::invalid_argument("k out of range");
  const ProfileSpace space = ProfileSpace::binary(n);
  const std::uint64_t total = space.total();
  LinearProgram lp(static_cast<int>(2 * total));

  for (std::uint64_t r = 0; r < total; ++r) {
    const Rational v = instance.utility()(space.rank_to_mask(r));
    lp.objective[static_cast<std::size_t>(lp_var_mu(0, r, total))] =
        (Rational(1) - instance.lambda()) * v;
    lp.objective[static_cast<std::size_t>(lp_var_mu(1, r, total))] = instance.lambda() * v;
  }

  auto leak_row = [&](int i, const std::vector<std::pair<int, int>>& leaked, int own,
                      Relation rel) {
    std::vector<Rational> row(static_cast<std::size_t>(lp.num_vars), Rational(0));
    for (std::uint64_t r = 0; r < total; ++r) {
      if (space.symbol_at(r, i) != own) continue;
      if (!consistent(leaked, space, r)) continue;
      row[static_cast<std::size_t>(lp_var_mu(0, r, total))] = Rational(1);
      row[static_cast<std::size_t>(lp_var_mu(1, r, total))] = -instance.theta(i);
    }
    lp.add_row(std::move(row), rel, Rational(0));
  };

  for (int i = 0; i < n; ++i) {
    leak_row(i, {}, 1, Relation::le);
    leak_row(i, {}, 0, Relation::ge);
  }
  for (int i = 0; i < n; ++i)
    for (int sz = 1; sz <= k; ++sz)
      for (const auto& senders : combinations_excluding(n, sz, i))
        for (std::uint32_t bits = 0; bits < (1u << sz); ++bits) {
          std::vector<std::pair<int, int>> leaked(static_cast<std::size_t>(sz));
          for (int t = 0; t < sz; ++t)
            leaked[static_cast<std::size_t>(t)] = {senders[static_cast<std::size_t>(t)],
                                                   static_cast<int>(bits >> (sz - 1 - t) & 1)};
          leak_row(i, leaked, 1, Relation::le);
        }
  for (int state : {0, 1}) {
    std::vector<Rational> row(static_cast<std::size_t>(lp.num_vars), Rational(0));
    for (std::uint64_t r = 0; r < total; ++r)
      row[static_cast<std::size_t>(lp_var_mu(state, r, total))] = Rational(1);
    lp.add_row(std::move(row), Relation::eq, Rational(1));
  }
  return lp;
}

// Reads a scheme back out of an LP assignment using the shared layout.
inline SignalingScheme scheme_from_assignment(const ProfileSpace& space,
                                              const std::vector<Rational>& assignment,
                                              std::vector<std::vector<std::string>> symbols = {}) {
  const std::uint64_t total = space.total();
  std::map<std::uint64_t, Rational> mu0, mu1;
  for (std::uint64_t r = 0; r < total; ++r) {
    const auto& p0 = assignment[static_cast<std::size_t>(lp_var_mu(0, r, total))];
    const auto& p1 = assignment[static_cast<std::size_t>(lp_var_mu(1, r, total))];
    if (!p0.is_zero()) mu0[r] = p0;
    if (!p1.is_zero()) mu1[r] = p1;
  }
  return SignalingScheme(space, std::move(mu0), std::move(mu1), std::move(symbols));
}

// Per-receiver response tables over observation ranks. The observation space
// of receiver i under a fixed pattern is (own symbol, in-neighbor symbols in
// ascending sender order), own symbol most significant.
struct ResponseTable {
  std::vector<std::vector<int>> actions;  // [receiver][obs rank] in {0,1}; -1 = unassigned
};

inline ProfileSpace observation_space(const ProfileSpace& space, const LeakagePattern& pattern,
                                      int receiver) {
  std::vector<int> sizes{space.size(receiver)};
  for (int j : pattern.in_neighbors(receiver)) sizes.push_back(space.size(j));
  return ProfileSpace(sizes);
}

inline std::uint64_t observation_rank(const ProfileSpace& space, const LeakagePattern& pattern,
                                      int receiver, std::uint64_t profile_rank,
                                      const ProfileSpace& obs_space) {
  std::vector<int> symbols{space.symbol_at(profile_rank, receiver)};
  for (int j : pattern.in_neighbors(receiver)) symbols.push_back(space.symbol_at(profile_rank, j));
  return obs_space.rank(symbols);
}

// LP over (mu0, mu1) that enforces the given responses as best responses
// (ties resolved in the assigned direction) and maximizes the expected
// downstream utility they induce.
inline LinearProgram build_br_constrained_lp(const Instance& instance, const ProfileSpace& space,
                                             const LeakagePattern& pattern,
                                             const ResponseTable& responses) {
  const int n = instance.n();
  if (pattern.n() != n || space.n() != n)
    throw std::invalid_argument("pattern/alphabet size mismatch");
  const std::uint64_t total = space.total();
  LinearProgram lp(static_cast<int>(2 * total));

  std::vector<ProfileSpace> obs_spaces;
  for (int i = 0; i < n; ++i) obs_spaces.push_back(observation_space(space, pattern, i));
  for (int i = 0; i < n; ++i) {
    if (responses.actions.size() != static_cast<std::size_t>(n) ||
        responses.actions[static_cast<std::size_t>(i)].size() !=
            static_cast<std::size_t>(obs_spaces[static_cast<std::size_t>(i)].total()))
      throw std::invalid_argument("unassigned observation in response table");
    for (int a : responses.actions[static_cast<std::size_t>(i)])
      if (a != 0 && a != 1) throw std::invalid_argument("unassigned observation in response table");
  }

  // Objective: utility of the adopter set the responses induce per profile.
  for (std::uint64_t r = 0; r < total; ++r) {
    SubsetMask adopters = 0;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t o =
          observation_rank(space, pattern, i, r, obs_spaces[static_cast<std::size_t>(i)]);
      if (responses.actions[static_cast<std::size_t>(i)][static_cast<std::size_t>(o)] == 1)
        adopters |= SubsetMask{1} << i;
    }
    const Rational v = instance.utility()(adopters);
    lp.objective[static_cast<std::size_t>(lp_var_mu(0, r, total))] =
        (Rational(1) - instance.lambda()) * v;
    lp.objective[static_cast<std::size_t>(lp_var_mu(1, r, total))] = instance.lambda() * v;
  }

  // One best-response row per (receiver, observation rank).
  for (int i = 0; i < n; ++i) {
    const auto& obs_space = obs_spaces[static_cast<std::size_t>(i)];
    for (std::uint64_t o = 0; o < obs_space.total(); ++o) {
      std::vector<Rational> row(static_cast<std::size_t>(lp.num_vars), Rational(0));
      bool nonempty = false;
      for (std::uint64_t r = 0; r < total; ++r) {
        if (observation_rank(space, pattern, i, r, obs_space) != o) continue;
        row[static_cast<std::size_t>(lp_var_mu(0, r, total))] = Rational(1);
        row[static_cast<std::size_t>(lp_var_mu(1, r, total))] = -instance.theta(i);
        nonempty = true;
      }
      if (!nonempty) continue;
      const int action = responses.actions[static_cast<std::size_t>(i)][static_cast<std::size_t>(o)];
      lp.add_row(std::move(row), action == 1 ? Relation::le : Relation::ge, Rational(0));
    }
  }
  for (int state : {0, 1}) {
    std::vector<Rational> row(static_cast<std::size_t>(lp.num_vars), Rational(0));
    for (std::uint64_t r = 0; r < total; ++r)
      row[static_cast<std::size_t>(lp_var_mu(state, r, total))] = Rational(1);
    lp.add_row(std::move(row), Relation::eq, Rational(1));
  }
  return lp;
}

}  // namespace persuasion
