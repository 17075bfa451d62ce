#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "persuasion/best_response.hpp"
#include "persuasion/instance.hpp"
#include "persuasion/lp_builders.hpp"
#include "persuasion/simplex.hpp"

namespace persuasion {

enum class BruteforceMode { per_information_set, per_profile };

struct BruteforceOutcome {
  Rational value;
  SignalingScheme scheme;
  // Winner description: per-receiver observation tables for
  // per_information_set, an action mask per signal profile for per_profile.
  std::optional<ResponseTable> responses;
  std::vector<SubsetMask> profile_actions;
  std::uint64_t lp_count = 0;
  std::uint64_t winner_index = 0;
};

inline int worker_count(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PERSUASION_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Solves the best-response-constrained LP for explicitly given responses
// (the verification mode of the search).
inline std::pair<Rational, SignalingScheme> solve_for_responses(const Instance& instance,
                                                                const ProfileSpace& space,
                                                                const LeakagePattern& pattern,
                                                                const ResponseTable& responses) {
  const LinearProgram lp = build_br_constrained_lp(instance, space, pattern, responses);
  const LpSolution sol = solve(lp);
  if (sol.status != LpStatus::optimal)
    throw std::runtime_error("response-constrained LP infeasible");
  return {sol.value, scheme_from_assignment(space, sol.assignment)};
}

// Reads the responses a concrete scheme induces (tie = adopt) under the
// pattern, one entry per observation rank of each receiver.
inline ResponseTable responses_of_scheme(const Instance& instance, const SignalingScheme& scheme,
                                         const LeakagePattern& pattern,
                                         BestResponseMode mode = BestResponseMode::standard) {
  const int n = instance.n();
  ResponseTable table;
  table.actions.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const ProfileSpace obs_space = observation_space(scheme.space(), pattern, i);
    auto& row = table.actions[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(obs_space.total()));
    for (std::uint64_t o = 0; o < obs_space.total(); ++o) {
      const auto symbols = obs_space.unrank(o);
      std::vector<std::pair<int, int>> leaked;
      const auto& nbrs = pattern.in_neighbors(i);
      for (std::size_t t = 0; t < nbrs.size(); ++t)
        leaked.emplace_back(nbrs[t], symbols[t + 1]);
      row[static_cast<std::size_t>(o)] =
          best_response(instance, scheme, Observation(i, symbols[0], std::move(leaked)), mode);
    }
  }
  return table;
}

namespace detail {

struct Candidate {
  bool valid = false;
  Rational value;
  std::uint64_t index = 0;

  bool better_than(const Candidate& o) const {
    if (!o.valid) return valid;
    if (!valid) return false;
    if (value != o.value) return value > o.value;
    return index < o.index;  // deterministic tie-break on enumeration order
  }
};

template <typename SolveIndex>
Candidate parallel_argmax(std::uint64_t count, int threads, SolveIndex&& solve_index) {
  std::atomic<std::uint64_t> next{0};
  std::vector<Candidate> best(static_cast<std::size_t>(threads));
  auto work = [&](int who) {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      Candidate c{true, solve_index(i), i};
      if (c.better_than(best[static_cast<std::size_t>(who)]))
        best[static_cast<std::size_t>(who)] = std::move(c);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& t : pool) t.join();
  Candidate overall;
  for (auto& c : best)
    if (c.better_than(overall)) overall = std::move(c);
  return overall;
}

}  // namespace detail

// Exhaustive search for the optimal scheme under a fixed leakage pattern.
// per_information_set enumerates, per receiver, every function from its
// observations to actions (product capped at 10^6 LPs);
// per_profile enumerates an action profile per signal profile (the
// doubly-exponential method, capped at 10^8 LPs). Each enumeration element
// is scored by its best-response-constrained LP; ties resolve to the lowest
// enumeration index regardless of thread scheduling.
inline BruteforceOutcome bruteforce_optimal_responses(const Instance& instance,
                                                      const ProfileSpace& space,
                                                      const LeakagePattern& pattern,
                                                      BruteforceMode mode, int threads = 0) {
  const int n = instance.n();
  if (space.n() != n || pattern.n() != n)
    throw std::invalid_argument("pattern/alphabet size mismatch");
  const std::uint64_t total = space.total();

  if (mode == BruteforceMode::per_information_set) {
    std::vector<std::uint64_t> obs_sizes, fn_counts;
    double estimate = 1;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t m = observation_space(space, pattern, i).total();
      if (m > 20) throw SizeRefusal("observation space too large to enumerate");
      obs_sizes.push_back(m);
      fn_counts.push_back(std::uint64_t{1} << m);
      estimate *= static_cast<double>(fn_counts.back());
    }
    if (estimate > 1e6)
      throw SizeRefusal("per_information_set enumeration exceeds 10^6 LPs");
    std::uint64_t count = 1;
    for (const std::uint64_t f : fn_counts) count *= f;

    auto table_of = [&](std::uint64_t index) {
      ResponseTable table;
      table.actions.resize(static_cast<std::size_t>(n));
      for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t code = index % fn_counts[static_cast<std::size_t>(i)];
        index /= fn_counts[static_cast<std::size_t>(i)];
        auto& row = table.actions[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(obs_sizes[static_cast<std::size_t>(i)]));
        for (std::uint64_t o = 0; o < obs_sizes[static_cast<std::size_t>(i)]; ++o)
          row[static_cast<std::size_t>(o)] = static_cast<int>(code >> o & 1);
      }
      return table;
    };

    const auto winner = detail::parallel_argmax(count, worker_count(threads), [&](std::uint64_t i) {
      const LpSolution sol = solve(build_br_constrained_lp(instance, space, pattern, table_of(i)));
      return sol.status == LpStatus::optimal ? sol.value : Rational(-1);
    });
    BruteforceOutcome out{Rational(0),
                          SignalingScheme(space, {{0, Rational(1)}}, {{0, Rational(1)}}),
                          std::nullopt,
                          {},
                          count,
                          winner.index};
    out.responses = table_of(winner.index);
    auto [value, scheme] = solve_for_responses(instance, space, pattern, *out.responses);
    out.value = std::move(value);
    out.scheme = std::move(scheme);
    return out;
  }

  // per_profile: assignment index is a base-2^n number with one digit (an
  // action mask) per profile rank, rank 0 most significant.
  const std::uint64_t actions_per_profile = std::uint64_t{1} << n;
  double estimate = 1;
  for (std::uint64_t r = 0; r < total; ++r) estimate *= static_cast<double>(actions_per_profile);
  if (estimate > 1e8) throw SizeRefusal("per_profile enumeration exceeds 10^8 LPs");
  const std::uint64_t count = [&] {
    std::uint64_t c = 1;
    for (std::uint64_t r = 0; r < total; ++r) c *= actions_per_profile;
    return c;
  }();

  std::vector<ProfileSpace> obs_spaces;
  for (int i = 0; i < n; ++i) obs_spaces.push_back(observation_space(space, pattern, i));

  auto masks_of = [&](std::uint64_t index) {
    std::vector<SubsetMask> masks(static_cast<std::size_t>(total));
    for (std::uint64_t r = total; r-- > 0;) {
      masks[static_cast<std::size_t>(r)] = index % actions_per_profile;
      index /= actions_per_profile;
    }
    return masks;
  };

  auto lp_of = [&](const std::vector<SubsetMask>& masks) {
    LinearProgram lp(static_cast<int>(2 * total));
    for (std::uint64_t r = 0; r < total; ++r) {
      const Rational v = instance.utility()(masks[static_cast<std::size_t>(r)]);
      lp.objective[static_cast<std::size_t>(lp_var_mu(0, r, total))] =
          (Rational(1) - instance.lambda()) * v;
      lp.objective[static_cast<std::size_t>(lp_var_mu(1, r, total))] = instance.lambda() * v;
    }
    // Per (receiver, observation): collect the actions assigned across the
    // consistent profiles; emit one row per direction that appears.
    for (int i = 0; i < n; ++i) {
      const auto& obs_space = obs_spaces[static_cast<std::size_t>(i)];
      std::vector<int> seen(static_cast<std::size_t>(obs_space.total()), 0);  // bit 0: action 0, bit 1: action 1
      for (std::uint64_t r = 0; r < total; ++r) {
        const std::uint64_t o = observation_rank(space, pattern, i, r, obs_space);
        seen[static_cast<std::size_t>(o)] |=
            (masks[static_cast<std::size_t>(r)] >> i & 1) ? 2 : 1;
      }
      for (std::uint64_t o = 0; o < obs_space.total(); ++o) {
        if (!seen[static_cast<std::size_t>(o)]) continue;
        std::vector<Rational> row(static_cast<std::size_t>(lp.num_vars), Rational(0));
        for (std::uint64_t r = 0; r < total; ++r) {
          if (observation_rank(space, pattern, i, r, obs_space) != o) continue;
          row[static_cast<std::size_t>(lp_var_mu(0, r, total))] = Rational(1);
          row[static_cast<std::size_t>(lp_var_mu(1, r, total))] = -instance.theta(i);
        }
        if (seen[static_cast<std::size_t>(o)] & 2) lp.add_row(row, Relation::le, Rational(0));
        if (seen[static_cast<std::size_t>(o)] & 1)
          lp.add_row(std::move(row), Relation::ge, Rational(0));
      }
    }
    for (int state : {0, 1}) {
      std::vector<Rational> row(static_cast<std::size_t>(lp.num_vars), Rational(0));
      for (std::uint64_t r = 0; r < total; ++r)
        row[static_cast<std::size_t>(lp_var_mu(state, r, total))] = Rational(1);
      lp.add_row(std::move(row), Relation::eq, Rational(1));
    }
    return lp;
  };

  const auto winner = detail::parallel_argmax(count, worker_count(threads), [&](std::uint64_t i) {
    const LpSolution sol = solve(lp_of(masks_of(i)));
    return sol.status == LpStatus::optimal ? sol.value : Rational(-1);
  });
  const auto masks = masks_of(winner.index);
  const LpSolution sol = solve(lp_of(masks));
  BruteforceOutcome out{sol.value, scheme_from_assignment(space, sol.assignment),
                        std::nullopt, masks, count, winner.index};
  return out;
}

}  // namespace persuasion
