#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "persuasion/best_response.hpp"
#include "persuasion/instance.hpp"
#include "persuasion/scheme.hpp"

namespace persuasion {

struct Violation {
  int receiver;                              // 0-based
  std::optional<int> signal;                 // set for no-leak (condition 1) violations
  std::vector<std::pair<int, int>> leaked;   // set for leakage (condition 2) violations
  Rational m0, m1;
};

struct Verdict {
  bool ok = true;
  std::optional<Violation> violation;
  // Number of enumerated conditions that held only because both masses were
  // zero (the tie-to-adopt rule on probability-zero observations).
  std::size_t degenerate_ties = 0;

  static Verdict pass() { return Verdict{}; }
  static Verdict fail(Violation v) { return Verdict{false, std::move(v), 0}; }
};

namespace detail {

inline void require_binary(const SignalingScheme& scheme) {
  if (!scheme.space().is_binary())
    throw std::invalid_argument("persuasiveness checks need binary alphabets");
}

// Masses of the observation (receiver, s_i = own, leaked), plus the
// mode-dependent right-hand side of the adopt condition.
struct ObsMasses {
  Rational m0, m1, rhs;
};

inline ObsMasses obs_masses(const Instance& instance, const SignalingScheme& scheme,
                            const Observation& obs, BestResponseMode mode) {
  const auto [m0, m1] = conditional_masses(scheme, obs);
  const Rational rhs = mode == BestResponseMode::standard
                           ? instance.theta(obs.receiver) * m1
                           : externality_rhs(instance, scheme, obs);
  return {m0, m1, rhs};
}

}  // namespace detail

// Condition 1 (private persuasiveness): for every receiver, m0(1) <= theta *
// m1(1) and m0(0) >= theta * m1(0), both non-strict. First violation is
// reported with the exact masses.
inline Verdict check_private(const Instance& instance, const SignalingScheme& scheme,
                             BestResponseMode mode = BestResponseMode::standard) {
  detail::require_binary(scheme);
  Verdict verdict;
  for (int i = 0; i < instance.n(); ++i) {
    for (int signal : {1, 0}) {
      const auto m = detail::obs_masses(instance, scheme, Observation(i, signal, {}), mode);
      const bool hold = signal == 1 ? m.m0 <= m.rhs : m.m0 >= m.rhs;
      if (!hold) return Verdict::fail({i, signal, {}, m.m0, m.m1});
      if (m.m0.is_zero() && m.m1.is_zero()) ++verdict.degenerate_ties;
    }
  }
  return verdict;
}

// Condition 2 on top of condition 1: no receiver with signal 1 deviates
// under any leakage set of size <= k. Enumeration order is increasing |J|,
// lexicographic J, lexicographic sign pattern, so the first violation is
// deterministic.
inline Verdict check_k_worst_case(const Instance& instance, const SignalingScheme& scheme,
                                  int k, BestResponseMode mode = BestResponseMode::standard) {
  detail::require_binary(scheme);
  const int n = instance.n();
  if (k < 0 || k > n - 1) throw std::invalid_argument("k out of range");
  Verdict verdict = check_private(instance, scheme, mode);
  if (!verdict.ok) return verdict;
  for (int i = 0; i < n; ++i) {
    for (int sz = 1; sz <= k; ++sz) {
      for (const auto& senders : combinations_excluding(n, sz, i)) {
        for (std::uint32_t bits = 0; bits < (1u << sz); ++bits) {
          std::vector<std::pair<int, int>> leaked(static_cast<std::size_t>(sz));
          for (int t = 0; t < sz; ++t)
            leaked[static_cast<std::size_t>(t)] = {senders[static_cast<std::size_t>(t)],
                                                   bits >> (sz - 1 - t) & 1};
          const auto m = detail::obs_masses(instance, scheme,
                                            Observation(i, 1, std::move(leaked)), mode);
          if (!(m.m0 <= m.rhs)) {
            std::vector<std::pair<int, int>> again(static_cast<std::size_t>(sz));
            for (int t = 0; t < sz; ++t)
              again[static_cast<std::size_t>(t)] = {senders[static_cast<std::size_t>(t)],
                                                    bits >> (sz - 1 - t) & 1};
            return Verdict::fail({i, std::nullopt, std::move(again), m.m0, m.m1});
          }
          if (m.m0.is_zero() && m.m1.is_zero()) ++verdict.degenerate_ties;
        }
      }
    }
  }
  return verdict;
}

// Publicly persuasive = (n-1)-worst-case persuasive.
inline Verdict check_public(const Instance& instance, const SignalingScheme& scheme,
                            BestResponseMode mode = BestResponseMode::standard) {
  return check_k_worst_case(instance, scheme, instance.n() - 1, mode);
}

// Two-sided variant: also receivers with signal 0 must not deviate to 1
// under any <= k leaks (m0 >= theta * m1, non-strict).
inline Verdict check_two_sided(const Instance& instance, const SignalingScheme& scheme, int k) {
  detail::require_binary(scheme);
  const int n = instance.n();
  if (k < 0 || k > n - 1) throw std::invalid_argument("k out of range");
  Verdict verdict = check_private(instance, scheme);
  if (!verdict.ok) return verdict;
  for (int i = 0; i < n; ++i) {
    for (int sz = 1; sz <= k; ++sz) {
      for (const auto& senders : combinations_excluding(n, sz, i)) {
        for (std::uint32_t bits = 0; bits < (1u << sz); ++bits) {
          std::vector<std::pair<int, int>> leaked(static_cast<std::size_t>(sz));
          for (int t = 0; t < sz; ++t)
            leaked[static_cast<std::size_t>(t)] = {senders[static_cast<std::size_t>(t)],
                                                   bits >> (sz - 1 - t) & 1};
          for (int signal : {1, 0}) {
            const Observation obs(i, signal, leaked);
            const auto m = detail::obs_masses(instance, scheme, obs, BestResponseMode::standard);
            const bool hold = signal == 1 ? m.m0 <= m.rhs : m.m0 >= m.rhs;
            if (!hold) {
              Violation v{i, signal, leaked, m.m0, m.m1};
              return Verdict::fail(std::move(v));
            }
            if (m.m0.is_zero() && m.m1.is_zero()) ++verdict.degenerate_ties;
          }
        }
      }
    }
  }
  return verdict;
}

// Maxmin^2 downstream utility: per signal realization, the adversary drops
// every signal-1 receiver that any <= k leakage set (with the realized
// values) would dissuade; signal-0 receivers contribute nothing. For
// k-worst-case persuasive schemes this equals the no-leak expected utility.
inline Rational worst_case_downstream(const Instance& instance, const SignalingScheme& scheme,
                                      int k) {
  detail::require_binary(scheme);
  const int n = instance.n();
  if (k < 0 || k > n - 1) throw std::invalid_argument("k out of range");

  // robust[i] keyed by trit-coded pattern: digit j is 0 (not leaked), 1
  // (leaked value 0) or 2 (leaked value 1).
  std::vector<std::unordered_map<std::uint64_t, bool>> robust(static_cast<std::size_t>(n));
  auto pattern_ok = [&](int i, const std::vector<std::pair<int, int>>& leaked) {
    std::uint64_t key = 0;
    for (const auto& [j, v] : leaked) {
      std::uint64_t trit = static_cast<std::uint64_t>(1 + v);
      std::uint64_t p = 1;
      for (int t = 0; t < j; ++t) p *= 3;
      key += trit * p;
    }
    auto& memo = robust[static_cast<std::size_t>(i)];
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    const auto m = detail::obs_masses(instance, scheme, Observation(i, 1, leaked),
                                      BestResponseMode::standard);
    const bool ok = m.m0 <= m.rhs;
    memo.emplace(key, ok);
    return ok;
  };

  Rational total(0);
  for (int state : {0, 1}) {
    for (const auto& [rank, p] : scheme.mu(state)) {
      const SubsetMask realized = scheme.space().rank_to_mask(rank);
      SubsetMask adopters = 0;
      for (int i = 0; i < n; ++i) {
        if (!(realized >> i & 1)) continue;
        bool keeps = pattern_ok(i, {});  // J = empty: must adopt with no leaks
        for (int sz = 1; sz <= k && keeps; ++sz) {
          for (const auto& senders : combinations_excluding(n, sz, i)) {
            std::vector<std::pair<int, int>> leaked;
            leaked.reserve(static_cast<std::size_t>(sz));
            for (int j : senders) leaked.emplace_back(j, static_cast<int>(realized >> j & 1));
            if (!pattern_ok(i, leaked)) {
              keeps = false;
              break;
            }
          }
        }
        if (keeps) adopters |= SubsetMask{1} << i;
      }
      total += instance.state_weight(state) * p * instance.utility()(adopters);
    }
  }
  return total;
}

}  // namespace persuasion
