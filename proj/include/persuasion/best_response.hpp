#pragma once

#include <utility>
#include <vector>

#include "persuasion/instance.hpp"
#include "persuasion/leakage.hpp"
#include "persuasion/scheme.hpp"

namespace persuasion {

enum class BestResponseMode {
  standard,    // threshold rule on the conditional posterior
  externality  // Appendix-style rule: adopt only against the all-ones completion
};

// I_i |> s_{-i}: every leaked (sender, symbol) matches the profile.
inline bool consistent(const std::vector<std::pair<int, int>>& leaked,
                       const ProfileSpace& space, std::uint64_t rank) {
  for (const auto& [sender, symbol] : leaked)
    if (space.symbol_at(rank, sender) != symbol) return false;
  return true;
}

// Unnormalized observation masses: m_w = sum over profiles consistent with
// (s_i, I_i) of mu_w. The prior weights cancel in the best-response test, so
// they are not applied here.
inline std::pair<Rational, Rational> conditional_masses(const SignalingScheme& scheme,
                                                        const Observation& obs) {
  Rational m[2] = {Rational(0), Rational(0)};
  for (int state : {0, 1}) {
    for (const auto& [rank, p] : scheme.mu(state)) {
      if (scheme.space().symbol_at(rank, obs.receiver) != obs.own_symbol) continue;
      if (!consistent(obs.leaked, scheme.space(), rank)) continue;
      m[state] += p;
    }
  }
  return {m[0], m[1]};
}

namespace detail {

// Externality right-hand side: theta_i * mu1(s_i, all-ones) * 1{I_i |> 1}.
inline Rational externality_rhs(const Instance& instance, const SignalingScheme& scheme,
                                const Observation& obs) {
  for (const auto& [sender, symbol] : obs.leaked)
    if (symbol != 1) return Rational(0);
  SubsetMask others = prefix_mask(scheme.n()) & ~(SubsetMask{1} << obs.receiver);
  SubsetMask m = others | (obs.own_symbol == 1 ? SubsetMask{1} << obs.receiver : 0);
  return instance.theta(obs.receiver) * scheme.mass(1, scheme.space().mask_to_rank(m));
}

}  // namespace detail

// Receiver's action in {0,1}. Ties (equality, including 0 <= 0) resolve to
// adopt; zero-probability observations therefore adopt, a deterministic rule
// needed only for worst-case enumeration.
inline int best_response(const Instance& instance, const SignalingScheme& scheme,
                         const Observation& obs,
                         BestResponseMode mode = BestResponseMode::standard) {
  if (mode == BestResponseMode::externality && !scheme.space().is_binary())
    throw std::invalid_argument("externality mode needs binary alphabets");
  const auto [m0, m1] = conditional_masses(scheme, obs);
  const Rational rhs = mode == BestResponseMode::standard
                           ? instance.theta(obs.receiver) * m1
                           : detail::externality_rhs(instance, scheme, obs);
  return m0 <= rhs ? 1 : 0;
}

// No-leakage rule computed from the marginal of the receiver's own signal;
// must agree with best_response on an empty observation.
inline int best_response_no_leak(const Instance& instance, const SignalingScheme& scheme,
                                 int receiver, int symbol,
                                 BestResponseMode mode = BestResponseMode::standard) {
  Rational m[2] = {Rational(0), Rational(0)};
  for (int state : {0, 1})
    for (const auto& [rank, p] : scheme.mu(state))
      if (scheme.space().symbol_at(rank, receiver) == symbol) m[state] += p;
  const Rational rhs =
      mode == BestResponseMode::standard
          ? instance.theta(receiver) * m[1]
          : detail::externality_rhs(instance, scheme, Observation(receiver, symbol, {}));
  return m[0] <= rhs ? 1 : 0;
}

}  // namespace persuasion
