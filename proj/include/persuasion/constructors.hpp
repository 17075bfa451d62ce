#pragma once

#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "persuasion/checks.hpp"
#include "persuasion/instance.hpp"
#include "persuasion/lp_builders.hpp"
#include "persuasion/scheme.hpp"
#include "persuasion/simplex.hpp"

namespace persuasion {

namespace detail {

inline std::string verdict_text(const Verdict& v) {
  if (v.ok) return "ok";
  std::ostringstream os;
  os << "violation at receiver " << v.violation->receiver + 1;
  if (v.violation->signal) os << ", signal " << *v.violation->signal;
  if (!v.violation->leaked.empty()) {
    os << ", leaked {";
    for (std::size_t t = 0; t < v.violation->leaked.size(); ++t)
      os << (t ? ", " : "") << "(" << v.violation->leaked[t].first + 1 << ","
         << v.violation->leaked[t].second << ")";
    os << "}";
  }
  os << ": m0=" << v.violation->m0 << ", m1=" << v.violation->m1;
  return os.str();
}

inline void require_subsample_base(const Instance& instance, const SignalingScheme& base) {
  if (base.n() != instance.n() || !base.space().is_binary())
    throw std::invalid_argument("base scheme must be binary over the same receivers");
  if (base.mass(1, base.space().mask_to_rank(prefix_mask(base.n()))) != Rational(1))
    throw std::invalid_argument("base mu1 must be the point mass on the full set");
  const Verdict v = check_private(instance, base);
  if (!v.ok) throw std::invalid_argument("base not privately persuasive: " + verdict_text(v));
}

}  // namespace detail

// No-leak expected utility of a scheme whose receivers follow their signals
// (valid whenever the scheme is privately persuasive).
inline Rational on_path_utility(const Instance& instance, const SignalingScheme& scheme) {
  Rational total(0);
  for (int state : {0, 1})
    for (const auto& [rank, p] : scheme.mu(state))
      total += instance.state_weight(state) * p *
               instance.utility()(scheme.space().rank_to_mask(rank));
  return total;
}

inline Rational on_path_utility_omega0(const Instance& instance, const SignalingScheme& scheme) {
  Rational total(0);
  for (const auto& [rank, p] : scheme.mu(0))
    total += (Rational(1) - instance.lambda()) * p *
             instance.utility()(scheme.space().rank_to_mask(rank));
  return total;
}

inline Rational prefix_utility(const Instance& instance, const PrefixScheme& scheme) {
  Rational total(0);
  for (int state : {0, 1})
    for (int j = 0; j <= scheme.n(); ++j)
      total += instance.state_weight(state) * scheme.mu(state)[static_cast<std::size_t>(j)] *
               instance.utility()(prefix_mask(j));
  return total;
}

// The optimal private scheme for supermodular utilities: mu1 concentrated on
// the full set, mu0 assigns theta_j - theta_{j+1} to the prefix [j] (with
// theta_0 = 1 and theta_{n+1} = 0).
inline PrefixScheme optimal_private(const Instance& instance) {
  const int n = instance.n();
  std::vector<Rational> mu0(static_cast<std::size_t>(n + 1), Rational(0));
  std::vector<Rational> mu1(static_cast<std::size_t>(n + 1), Rational(0));
  mu0[0] = Rational(1) - instance.theta(0);
  for (int j = 1; j <= n; ++j)
    mu0[static_cast<std::size_t>(j)] = instance.theta(j - 1) - instance.theta(j);
  mu1[static_cast<std::size_t>(n)] = Rational(1);
  return PrefixScheme(std::move(mu0), std::move(mu1));
}

// lambda V(N) + (1-lambda) sum_j (theta_j - theta_{j+1}) V([j]).
inline Rational optimal_private_closed_form(const Instance& instance) {
  const int n = instance.n();
  Rational total = instance.lambda() * instance.utility()(prefix_mask(n));
  for (int j = 1; j <= n; ++j)
    total += (Rational(1) - instance.lambda()) * (instance.theta(j - 1) - instance.theta(j)) *
             instance.utility()(prefix_mask(j));
  return total;
}

inline Rational optimal_private_closed_form_omega0(const Instance& instance) {
  Rational total(0);
  for (int j = 1; j <= instance.n(); ++j)
    total += (Rational(1) - instance.lambda()) * (instance.theta(j - 1) - instance.theta(j)) *
             instance.utility()(prefix_mask(j));
  return total;
}

// Optimal private scheme for arbitrary monotone utilities, via the reduced
// LP over mu0 alone (mu1 = point mass on N is without loss of generality).
// Returns the scheme and the exact optimal value.
inline std::pair<SignalingScheme, Rational> optimal_private_lp(const Instance& instance) {
  const int n = instance.n();
  if (n > kLpMaxN) throw SizeRefusal("optimal_private_lp supports n <= 12");
  const ProfileSpace space = ProfileSpace::binary(n);
  const std::uint64_t total = space.total();
  LinearProgram lp(static_cast<int>(total));
  for (std::uint64_t r = 0; r < total; ++r)
    lp.objective[static_cast<std::size_t>(r)] = instance.utility()(space.rank_to_mask(r));
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> row(static_cast<std::size_t>(total), Rational(0));
    for (std::uint64_t r = 0; r < total; ++r)
      if (space.symbol_at(r, i) == 1) row[static_cast<std::size_t>(r)] = Rational(1);
    lp.add_row(std::move(row), Relation::le, instance.theta(i));
  }
  lp.add_row(std::vector<Rational>(static_cast<std::size_t>(total), Rational(1)), Relation::eq,
             Rational(1));
  const LpSolution sol = solve(lp);
  if (sol.status != LpStatus::optimal) throw std::logic_error("private LP not optimal");
  std::map<std::uint64_t, Rational> mu0, mu1;
  for (std::uint64_t r = 0; r < total; ++r)
    if (!sol.assignment[static_cast<std::size_t>(r)].is_zero())
      mu0[r] = sol.assignment[static_cast<std::size_t>(r)];
  mu1[space.mask_to_rank(prefix_mask(n))] = Rational(1);
  SignalingScheme scheme(space, std::move(mu0), std::move(mu1));
  const Rational value = instance.lambda() * instance.utility()(prefix_mask(n)) +
                         (Rational(1) - instance.lambda()) * sol.value;
  return {std::move(scheme), value};
}

// Full revelation: (1,...,1) under omega_1 and (0,...,0) under omega_0;
// k-worst-case persuasive for every k, utility lambda V(N).
inline SignalingScheme full_information(const Instance& instance) {
  const int n = instance.n();
  std::map<SubsetMask, Rational> mu0, mu1;
  mu0[0] = Rational(1);
  mu1[prefix_mask(n)] = Rational(1);
  return SignalingScheme::binary(n, std::move(mu0), std::move(mu1));
}

// Public prefix scheme at cutoff i_star (1-based prefix length):
// mu0([i*]) = theta_{i*}, mu0(empty) = 1 - theta_{i*}, mu1([i*]) = 1.
inline PrefixScheme public_prefix(const Instance& instance, int i_star) {
  const int n = instance.n();
  if (i_star < 1 || i_star > n) throw std::invalid_argument("i_star out of range");
  std::vector<Rational> mu0(static_cast<std::size_t>(n + 1), Rational(0));
  std::vector<Rational> mu1(static_cast<std::size_t>(n + 1), Rational(0));
  mu0[static_cast<std::size_t>(i_star)] = instance.theta(i_star - 1);
  mu0[0] = Rational(1) - instance.theta(i_star - 1);
  mu1[static_cast<std::size_t>(i_star)] = Rational(1);
  return PrefixScheme(std::move(mu0), std::move(mu1));
}

// Cutoff maximizing the public prefix scheme's omega_0 utility; guarantees
// at least OPT-private(omega_0)/n.
inline int best_public_prefix_cutoff(const Instance& instance) {
  int best = 1;
  Rational best_value(-1);
  for (int j = 1; j <= instance.n(); ++j) {
    const Rational value =
        (instance.theta(j - 1) - instance.theta(j)) * instance.utility()(prefix_mask(j));
    if (value > best_value) {
      best_value = value;
      best = j;
    }
  }
  return best;
}

// Subsampling at rate 1/2: mu1 uniform over {0,1}^n, mu0 rescales the base
// mass of every nonzero profile by 2^-(k+1), remainder on the empty profile.
// The output is k-worst-case persuasive.
inline SignalingScheme subsample_half(const Instance& instance, const SignalingScheme& base,
                                      int k) {
  detail::require_subsample_base(instance, base);
  const int n = instance.n();
  if (n > 20) throw SizeRefusal("subsampled mu1 has 2^n entries; supported up to n = 20");
  if (k < 0 || k > n - 1) throw std::invalid_argument("k out of range");
  const Rational scale = Rational::pow2(-(k + 1));
  std::map<std::uint64_t, Rational> mu0, mu1;
  const ProfileSpace& space = base.space();
  Rational zero_mass(1);
  for (const auto& [rank, p] : base.mu(0)) {
    if (space.rank_to_mask(rank) == 0) continue;
    mu0[rank] = scale * p;
    zero_mass -= scale * p;
  }
  mu0[space.mask_to_rank(0)] = zero_mass;
  const Rational uniform = Rational::pow2(-n);
  for (std::uint64_t r = 0; r < space.total(); ++r) mu1[r] = uniform;
  return SignalingScheme(space, std::move(mu0), std::move(mu1));
}

// Subsampling at a general rate gamma in (0,1): mu1 is product-Bernoulli
// (gamma); mu0 zeroes everything with probability 1-(1-gamma)^k and
// otherwise draws from the base and subsamples at rate gamma. Materialized
// as the exact convolution over the base support.
inline SignalingScheme subsample_rate(const Instance& instance, const SignalingScheme& base,
                                      int k, const Rational& gamma) {
  detail::require_subsample_base(instance, base);
  const int n = instance.n();
  if (n > 20) throw SizeRefusal("subsampled mu1 has 2^n entries; supported up to n = 20");
  if (k < 0 || k > n - 1) throw std::invalid_argument("k out of range");
  if (gamma <= Rational(0) || gamma >= Rational(1))
    throw std::invalid_argument("gamma outside (0,1)");
  const ProfileSpace& space = base.space();
  const Rational keep = [&] {
    Rational r(1);
    for (int t = 0; t < k; ++t) r *= Rational(1) - gamma;
    return r;
  }();

  std::vector<Rational> gamma_pow(static_cast<std::size_t>(n + 1), Rational(1));
  std::vector<Rational> cogamma_pow(static_cast<std::size_t>(n + 1), Rational(1));
  for (int t = 1; t <= n; ++t) {
    gamma_pow[static_cast<std::size_t>(t)] = gamma_pow[static_cast<std::size_t>(t - 1)] * gamma;
    cogamma_pow[static_cast<std::size_t>(t)] =
        cogamma_pow[static_cast<std::size_t>(t - 1)] * (Rational(1) - gamma);
  }

  std::vector<Rational> mu0_dense(std::size_t{1} << n, Rational(0));
  mu0_dense[0] = Rational(1) - keep;
  for (const auto& [rank, p] : base.mu(0)) {
    const SubsetMask s = space.rank_to_mask(rank);
    const int size = popcount(s);
    // All submasks of s, including empty.
    SubsetMask sub = s;
    while (true) {
      const int kept = popcount(sub);
      mu0_dense[sub] += keep * p * gamma_pow[static_cast<std::size_t>(kept)] *
                        cogamma_pow[static_cast<std::size_t>(size - kept)];
      if (sub == 0) break;
      sub = (sub - 1) & s;
    }
  }
  std::map<std::uint64_t, Rational> mu0, mu1;
  for (SubsetMask m = 0; m < (SubsetMask{1} << n); ++m)
    if (!mu0_dense[m].is_zero()) mu0[space.mask_to_rank(m)] = mu0_dense[m];
  for (SubsetMask m = 0; m < (SubsetMask{1} << n); ++m)
    mu1[space.mask_to_rank(m)] = gamma_pow[static_cast<std::size_t>(popcount(m))] *
                                 cogamma_pow[static_cast<std::size_t>(n - popcount(m))];
  return SignalingScheme(space, std::move(mu0), std::move(mu1));
}

// Masking by removing randomness: keep the optimal private prefix masses in
// the window [i, i + floor(n/k)] (clamped to n), send deterministic zeros
// beyond it. i is a 1-based prefix index.
inline PrefixScheme mask_remove(const Instance& instance, int i, int k) {
  const int n = instance.n();
  if (k < 1 || 2 * k > n) throw std::invalid_argument("mask_remove needs 1 <= k <= n/2");
  const int window = n / k;
  if (i < 1 || i > std::max(1, n - window))
    throw std::invalid_argument("mask_remove cutoff out of range");
  const int end = std::min(i + window, n);
  std::vector<Rational> mu0(static_cast<std::size_t>(n + 1), Rational(0));
  std::vector<Rational> mu1(static_cast<std::size_t>(n + 1), Rational(0));
  for (int j = i; j <= end; ++j)
    mu0[static_cast<std::size_t>(j)] = instance.theta(j - 1) - instance.theta(j);
  mu0[0] = Rational(1) - (instance.theta(i - 1) - instance.theta(end));
  mu1[static_cast<std::size_t>(end)] = Rational(1);
  return PrefixScheme(std::move(mu0), std::move(mu1));
}

struct MaskMatchParams {
  Rational c0, c1;
  int m;  // cutoff, 1-based

  MaskMatchParams(Rational c0_, Rational c1_, int m_) : c0(std::move(c0_)), c1(std::move(c1_)), m(m_) {
    if (!(Rational(0) < c0 && c0 <= c1 && c1 < Rational(1)))
      throw std::invalid_argument("need 0 < c0 <= c1 < 1");
    if (c0 + c1 > Rational(1)) throw std::invalid_argument("need c0 + c1 <= 1");
    if (m < 1) throw std::invalid_argument("cutoff m must be >= 1");
  }
};

// Masking by matching randomness: mu0 spreads c0-scaled prefix masses over
// all prefixes, mu1 matches them proportionally above the cutoff m. The two
// stated properties are re-checked as exact inequalities on construction.
inline PrefixScheme mask_match(const Instance& instance, const MaskMatchParams& params) {
  const int n = instance.n();
  if (params.m > n) throw std::invalid_argument("cutoff m must be <= n");
  const Rational theta_m = instance.theta(params.m - 1);
  if (theta_m.is_zero()) throw std::invalid_argument("theta_m must be positive");
  std::vector<Rational> mu0(static_cast<std::size_t>(n + 1), Rational(0));
  std::vector<Rational> mu1(static_cast<std::size_t>(n + 1), Rational(0));
  for (int j = 1; j <= n; ++j)
    mu0[static_cast<std::size_t>(j)] = params.c0 * (instance.theta(j - 1) - instance.theta(j));
  mu0[0] = Rational(1) - params.c0 * instance.theta(0);
  for (int j = params.m; j < n; ++j)
    mu1[static_cast<std::size_t>(j)] =
        params.c1 / theta_m * (instance.theta(j - 1) - instance.theta(j));
  mu1[static_cast<std::size_t>(n)] =
      Rational(1) - params.c1 + params.c1 * instance.theta(n - 1) / theta_m;
  PrefixScheme scheme(std::move(mu0), std::move(mu1));

  // Property (1): every receiver adopts on signal 1 with no leaks.
  for (int i = 1; i <= n; ++i) {
    Rational lhs(0), rhs(0);
    for (int j = i; j <= n; ++j) {
      lhs += scheme.mu0_prefix[static_cast<std::size_t>(j)];
      rhs += scheme.mu1_prefix[static_cast<std::size_t>(j)];
    }
    if (!(lhs <= instance.theta(i - 1) * rhs))
      throw std::logic_error("mask_match property (1) failed");
  }
  // Property (2): receivers i <= m adopt even seeing the full prefix [j], j >= m.
  for (int i = 1; i <= params.m; ++i)
    for (int j = params.m; j <= n; ++j)
      if (!(scheme.mu0_prefix[static_cast<std::size_t>(j)] <=
            instance.theta(i - 1) * scheme.mu1_prefix[static_cast<std::size_t>(j)]))
        throw std::logic_error("mask_match property (2) failed");
  return scheme;
}

}  // namespace persuasion
