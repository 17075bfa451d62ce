#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "persuasion/best_response.hpp"
#include "persuasion/checks.hpp"
#include "persuasion/instance.hpp"
#include "persuasion/leakage.hpp"
#include "persuasion/scheme.hpp"

namespace persuasion {

namespace detail {

// Best responses memoized per (receiver, observed sub-profile). The
// observation of receiver i under a fixed pattern is determined by the
// symbols at {i} + in-neighbors, so profiles sharing that projection share
// the response.
class ResponseCache {
 public:
  ResponseCache(const Instance& instance, const SignalingScheme& scheme,
                const LeakagePattern& pattern, BestResponseMode mode)
      : instance_(instance), scheme_(scheme), pattern_(pattern), mode_(mode),
        memo_(static_cast<std::size_t>(instance.n())) {}

  int action(int receiver, std::uint64_t profile_rank) {
    const auto& nbrs = pattern_.in_neighbors(receiver);
    std::uint64_t key = static_cast<std::uint64_t>(
        scheme_.space().symbol_at(profile_rank, receiver));
    for (int j : nbrs)
      key = key * static_cast<std::uint64_t>(scheme_.space().size(j)) +
            static_cast<std::uint64_t>(scheme_.space().symbol_at(profile_rank, j));
    auto& memo = memo_[static_cast<std::size_t>(receiver)];
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<std::pair<int, int>> leaked;
    leaked.reserve(nbrs.size());
    for (int j : nbrs) leaked.emplace_back(j, scheme_.space().symbol_at(profile_rank, j));
    const int a = best_response(instance_, scheme_,
                                Observation(receiver,
                                            scheme_.space().symbol_at(profile_rank, receiver),
                                            std::move(leaked)),
                                mode_);
    memo.emplace(key, a);
    return a;
  }

 private:
  const Instance& instance_;
  const SignalingScheme& scheme_;
  const LeakagePattern& pattern_;
  BestResponseMode mode_;
  std::vector<std::unordered_map<std::uint64_t, int>> memo_;
};

}  // namespace detail

// E over (state, profile) of V({i : a_i(s_i, I_i^G) = 1}) for a fixed
// leakage pattern G, exact. Receivers may deviate in both directions; this
// is the downstream benchmark, not a persuasiveness check.
inline Rational downstream_utility_fixed(const Instance& instance, const SignalingScheme& scheme,
                                         const LeakagePattern& pattern,
                                         BestResponseMode mode = BestResponseMode::standard) {
  if (pattern.n() != instance.n()) throw std::invalid_argument("pattern size mismatch");
  detail::ResponseCache cache(instance, scheme, pattern, mode);
  Rational total(0);
  for (int state : {0, 1}) {
    for (const auto& [rank, p] : scheme.mu(state)) {
      SubsetMask adopters = 0;
      for (int i = 0; i < instance.n(); ++i)
        if (cache.action(i, rank) == 1) adopters |= SubsetMask{1} << i;
      total += instance.state_weight(state) * p * instance.utility()(adopters);
    }
  }
  return total;
}

// Enumerates the finite support of a leakage model with uniform (or mixture)
// weights. Refused above the documented cap.
inline std::vector<std::pair<Rational, LeakagePattern>> model_support(const LeakageModel& model,
                                                                      int n) {
  constexpr std::uint64_t kMaxPatterns = 1'000'000;
  model.validate_for(n);
  std::vector<std::pair<Rational, LeakagePattern>> out;
  auto all_subsets = [&](int universe, int k) {
    return combinations_excluding(universe, k, -1);
  };
  switch (model.kind) {
    case LeakageModel::Kind::fixed:
      out.emplace_back(Rational(1), model.pattern);
      return out;
    case LeakageModel::Kind::mixture:
      return model.mixture;
    case LeakageModel::Kind::k_star: {
      const Rational w = Rational(1) / (Rational(n) * binomial(n - 1, model.k));
      for (int center = 0; center < n; ++center)
        for (const auto& leafs : combinations_excluding(n, model.k, center)) {
          std::vector<std::pair<int, int>> edges;
          for (int j : leafs) edges.emplace_back(j, center);
          out.emplace_back(w, LeakagePattern(n, edges));
        }
      return out;
    }
    case LeakageModel::Kind::k_clique: {
      const Rational w = Rational(1) / binomial(n, model.k);
      for (const auto& members : all_subsets(n, model.k)) {
        std::vector<std::pair<int, int>> edges;
        for (int a : members)
          for (int b : members)
            if (a != b) edges.emplace_back(a, b);
        out.emplace_back(w, LeakagePattern(n, edges));
      }
      return out;
    }
    case LeakageModel::Kind::k_broadcast: {
      const Rational w = Rational(1) / binomial(n, model.k);
      for (const auto& leakers : all_subsets(n, model.k)) {
        std::vector<std::pair<int, int>> edges;
        for (int j : leakers)
          for (int i = 0; i < n; ++i)
            if (i != j) edges.emplace_back(j, i);
        out.emplace_back(w, LeakagePattern(n, edges));
      }
      return out;
    }
    case LeakageModel::Kind::k_erdos_renyi: {
      // Independent per-receiver choices: product over receivers.
      const Rational per = Rational(1) / binomial(n - 1, model.k);
      std::uint64_t count = 1;
      for (int i = 0; i < n; ++i) {
        const Rational c = binomial(n - 1, model.k);
        count *= c.num().get_ui();
        if (count > kMaxPatterns)
          throw SizeRefusal("k-Erdos-Renyi support exceeds 10^6 patterns; use Monte Carlo");
      }
      std::vector<std::vector<std::vector<int>>> choices;
      for (int i = 0; i < n; ++i) choices.push_back(combinations_excluding(n, model.k, i));
      std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
      Rational w(1);
      for (int i = 0; i < n; ++i) w *= per;
      while (true) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
          for (int j : choices[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]])
            edges.emplace_back(j, i);
        out.emplace_back(w, LeakagePattern(n, edges));
        int pos = n - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] ==
                               choices[static_cast<std::size_t>(pos)].size()) {
          idx[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

// Exact expected downstream utility over the model's pattern distribution.
inline Rational downstream_utility_exact(const Instance& instance, const SignalingScheme& scheme,
                                         const LeakageModel& model,
                                         BestResponseMode mode = BestResponseMode::standard) {
  Rational total(0);
  for (const auto& [w, pattern] : model_support(model, instance.n()))
    total += w * downstream_utility_fixed(instance, scheme, pattern, mode);
  return total;
}

struct McEstimate {
  double mean = 0;
  double stderr_ = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Unbiased Monte Carlo estimate of the expected downstream utility: sample i
// draws pattern sample_pattern(model, seed, i) and evaluates it exactly, so
// the stream (and hence the output) is a pure function of the seed.
// Identical patterns are evaluated once and cached.
inline McEstimate downstream_utility_mc(const Instance& instance, const SignalingScheme& scheme,
                                        const LeakageModel& model, std::uint64_t samples,
                                        std::uint64_t seed,
                                        BestResponseMode mode = BestResponseMode::standard) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  std::map<LeakagePattern, double> cache;
  double sum = 0, sumsq = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    LeakagePattern pattern = sample_pattern(model, instance.n(), seed, i);
    auto it = cache.find(pattern);
    if (it == cache.end())
      it = cache.emplace(pattern,
                         downstream_utility_fixed(instance, scheme, pattern, mode).to_double())
               .first;
    sum += it->second;
    sumsq += it->second * it->second;
  }
  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.mean = sum / static_cast<double>(samples);
  const double var =
      (sumsq - sum * sum / static_cast<double>(samples)) / static_cast<double>(samples - 1);
  est.stderr_ = std::sqrt(std::max(0.0, var) / static_cast<double>(samples));
  return est;
}

// Exact probability, per realized prefix [j], that every receiver in [j]
// adopts under the k-star model, for prefix-supported schemes. Runs in
// O(n * C(n-1,k) * n^2) without touching the 2^n profile table, which keeps
// n ~ 20 enumerable.
inline std::vector<Rational> prefix_preservation_probability(const Instance& instance,
                                                             const PrefixScheme& scheme, int k) {
  const int n = instance.n();
  if (k < 0 || k > n - 1) throw std::invalid_argument("k out of range");

  // Window masses: cum0[j] = sum_{p >= j} mu0([p]); same for mu1.
  auto cums = [&](const std::vector<Rational>& mu) {
    std::vector<Rational> c(static_cast<std::size_t>(n + 2), Rational(0));
    for (int j = n; j >= 0; --j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j + 1)] + mu[static_cast<std::size_t>(j)];
    return c;
  };
  const auto cum0 = cums(scheme.mu0_prefix);
  const auto cum1 = cums(scheme.mu1_prefix);
  auto window0 = [&](int lo, int hi) {  // sum over prefixes lo..hi
    return cum0[static_cast<std::size_t>(lo)] - cum0[static_cast<std::size_t>(hi + 1)];
  };
  auto window1 = [&](int lo, int hi) {
    return cum1[static_cast<std::size_t>(lo)] - cum1[static_cast<std::size_t>(hi + 1)];
  };

  std::vector<Rational> preserved(static_cast<std::size_t>(n + 1), Rational(0));
  const Rational pattern_weight = Rational(1) / (Rational(n) * binomial(n - 1, k));
  for (int center = 0; center < n; ++center) {
    for (const auto& leafs : combinations_excluding(n, k, center)) {
      for (int j = 1; j <= n; ++j) {
        // Realized prefix [j]; receivers in [j] other than the center see no
        // leaks, so they adopt iff the no-leak condition at their index holds.
        bool all_adopt = true;
        for (int x = 1; x <= j && all_adopt; ++x) {
          if (x - 1 == center) continue;
          if (!(window0(x, n) <= instance.theta(x - 1) * window1(x, n))) all_adopt = false;
        }
        if (all_adopt && center < j) {
          // Center's knowledge: own signal 1 plus leaked prefix bounds.
          int lo = center + 1, hi = n;
          for (int leaf : leafs) {
            const bool one = leaf < j;  // receiver leaf+1 got signal 1
            if (one)
              lo = std::max(lo, leaf + 1);
            else
              hi = std::min(hi, leaf);
          }
          if (!(window0(lo, hi) <= instance.theta(center) * window1(lo, hi))) all_adopt = false;
        }
        if (all_adopt) preserved[static_cast<std::size_t>(j)] += pattern_weight;
      }
    }
  }
  return preserved;
}

}  // namespace persuasion
