#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "persuasion/profiles.hpp"
#include "persuasion/rational.hpp"
#include "persuasion/rng.hpp"

namespace persuasion {

// Directed leakage graph: edge (j -> i) means receiver i observes s_j.
// Stored as per-receiver sorted in-neighbor lists.
class LeakagePattern {
 public:
  LeakagePattern() = default;
  LeakagePattern(int n, const std::vector<std::pair<int, int>>& edges) : in_(static_cast<std::size_t>(n)) {
    if (n < 1) throw std::invalid_argument("pattern needs n >= 1");
    for (const auto& [from, to] : edges) {
      if (from < 0 || from >= n || to < 0 || to >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (from == to) throw std::invalid_argument("self-loop in leakage pattern");
      in_[static_cast<std::size_t>(to)].push_back(from);
    }
    for (auto& nbrs : in_) {
      std::sort(nbrs.begin(), nbrs.end());
      if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
        throw std::invalid_argument("duplicate edge in leakage pattern");
    }
  }

  int n() const { return static_cast<int>(in_.size()); }
  const std::vector<int>& in_neighbors(int receiver) const {
    return in_[static_cast<std::size_t>(receiver)];
  }
  int max_in_degree() const {
    std::size_t d = 0;
    for (const auto& nbrs : in_) d = std::max(d, nbrs.size());
    return static_cast<int>(d);
  }
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n(); ++i)
      for (int j : in_[static_cast<std::size_t>(i)]) out.emplace_back(j, i);
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const LeakagePattern& a, const LeakagePattern& b) {
    return a.in_ == b.in_;
  }
  friend bool operator<(const LeakagePattern& a, const LeakagePattern& b) {
    return a.in_ < b.in_;
  }

 private:
  std::vector<std::vector<int>> in_;
};

// The four parametric random leakage families from the model, plus fixed
// patterns and finite mixtures of fixed patterns with rational weights.
struct LeakageModel {
  enum class Kind { fixed, k_star, k_clique, k_broadcast, k_erdos_renyi, mixture };

  Kind kind;
  int k = 0;                 // parametric families
  LeakagePattern pattern;    // fixed
  std::vector<std::pair<Rational, LeakagePattern>> mixture;  // weights sum to 1

  static LeakageModel fixed(LeakagePattern p) {
    LeakageModel m{Kind::fixed};
    m.pattern = std::move(p);
    return m;
  }
  static LeakageModel star(int k) { return param(Kind::k_star, k); }
  static LeakageModel clique(int k) { return param(Kind::k_clique, k); }
  static LeakageModel broadcast(int k) { return param(Kind::k_broadcast, k); }
  static LeakageModel erdos_renyi(int k) { return param(Kind::k_erdos_renyi, k); }
  static LeakageModel mix(std::vector<std::pair<Rational, LeakagePattern>> parts) {
    if (parts.empty()) throw std::invalid_argument("empty mixture");
    Rational sum(0);
    for (const auto& [w, p] : parts) {
      if (w.sign() < 0) throw std::invalid_argument("negative mixture weight");
      sum += w;
    }
    if (sum != Rational(1)) throw std::invalid_argument("mixture weights do not sum to 1");
    LeakageModel m{Kind::mixture};
    m.mixture = std::move(parts);
    return m;
  }

  // k-star and k-Erdos-Renyi need k <= n-1 (a distinct center / choices from
  // N minus self); k-clique and k-broadcast admit k = n (complete digraph),
  // still within the in-degree <= n-1 pattern invariant.
  void validate_for(int n) const {
    switch (kind) {
      case Kind::fixed:
        if (pattern.n() != n) throw std::invalid_argument("pattern size mismatch");
        return;
      case Kind::k_clique:
      case Kind::k_broadcast:
        if (k < 0 || k > n) throw std::invalid_argument("k out of range for leakage model");
        return;
      case Kind::mixture:
        for (const auto& [w, p] : mixture)
          if (p.n() != n) throw std::invalid_argument("pattern size mismatch");
        return;
      default:
        if (k < 0 || k > n - 1)
          throw std::invalid_argument("k out of range for leakage model");
    }
  }

  int max_in_degree(int n) const {
    switch (kind) {
      case Kind::fixed: return pattern.max_in_degree();
      case Kind::mixture: {
        int d = 0;
        for (const auto& [w, p] : mixture) d = std::max(d, p.max_in_degree());
        return d;
      }
      case Kind::k_clique: return std::max(0, k - 1);
      default: return k;
    }
  }

 private:
  static LeakageModel param(Kind kind, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    LeakageModel m{kind};
    m.k = k;
    return m;
  }
};

// A receiver's information set: own signal plus leaked (sender, symbol)
// pairs with distinct senders. Internal indices are 0-based.
struct Observation {
  int receiver;
  int own_symbol;
  std::vector<std::pair<int, int>> leaked;  // (sender, symbol), sorted by sender

  Observation(int receiver, int own_symbol, std::vector<std::pair<int, int>> leaked_pairs)
      : receiver(receiver), own_symbol(own_symbol), leaked(std::move(leaked_pairs)) {
    std::sort(leaked.begin(), leaked.end());
    for (std::size_t i = 0; i < leaked.size(); ++i) {
      if (leaked[i].first == receiver)
        throw std::invalid_argument("observation leaks the receiver's own signal");
      if (i > 0 && leaked[i].first == leaked[i - 1].first)
        throw std::invalid_argument("duplicate sender in observation");
    }
  }
};

// Draws the index-th pattern of the model's stream; a pure function of
// (seed, index) so parallel sampling is reproducible.
inline LeakagePattern sample_pattern(const LeakageModel& model, int n,
                                     std::uint64_t seed, std::uint64_t index) {
  model.validate_for(n);
  Prng rng(seed, index);
  std::vector<std::pair<int, int>> edges;
  switch (model.kind) {
    case LeakageModel::Kind::fixed:
      return model.pattern;
    case LeakageModel::Kind::k_star: {
      const int center = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
      for (int j : rng.subset(n - 1, model.k)) {
        const int leaker = j < center ? j : j + 1;  // skip the center
        edges.emplace_back(leaker, center);
      }
      return LeakagePattern(n, edges);
    }
    case LeakageModel::Kind::k_clique: {
      const auto members = rng.subset(n, model.k);
      for (int a : members)
        for (int b : members)
          if (a != b) edges.emplace_back(a, b);
      return LeakagePattern(n, edges);
    }
    case LeakageModel::Kind::k_broadcast: {
      const auto leakers = rng.subset(n, model.k);
      for (int j : leakers)
        for (int i = 0; i < n; ++i)
          if (i != j) edges.emplace_back(j, i);
      return LeakagePattern(n, edges);
    }
    case LeakageModel::Kind::k_erdos_renyi: {
      for (int i = 0; i < n; ++i)
        for (int j : rng.subset(n - 1, model.k))
          edges.emplace_back(j < i ? j : j + 1, i);
      return LeakagePattern(n, edges);
    }
    case LeakageModel::Kind::mixture: {
      // Exact draw over rational weights: common denominator, integer cut.
      mpz_class denom = 1;
      for (const auto& [w, p] : model.mixture)
        denom = denom / gcd(denom, w.den()) * w.den();
      mpz_class total = 0;
      std::vector<mpz_class> cum;
      for (const auto& [w, p] : model.mixture) {
        total += w.num() * (denom / w.den());
        cum.push_back(total);
      }
      // total == denom; draw uniformly below it (fits 64 bits for sane inputs).
      if (!denom.fits_ulong_p())
        throw SizeRefusal("mixture weight denominator too large to sample");
      const std::uint64_t t = rng.next_below(denom.get_ui());
      for (std::size_t i = 0; i < cum.size(); ++i)
        if (mpz_class(t) < cum[i]) return model.mixture[i].second;
      return model.mixture.back().second;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace persuasion
