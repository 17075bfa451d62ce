#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "persuasion/profiles.hpp"
#include "persuasion/rational.hpp"

namespace persuasion {

enum class UtilityKind { table, prefix, anonymous_submodular, xos, additive };

inline const char* to_string(UtilityKind k) {
  switch (k) {
    case UtilityKind::table: return "table";
    case UtilityKind::prefix: return "prefix";
    case UtilityKind::anonymous_submodular: return "anonymous_submodular";
    case UtilityKind::xos: return "xos";
    case UtilityKind::additive: return "additive";
  }
  return "?";
}

// Monotone sender utility V : 2^N -> Q with V(empty) = 0. Construction
// validates the invariants the variant makes checkable: explicit tables are
// checked exhaustively (table kind is capped at n <= 12), the other kinds
// on their defining data.
class UtilityFunction {
 public:
  static constexpr int kTableMaxN = 12;

  static UtilityFunction table(int n, std::map<SubsetMask, Rational> values) {
    if (n < 1 || n > kTableMaxN)
      throw SizeRefusal("table utilities support n <= " + std::to_string(kTableMaxN));
    UtilityFunction u(UtilityKind::table, n);
    u.table_.assign(std::size_t{1} << n, Rational(0));
    for (const auto& [mask, v] : values) {
      if (mask >= (SubsetMask{1} << n))
        throw std::domain_error("subset index out of range");
      u.table_[mask] = v;
    }
    if (!u.table_[0].is_zero())
      throw std::invalid_argument("utility violates V(empty)=0");
    // Monotonicity via single-element extensions covers all S subseteq T.
    for (SubsetMask m = 0; m < (SubsetMask{1} << n); ++m)
      for (int i = 0; i < n; ++i)
        if (!(m >> i & 1) && u.table_[m] > u.table_[m | SubsetMask{1} << i])
          throw std::invalid_argument("utility not monotone");
    return u;
  }

  // w[j] = V([j]) for prefix lengths j = 0..n; V(S) = w[longest prefix in S].
  static UtilityFunction prefix(std::vector<Rational> w) {
    const int n = static_cast<int>(w.size()) - 1;
    if (n < 1) throw std::invalid_argument("prefix weights need n+1 entries");
    if (!w[0].is_zero()) throw std::invalid_argument("utility violates V(empty)=0");
    for (int j = 1; j <= n; ++j)
      if (w[static_cast<std::size_t>(j)] < w[static_cast<std::size_t>(j - 1)])
        throw std::invalid_argument("prefix weights not nondecreasing");
    UtilityFunction u(UtilityKind::prefix, n);
    u.weights_ = std::move(w);
    return u;
  }

  // f[s] = V(S) for |S| = s; requires f concave nondecreasing with f[0]=0.
  static UtilityFunction anonymous_submodular(std::vector<Rational> f) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n < 1) throw std::invalid_argument("anonymous counts need n+1 entries");
    if (!f[0].is_zero()) throw std::invalid_argument("utility violates V(empty)=0");
    for (int s = 1; s <= n; ++s)
      if (f[static_cast<std::size_t>(s)] < f[static_cast<std::size_t>(s - 1)])
        throw std::invalid_argument("anonymous counts not nondecreasing");
    for (int s = 2; s <= n; ++s)
      if (f[static_cast<std::size_t>(s)] - f[static_cast<std::size_t>(s - 1)] >
          f[static_cast<std::size_t>(s - 1)] - f[static_cast<std::size_t>(s - 2)])
        throw std::invalid_argument("anonymous counts not concave");
    UtilityFunction u(UtilityKind::anonymous_submodular, n);
    u.weights_ = std::move(f);
    return u;
  }

  // V(S) = max over clauses of the clause's additive value on S.
  static UtilityFunction xos(std::vector<std::vector<Rational>> clauses) {
    if (clauses.empty()) throw std::invalid_argument("xos needs at least one clause");
    const int n = static_cast<int>(clauses[0].size());
    if (n < 1) throw std::invalid_argument("xos clause width < 1");
    for (const auto& c : clauses) {
      if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument("xos clauses have unequal width");
      for (const auto& v : c)
        if (v.sign() < 0) throw std::invalid_argument("xos clause weight negative");
    }
    UtilityFunction u(UtilityKind::xos, n);
    u.clauses_ = std::move(clauses);
    return u;
  }

  static UtilityFunction additive(std::vector<Rational> v) {
    const int n = static_cast<int>(v.size());
    if (n < 1) throw std::invalid_argument("additive weights empty");
    for (const auto& x : v)
      if (x.sign() < 0) throw std::invalid_argument("additive weight negative");
    UtilityFunction u(UtilityKind::additive, n);
    u.weights_ = std::move(v);
    return u;
  }

  UtilityKind kind() const { return kind_; }
  int n() const { return n_; }

  Rational operator()(SubsetMask s) const { return evaluate(s); }

  Rational evaluate(SubsetMask s) const {
    if (s >= (SubsetMask{1} << n_)) throw std::domain_error("subset index out of range");
    switch (kind_) {
      case UtilityKind::table:
        return table_[s];
      case UtilityKind::prefix:
        return weights_[static_cast<std::size_t>(longest_prefix(s, n_))];
      case UtilityKind::anonymous_submodular:
        return weights_[static_cast<std::size_t>(popcount(s))];
      case UtilityKind::xos: {
        Rational best(0);
        for (const auto& c : clauses_) {
          Rational sum(0);
          for (int i = 0; i < n_; ++i)
            if (s >> i & 1) sum += c[static_cast<std::size_t>(i)];
          if (sum > best) best = sum;
        }
        return best;
      }
      case UtilityKind::additive: {
        Rational sum(0);
        for (int i = 0; i < n_; ++i)
          if (s >> i & 1) sum += weights_[static_cast<std::size_t>(i)];
        return sum;
      }
    }
    throw std::logic_error("unreachable");
  }

  // Accessors for serialization.
  const std::vector<Rational>& weights() const { return weights_; }
  const std::vector<std::vector<Rational>>& clauses() const { return clauses_; }
  const std::vector<Rational>& table_values() const { return table_; }

  friend bool operator==(const UtilityFunction& a, const UtilityFunction& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.weights_ == b.weights_ &&
           a.clauses_ == b.clauses_ && a.table_ == b.table_;
  }

 private:
  UtilityFunction(UtilityKind k, int n) : kind_(k), n_(n) {}

  UtilityKind kind_;
  int n_;
  std::vector<Rational> weights_;               // prefix / anonymous / additive
  std::vector<std::vector<Rational>> clauses_;  // xos
  std::vector<Rational> table_;                 // table, dense 2^n
};

}  // namespace persuasion
