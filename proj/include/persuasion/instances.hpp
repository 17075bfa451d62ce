#pragma once

#include <map>
#include <utility>
#include <vector>

#include "persuasion/instance.hpp"
#include "persuasion/scheme.hpp"

namespace persuasion {

// Supermodular hard instance: theta_i = 2^-i, lambda = 2^-n, V(S) =
// sum of 2^i over prefixes [i] contained in S, i.e. prefix weights
// w[j] = 2^(j+1) - 2. Optional dummy receivers (theta = 0, zero marginal
// utility) append to n for the padding arguments.
inline Instance hard_supermodular(int n, int pad = 0) {
  if (n < 1 || pad < 0) throw std::invalid_argument("bad instance size");
  std::vector<Rational> theta;
  for (int i = 1; i <= n; ++i) theta.push_back(Rational::pow2(-i));
  for (int i = 0; i < pad; ++i) theta.push_back(Rational(0));
  std::vector<Rational> w{Rational(0)};
  for (int j = 1; j <= n; ++j) w.push_back(Rational::pow2(j + 1) - Rational(2));
  for (int i = 0; i < pad; ++i) w.push_back(w.back());
  return Instance(Rational::pow2(-n), std::move(theta), UtilityFunction::prefix(std::move(w)));
}

// Block instance for the k-clique model: block size B = 4*ceil(n/k), block
// of receiver i (1-based) is floor(i/B), theta_i = 2^-floor(i/B), V(S) =
// sum over b in [k] with [b*B] contained in S of 2^b.
inline Instance hard_clique_blocks(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("bad instance size");
  const int block = 4 * ((n + k - 1) / k);
  std::vector<Rational> theta;
  for (int i = 1; i <= n; ++i) theta.push_back(Rational::pow2(-(i / block)));
  std::vector<Rational> w(static_cast<std::size_t>(n + 1), Rational(0));
  for (int j = 1; j <= n; ++j) {
    Rational v(0);
    for (int b = 1; b <= k; ++b)
      if (b * block <= j) v += Rational::pow2(b);
    w[static_cast<std::size_t>(j)] = v;
  }
  return Instance(Rational::pow2(-n), std::move(theta), UtilityFunction::prefix(std::move(w)));
}

// Anonymous submodular: theta_i = 1/n, V(S) = 1{|S| >= 1}, lambda = 2^-n.
inline Instance hard_submodular_public(int n) {
  if (n < 1) throw std::invalid_argument("bad instance size");
  std::vector<Rational> theta(static_cast<std::size_t>(n), Rational(1, n));
  std::vector<Rational> f(static_cast<std::size_t>(n + 1), Rational(1));
  f[0] = Rational(0);
  return Instance(Rational::pow2(-n), std::move(theta),
                  UtilityFunction::anonymous_submodular(std::move(f)));
}

// Anonymous submodular for general k: theta_i = 1/k, V(S) = 1 -
// C(n-|S|,k)/C(n,k), lambda = 2^-n.
inline Instance hard_submodular_k(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("bad instance size");
  std::vector<Rational> theta(static_cast<std::size_t>(n), Rational(1, k));
  std::vector<Rational> f;
  for (int s = 0; s <= n; ++s) f.push_back(Rational(1) - binomial(n - s, k) / binomial(n, k));
  return Instance(Rational::pow2(-n), std::move(theta),
                  UtilityFunction::anonymous_submodular(std::move(f)));
}

// Externality example: lambda = eps, theta = (1, eps, ..., eps), V(S) =
// 1{1 in S}. Pair with BestResponseMode::externality.
inline Instance externality_instance(int n, const Rational& epsilon) {
  if (n < 2) throw std::invalid_argument("externality instance needs n >= 2");
  if (epsilon <= Rational(0) || epsilon > Rational(1))
    throw std::invalid_argument("epsilon outside (0,1]");
  std::vector<Rational> theta{Rational(1)};
  for (int i = 2; i <= n; ++i) theta.push_back(epsilon);
  std::map<SubsetMask, Rational> table;
  for (SubsetMask m = 1; m < (SubsetMask{1} << n); ++m)
    if (m & 1) table[m] = Rational(1);
  const Rational lambda = epsilon == Rational(1) ? Rational(1, 2) : epsilon;
  return Instance(lambda, std::move(theta), UtilityFunction::table(n, std::move(table)));
}

// The scheme achieving OPT-private = 1 on the externality instance:
// mu1(N) = 1, mu0({1}) = 1 - eps, mu0(N) = eps.
inline SignalingScheme externality_optimal_private(int n, const Rational& epsilon) {
  std::map<SubsetMask, Rational> mu0, mu1;
  mu1[prefix_mask(n)] = Rational(1);
  mu0[SubsetMask{1}] = Rational(1) - epsilon;
  if (!epsilon.is_zero()) mu0[prefix_mask(n)] = epsilon;
  return SignalingScheme::binary(n, std::move(mu0), std::move(mu1));
}

// One axis-aligned subcube as fixed (coordinate, bit) pairs; 0-based
// coordinates, coordinates not listed are free.
struct Subcube {
  std::vector<std::pair<int, int>> fixed;

  bool contains(SubsetMask x) const {
    for (const auto& [coord, bit] : fixed)
      if (static_cast<int>(x >> coord & 1) != bit) return false;
    return true;
  }
  int codimension() const { return static_cast<int>(fixed.size()); }
};

// Subcube partition {C_0,...,C_n} of {0,1}^n for n = 2^k: C_0 fixes x_1 = 0;
// C_i (i >= 1) fixes x_i = 1 plus the binary-search queries that pin down
// the transition x_i = 1, x_{i+1} = 0 (x_{n+1} treated as 0). Co-dimensions
// are at most k + 1.
inline std::vector<Subcube> subcube_partition(int k) {
  if (k < 0 || k > 5) throw std::invalid_argument("subcube partition supports 0 <= k <= 5");
  const int n = 1 << k;
  std::vector<Subcube> cubes(static_cast<std::size_t>(n + 1));
  cubes[0].fixed = {{0, 0}};
  // Walk the query tree: after seeing x_1 = 1, binary search keeps the
  // invariant x_l = 1, x_r = 0 with l, r 1-based and x_{n+1} = 0.
  struct Node {
    int l, r;
    std::vector<std::pair<int, int>> fixed;
  };
  std::vector<Node> stack{{1, n + 1, {{0, 1}}}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (node.r == node.l + 1) {
      cubes[static_cast<std::size_t>(node.l)].fixed = std::move(node.fixed);
      continue;
    }
    const int mid = (node.l + node.r) / 2;
    Node zero = node, one = std::move(node);
    zero.fixed.emplace_back(mid - 1, 0);
    zero.r = mid;
    one.fixed.emplace_back(mid - 1, 1);
    one.l = mid;
    stack.push_back(std::move(zero));
    stack.push_back(std::move(one));
  }
  return cubes;
}

}  // namespace persuasion
