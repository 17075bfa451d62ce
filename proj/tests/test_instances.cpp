#include <catch2/catch_amalgamated.hpp>

#include "persuasion/checks.hpp"
#include "persuasion/constructors.hpp"
#include "persuasion/downstream.hpp"
#include "persuasion/instances.hpp"
#include "persuasion/lp_builders.hpp"
#include "persuasion/report.hpp"
#include "persuasion/rng.hpp"

using namespace persuasion;

TEST_CASE("hard_supermodular values") {
  const auto i3 = hard_supermodular(3);
  CHECK(i3.thetas() == std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 8)});
  CHECK(i3.lambda() == Rational(1, 8));
  CHECK(i3.utility()(0b001) == Rational(2));
  CHECK(i3.utility()(0b011) == Rational(6));
  CHECK(i3.utility()(0b111) == Rational(14));

  // V(S) <= 2^(max(S)+1) exhaustively at n = 10.
  const auto i10 = hard_supermodular(10);
  for (SubsetMask m = 1; m < (SubsetMask{1} << 10); ++m) {
    const int top = 63 - __builtin_clzll(m);
    CHECK(i10.utility()(m) <= Rational::pow2(top + 2));  // max(S) 1-based = top+1
  }

  // Closed form (1-lambda) sum (theta_i - theta_{i+1}) (2^(i+1)-2) with
  // theta_{n+1} = 0; matches the LP optimum (checked in test_constructors).
  Rational expect(0);
  for (int i = 1; i <= 3; ++i)
    expect += (Rational(1) - i3.lambda()) *
              (Rational::pow2(-i) - (i == 3 ? Rational(0) : Rational::pow2(-(i + 1)))) *
              (Rational::pow2(i + 1) - Rational(2));
  CHECK(optimal_private_closed_form_omega0(i3) == expect);
  CHECK(optimal_private_closed_form(i3) == solve(build_persuasive_lp(i3, 0)).value);
}

TEST_CASE("hard_supermodular private utility grows linearly in n") {
  for (int n = 3; n <= 10; ++n) {
    const auto instance = hard_supermodular(n);
    const Rational value = optimal_private_closed_form(instance);
    CHECK(Rational(2) * value >= Rational(n));   // value >= n/2
    CHECK(value <= Rational(2) * Rational(n));   // value <= 2n
  }
}

TEST_CASE("dummy padding keeps OPT-private unchanged") {
  for (int n : {2, 3, 4}) {
    const auto base = hard_supermodular(n);
    const auto padded = hard_supermodular(n, 1);
    CHECK(padded.n() == n + 1);
    CHECK(padded.theta(n) == Rational(0));
    CHECK(solve(build_persuasive_lp(base, 0)).value ==
          solve(build_persuasive_lp(padded, 0)).value);
  }
}

TEST_CASE("hard_clique_blocks") {
  // n=8, k=2: B = 16 > n, everyone in block 0 with theta = 1.
  const auto degenerate = hard_clique_blocks(8, 2);
  for (const auto& t : degenerate.thetas()) CHECK(t == Rational(1));

  // n=64, k=8: B = 32; theta = 1 below index 32, 1/2 up to 63, 1/4 at 64.
  const auto big = hard_clique_blocks(64, 8);
  CHECK(big.thetas()[0] == Rational(1));
  CHECK(big.thetas()[30] == Rational(1));
  CHECK(big.thetas()[31] == Rational(1, 2));  // receiver 32
  CHECK(big.thetas()[62] == Rational(1, 2));
  CHECK(big.thetas()[63] == Rational(1, 4));  // receiver 64

  // V([b*B]) = sum of 2^b' for b' <= b, checked on prefix subsets.
  const auto& u = big.utility();
  CHECK(u.kind() == UtilityKind::prefix);
  CHECK(u.weights()[31] == Rational(0));
  CHECK(u.weights()[32] == Rational(2));
  CHECK(u.weights()[63] == Rational(2));
  CHECK(u.weights()[64] == Rational(6));
}

TEST_CASE("hard submodular instances") {
  const auto pub = hard_submodular_public(4);
  CHECK(pub.utility().weights() ==
        std::vector<Rational>{Rational(0), Rational(1), Rational(1), Rational(1), Rational(1)});
  CHECK(pub.thetas()[0] == Rational(1, 4));

  const auto k2 = hard_submodular_k(5, 2);
  CHECK(k2.utility().weights()[1] == Rational(2, 5));  // 1 - C(4,2)/C(5,2)
  CHECK(k2.thetas()[0] == Rational(1, 2));

  // Concavity of f holds for all n <= 20, k <= n (validated on construction).
  for (int n = 2; n <= 20; ++n)
    for (int k = 1; k <= n; ++k) CHECK_NOTHROW(hard_submodular_k(n, k));
}

TEST_CASE("externality instance and scheme") {
  const auto instance = externality_instance(3, Rational(1, 10));
  CHECK(instance.lambda() == Rational(1, 10));
  CHECK(instance.thetas() == std::vector<Rational>{Rational(1), Rational(1, 10), Rational(1, 10)});
  CHECK(instance.utility()(0b001) == Rational(1));
  CHECK(instance.utility()(0b110) == Rational(0));

  const auto scheme = externality_optimal_private(3, Rational(1, 10));
  CHECK(check_private(instance, scheme, BestResponseMode::externality).ok);
  CHECK(on_path_utility(instance, scheme) == Rational(1));

  // A single leaked zero breaks it (Externality mode, k = 1).
  const auto verdict = check_k_worst_case(instance, scheme, 1, BestResponseMode::externality);
  REQUIRE_FALSE(verdict.ok);

  CHECK_NOTHROW(externality_instance(2, Rational(1)));  // boundary eps = 1
}

TEST_CASE("subcube partition is exact, with the stated fixings") {
  for (int k = 0; k <= 4; ++k) {
    const int n = 1 << k;
    const auto cubes = subcube_partition(k);
    REQUIRE(cubes.size() == static_cast<std::size_t>(n + 1));
    for (const auto& c : cubes) CHECK(c.codimension() <= k + 1);
    // C_0 = {x1 = 0}; C_i fixes x_i = 1 and, for i < n, x_{i+1} = 0.
    CHECK(cubes[0].fixed == std::vector<std::pair<int, int>>{{0, 0}});
    for (int i = 1; i <= n; ++i) {
      bool own = false, next = i == n;
      for (const auto& [coord, bit] : cubes[static_cast<std::size_t>(i)].fixed) {
        if (coord == i - 1) {
          CHECK(bit == 1);
          own = true;
        }
        if (i < n && coord == i) {
          CHECK(bit == 0);
          next = true;
        }
      }
      CHECK(own);
      CHECK(next);
    }
    // Exhaustive partition check over {0,1}^n (n <= 16).
    for (SubsetMask x = 0; x < (SubsetMask{1} << n); ++x) {
      int hits = 0;
      for (const auto& c : cubes)
        if (c.contains(x)) ++hits;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("k = 1 subcube example") {
  const auto cubes = subcube_partition(1);
  CHECK(cubes[1].fixed == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
  CHECK(cubes[2].fixed == std::vector<std::pair<int, int>>{{0, 1}, {1, 1}});
}

TEST_CASE("lower-bound certificates via the LP") {
  for (int k : {1, 2}) {
    const auto row = verify_lower_bound_row("hard-supermodular", hard_supermodular(1 << k), k);
    CHECK(row.ok);
    CHECK(row.omega0_part <= row.bound);
    CHECK(row.opt_private >= row.opt_persuasive_k);
    CHECK(row.opt_persuasive_k >= row.opt_public);
  }
  for (int n : {3, 4}) {
    const auto row =
        verify_lower_bound_row("hard-submodular-public", hard_submodular_public(n), n - 1);
    CHECK(row.ok);
    CHECK(row.bound == Rational(1, n));
  }
}

TEST_CASE("prefix-based PoDR bound under k-broadcast, Monte Carlo") {
  // Coarse sweep over prefix-based schemes on the hard instance at n = 16:
  // the best one stays below the proof's O(n/k) cap. The explicit constant
  // from the block argument is 2 * E[|B_l(j')|] <= 2 * (n/k + 1) per unit of
  // mu1 mass, so expected utility <= 2(n/k + 1) + lambda V(N) margin.
  const int n = 16;
  const auto instance = hard_supermodular(n);
  for (int k : {2, 4}) {
    std::vector<PrefixScheme> sweep;
    sweep.push_back(optimal_private(instance));
    for (int m = 1; m <= n; m += 3) sweep.push_back(public_prefix(instance, m));
    sweep.push_back(mask_remove(instance, 1, k));
    // Bound from the block argument: 2 * E|B_l(j')| <= 2(n/k + 1) on the
    // omega0 side, plus lambda V(N) from omega1.
    const double bound = 2.0 * (static_cast<double>(n) / k + 1) +
                         (instance.lambda() * instance.utility()(prefix_mask(n))).to_double();
    for (const auto& prefix_scheme : sweep) {
      const auto est = downstream_utility_mc(instance, prefix_scheme.to_scheme(),
                                             LeakageModel::broadcast(k), 100000, 4242);
      CHECK(est.mean <= bound + 4.0 * est.stderr_);
    }
  }
}
