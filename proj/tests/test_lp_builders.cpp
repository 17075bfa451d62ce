#include <catch2/catch_amalgamated.hpp>

#include "persuasion/appendix_c.hpp"
#include "persuasion/checks.hpp"
#include "persuasion/constructors.hpp"
#include "persuasion/instances.hpp"
#include "persuasion/lp_builders.hpp"
#include "persuasion/report.hpp"
#include "persuasion/rng.hpp"

using namespace persuasion;

namespace {

// Random supermodular monotone table: nonnegative combination of prefix
// indicators and an additive part (closed under addition, so supermodular).
Instance random_supermodular_instance(Prng& rng, int n) {
  std::vector<Rational> theta;
  for (int i = 0; i < n; ++i) theta.push_back(Rational(rng.next_int(0, 16), 16));
  std::sort(theta.begin(), theta.end(), [](const auto& a, const auto& b) { return b < a; });
  std::map<SubsetMask, Rational> table;
  std::vector<Rational> prefix_coeff, additive;
  for (int j = 0; j <= n; ++j) prefix_coeff.push_back(Rational(rng.next_int(0, 5), 2));
  for (int i = 0; i < n; ++i) additive.push_back(Rational(rng.next_int(0, 3), 4));
  for (SubsetMask m = 1; m < (SubsetMask{1} << n); ++m) {
    Rational v(0);
    for (int j = 1; j <= n; ++j)
      if ((m & prefix_mask(j)) == prefix_mask(j)) v += prefix_coeff[static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) v += additive[static_cast<std::size_t>(i)];
    if (!v.is_zero()) table[m] = v;
  }
  return Instance(Rational(rng.next_int(1, 9), 10), std::move(theta),
                  UtilityFunction::table(n, std::move(table)));
}

}  // namespace

TEST_CASE("the Appendix C private LP solves to 9/4") {
  const auto instance = appendix_c::instance();
  const auto sol = solve(build_persuasive_lp(instance, 0));
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.value == Rational(9, 4));
}

TEST_CASE("public LP on Appendix C lies between the prefix bound and 9/4") {
  const auto instance = appendix_c::instance();
  const auto sol = solve(build_persuasive_lp(instance, 2));
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.value <= Rational(9, 4));
  CHECK(sol.value >= Rational(15, 8));  // public_prefix(i*=3) achieves 15/8
  const auto scheme = public_prefix(instance, 3).to_scheme();
  CHECK(on_path_utility(instance, scheme) == Rational(15, 8));
}

TEST_CASE("LP value is nonincreasing in k") {
  Prng rng(71);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = rng.next_int(2, 4);
    const auto instance = random_supermodular_instance(rng, n);
    Rational prev(-1);
    for (int k = 0; k <= n - 1; ++k) {
      const auto sol = solve(build_persuasive_lp(instance, k));
      REQUIRE(sol.status == LpStatus::optimal);
      if (k > 0) CHECK(sol.value <= prev);
      prev = sol.value;
    }
  }
}

TEST_CASE("k = 0 LP equals the closed form on random supermodular instances") {
  Prng rng(73);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = rng.next_int(2, 5);
    const auto instance = random_supermodular_instance(rng, n);
    const auto sol = solve(build_persuasive_lp(instance, 0));
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.value == optimal_private_closed_form(instance));
  }
}

TEST_CASE("hard supermodular LP bound from the lower-bound proof") {
  // theta = (1/2, 1/4, 1/8), lambda = 1/8, w = (0,2,6,14): omega0 part of
  // the public optimum obeys sum mu0(S) V(S) <= 2.
  const auto instance = hard_supermodular(3);
  CHECK(instance.thetas() == std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 8)});
  CHECK(instance.lambda() == Rational(1, 8));
  const auto [value, scheme] = solve_persuasive(instance, 2);
  const Rational omega0 = on_path_utility_omega0(instance, scheme);
  CHECK(omega0 <= Rational(2) * (Rational(1) - instance.lambda()));
  CHECK(value <= instance.lambda() * Rational(14) + Rational(2));
}

TEST_CASE("public LP on the anonymous submodular example is at most 1/n") {
  for (int n : {3, 4}) {
    const auto instance = hard_submodular_public(n);
    const auto [value, scheme] = solve_persuasive(instance, n - 1);
    CHECK(on_path_utility_omega0(instance, scheme) <= Rational(1, n));
  }
}

TEST_CASE("schemes passing the checker are feasible for the LP") {
  Prng rng(79);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = rng.next_int(2, 4);
    const int k = rng.next_int(0, n - 1);
    const auto instance = random_supermodular_instance(rng, n);
    const auto scheme = subsample_half(instance, optimal_private(instance).to_scheme(), k);
    REQUIRE(check_k_worst_case(instance, scheme, k).ok);
    const auto lp = build_persuasive_lp(instance, k);
    // Assemble the assignment in LP variable order and check all rows.
    const ProfileSpace space = ProfileSpace::binary(n);
    std::vector<Rational> x(static_cast<std::size_t>(lp.num_vars), Rational(0));
    for (int state : {0, 1})
      for (const auto& [rank, p] : scheme.mu(state))
        x[static_cast<std::size_t>(lp_var_mu(state, rank, space.total()))] = p;
    for (const auto& row : lp.rows) {
      Rational lhs(0);
      for (int j = 0; j < lp.num_vars; ++j)
        lhs += row.coeffs[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
      const bool ok = row.rel == Relation::le   ? lhs <= row.rhs
                      : row.rel == Relation::ge ? lhs >= row.rhs
                                                : lhs == row.rhs;
      CHECK(ok);
    }
  }
}

TEST_CASE("optimal_private_lp matches the general LP and dominates the prefix form") {
  Prng rng(83);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = rng.next_int(2, 4);
    const auto instance = random_supermodular_instance(rng, n);
    const auto [scheme, value] = optimal_private_lp(instance);
    CHECK(value == solve(build_persuasive_lp(instance, 0)).value);
    CHECK(check_private(instance, scheme).ok);
    CHECK(on_path_utility(instance, scheme) == value);
  }
  // Submodular counterexample: the prefix closed form is strictly worse.
  const auto sub = hard_submodular_public(3);
  const auto [scheme, value] = optimal_private_lp(sub);
  CHECK(value > optimal_private_closed_form(sub));
  CHECK(value == solve(build_persuasive_lp(sub, 0)).value);
}

TEST_CASE("LP size refusal carries an estimate") {
  const auto big = hard_supermodular(13);
  CHECK_THROWS_AS(build_persuasive_lp(big, 1), SizeRefusal);
}

TEST_CASE("br-constrained LP: direct play on the empty pattern recovers OPT-private") {
  const auto instance = appendix_c::instance();
  const ProfileSpace space = ProfileSpace::binary(3);
  const LeakagePattern empty(3, {});
  // Responses: adopt iff own signal is 1.
  ResponseTable follow;
  follow.actions.assign(3, {0, 1});
  const auto [value, scheme] = solve_for_responses(instance, space, empty, follow);
  CHECK(value == Rational(9, 4));
}

TEST_CASE("br-constrained LP seeded with the three-signal responses is feasible at 9/4") {
  const auto instance = appendix_c::instance();
  const auto three = appendix_c::three_signal();
  const auto pattern = appendix_c::cycle_pattern();
  const auto responses = responses_of_scheme(instance, three, pattern);
  const auto [value, scheme] =
      solve_for_responses(instance, three.space(), pattern, responses);
  CHECK(value == Rational(9, 4));
}

TEST_CASE("unassigned responses are rejected") {
  const auto instance = appendix_c::instance();
  const ProfileSpace space = ProfileSpace::binary(3);
  ResponseTable bad;
  bad.actions.assign(3, {0, -1});
  CHECK_THROWS_WITH(build_br_constrained_lp(instance, space, LeakagePattern(3, {}), bad),
                    "unassigned observation in response table");
}
