#include <catch2/catch_amalgamated.hpp>

#include "persuasion/rng.hpp"
#include "persuasion/simplex.hpp"

using namespace persuasion;

namespace {

LinearProgram lp_of(int vars, std::vector<Rational> objective,
                    std::vector<std::tuple<std::vector<Rational>, Relation, Rational>> rows) {
  LinearProgram lp(vars);
  lp.objective = std::move(objective);
  for (auto& [coeffs, rel, rhs] : rows) lp.add_row(std::move(coeffs), rel, rhs);
  return lp;
}

}  // namespace

TEST_CASE("one-dimensional examples") {
  // max x s.t. x <= 3/7 (x >= 0 implicit, the explicit row is redundant).
  auto lp = lp_of(1, {Rational(1)},
                  {{{Rational(1)}, Relation::le, Rational(3, 7)},
                   {{Rational(1)}, Relation::ge, Rational(0)}});
  auto sol = solve(lp);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.value == Rational(3, 7));
  CHECK(sol.assignment[0] == Rational(3, 7));
}

TEST_CASE("two variables, value unique across optimal vertices") {
  auto lp = lp_of(2, {Rational(1), Rational(1)},
                  {{{Rational(1), Rational(1)}, Relation::le, Rational(1)}});
  auto sol = solve(lp);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.value == Rational(1));
  CHECK(sol.assignment[0] + sol.assignment[1] == Rational(1));
}

TEST_CASE("equalities, negative rhs, and phase 1") {
  auto lp = lp_of(2, {Rational(1), Rational(2)},
                  {{{Rational(1), Rational(1)}, Relation::eq, Rational(1)},
                   {{Rational(-1), Rational(1)}, Relation::ge, Rational(1, 3)}});
  auto sol = solve(lp);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.value == Rational(2));
  CHECK(sol.assignment[1] == Rational(1));

  // Same region, minimize y: x + y = 1 and y - x >= 1/3 force y >= 2/3.
  auto lp2 = lp_of(2, {Rational(0), Rational(-1)},
                   {{{Rational(1), Rational(1)}, Relation::eq, Rational(1)},
                    {{Rational(-1), Rational(1)}, Relation::ge, Rational(1, 3)}});
  auto sol2 = solve(lp2);
  REQUIRE(sol2.status == LpStatus::optimal);
  CHECK(sol2.assignment[1] == Rational(2, 3));
  CHECK(sol2.assignment[0] == Rational(1, 3));
}

TEST_CASE("infeasible and unbounded detection") {
  auto bad = lp_of(1, {Rational(1)},
                   {{{Rational(1)}, Relation::le, Rational(1)},
                    {{Rational(1)}, Relation::ge, Rational(2)}});
  CHECK(solve(bad).status == LpStatus::infeasible);

  auto unb = lp_of(2, {Rational(1), Rational(0)},
                   {{{Rational(0), Rational(1)}, Relation::le, Rational(1)}});
  CHECK(solve(unb).status == LpStatus::unbounded);

  auto empty_eq = lp_of(2, {Rational(1), Rational(1)},
                        {{{Rational(1), Rational(1)}, Relation::eq, Rational(-1)}});
  CHECK(solve(empty_eq).status == LpStatus::infeasible);
}

TEST_CASE("degenerate and redundant rows do not cycle") {
  auto lp = lp_of(3, {Rational(2), Rational(3), Rational(1)},
                  {{{Rational(1), Rational(1), Rational(1)}, Relation::le, Rational(1)},
                   {{Rational(1), Rational(1), Rational(1)}, Relation::le, Rational(1)},
                   {{Rational(1), Rational(0), Rational(0)}, Relation::le, Rational(0)},
                   {{Rational(2), Rational(0), Rational(0)}, Relation::le, Rational(0)},
                   {{Rational(0), Rational(1), Rational(0)}, Relation::ge, Rational(0)}});
  auto sol = solve(lp);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.value == Rational(3));
  CHECK(sol.assignment[0] == Rational(0));
}

TEST_CASE("random LPs agree with a vertex-enumeration oracle") {
  // Oracle: scan all choices of n active rows, solve the linear system by
  // rational Gaussian elimination, keep the best feasible vertex.
  Prng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.next_int(1, 3), m = rng.next_int(1, 4);
    LinearProgram lp(n);
    for (int j = 0; j < n; ++j)
      lp.objective[static_cast<std::size_t>(j)] = Rational(rng.next_int(-3, 4));
    for (int r = 0; r < m; ++r) {
      std::vector<Rational> row;
      for (int j = 0; j < n; ++j) row.push_back(Rational(rng.next_int(-2, 3)));
      lp.add_row(std::move(row), Relation::le, Rational(rng.next_int(0, 5)));
    }
    for (int j = 0; j < n; ++j) {  // keep the region bounded
      std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
      row[static_cast<std::size_t>(j)] = Rational(1);
      lp.add_row(std::move(row), Relation::le, Rational(7));
    }
    const auto sol = solve(lp);
    REQUIRE(sol.status == LpStatus::optimal);

    std::vector<std::vector<Rational>> all_rows;
    std::vector<Rational> all_rhs;
    for (const auto& row : lp.rows) {
      all_rows.push_back(row.coeffs);
      all_rhs.push_back(row.rhs);
    }
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
      row[static_cast<std::size_t>(j)] = Rational(1);
      all_rows.push_back(std::move(row));
      all_rhs.push_back(Rational(0));
    }
    const int total_rows = static_cast<int>(all_rows.size());
    Rational best;
    bool found = false;
    for (std::uint32_t pick = 0; pick < (1u << total_rows); ++pick) {
      if (__builtin_popcount(pick) != n) continue;
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (int r = 0; r < total_rows; ++r)
        if (pick >> r & 1) {
          a.push_back(all_rows[static_cast<std::size_t>(r)]);
          b.push_back(all_rhs[static_cast<std::size_t>(r)]);
        }
      bool singular = false;
      for (int col = 0; col < n && !singular; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
          if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
            piv = r;
            break;
          }
        if (piv < 0) {
          singular = true;
          break;
        }
        std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(col)]);
        std::swap(b[static_cast<std::size_t>(piv)], b[static_cast<std::size_t>(col)]);
        for (int r = 0; r < n; ++r) {
          if (r == col) continue;
          const Rational f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                             a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
          if (f.is_zero()) continue;
          for (int c2 = 0; c2 < n; ++c2)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] -=
                f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c2)];
          b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(col)];
        }
      }
      if (singular) continue;
      std::vector<Rational> x(static_cast<std::size_t>(n));
      for (int col = 0; col < n; ++col)
        x[static_cast<std::size_t>(col)] =
            b[static_cast<std::size_t>(col)] /
            a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      bool feasible = true;
      for (int j = 0; j < n && feasible; ++j)
        if (x[static_cast<std::size_t>(j)].sign() < 0) feasible = false;
      for (std::size_t r = 0; r < lp.rows.size() && feasible; ++r) {
        Rational lhs(0);
        for (int j = 0; j < n; ++j)
          lhs += lp.rows[r].coeffs[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
        if (!(lhs <= lp.rows[r].rhs)) feasible = false;
      }
      if (!feasible) continue;
      Rational value(0);
      for (int j = 0; j < n; ++j)
        value += lp.objective[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
      if (!found || value > best) {
        best = value;
        found = true;
      }
    }
    REQUIRE(found);  // x = 0 is feasible (all rhs >= 0), so a vertex optimum exists
    CHECK(sol.value == best);
  }
}

TEST_CASE("deterministic across repeated solves") {
  Prng rng(23);
  LinearProgram lp(4);
  for (int j = 0; j < 4; ++j) lp.objective[static_cast<std::size_t>(j)] = Rational(rng.next_int(0, 5));
  for (int r = 0; r < 6; ++r) {
    std::vector<Rational> row;
    for (int j = 0; j < 4; ++j) row.push_back(Rational(rng.next_int(-1, 3)));
    lp.add_row(std::move(row), r % 2 ? Relation::le : Relation::ge, Rational(r % 3));
  }
  std::vector<Rational> cap(4, Rational(1));
  lp.add_row(std::move(cap), Relation::le, Rational(9));
  const auto a = solve(lp), b = solve(lp);
  REQUIRE(a.status == b.status);
  if (a.status == LpStatus::optimal) {
    CHECK(a.value == b.value);
    CHECK(a.assignment == b.assignment);
    CHECK(a.basis == b.basis);
  }
}

TEST_CASE("lp text dump is stable") {
  auto lp = lp_of(2, {Rational(1), Rational(1, 2)},
                  {{{Rational(1), Rational(-1)}, Relation::ge, Rational(1, 3)}});
  CHECK(lp.to_text() == "max 1 1/2\n1 -1 >= 1/3\n");
  CHECK_THROWS_AS(lp.add_row({Rational(1)}, Relation::le, Rational(0)), std::invalid_argument);
}
