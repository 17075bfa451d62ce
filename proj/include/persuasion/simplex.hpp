#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "persuasion/rational.hpp"

namespace persuasion {

enum class Relation { le, ge, eq };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
    case Relation::eq: return "=";
  }
  return "?";
}

// Maximization LP over exact rationals. Variables are implicitly >= 0;
// explicit bound rows are accepted but redundant.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;

  struct Row {
    std::vector<Rational> coeffs;
    Relation rel;
    Rational rhs;
  };
  std::vector<Row> rows;

  explicit LinearProgram(int vars = 0)
      : num_vars(vars), objective(static_cast<std::size_t>(vars), Rational(0)) {}

  void add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    if (static_cast<int>(coeffs.size()) != num_vars)
      throw std::invalid_argument("constraint width does not match variable count");
    rows.push_back({std::move(coeffs), rel, std::move(rhs)});
  }

  // One row per line, exact rationals, for external verification.
  std::string to_text() const {
    std::ostringstream os;
    os << "max";
    for (const auto& c : objective) os << ' ' << c;
    os << '\n';
    for (const auto& row : rows) {
      for (const auto& c : row.coeffs) os << c << ' ';
      os << to_string(row.rel) << ' ' << row.rhs << '\n';
    }
    return os.str();
  }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status;
  Rational value;
  std::vector<Rational> assignment;
  std::vector<int> basis;  // basic column indices of the final tableau
};

// Two-phase primal simplex with Bland's anti-cycling rule on a dense
// rational tableau. Deterministic: fixed column order (structural, then
// slacks), entering = lowest eligible index, leaving = min ratio with lowest
// basic index tie-break. The returned assignment is re-checked against every
// original constraint before returning.
class SimplexSolver {
 public:
  explicit SimplexSolver(const LinearProgram& lp) : lp_(lp) {}

  LpSolution solve() {
    build();
    if (!phase1()) return {LpStatus::infeasible, Rational(0), {}, {}};
    if (!phase2()) return {LpStatus::unbounded, Rational(0), {}, {}};
    LpSolution sol;
    sol.status = LpStatus::optimal;
    sol.assignment.assign(static_cast<std::size_t>(lp_.num_vars), Rational(0));
    for (int r = 0; r < m_; ++r)
      if (basis_[static_cast<std::size_t>(r)] < lp_.num_vars)
        sol.assignment[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])] =
            rhs(r);
    for (int r = 0; r < m_; ++r) sol.basis.push_back(basis_[static_cast<std::size_t>(r)]);
    Rational value(0);
    for (int j = 0; j < lp_.num_vars; ++j)
      value += lp_.objective[static_cast<std::size_t>(j)] * sol.assignment[static_cast<std::size_t>(j)];
    sol.value = value;
    verify(sol);
    return sol;
  }

 private:
  // Tableau columns: 0..n-1 structural, n..n+m-1 slacks, then artificials,
  // last column rhs. Row m holds the active cost row.
  std::vector<std::vector<Rational>> t_;
  std::vector<int> basis_;
  int n_ = 0, m_ = 0, cols_ = 0, art_begin_ = 0;

  Rational& cell(int r, int c) { return t_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  Rational& rhs(int r) { return t_[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols_ - 1)]; }

  void build() {
    // Normalize to A x <= b, then to equations with slacks; equalities split
    // into opposing inequalities (single constraint kind in the core).
    std::vector<std::pair<std::vector<Rational>, Rational>> le_rows;
    for (const auto& row : lp_.rows) {
      if (row.rel == Relation::le || row.rel == Relation::eq)
        le_rows.push_back({row.coeffs, row.rhs});
      if (row.rel == Relation::ge || row.rel == Relation::eq) {
        std::vector<Rational> neg(row.coeffs.size());
        for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -row.coeffs[j];
        le_rows.push_back({std::move(neg), -row.rhs});
      }
    }
    n_ = lp_.num_vars;
    m_ = static_cast<int>(le_rows.size());
    int num_art = 0;
    for (const auto& [c, b] : le_rows)
      if (b.sign() < 0) ++num_art;
    art_begin_ = n_ + m_;
    cols_ = n_ + m_ + num_art + 1;
    t_.assign(static_cast<std::size_t>(m_ + 1),
              std::vector<Rational>(static_cast<std::size_t>(cols_), Rational(0)));
    basis_.assign(static_cast<std::size_t>(m_), -1);
    int art = art_begin_;
    for (int r = 0; r < m_; ++r) {
      const auto& [coeffs, b] = le_rows[static_cast<std::size_t>(r)];
      const bool flip = b.sign() < 0;
      for (int j = 0; j < n_; ++j)
        cell(r, j) = flip ? -coeffs[static_cast<std::size_t>(j)] : coeffs[static_cast<std::size_t>(j)];
      cell(r, n_ + r) = Rational(flip ? -1 : 1);
      rhs(r) = flip ? -b : b;
      if (flip) {
        cell(r, art) = Rational(1);
        basis_[static_cast<std::size_t>(r)] = art++;
      } else {
        basis_[static_cast<std::size_t>(r)] = n_ + r;
      }
    }
  }

  void pivot(int row, int col) {
    auto& prow = t_[static_cast<std::size_t>(row)];
    const Rational inv = Rational(1) / prow[static_cast<std::size_t>(col)];
    for (auto& v : prow)
      if (!v.is_zero()) v *= inv;
    for (int r = 0; r <= m_; ++r) {
      if (r == row) continue;
      const Rational factor = cell(r, col);
      if (factor.is_zero()) continue;
      auto& target = t_[static_cast<std::size_t>(r)];
      for (int c = 0; c < cols_; ++c)
        if (!prow[static_cast<std::size_t>(c)].is_zero())
          target[static_cast<std::size_t>(c)] -= factor * prow[static_cast<std::size_t>(c)];
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  // Runs Bland iterations on the current cost row over columns < limit.
  // Returns false if some eligible column is unbounded below.
  bool iterate(int limit) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < limit; ++j)
        if (cell(m_, j).sign() < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int r = 0; r < m_; ++r) {
        if (cell(r, enter).sign() <= 0) continue;
        Rational cur = rhs(r) / cell(r, enter);
        if (leave < 0 || cur < best ||
            (cur == best && basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = r;
          best = std::move(cur);
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  bool phase1() {
    if (art_begin_ + 1 == cols_) return true;  // no artificials
    // Cost row: minimize sum of artificials == maximize -sum; expressed over
    // the starting basis by adding the artificial rows.
    for (int c = art_begin_; c < cols_ - 1; ++c) cell(m_, c) = Rational(1);
    for (int r = 0; r < m_; ++r)
      if (basis_[static_cast<std::size_t>(r)] >= art_begin_)
        for (int c = 0; c < cols_; ++c)
          if (!cell(r, c).is_zero()) cell(m_, c) -= cell(r, c);
    if (!iterate(art_begin_)) throw std::logic_error("phase-1 unbounded");
    if (rhs(m_).sign() != 0) return false;  // objective row rhs = -(sum of artificials)
    // Drive any artificial still in the basis out, or drop its redundant row.
    for (int r = 0; r < m_; ++r) {
      if (basis_[static_cast<std::size_t>(r)] < art_begin_) continue;
      int col = -1;
      for (int c = 0; c < art_begin_; ++c)
        if (cell(r, c).sign() != 0) {
          col = c;
          break;
        }
      if (col >= 0) {
        pivot(r, col);
      } else {
        t_.erase(t_.begin() + r);
        basis_.erase(basis_.begin() + r);
        --m_;
        --r;
      }
    }
    // Clear the cost row and zero out dead artificial columns.
    for (int c = 0; c < cols_; ++c) cell(m_, c) = Rational(0);
    return true;
  }

  bool phase2() {
    for (int j = 0; j < n_; ++j) cell(m_, j) = -lp_.objective[static_cast<std::size_t>(j)];
    for (int c = n_; c < cols_; ++c) cell(m_, c) = Rational(0);
    for (int r = 0; r < m_; ++r) {
      const int b = basis_[static_cast<std::size_t>(r)];
      const Rational factor = cell(m_, b);
      if (factor.is_zero()) continue;
      for (int c = 0; c < cols_; ++c)
        if (!cell(r, c).is_zero()) cell(m_, c) -= factor * cell(r, c);
    }
    return iterate(art_begin_);
  }

  void verify(const LpSolution& sol) const {
    for (const auto& row : lp_.rows) {
      Rational lhs(0);
      for (int j = 0; j < lp_.num_vars; ++j)
        lhs += row.coeffs[static_cast<std::size_t>(j)] * sol.assignment[static_cast<std::size_t>(j)];
      const bool ok = row.rel == Relation::le   ? lhs <= row.rhs
                      : row.rel == Relation::ge ? lhs >= row.rhs
                                                : lhs == row.rhs;
      if (!ok) throw std::logic_error("simplex returned an infeasible assignment");
    }
    for (const auto& x : sol.assignment)
      if (x.sign() < 0) throw std::logic_error("simplex returned a negative variable");
  }

  const LinearProgram& lp_;
};

inline LpSolution solve(const LinearProgram& lp) { return SimplexSolver(lp).solve(); }

}  // namespace persuasion
