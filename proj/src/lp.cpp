#include "walks/lp.hpp"

#include <optional>
#include <stdexcept>

namespace walks::lp {

namespace {

class Tableau {
 public:
  // rows: [coefficients... | rhs]; basis[r] = column basic in row r.
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> basis;
  std::size_t columns = 0;

  void pivot(std::size_t r, std::size_t col) {
    const Rational p = rows[r][col];
    for (Rational& v : rows[r]) v /= p;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || sgn(rows[k][col]) == 0) continue;
      const Rational f = rows[k][col];
      for (std::size_t c = 0; c <= columns; ++c) rows[k][c] -= f * rows[r][c];
    }
    basis[r] = col;
  }

  // Minimizes cost over the columns flagged in allowed. Returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < columns && !entering; ++c) {
        if (!allowed[c]) continue;
        Rational reduced = cost[c];
        for (std::size_t r = 0; r < rows.size(); ++r) reduced -= cost[basis[r]] * rows[r][c];
        if (sgn(reduced) < 0) entering = c;
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (sgn(rows[r][*entering]) <= 0) continue;
        Rational ratio = rows[r][columns] / rows[r][*entering];
        if (!leaving || ratio < best || (ratio == best && basis[r] < basis[*leaving])) {
          leaving = r;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }
};

}  // namespace

Solution solve(const Problem& p) {
  const std::size_t m = p.A.size();
  const std::size_t n = p.c.size();
  if (p.b.size() != m) throw std::invalid_argument("lp: A and b disagree in row count");
  for (const auto& row : p.A)
    if (row.size() != n) throw std::invalid_argument("lp: A and c disagree in column count");

  Tableau t;
  t.columns = n + m;
  t.rows.assign(m, std::vector<Rational>(n + m + 1));
  t.basis.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = sgn(p.b[r]) < 0;
    for (std::size_t c = 0; c < n; ++c) t.rows[r][c] = flip ? Rational(-p.A[r][c]) : p.A[r][c];
    t.rows[r][n + r] = 1;
    t.rows[r][n + m] = flip ? Rational(-p.b[r]) : p.b[r];
    t.basis[r] = n + r;
  }

  std::vector<Rational> phase1(n + m);
  for (std::size_t k = n; k < n + m; ++k) phase1[k] = 1;
  t.optimize(phase1, std::vector<bool>(n + m, true));

  Rational infeasibility;
  for (std::size_t r = 0; r < m; ++r)
    if (t.basis[r] >= n) infeasibility += t.rows[r][n + m];
  if (sgn(infeasibility) > 0) return {Status::Infeasible, {}, 0};

  // Drive zero-valued artificials out of the basis; drop redundant rows.
  for (std::size_t r = 0; r < t.rows.size();) {
    if (t.basis[r] < n) {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t c = 0; c < n && !col; ++c)
      if (sgn(t.rows[r][c]) != 0) col = c;
    if (col) {
      t.pivot(r, *col);
      ++r;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(r));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
    }
  }

  std::vector<Rational> cost(n + m);
  for (std::size_t c = 0; c < n; ++c) cost[c] = p.c[c];
  std::vector<bool> allowed(n + m, false);
  for (std::size_t c = 0; c < n; ++c) allowed[c] = true;
  if (!t.optimize(cost, allowed)) return {Status::Unbounded, {}, 0};

  Solution s{Status::Optimal, std::vector<Rational>(n), 0};
  for (std::size_t r = 0; r < t.rows.size(); ++r) s.x[t.basis[r]] = t.rows[r][n + m];
  for (std::size_t c = 0; c < n; ++c) s.objective += p.c[c] * s.x[c];
  return s;
}

}  // namespace walks::lp
