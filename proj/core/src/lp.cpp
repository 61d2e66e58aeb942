#include "covg/lp.hpp"

#include "covg/error.hpp"

namespace covg {

Rational AffineForm::operator()(std::span<const Rational> x) const {
  if (x.size() != coeffs.size()) throw Error(Errc::LengthMismatch, "affine form dimension");
  Rational v = constant;
  for (std::size_t k = 0; k < x.size(); ++k) v += coeffs[k] * x[k];
  return v;
}

AffineForm AffineForm::operator-() const {
  AffineForm out{coeffs, -constant};
  for (auto& c : out.coeffs) c = -c;
  return out;
}

namespace {

class Tableau {
 public:
  // rows_[0..m) are constraints, column `cols_ - 1` holds the rhs.
  Tableau(std::size_t m, std::size_t n) : m_(m), n_(n), a_(m, std::vector<Rational>(n + 1)), basis_(m) {}

  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  Rational& rhs(std::size_t r) { return a_[r][n_]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return m_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = a_[r][c];
    for (auto& v : a_[r]) v /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j <= n_; ++j) {
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      }
    }
    basis_[r] = c;
  }

  /// Maximizes cost . x over the current basis, restricting entering columns
  /// to those with allowed[c]. Returns false if unbounded.
  bool maximize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      // reduced cost d_c = cost_c - sum_r cost_{basis(r)} a_{r c}
      std::size_t entering = n_;
      for (std::size_t c = 0; c < n_ && entering == n_; ++c) {
        if (!allowed[c] || is_basic(c)) continue;
        Rational d = cost[c];
        for (std::size_t r = 0; r < m_; ++r) {
          if (a_[r][c] != 0) d -= cost[basis_[r]] * a_[r][c];
        }
        if (d > 0) entering = c;
      }
      if (entering == n_) return true;

      std::size_t leaving = m_;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (a_[r][entering] <= 0) continue;
        Rational ratio = a_[r][n_] / a_[r][entering];
        if (leaving == m_ || ratio < best || (ratio == best && basis_[r] < basis_[leaving])) {
          leaving = r;
          best = ratio;
        }
      }
      if (leaving == m_) return false;
      pivot(leaving, entering);
    }
  }

  bool is_basic(std::size_t c) const {
    for (auto b : basis_) {
      if (b == c) return true;
    }
    return false;
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

 private:
  std::size_t m_, n_;
  std::vector<std::vector<Rational>> a_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.constraints.size();
  const std::size_t nv = lp.num_vars;
  if (lp.objective.size() != nv) throw Error(Errc::LengthMismatch, "objective length");

  // Columns: original vars, one slack per inequality, one artificial per row needing it.
  std::size_t num_slack = 0;
  for (const auto& c : lp.constraints) {
    if (c.coeffs.size() != nv) throw Error(Errc::LengthMismatch, "constraint length");
    if (c.relation != Relation::Equal) ++num_slack;
  }
  std::vector<bool> needs_artificial(m, false);
  std::size_t num_art = 0;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = lp.constraints[r];
    const bool flipped = c.rhs < 0;
    // A slack with coefficient +1 after normalization can start basic.
    const bool slack_basic = (c.relation == Relation::LessEqual && !flipped) ||
                             (c.relation == Relation::GreaterEqual && flipped);
    if (!slack_basic) {
      needs_artificial[r] = true;
      ++num_art;
    }
  }
  const std::size_t n = nv + num_slack + num_art;
  Tableau t(m, n);

  std::size_t slack = nv, art = nv + num_slack;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = lp.constraints[r];
    const bool flipped = c.rhs < 0;
    const int sgn = flipped ? -1 : 1;
    for (std::size_t j = 0; j < nv; ++j) t.at(r, j) = sgn * c.coeffs[j];
    t.rhs(r) = sgn * c.rhs;
    std::size_t slack_col = n;
    if (c.relation != Relation::Equal) {
      slack_col = slack++;
      t.at(r, slack_col) = (c.relation == Relation::LessEqual ? 1 : -1) * sgn;
    }
    if (needs_artificial[r]) {
      t.at(r, art) = 1;
      t.basis(r) = art++;
    } else {
      t.basis(r) = slack_col;
    }
  }

  std::vector<bool> all(n, true);
  if (num_art > 0) {
    std::vector<Rational> phase1(n);
    for (std::size_t c = nv + num_slack; c < n; ++c) phase1[c] = -1;
    t.maximize(phase1, all);
    Rational infeasibility = 0;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (t.basis(r) >= nv + num_slack) infeasibility += t.rhs(r);
    }
    if (infeasibility != 0) return {LpStatus::Infeasible, 0, {}};
    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basis(r) < nv + num_slack) {
        ++r;
        continue;
      }
      std::size_t col = n;
      for (std::size_t c = 0; c < nv + num_slack && col == n; ++c) {
        if (t.at(r, c) != 0) col = c;
      }
      if (col == n) {
        t.drop_row(r);
      } else {
        t.pivot(r, col);
        ++r;
      }
    }
  }

  std::vector<Rational> cost(n);
  for (std::size_t j = 0; j < nv; ++j) cost[j] = lp.objective[j];
  std::vector<bool> allowed(n, false);
  for (std::size_t c = 0; c < nv + num_slack; ++c) allowed[c] = true;
  if (!t.maximize(cost, allowed)) return {LpStatus::Unbounded, 0, {}};

  LpResult result{LpStatus::Optimal, 0, std::vector<Rational>(nv)};
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.basis(r) < nv) result.x[t.basis(r)] = t.rhs(r);
  }
  for (std::size_t j = 0; j < nv; ++j) result.value += lp.objective[j] * result.x[j];
  return result;
}

Feasibility lp_strict_feasible(const StrictSystem& system) {
  const std::size_t d = system.dimension;
  for (const auto* list : {&system.strict, &system.equalities}) {
    for (const auto& f : *list) {
      if (f.dimension() != d) throw Error(Errc::LengthMismatch, "form dimension differs from system dimension");
    }
  }
  // Variables: x+ (d), x- (d), t.
  LinearProgram lp;
  lp.num_vars = 2 * d + 1;
  lp.objective.assign(lp.num_vars, 0);
  lp.objective[2 * d] = 1;
  auto split = [d](const AffineForm& f, int sign) {
    std::vector<Rational> row(2 * d + 1);
    for (std::size_t k = 0; k < d; ++k) {
      row[k] = sign * f.coeffs[k];
      row[d + k] = -sign * f.coeffs[k];
    }
    return row;
  };
  for (const auto& f : system.strict) {
    // a.x + c >= t  <=>  -a.x + t <= c
    auto row = split(f, -1);
    row[2 * d] = 1;
    lp.constraints.push_back({std::move(row), Relation::LessEqual, f.constant});
  }
  for (const auto& f : system.equalities) {
    lp.constraints.push_back({split(f, 1), Relation::Equal, -f.constant});
  }
  std::vector<Rational> cap(lp.num_vars);
  cap[2 * d] = 1;
  lp.constraints.push_back({std::move(cap), Relation::LessEqual, 1});

  const auto result = solve_lp(lp);
  if (result.status != LpStatus::Optimal || result.value <= 0) return {false, std::nullopt};
  std::vector<Rational> x(d);
  for (std::size_t k = 0; k < d; ++k) x[k] = result.x[k] - result.x[d + k];
  return {true, std::move(x)};
}

}  // namespace covg
