#include "eigensteps/linear_program.hpp"

#include "eigensteps/errors.hpp"

namespace eigensteps {

namespace {

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0 && b[k] != 0) s += a[k] * b[k];
  }
  return s;
}

/// Simplex tableau in standard form M z = b, z >= 0, with one artificial
/// column per row. Column layout: x+ | x- | slacks | artificials | rhs.
class Tableau {
 public:
  Tableau(std::size_t num_vars, std::span<const LinearConstraint> constraints)
      : n_(num_vars), m_(constraints.size()), row_sign_(m_), flip_(m_), slack_col_(m_, kNone) {
    std::size_t slacks = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      if (constraints[r].relation != Relation::equal) slack_col_[r] = 2 * n_ + slacks++;
    }
    art_begin_ = 2 * n_ + slacks;
    cols_ = art_begin_ + m_;
    rows_.assign(m_, std::vector<Rational>(cols_ + 1));
    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      const auto& c = constraints[r];
      if (c.coeffs.size() != n_) throw ShapeError("constraint has the wrong number of coefficients");
      // bring to  s*a.x (<= or =) s*b, then flip so the right side is >= 0
      row_sign_[r] = c.relation == Relation::greater_equal ? -1 : 1;
      const Rational rhs = row_sign_[r] * c.rhs;
      flip_[r] = rhs < 0 ? -1 : 1;
      const int s = row_sign_[r] * flip_[r];
      auto& row = rows_[r];
      for (std::size_t j = 0; j < n_; ++j) {
        if (c.coeffs[j] == 0) continue;
        row[j] = s * c.coeffs[j];
        row[n_ + j] = -row[j];
      }
      if (slack_col_[r] != kNone) row[slack_col_[r]] = flip_[r];
      row[art_begin_ + r] = 1;
      row[cols_] = flip_[r] * rhs;
      // a slack with coefficient +1 is a feasible starting basic variable
      basis_[r] = slack_col_[r] != kNone && flip_[r] == 1 ? slack_col_[r] : art_begin_ + r;
    }
  }

  /// Phase I: minimize the sum of artificials. Returns the optimal value.
  Rational phase_one() {
    std::vector<Rational> cost(cols_);
    for (std::size_t r = 0; r < m_; ++r) cost[art_begin_ + r] = 1;
    price(cost);
    run(/*allow_artificial=*/true);
    return -reduced_[cols_];
  }

  /// Farkas multipliers (original constraint orientation) after an
  /// infeasible phase I.
  std::vector<Rational> farkas() const {
    std::vector<Rational> y(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational u = 1 - reduced_[art_begin_ + r];
      y[r] = -flip_[r] * u * row_sign_[r];
    }
    return y;
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < art_begin_) continue;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (rows_[r][j] != 0) {
          pivot(r, j);
          break;
        }
      }
    }
  }

  /// Phase II on maximize c.x. Returns false when unbounded (the entering
  /// column is kept in `unbounded_col_`).
  bool phase_two(const std::vector<Rational>& objective) {
    std::vector<Rational> cost(cols_);
    for (std::size_t j = 0; j < n_; ++j) {
      cost[j] = -objective[j];
      cost[n_ + j] = objective[j];
    }
    price(cost);
    return run(/*allow_artificial=*/false);
  }

  std::vector<Rational> point() const {
    std::vector<Rational> z(cols_);
    for (std::size_t r = 0; r < m_; ++r) z[basis_[r]] = rows_[r][cols_];
    std::vector<Rational> x(n_);
    for (std::size_t j = 0; j < n_; ++j) x[j] = z[j] - z[n_ + j];
    return x;
  }

  std::vector<Rational> ray() const {
    std::vector<Rational> z(cols_);
    z[unbounded_col_] = 1;
    for (std::size_t r = 0; r < m_; ++r) z[basis_[r]] = -rows_[r][unbounded_col_];
    std::vector<Rational> x(n_);
    for (std::size_t j = 0; j < n_; ++j) x[j] = z[j] - z[n_ + j];
    return x;
  }

  /// Optimal dual values after phase II (original orientation).
  std::vector<Rational> duals() const {
    std::vector<Rational> y(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational u = -reduced_[art_begin_ + r];
      y[r] = -flip_[r] * u * row_sign_[r];
    }
    return y;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void price(const std::vector<Rational>& cost) {
    reduced_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) reduced_[j] = cost[j];
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (rows_[r][j] != 0) reduced_[j] -= cb * rows_[r][j];
      }
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    auto& pr = rows_[row];
    const Rational inv = 1 / pr[col];
    nonzero_.clear();
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (pr[j] != 0) {
        pr[j] *= inv;
        nonzero_.push_back(j);
      }
    }
    const auto eliminate = [&](std::vector<Rational>& target) {
      if (target[col] == 0) return;
      const Rational factor = target[col];
      for (std::size_t j : nonzero_) target[j] -= factor * pr[j];
    };
    for (std::size_t r = 0; r < m_; ++r) {
      if (r != row) eliminate(rows_[r]);
    }
    eliminate(reduced_);
    basis_[row] = col;
  }

  /// Bland's rule: lowest-index improving column, lowest-index leaving
  /// variable among ratio ties.
  bool run(bool allow_artificial) {
    const std::size_t limit = allow_artificial ? cols_ : art_begin_;
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < limit; ++j) {
        if (reduced_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (rows_[r][enter] <= 0) continue;
        Rational ratio = rows_[r][cols_] / rows_[r][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) {
        unbounded_col_ = enter;
        return false;
      }
      pivot(leave, enter);
    }
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<int> row_sign_;
  std::vector<int> flip_;
  std::vector<std::size_t> slack_col_;
  std::size_t art_begin_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> reduced_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nonzero_;
  std::size_t unbounded_col_ = kNone;
};

}  // namespace

void LinearProgram::add(LinearConstraint c) {
  if (c.coeffs.size() != num_vars_) throw ShapeError("constraint has the wrong number of coefficients");
  constraints_.push_back(std::move(c));
}

LPResult LinearProgram::find_feasible() const { return solve(nullptr); }

LPResult LinearProgram::maximize(std::span<const Rational> objective) const {
  if (objective.size() != num_vars_) throw ShapeError("objective has the wrong number of coefficients");
  const std::vector<Rational> c(objective.begin(), objective.end());
  return solve(&c);
}

LPResult LinearProgram::solve(const std::vector<Rational>* objective) const {
  Tableau tab(num_vars_, constraints_);
  LPResult result;
  if (tab.phase_one() > 0) {
    result.status = LPStatus::infeasible;
    result.multipliers = tab.farkas();
    return result;
  }
  tab.drive_out_artificials();
  if (objective == nullptr) {
    result.status = LPStatus::feasible;
    result.point = tab.point();
    return result;
  }
  if (!tab.phase_two(*objective)) {
    result.status = LPStatus::unbounded;
    result.point = tab.point();
    result.ray = tab.ray();
    return result;
  }
  result.status = LPStatus::feasible;
  result.point = tab.point();
  result.multipliers = tab.duals();
  result.objective = dot(*objective, result.point);
  return result;
}

bool satisfies_all(std::span<const LinearConstraint> constraints, std::span<const Rational> x) {
  for (const auto& c : constraints) {
    const Rational lhs = dot(c.coeffs, x);
    switch (c.relation) {
      case Relation::less_equal:
        if (lhs > c.rhs) return false;
        break;
      case Relation::equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::greater_equal:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

bool signs_ok(std::span<const LinearConstraint> constraints, std::span<const Rational> y) {
  if (y.size() != constraints.size()) return false;
  for (std::size_t r = 0; r < y.size(); ++r) {
    if (constraints[r].relation == Relation::less_equal && y[r] < 0) return false;
    if (constraints[r].relation == Relation::greater_equal && y[r] > 0) return false;
  }
  return true;
}

std::vector<Rational> combine(std::span<const LinearConstraint> constraints, std::span<const Rational> y,
                              std::size_t num_vars, Rational& rhs) {
  std::vector<Rational> lhs(num_vars);
  rhs = 0;
  for (std::size_t r = 0; r < y.size(); ++r) {
    if (y[r] == 0) continue;
    for (std::size_t j = 0; j < num_vars; ++j) {
      if (constraints[r].coeffs[j] != 0) lhs[j] += y[r] * constraints[r].coeffs[j];
    }
    rhs += y[r] * constraints[r].rhs;
  }
  return lhs;
}

}  // namespace

bool verify_farkas(std::span<const LinearConstraint> constraints, std::span<const Rational> multipliers) {
  if (!signs_ok(constraints, multipliers) || constraints.empty()) return false;
  Rational rhs;
  const auto lhs = combine(constraints, multipliers, constraints.front().coeffs.size(), rhs);
  for (const auto& v : lhs) {
    if (v != 0) return false;
  }
  return rhs < 0;
}

bool verify_optimal(std::span<const LinearConstraint> constraints, std::span<const Rational> objective,
                    std::span<const Rational> x, std::span<const Rational> multipliers) {
  if (!satisfies_all(constraints, x) || !signs_ok(constraints, multipliers)) return false;
  Rational rhs;
  const auto lhs = combine(constraints, multipliers, objective.size(), rhs);
  for (std::size_t j = 0; j < objective.size(); ++j) {
    if (lhs[j] != objective[j]) return false;
  }
  return rhs == dot(objective, x);
}

bool verify(const LinearProgram& lp, const LPResult& result, std::span<const Rational> objective) {
  const auto constraints = lp.constraints();
  switch (result.status) {
    case LPStatus::infeasible:
      return verify_farkas(constraints, result.multipliers);
    case LPStatus::feasible:
      if (objective.empty()) return satisfies_all(constraints, result.point);
      return verify_optimal(constraints, objective, result.point, result.multipliers);
    case LPStatus::unbounded: {
      if (!satisfies_all(constraints, result.point) || dot(objective, result.ray) <= 0) return false;
      for (const auto& c : constraints) {
        const Rational change = dot(c.coeffs, result.ray);
        if (c.relation == Relation::equal && change != 0) return false;
        if (c.relation == Relation::less_equal && change > 0) return false;
        if (c.relation == Relation::greater_equal && change < 0) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace eigensteps
