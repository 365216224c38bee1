#include "eigensteps/oracle.hpp"

#include <algorithm>

#include "eigensteps/exact_linear_algebra.hpp"

namespace eigensteps {

namespace {

LinearConstraint less_equal(std::vector<Rational> coeffs, Rational rhs) {
  return {std::move(coeffs), Relation::less_equal, std::move(rhs)};
}

/// Row normal of a condition's linear form over the d(N+1) entries.
std::vector<Rational> entry_coefficients(const Params& p, const LinearForm& form) {
  std::vector<Rational> row(static_cast<std::size_t>(p.d) * (p.N + 1));
  for (const auto& term : form.terms) {
    row[static_cast<std::size_t>(term.cell.i - 1) * (p.N + 1) + static_cast<std::size_t>(term.cell.n)] += term.coeff;
  }
  return row;
}

}  // namespace

std::vector<LinearConstraint> hrep_constraints(const HRep& h) {
  std::vector<LinearConstraint> out;
  out.reserve(h.inequalities.size());
  for (const auto& half : h.inequalities) out.push_back(less_equal(half.coeffs, half.rhs));
  return out;
}

LPResult lp_feasible(const HRep& h, std::span<const LinearConstraint> extra) {
  const std::size_t k = h.free_vars.size();
  LinearProgram plain(k);
  for (auto& c : hrep_constraints(h)) plain.add(std::move(c));
  for (const auto& c : extra) plain.add(c);
  LPResult first = plain.find_feasible();
  if (first.status == LPStatus::infeasible) return first;

  // maximize t subject to a.x + t <= b on every inequality row, t <= 1
  LinearProgram deep(k + 1);
  for (const auto& c : plain.constraints()) {
    LinearConstraint row = c;
    row.coeffs.emplace_back(0);
    if (c.relation == Relation::less_equal) row.coeffs.back() = 1;
    if (c.relation == Relation::greater_equal) row.coeffs.back() = -1;
    deep.add(std::move(row));
  }
  std::vector<Rational> cap(k + 1);
  cap[k] = 1;
  deep.add(less_equal(cap, 1));
  const LPResult best = deep.maximize(cap);

  LPResult out;
  out.status = LPStatus::feasible;
  out.point.assign(best.point.begin(), best.point.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

DimensionCertificate dimension_certificate(const Params& p) {
  DimensionCertificate cert;
  cert.ambient = p.d * (p.N + 1);
  if (p.d >= 1 && p.d <= p.N - 1) cert.counted = cert.ambient - p.d * (p.d + 1) - (p.N - 1);
  const auto vars = static_cast<std::size_t>(cert.ambient);

  std::vector<std::pair<std::vector<Rational>, Rational>> equalities;  // a.x == b
  std::vector<ConditionId> open;                                       // slack >= 0, not known tight
  std::vector<std::pair<std::vector<Rational>, Rational>> open_rows;   // slack = a.x + c
  for (const auto& id : condition_list(p, ConditionSystem::full)) {
    const LinearForm form = condition_form(p, id);
    auto row = entry_coefficients(p, form);
    if (id.is_inequality()) {
      open.push_back(id);
      open_rows.emplace_back(std::move(row), form.constant);
    } else {
      equalities.emplace_back(std::move(row), -form.constant);
    }
  }

  // Homogenized slack maximization over (x, alpha, s):
  //   E x = alpha e,  a_k.x + alpha c_k >= s_k,  0 <= s_k <= 1,  alpha >= 1,
  //   maximize sum s_k.
  // Any relative interior point can be scaled until all of its nonzero slacks
  // reach 1, so at the optimum s_k = 1 for every inequality that is strict
  // somewhere and s_k = 0 for the implicit equalities.
  const std::size_t m = open.size();
  const std::size_t alpha = vars;
  const std::size_t width = vars + 1 + m;
  LinearProgram lp(width);
  for (const auto& [a, b] : equalities) {
    std::vector<Rational> row(width);
    std::copy(a.begin(), a.end(), row.begin());
    row[alpha] = -b;
    lp.add({std::move(row), Relation::equal, 0});
  }
  for (std::size_t k = 0; k < m; ++k) {
    const auto& [a, c] = open_rows[k];
    std::vector<Rational> row(width);
    for (std::size_t v = 0; v < vars; ++v) row[v] = -a[v];
    row[alpha] = -c;
    row[vars + 1 + k] = 1;
    lp.add(less_equal(std::move(row), 0));
  }
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Rational> row(width);
    row[vars + 1 + k] = 1;
    lp.add(less_equal(row, 1));
    lp.add({std::move(row), Relation::greater_equal, 0});
  }
  std::vector<Rational> alpha_row(width);
  alpha_row[alpha] = 1;
  lp.add({std::move(alpha_row), Relation::greater_equal, 1});

  std::vector<Rational> objective(width);
  for (std::size_t k = 0; k < m; ++k) objective[vars + 1 + k] = 1;
  const LPResult res = lp.maximize(objective);
  if (res.status != LPStatus::feasible) throw Error("definitional system is infeasible");

  std::vector<Rational> point(vars);
  for (std::size_t v = 0; v < vars; ++v) point[v] = res.point[v] / res.point[alpha];
  for (std::size_t k = 0; k < m; ++k) {
    const Rational& s = res.point[vars + 1 + k];
    if (s == 0) {
      cert.implicit_equalities.push_back(open[k]);
      equalities.emplace_back(open_rows[k].first, -open_rows[k].second);
    } else if (s != 1) {
      throw Error("slack maximization did not separate the implicit equalities");
    }
  }
  std::sort(cert.implicit_equalities.begin(), cert.implicit_equalities.end());

  RationalMatrix normals;
  for (const auto& [a, b] : equalities) normals.push_back(a);
  cert.equality_rank = vars == 0 ? 0 : rank(std::move(normals));
  cert.dimension = cert.ambient - cert.equality_rank;
  cert.relative_interior_point = Tableau(p, std::move(point));
  return cert;
}

int dimension_oracle(const Params& p) { return dimension_certificate(p).dimension; }

std::vector<ConditionId> irredundant_inequalities(const HRep& h) {
  const auto rows = hrep_constraints(h);
  std::vector<bool> active(rows.size(), true);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    LinearProgram lp(h.free_vars.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j != k && active[j]) lp.add(rows[j]);
    }
    const LPResult res = lp.maximize(rows[k].coeffs);
    if (res.status == LPStatus::feasible && res.objective <= rows[k].rhs) active[k] = false;
  }
  std::vector<ConditionId> out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (active[k]) out.push_back(h.inequalities[k].id);
  }
  return out;
}

int irredundant_count(const HRep& h) { return static_cast<int>(irredundant_inequalities(h).size()); }

bool certifies_facet(const Params& p, const ConditionId& target, const Tableau& point) {
  if (point.params() != p || !in_affine_hull(point)) return false;
  const HRep h = h_representation(p, HRepVariant::full_reduced);
  const auto x = FreeCoordinates(p).coordinates(point);
  const auto it = std::find_if(h.inequalities.begin(), h.inequalities.end(),
                               [&](const HalfSpace& half) { return half.id == target; });
  if (it == h.inequalities.end()) return false;
  const Rational violation = -it->slack(x);
  if (violation <= 0) return false;

  std::vector<LinearConstraint> system;
  for (const auto& half : h.inequalities) {
    if (half.id == target) {
      system.push_back({half.coeffs, Relation::greater_equal, half.rhs + violation});
    } else {
      system.push_back(less_equal(half.coeffs, half.rhs));
    }
  }
  return satisfies_all(system, x);
}

}  // namespace eigensteps
