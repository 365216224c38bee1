#pragma once

#include <span>
#include <vector>

#include "eigensteps/rational.hpp"

namespace eigensteps {

enum class Relation { less_equal, equal, greater_equal };

/// coeffs . x (relation) rhs, over free (unbounded) variables.
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::less_equal;
  Rational rhs;
};

enum class LPStatus { feasible, infeasible, unbounded };

/// Outcome of an exact solve.
///
/// feasible:   `point` satisfies every constraint; when an objective was
///             maximized it is optimal and `multipliers` holds dual values
///             y with y.A = c, y.b = objective.
/// infeasible: `multipliers` is a Farkas vector y with y.A = 0 and y.b < 0.
/// unbounded:  `point` is feasible and `ray` an improving recession
///             direction.
///
/// Multiplier signs: >= 0 for <= rows, <= 0 for >= rows, free for equalities.
struct LPResult {
  LPStatus status = LPStatus::infeasible;
  std::vector<Rational> point;
  std::vector<Rational> multipliers;
  std::vector<Rational> ray;
  Rational objective;
};

/// Dense two-phase tableau simplex over exact rationals with Bland's
/// anticycling rule. Intended for the small systems in this library.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars) : num_vars_(num_vars) {}

  void add(LinearConstraint c);
  std::size_t num_vars() const { return num_vars_; }
  std::span<const LinearConstraint> constraints() const { return constraints_; }

  /// Phase I only.
  LPResult find_feasible() const;
  LPResult maximize(std::span<const Rational> objective) const;

 private:
  LPResult solve(const std::vector<Rational>* objective) const;

  std::size_t num_vars_;
  std::vector<LinearConstraint> constraints_;
};

bool satisfies_all(std::span<const LinearConstraint> constraints, std::span<const Rational> x);
bool verify_farkas(std::span<const LinearConstraint> constraints, std::span<const Rational> multipliers);
/// Checks primal feasibility, multiplier signs, y.A == c and y.b == c.x.
bool verify_optimal(std::span<const LinearConstraint> constraints, std::span<const Rational> objective,
                    std::span<const Rational> x, std::span<const Rational> multipliers);
/// Certificate check for any LPResult of the given program.
bool verify(const LinearProgram& lp, const LPResult& result, std::span<const Rational> objective = {});

}  // namespace eigensteps
