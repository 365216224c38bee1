#pragma once

#include <optional>
#include <span>
#include <vector>

#include "eigensteps/geometry.hpp"
#include "eigensteps/linear_program.hpp"

namespace eigensteps {

/// Rows of `h` as constraints over its free coordinates.
std::vector<LinearConstraint> hrep_constraints(const HRep& h);

/// Exact feasibility of `h` together with `extra` (over the same free
/// coordinates). When feasible the point returned maximizes the smallest
/// inequality slack, capped at 1, so for a full-dimensional Lambda_{N,d} it
/// is a strictly interior point; when infeasible `multipliers` is a Farkas
/// vector over the rows of h followed by the extras.
LPResult lp_feasible(const HRep& h, std::span<const LinearConstraint> extra = {});

struct DimensionCertificate {
  int dimension = 0;
  /// d(N+1) entries.
  int ambient = 0;
  /// Rank of the explicit equalities together with the detected implicit ones.
  int equality_rank = 0;
  /// Inequalities of the definitional system that hold with equality on the
  /// whole polytope (these force the two triangles).
  std::vector<ConditionId> implicit_equalities;
  /// Satisfies every other inequality strictly.
  Tableau relative_interior_point;
  /// d(N+1) - d(d+1) - (N-1): the count obtained by removing the triangle
  /// entries and the independent column sums. Only meaningful for
  /// 1 <= d <= N-1, where the triangles do not overlap.
  std::optional<int> counted;
};

/// Affine dimension of the definitional system over all d(N+1) entries,
/// found by repeatedly detecting implicit equalities with exact LPs.
DimensionCertificate dimension_certificate(const Params& p);
int dimension_oracle(const Params& p);

/// Inequalities of `h` that cannot be dropped. Inequalities are removed one
/// at a time in order; one is dropped when maximizing its left side over the
/// remaining ones stays within its right side, so exact duplicates keep a
/// single representative.
std::vector<ConditionId> irredundant_inequalities(const HRep& h);
int irredundant_count(const HRep& h);

/// The "violate exactly `target`" system: every other inequality of the
/// full-reduced representation together with target reversed by
/// `violation`. True when `point` (on the affine hull) satisfies it exactly.
bool certifies_facet(const Params& p, const ConditionId& target, const Tableau& point);

}  // namespace eigensteps
