#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eigensteps/tableau.hpp"

namespace eigensteps {

/// Affine function of the free coordinates: constant + coeffs . x.
struct AffineExpr {
  std::vector<Rational> coeffs;
  Rational constant;
};

/// Parametrization of aff(Lambda_{N,d}) by its free entries.
///
/// The non-fixed entries form the parallelogram i <= n <= N - d + i - 1.
/// In every interior column the non-fixed entry with the smallest row index
/// is eliminated through the column-sum equality; the remaining non-fixed
/// entries are the free coordinates, ordered row-major. This leaves
/// (d-1)(N-d-1) coordinates for 1 <= d <= N-1 and none otherwise.
class FreeCoordinates {
 public:
  explicit FreeCoordinates(const Params& p);

  const Params& params() const { return params_; }
  std::size_t size() const { return free_.size(); }
  std::span<const Cell> free_cells() const { return free_; }
  std::span<const Cell> eliminated_cells() const { return eliminated_; }

  /// Entry (i, n) as an affine function of the free coordinates.
  const AffineExpr& entry(int i, int n) const;
  AffineExpr substitute(const LinearForm& form) const;

  /// The point of the affine hull with free coordinates `x`.
  Tableau tableau(std::span<const Rational> x) const;
  /// Reads the free entries of `t` (no hull check).
  std::vector<Rational> coordinates(const Tableau& t) const;

 private:
  Params params_;
  std::vector<Cell> free_;
  std::vector<Cell> eliminated_;
  std::vector<AffineExpr> exprs_;  // row-major over the d x (N+1) entries
};

enum class HRepVariant { full_reduced, non_redundant };

std::string_view variant_name(HRepVariant variant);
HRepVariant parse_variant(std::string_view text);

/// coeffs . x <= rhs over the free coordinates.
struct HalfSpace {
  ConditionId id;
  std::vector<Rational> coeffs;
  Rational rhs;

  Rational slack(std::span<const Rational> x) const;
};

struct HRep {
  Params params;
  HRepVariant variant = HRepVariant::full_reduced;
  std::vector<Cell> free_vars;
  /// One eliminated entry per interior column, solved from its column sum.
  std::vector<Cell> eliminated;
  std::string equalities_eliminated;
  std::vector<HalfSpace> inequalities;

  bool contains(std::span<const Rational> x) const;
};

/// 0 for d in {0, N}, otherwise (d-1)(N-d-1).
int dimension(const Params& p);

/// d(N-d-1) + (N-d)(d-1) - 2 for 2 <= d <= N-2, and 0 otherwise (the
/// polytope is then a single point).
int facet_count(const Params& p);

/// The inequalities that follow from the others for N >= 5, 2 <= d <= N-2:
/// lambda_{2,2} <= lambda_{1,1}, lambda_{1,1} <= lambda_{1,2},
/// lambda_{d,N-2} <= lambda_{d,N-1}, lambda_{d,N-1} <= lambda_{d-1,N-2}.
std::vector<ConditionId> superfluous_inequalities(const Params& p);

/// The reduced-system inequalities that define facets (the full-reduced
/// list minus the superfluous ones; for (4,2) the lower bound and
/// horizontal:2:2, since there several inequalities coincide).
std::vector<ConditionId> facet_inequalities(const Params& p);

/// Full-reduced: every inequality of the reduced system, requires
/// 1 <= d <= N-1. Non-redundant: facet inequalities only, requires
/// 2 <= d <= N-2.
HRep h_representation(const Params& p, HRepVariant variant);

struct Witness {
  Tableau point;
  /// How the point was found, e.g. "horizontal-square",
  /// "phi(diagonal-square)", "psi(phi(lower-bound-d2))", "exhaustive-search".
  std::string strategy;
};

/// A point of aff(Lambda_{N,d}) that violates exactly `target` among the
/// reduced-system inequalities. Requires N >= 5, 2 <= d <= N-2 and a target
/// that is not superfluous.
Witness find_witness(const Params& p, const ConditionId& target);
Tableau witness_point(const Params& p, const ConditionId& target);

/// Bounded search used when no local pattern applies: perturbs at most
/// `max_entries` free coordinates of the special point by values in
/// {-2, ..., 2}, fewest entries first. Returns nothing when no perturbation
/// in range works.
std::optional<Tableau> search_witness(const Params& p, const ConditionId& target, int max_entries = 6);

struct Vertex {
  Tableau tableau;
  /// Every reduced-system inequality with zero slack at the vertex.
  std::vector<ConditionId> tight_conditions;
};

/// All vertices by subset enumeration over the facet inequalities with
/// exact solves. Requires dimension(p) <= 6; throws DomainError when more
/// than `limit` vertices are found. Sorted lexicographically by entries.
std::vector<Vertex> enumerate_vertices(const Params& p, std::size_t limit);

/// Rank, over the free coordinates, of the given conditions' normals.
int condition_rank(const Params& p, std::span<const ConditionId> ids);

/// Exact rational hit-and-run started at the special point: random integer
/// directions with entries in {-3..3}, each step moving to the midpoint of
/// the feasible chord. Every sample is strictly inside Lambda_{N,d}.
/// Requires 1 <= d <= N-1; deterministic for a given seed.
std::vector<Tableau> sample_interior(const Params& p, std::uint64_t seed, std::size_t count);

}  // namespace eigensteps
