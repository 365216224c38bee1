#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eigensteps/errors.hpp"
#include "eigensteps/rational.hpp"

namespace eigensteps {

/// Frame size N and ambient dimension d, 0 <= d <= N. The norm-square of
/// every frame vector is fixed to d, so the frame operator is N * I_d.
struct Params {
  int N = 0;
  int d = 0;

  /// Throws DomainError unless 0 <= d <= N.
  static Params make(int N, int d);

  /// The pair (N, N - d) that the row/diagonal interchange maps to.
  Params complement() const { return Params{N, N - d}; }

  friend auto operator<=>(const Params&, const Params&) = default;
};

/// A position (i, n) of a tableau, 1 <= i <= d and 0 <= n <= N.
struct Cell {
  int i = 0;
  int n = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A d x (N+1) matrix indexed by row i in [1, d] and column n in [0, N].
/// Holds no validity guarantees beyond its shape.
template <class Scalar>
class BasicTableau {
 public:
  BasicTableau() = default;

  /// Zero-filled tableau of the shape given by `params`.
  explicit BasicTableau(Params params)
      : params_(params), entries_(static_cast<std::size_t>(params.d) * (params.N + 1)) {}

  /// Row-major entries, row i = 1 first.
  BasicTableau(Params params, std::vector<Scalar> entries) : params_(params), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(params.d) * (params.N + 1)) {
      throw ShapeError("tableau for (N=" + std::to_string(params.N) + ", d=" + std::to_string(params.d) + ") needs " +
                       std::to_string(params.d * (params.N + 1)) + " entries, got " + std::to_string(entries_.size()));
    }
  }

  /// Rows listed i = 1..d, each of length N + 1.
  static BasicTableau from_rows(Params params, const std::vector<std::vector<Scalar>>& rows) {
    if (rows.size() != static_cast<std::size_t>(params.d)) {
      throw ShapeError("expected " + std::to_string(params.d) + " rows, got " + std::to_string(rows.size()));
    }
    std::vector<Scalar> entries;
    entries.reserve(static_cast<std::size_t>(params.d) * (params.N + 1));
    for (const auto& row : rows) {
      if (row.size() != static_cast<std::size_t>(params.N + 1)) {
        throw ShapeError("expected rows of length " + std::to_string(params.N + 1) + ", got " +
                         std::to_string(row.size()));
      }
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return BasicTableau(params, std::move(entries));
  }

  const Params& params() const { return params_; }
  int N() const { return params_.N; }
  int d() const { return params_.d; }

  Scalar& operator()(int i, int n) { return entries_[index(i, n)]; }
  const Scalar& operator()(int i, int n) const { return entries_[index(i, n)]; }
  Scalar& operator[](Cell c) { return (*this)(c.i, c.n); }
  const Scalar& operator[](Cell c) const { return (*this)(c.i, c.n); }

  std::span<const Scalar> entries() const { return entries_; }

  friend bool operator==(const BasicTableau&, const BasicTableau&) = default;

 private:
  std::size_t index(int i, int n) const {
    return static_cast<std::size_t>(i - 1) * (params_.N + 1) + static_cast<std::size_t>(n);
  }

  Params params_;
  std::vector<Scalar> entries_;
};

using Tableau = BasicTableau<Rational>;

/// Which system a condition list is drawn from: the definitional system or
/// the reduced triangle system.
enum class ConditionSystem { full, reduced };

enum class ConditionKind {
  first_column,
  last_column,
  column_sum,
  horizontal,
  diagonal,
  zero_triangle,
  n_triangle,
  lower_bound,
  upper_bound,
};

std::string_view kind_name(ConditionKind kind);

/// Stable name of one scalar equation or inequality. String form is
/// "kind:i:n" with an empty field when the index is absent, e.g.
/// "horizontal:2:3", "column-sum::4", "lower-bound:2:2".
struct ConditionId {
  ConditionKind kind = ConditionKind::first_column;
  std::optional<int> i;
  std::optional<int> n;

  bool is_inequality() const;
  std::string str() const;
  static ConditionId parse(std::string_view text);

  friend auto operator<=>(const ConditionId&, const ConditionId&) = default;
};

ConditionId horizontal(int i, int n);
ConditionId diagonal(int i, int n);
ConditionId lower_bound(const Params& p);
ConditionId upper_bound(const Params& p);

/// value = constant + sum(coeff * lambda_{i,n}). For an inequality this is
/// its slack (required >= 0), for an equality its residual (required == 0).
struct LinearForm {
  struct Term {
    Cell cell;
    Rational coeff;
  };
  std::vector<Term> terms;
  Rational constant;

  Rational evaluate(const Tableau& t) const;
};

LinearForm condition_form(const Params& p, const ConditionId& id);

struct ConditionValue {
  ConditionId id;
  Rational value;
};

/// `violations` carries positive violation amounts (-slack, or |residual|
/// for equalities); `slacks` lists every inequality of the system checked.
struct ValidationReport {
  bool valid = true;
  std::vector<ConditionValue> violations;
  std::vector<ConditionValue> slacks;
};

/// Every scalar condition of the requested system: equalities first, then
/// inequalities row-major by (i, n) with horizontal before diagonal, then
/// the lower and upper bound.
std::vector<ConditionId> condition_list(const Params& p, ConditionSystem system);

/// Inequalities only, in condition_list order.
std::vector<ConditionId> inequality_list(const Params& p, ConditionSystem system);

ValidationReport validate(const Tableau& t, ConditionSystem system);
ValidationReport validate_full(const Tableau& t);
ValidationReport validate_reduced(const Tableau& t);

/// Zero-, N-triangle and interior column-sum equalities only.
bool in_affine_hull(const Tableau& t);

/// lambda_{i,n} = d + n - 2i + 1 inside the parallelogram of non-fixed
/// entries, 0 below the diagonal, N in the upper-right triangle.
Tableau special_point(const Params& p);

bool in_zero_triangle(const Params& p, int i, int n);
bool in_n_triangle(const Params& p, int i, int n);
/// True for entries not forced by either triangle: i <= n <= N - d + i - 1.
bool is_free_entry(const Params& p, int i, int n);

}  // namespace eigensteps
