#pragma once

#include <optional>
#include <vector>

#include "eigensteps/rational.hpp"

namespace eigensteps {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Reduces `m` in place to reduced row echelon form and returns the rank.
int row_reduce(RationalMatrix& m);

int rank(RationalMatrix m);

/// The unique solution of a x = b, or nothing when the system is singular or
/// inconsistent. `a` is square.
std::optional<std::vector<Rational>> solve_unique(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace eigensteps
