#pragma once

#include <string>
#include <vector>

#include "eigensteps/geometry.hpp"

namespace eigensteps {

/// The facet inequalities in plot label order: the lower bound, then by
/// descending row i and increasing n (horizontal before diagonal), then the
/// upper bound. For (5,2) this is lower, horizontal:2:2, diagonal:2:3,
/// horizontal:1:2, upper.
std::vector<ConditionId> plot_label_order(const Params& p);

/// SVG 1.1 drawing of Lambda_{N,d} in its two free coordinates: the polygon,
/// each facet line labelled H1..Hk, the special point and the witness points
/// P1..Pk (P_j violates only H_j). Throws DomainError unless the dimension
/// is 2.
std::string plot2d_svg(const Params& p);

}  // namespace eigensteps
