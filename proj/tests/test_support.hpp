#pragma once

#include <random>
#include <vector>

#include "eigensteps/geometry.hpp"

namespace eigensteps::testing {

/// Points of the affine hull near the special point: free coordinates moved
/// by random multiples of 1/2 in [-step, step].
inline std::vector<Tableau> hull_points(const Params& p, std::uint64_t seed, std::size_t count, int step = 2) {
  const FreeCoordinates chart(p);
  const auto base = chart.coordinates(special_point(p));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> move(-2 * step, 2 * step);
  std::vector<Tableau> out;
  for (std::size_t k = 0; k < count; ++k) {
    auto x = base;
    for (auto& v : x) v += Rational(move(rng), 2);
    out.push_back(chart.tableau(x));
  }
  return out;
}

/// Arbitrary matrices: the special point with random entries moved by -1,
/// 0 or 1, on or off the affine hull.
inline std::vector<Tableau> rough_points(const Params& p, std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> move(-1, 1);
  std::bernoulli_distribution touch(0.15);
  std::vector<Tableau> out;
  for (std::size_t k = 0; k < count; ++k) {
    Tableau t = special_point(p);
    for (int i = 1; i <= p.d; ++i) {
      for (int n = 0; n <= p.N; ++n) {
        if (touch(rng)) t(i, n) += move(rng);
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

/// Every (N, d) with the given bounds.
inline std::vector<Params> grid(int max_N, int min_d_offset = 0) {
  std::vector<Params> out;
  for (int N = 0; N <= max_N; ++N) {
    for (int d = min_d_offset; d <= N - min_d_offset; ++d) out.push_back(Params::make(N, d));
  }
  return out;
}

}  // namespace eigensteps::testing
