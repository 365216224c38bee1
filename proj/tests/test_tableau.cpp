#include <doctest.h>

#include <algorithm>

#include "eigensteps/tableau.hpp"
#include "test_support.hpp"

using namespace eigensteps;

namespace {

Tableau integer_rows(Params p, std::vector<std::vector<int>> rows) {
  std::vector<std::vector<Rational>> values;
  for (const auto& row : rows) values.emplace_back(row.begin(), row.end());
  return Tableau::from_rows(p, values);
}

Rational slack_of(const ValidationReport& r, const ConditionId& id) {
  const auto it = std::find_if(r.slacks.begin(), r.slacks.end(), [&](const ConditionValue& v) { return v.id == id; });
  REQUIRE(it != r.slacks.end());
  return it->value;
}

}  // namespace

TEST_CASE("parameters are range checked") {
  CHECK_NOTHROW(Params::make(0, 0));
  CHECK_NOTHROW(Params::make(5, 5));
  CHECK_THROWS_AS(Params::make(3, 4), DomainError);
  CHECK_THROWS_AS(Params::make(3, -1), DomainError);
  CHECK(Params::make(7, 3).complement() == Params{7, 4});
}

TEST_CASE("tableau shape is enforced") {
  const Params p{5, 2};
  CHECK_THROWS_AS(Tableau(p, std::vector<Rational>(11)), ShapeError);
  CHECK_THROWS_AS(integer_rows(p, {{0, 1, 2, 3, 4, 5}}), ShapeError);
  CHECK_THROWS_AS(integer_rows(p, {{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}}), ShapeError);
}

TEST_CASE("special point of (5,2) matches the printed matrix") {
  const Params p{5, 2};
  const Tableau expected = integer_rows(p, {{0, 2, 3, 4, 5, 5}, {0, 0, 1, 2, 3, 5}});
  CHECK(special_point(p) == expected);
}

TEST_CASE("special point of (6,4) matches the printed matrix") {
  const Params p{6, 4};
  const Tableau expected = integer_rows(p, {{0, 4, 5, 6, 6, 6, 6},
                                            {0, 0, 3, 4, 6, 6, 6},
                                            {0, 0, 0, 2, 3, 6, 6},
                                            {0, 0, 0, 0, 1, 2, 6}});
  CHECK(special_point(p) == expected);
}

TEST_CASE("special point is valid with every reduced slack equal to one") {
  for (int N = 2; N <= 12; ++N) {
    for (int d = 1; d <= N - 1; ++d) {
      CAPTURE(N);
      CAPTURE(d);
      const Tableau t = special_point(Params{N, d});
      CHECK(validate_full(t).valid);
      const auto reduced = validate_reduced(t);
      CHECK(reduced.valid);
      for (const auto& s : reduced.slacks) CHECK(s.value == 1);
    }
  }
}

TEST_CASE("trivial polytopes are single points") {
  for (int N = 0; N <= 6; ++N) {
    const Tableau zero(Params{N, 0});
    CHECK(validate_full(zero).valid);
    const Tableau full = special_point(Params{N, N});
    CHECK(validate_full(full).valid);
    for (int i = 1; i <= N; ++i) {
      for (int n = 0; n <= N; ++n) CHECK(full(i, n) == (i <= n ? N : 0));
    }
  }
}

TEST_CASE("condition ids round-trip through text") {
  const Params p{7, 3};
  for (auto system : {ConditionSystem::full, ConditionSystem::reduced}) {
    for (const auto& id : condition_list(p, system)) CHECK(ConditionId::parse(id.str()) == id);
  }
  CHECK(horizontal(2, 3).str() == "horizontal:2:3");
  CHECK(ConditionId::parse("column-sum::4").kind == ConditionKind::column_sum);
  CHECK(lower_bound(p).str() == "lower-bound:3:3");
  CHECK(upper_bound(p).str() == "upper-bound:1:4");
  CHECK_THROWS_AS(ConditionId::parse("sideways:1:2"), ParseError);
  CHECK_THROWS_AS(ConditionId::parse("horizontal:x:2"), ParseError);
}

TEST_CASE("reduced system has the expected number of inequalities") {
  // 2(d-1)(N-d-1) + (N-2) ... counted directly: horizontals d(N-d-1),
  // diagonals (d-1)(N-d), plus the two bounds
  for (int N = 4; N <= 9; ++N) {
    for (int d = 2; d <= N - 2; ++d) {
      const auto ids = inequality_list(Params{N, d}, ConditionSystem::reduced);
      CHECK(ids.size() == static_cast<std::size_t>(d * (N - d - 1) + (d - 1) * (N - d) + 2));
    }
  }
}

TEST_CASE("violations report the amount and the condition") {
  const Params p{5, 2};
  // P2 from the worked example: only horizontal:2:2 fails, by 1
  const Tableau t = integer_rows(p, {{0, 2, 2, 5, 5, 5}, {0, 0, 2, 1, 3, 5}});
  const auto report = validate_reduced(t);
  CHECK_FALSE(report.valid);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].id == horizontal(2, 2));
  CHECK(report.violations[0].value == 1);
  CHECK(slack_of(report, horizontal(2, 2)) == -1);
  CHECK(slack_of(report, lower_bound(p)) == 2);
}

TEST_CASE("equality violations are reported") {
  const Params p{5, 2};
  Tableau t = special_point(p);
  t(1, 0) = 1;
  const auto full = validate_full(t);
  CHECK_FALSE(full.valid);
  const auto has = [&](const ConditionId& id) {
    return std::any_of(full.violations.begin(), full.violations.end(), [&](const auto& v) { return v.id == id; });
  };
  CHECK(has(ConditionId{ConditionKind::first_column, 1, 0}));
  CHECK_FALSE(in_affine_hull(t));
}

TEST_CASE("full and reduced systems accept the same matrices") {
  for (const Params& p : {Params{4, 2}, Params{5, 2}, Params{6, 3}, Params{7, 4}, Params{6, 1}, Params{6, 5}}) {
    CAPTURE(p.N);
    CAPTURE(p.d);
    std::size_t accepted = 0;
    for (const auto& t : testing::hull_points(p, 11, 300)) {
      const bool full = validate_full(t).valid;
      CHECK(full == validate_reduced(t).valid);
      accepted += full ? 1 : 0;
    }
    for (const auto& t : testing::rough_points(p, 12, 300)) CHECK(validate_full(t).valid == validate_reduced(t).valid);
    if (p.d >= 2 && p.d <= p.N - 2) CHECK(accepted > 0);
  }
}

TEST_CASE("triangles and free entries partition the tableau") {
  for (const Params& p : testing::grid(8)) {
    for (int i = 1; i <= p.d; ++i) {
      for (int n = 0; n <= p.N; ++n) {
        const int kinds = (in_zero_triangle(p, i, n) ? 1 : 0) + (in_n_triangle(p, i, n) ? 1 : 0) +
                          (is_free_entry(p, i, n) ? 1 : 0);
        CHECK(kinds == 1);
      }
    }
  }
}
