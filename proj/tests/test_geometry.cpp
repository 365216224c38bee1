#include <doctest.h>

#include <algorithm>
#include <set>

#include "eigensteps/affine_maps.hpp"
#include "eigensteps/geometry.hpp"
#include "test_support.hpp"

using namespace eigensteps;

namespace {

std::vector<std::string> id_strings(const std::vector<ConditionId>& ids) {
  std::vector<std::string> out;
  for (const auto& id : ids) out.push_back(id.str());
  return out;
}

std::vector<std::string> id_strings(const HRep& h) {
  std::vector<std::string> out;
  for (const auto& half : h.inequalities) out.push_back(half.id.str());
  return out;
}

}  // namespace

TEST_CASE("dimension formula values") {
  CHECK(dimension(Params{6, 4}) == 3);
  CHECK(dimension(Params{7, 3}) == 6);
  CHECK(dimension(Params{5, 5}) == 0);
  CHECK(dimension(Params{5, 0}) == 0);
  CHECK(dimension(Params{5, 2}) == 2);
  CHECK(dimension(Params{4, 2}) == 1);
  CHECK(dimension(Params{6, 1}) == 0);
}

TEST_CASE("facet formula values") {
  CHECK(facet_count(Params{5, 2}) == 5);
  CHECK(facet_count(Params{4, 2}) == 2);
  CHECK(facet_count(Params{6, 3}) == 10);
  CHECK(facet_count(Params{6, 1}) == 0);
  CHECK(facet_count(Params{6, 5}) == 0);
  for (int N = 4; N <= 12; ++N) {
    for (int d = 2; d <= N - 2; ++d) {
      CHECK(facet_count(Params{N, d}) == facet_count(Params{N, N - d}));
      CHECK(static_cast<int>(facet_inequalities(Params{N, d}).size()) == facet_count(Params{N, d}));
    }
  }
}

TEST_CASE("free coordinates parametrize the affine hull") {
  for (const Params& p : testing::grid(9, 1)) {
    const FreeCoordinates chart(p);
    CHECK(static_cast<int>(chart.size()) == dimension(p));
    for (const auto& t : testing::hull_points(p, 4, 10)) {
      CHECK(in_affine_hull(t));
      CHECK(chart.tableau(chart.coordinates(t)) == t);
    }
  }
}

TEST_CASE("(5,2) representation in the worked example's coordinates") {
  const Params p{5, 2};
  const HRep h = h_representation(p, HRepVariant::non_redundant);
  REQUIRE(h.free_vars.size() == 2);
  CHECK(h.free_vars[0] == Cell{2, 2});
  CHECK(h.free_vars[1] == Cell{2, 3});
  CHECK(id_strings(h) == std::vector<std::string>{"horizontal:1:2", "horizontal:2:2", "diagonal:2:3", "lower-bound:2:2",
                                                   "upper-bound:1:3"});
  const std::vector<Rational> centre{1, 2};
  CHECK(h.contains(centre));
  for (const auto& half : h.inequalities) CHECK(half.slack(centre) == 1);
  // lambda_{2,2} >= 0 reads -x1 <= 0
  CHECK(h.inequalities[3].coeffs == std::vector<Rational>{-1, 0});
  CHECK(h.inequalities[3].rhs == 0);
  CHECK(h.equalities_eliminated.find("lambda[1,2] = 4 - lambda[2,2]") != std::string::npos);
}

TEST_CASE("(4,2) keeps one inequality per side of the segment") {
  const HRep h = h_representation(Params{4, 2}, HRepVariant::non_redundant);
  CHECK(h.inequalities.size() == 2);
  CHECK(id_strings(h) == std::vector<std::string>{"horizontal:2:2", "lower-bound:2:2"});
  CHECK(h.contains(std::vector<Rational>{0}));
  CHECK(h.contains(std::vector<Rational>{2}));
  CHECK_FALSE(h.contains(std::vector<Rational>{Rational(-1, 2)}));
  CHECK_FALSE(h.contains(std::vector<Rational>{Rational(5, 2)}));
}

TEST_CASE("representation variants check their ranges") {
  CHECK_THROWS_AS(h_representation(Params{5, 1}, HRepVariant::non_redundant), DomainError);
  CHECK_NOTHROW(h_representation(Params{5, 1}, HRepVariant::full_reduced));
  CHECK_THROWS_AS(h_representation(Params{5, 0}, HRepVariant::full_reduced), DomainError);
  CHECK_THROWS_AS(h_representation(Params{5, 5}, HRepVariant::full_reduced), DomainError);
  CHECK_THROWS_AS(parse_variant("minimal"), ParseError);
}

TEST_CASE("representation membership agrees with validation") {
  for (const Params& p : {Params{5, 2}, Params{6, 3}, Params{7, 2}, Params{7, 4}}) {
    const FreeCoordinates chart(p);
    const HRep full = h_representation(p, HRepVariant::full_reduced);
    const HRep facets = h_representation(p, HRepVariant::non_redundant);
    for (const auto& t : testing::hull_points(p, 8, 300)) {
      const auto x = chart.coordinates(t);
      const bool valid = validate_reduced(t).valid;
      CHECK(full.contains(x) == valid);
      CHECK(facets.contains(x) == valid);
    }
  }
}

TEST_CASE("superfluous inequalities are the four corner conditions") {
  CHECK(id_strings(superfluous_inequalities(Params{7, 3})) ==
        std::vector<std::string>{"diagonal:2:2", "horizontal:1:1", "horizontal:3:5", "diagonal:3:6"});
  CHECK_THROWS_AS(superfluous_inequalities(Params{7, 1}), DomainError);
}

TEST_CASE("superfluous inequalities follow from the facet inequalities") {
  // On the polytope lambda_{2,2} <= d and lambda_{d-1,N-2} >= N-d, which
  // is what the four dropped conditions reduce to.
  for (const Params& p : {Params{5, 2}, Params{6, 3}, Params{7, 4}, Params{8, 3}}) {
    const auto dropped = superfluous_inequalities(p);
    for (const auto& t : sample_interior(p, 2, 200)) {
      CHECK(t(2, 2) <= p.d);
      CHECK(t(p.d - 1, p.N - 2) >= p.N - p.d);
      for (const auto& id : dropped) CHECK(condition_form(p, id).evaluate(t) >= 0);
    }
  }
}

TEST_CASE("witness points exist for every facet inequality up to N = 10") {
  std::size_t searched = 0;
  for (int N = 5; N <= 10; ++N) {
    for (int d = 2; d <= N - 2; ++d) {
      const Params p{N, d};
      for (const auto& id : facet_inequalities(p)) {
        CAPTURE(N);
        CAPTURE(d);
        CAPTURE(id.str());
        const Witness w = find_witness(p, id);
        CHECK(in_affine_hull(w.point));
        const auto report = validate_reduced(w.point);
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].id == id);
        searched += w.strategy == "exhaustive-search" ? 1 : 0;
      }
    }
  }
  // the local patterns and their images cover everything in this range
  CHECK(searched == 0);
}

TEST_CASE("witness points of the worked example") {
  const Params p{5, 2};
  const auto rows = [&](std::vector<int> top, std::vector<int> bottom) {
    // printed with row 2 above row 1
    return Tableau::from_rows(p, {std::vector<Rational>(bottom.begin(), bottom.end()),
                                  std::vector<Rational>(top.begin(), top.end())});
  };
  const Tableau P1 = rows({0, 0, -1, 1, 3, 5}, {0, 2, 5, 5, 5, 5});
  const Tableau P2 = rows({0, 0, 2, 1, 3, 5}, {0, 2, 2, 5, 5, 5});
  const Tableau P3 = rows({0, 0, 2, 3, 3, 5}, {0, 2, 2, 3, 5, 5});
  const Tableau P4 = rows({0, 0, 0, 3, 3, 5}, {0, 2, 4, 3, 5, 5});
  const Tableau P5 = rows({0, 0, 0, 0, 3, 5}, {0, 2, 4, 6, 5, 5});
  CHECK(witness_point(p, lower_bound(p)) == P1);
  CHECK(witness_point(p, horizontal(2, 2)) == P2);
  CHECK(witness_point(p, diagonal(2, 3)) == P3);
  CHECK(witness_point(p, horizontal(1, 2)) == P4);
  CHECK(witness_point(p, upper_bound(p)) == P5);
  CHECK(phi(P2) == P4);
  CHECK(phi(P1) == P5);
}

TEST_CASE("witness requests outside the facet range fail") {
  CHECK_THROWS_AS(find_witness(Params{4, 2}, horizontal(2, 2)), DomainError);
  CHECK_THROWS_AS(find_witness(Params{7, 1}, lower_bound(Params{7, 1})), DomainError);
  CHECK_THROWS_AS(find_witness(Params{7, 3}, horizontal(1, 1)), DomainError);
  CHECK_THROWS_AS(find_witness(Params{7, 3}, horizontal(3, 6)), DomainError);
  CHECK_THROWS_AS(find_witness(Params{7, 3}, ConditionId{ConditionKind::column_sum, std::nullopt, 3}), DomainError);
}

TEST_CASE("bounded search finds witnesses without patterns") {
  for (const Params& p : {Params{5, 2}, Params{6, 3}}) {
    for (const auto& id : facet_inequalities(p)) {
      const auto t = search_witness(p, id);
      REQUIRE(t.has_value());
      const auto report = validate_reduced(*t);
      REQUIRE(report.violations.size() == 1);
      CHECK(report.violations[0].id == id);
    }
  }
}

TEST_CASE("vertex counts of the small polytopes") {
  const auto segment = enumerate_vertices(Params{4, 2}, 100);
  REQUIRE(segment.size() == 2);
  // sorted by entries, row 1 first: lambda_{1,2} = 2 before lambda_{1,2} = 4
  CHECK(segment[0].tableau(2, 2) == 2);
  CHECK(segment[1].tableau(2, 2) == 0);

  const auto pentagon = enumerate_vertices(Params{5, 2}, 100);
  CHECK(pentagon.size() == 5);
  for (const auto& v : pentagon) {
    CHECK(validate_full(v.tableau).valid);
    CHECK(v.tight_conditions.size() >= 2);
  }
  CHECK(enumerate_vertices(Params{5, 5}, 1).size() == 1);
  CHECK(enumerate_vertices(Params{6, 1}, 1).size() == 1);
}

TEST_CASE("phi permutes the vertices and psi maps them onto the complement's") {
  for (const Params& p : {Params{4, 2}, Params{5, 2}, Params{6, 3}, Params{6, 2}, Params{7, 3}}) {
    const auto vertices = enumerate_vertices(p, 10000);
    std::set<std::vector<Rational>> here, mapped, there, psi_mapped;
    for (const auto& v : vertices) {
      here.emplace(v.tableau.entries().begin(), v.tableau.entries().end());
      const Tableau w = phi(v.tableau);
      mapped.emplace(w.entries().begin(), w.entries().end());
      const Tableau u = psi(v.tableau);
      psi_mapped.emplace(u.entries().begin(), u.entries().end());
    }
    for (const auto& v : enumerate_vertices(p.complement(), 10000)) {
      there.emplace(v.tableau.entries().begin(), v.tableau.entries().end());
    }
    CHECK(here == mapped);
    CHECK(there == psi_mapped);
  }
}

TEST_CASE("vertex enumeration limits") {
  CHECK_THROWS_AS(enumerate_vertices(Params{5, 2}, 4), DomainError);
  CHECK_THROWS_AS(enumerate_vertices(Params{9, 4}, 100000), DomainError);
}

TEST_CASE("interior samples are strictly inside and reproducible") {
  for (const Params& p : {Params{5, 2}, Params{6, 3}, Params{7, 4}}) {
    const auto a = sample_interior(p, 17, 50);
    CHECK(a == sample_interior(p, 17, 50));
    CHECK(a != sample_interior(p, 18, 50));
    for (const auto& t : a) {
      const auto report = validate_reduced(t);
      CHECK(report.valid);
      for (const auto& s : report.slacks) CHECK(s.value > 0);
    }
  }
  const auto point = sample_interior(Params{5, 1}, 1, 3);
  CHECK(point.size() == 3);
  CHECK(point[0] == special_point(Params{5, 1}));
}

TEST_CASE("condition rank of the facet normals spans the free coordinates") {
  for (const Params& p : {Params{5, 2}, Params{6, 3}, Params{8, 4}}) {
    CHECK(condition_rank(p, facet_inequalities(p)) == dimension(p));
  }
}
