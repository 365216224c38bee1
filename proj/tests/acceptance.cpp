// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit on any
// failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "eigensteps/affine_maps.hpp"
#include "eigensteps/frames.hpp"
#include "eigensteps/oracle.hpp"
#include "eigensteps/svg.hpp"
#include "test_support.hpp"

using namespace eigensteps;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Tableau integer_rows(Params p, std::vector<std::vector<int>> rows) {
  std::vector<std::vector<Rational>> values;
  for (const auto& row : rows) values.emplace_back(row.begin(), row.end());
  return Tableau::from_rows(p, values);
}

std::string pair(const Params& p) { return "(" + std::to_string(p.N) + "," + std::to_string(p.d) + ")"; }

Outcome dimension_vs_oracle() {
  Outcome o;
  const auto start = Clock::now();
  int cases = 0;
  for (int N = 0; N <= 8; ++N) {
    for (int d = 0; d <= N; ++d) {
      const Params p{N, d};
      const auto cert = dimension_certificate(p);
      ++cases;
      if (cert.dimension != dimension(p)) {
        o.fail("dimension " + pair(p) + ": formula " + std::to_string(dimension(p)) + ", oracle " +
               std::to_string(cert.dimension));
      }
      if (cert.counted && *cert.counted != cert.dimension) o.fail("entry count disagrees at " + pair(p));
    }
  }
  const double t = seconds_since(start);
  if (t >= 10) o.fail("took " + std::to_string(t) + " s");
  if (o.ok) o.detail = std::to_string(cases) + " pairs agree in " + std::to_string(t) + " s (limit 10 s)";
  return o;
}

Outcome facets_vs_oracle() {
  Outcome o;
  const auto start = Clock::now();
  int cases = 0;
  for (int N = 4; N <= 8; ++N) {
    for (int d = 2; d <= N - 2; ++d) {
      const Params p{N, d};
      const int oracle = irredundant_count(h_representation(p, HRepVariant::full_reduced));
      ++cases;
      if (oracle != facet_count(p)) {
        o.fail("facets " + pair(p) + ": formula " + std::to_string(facet_count(p)) + ", oracle " +
               std::to_string(oracle));
      }
    }
  }
  const double t = seconds_since(start);
  for (auto [p, expected] : {std::pair{Params{5, 2}, 5}, std::pair{Params{4, 2}, 2}, std::pair{Params{6, 3}, 10}}) {
    if (facet_count(p) != expected) o.fail("spot value " + pair(p));
  }
  if (t >= 60) o.fail("took " + std::to_string(t) + " s");
  if (o.ok) o.detail = std::to_string(cases) + " pairs agree in " + std::to_string(t) + " s (limit 60 s)";
  return o;
}

Outcome special_point_slacks() {
  Outcome o;
  for (int N = 2; N <= 12; ++N) {
    for (int d = 1; d <= N - 1; ++d) {
      const Params p{N, d};
      const Tableau t = special_point(p);
      if (!validate_full(t).valid) o.fail("special point invalid at " + pair(p));
      const auto report = validate_reduced(t);
      if (!report.valid) o.fail("special point fails the reduced system at " + pair(p));
      for (const auto& s : report.slacks) {
        if (s.value != 1) o.fail(s.id.str() + " has slack " + to_string(s.value) + " at " + pair(p));
      }
    }
  }
  if (special_point(Params{6, 4}) != integer_rows(Params{6, 4}, {{0, 4, 5, 6, 6, 6, 6},
                                                                  {0, 0, 3, 4, 6, 6, 6},
                                                                  {0, 0, 0, 2, 3, 6, 6},
                                                                  {0, 0, 0, 0, 1, 2, 6}})) {
    o.fail("special point of (6,4) differs from the printed matrix");
  }
  if (special_point(Params{5, 2}) != integer_rows(Params{5, 2}, {{0, 2, 3, 4, 5, 5}, {0, 0, 1, 2, 3, 5}})) {
    o.fail("special point of (5,2) differs from the printed matrix");
  }
  if (o.ok) o.detail = "all slacks equal 1 for 1 <= d <= N-1, N <= 12; (5,2) and (6,4) match";
  return o;
}

Outcome worked_example_witnesses() {
  Outcome o;
  const Params p{5, 2};
  // printed with row i = 2 above row i = 1
  const auto printed = [&](std::vector<int> top, std::vector<int> bottom) {
    return integer_rows(p, {std::move(bottom), std::move(top)});
  };
  const std::vector<Tableau> expected{
      printed({0, 0, -1, 1, 3, 5}, {0, 2, 5, 5, 5, 5}), printed({0, 0, 2, 1, 3, 5}, {0, 2, 2, 5, 5, 5}),
      printed({0, 0, 2, 3, 3, 5}, {0, 2, 2, 3, 5, 5}), printed({0, 0, 0, 3, 3, 5}, {0, 2, 4, 3, 5, 5}),
      printed({0, 0, 0, 0, 3, 5}, {0, 2, 4, 6, 5, 5})};
  const auto labels = plot_label_order(p);
  if (labels.size() != 5) {
    o.fail("expected five facet inequalities");
    return o;
  }
  for (std::size_t k = 0; k < 5; ++k) {
    const Tableau w = witness_point(p, labels[k]);
    const std::string name = "P" + std::to_string(k + 1);
    if (w != expected[k]) o.fail(name + " differs from the printed point");
    const auto report = validate_reduced(w);
    if (report.violations.size() != 1 || report.violations[0].id != labels[k]) {
      o.fail(name + " does not violate exactly " + labels[k].str());
    }
  }
  if (phi(expected[1]) != expected[3]) o.fail("phi(P2) != P4");
  if (phi(expected[0]) != expected[4]) o.fail("phi(P1) != P5");
  if (o.ok) o.detail = "P1..P5 reproduced, each with one violation; phi(P2)=P4, phi(P1)=P5";
  return o;
}

Outcome map_identities() {
  Outcome o;
  for (const Params& p : {Params{5, 2}, Params{6, 3}, Params{6, 4}, Params{7, 3}}) {
    const auto samples = sample_interior(p, 2024, 100);
    for (const auto& t : samples) {
      if (phi(phi(t)) != t) o.fail("phi o phi != id at " + pair(p));
      const Tableau s = psi(t);
      if (psi(s) != t) o.fail("psi o psi != id at " + pair(p));
      if (phi(s) != psi(phi(t))) o.fail("phi o psi != psi o phi at " + pair(p));
    }
    if (phi(special_point(p)) != special_point(p)) o.fail("phi moves the special point at " + pair(p));
    if (psi(special_point(p)) != special_point(p.complement())) o.fail("psi(special) at " + pair(p));
  }
  if (o.ok) o.detail = "100 samples each for (5,2), (6,3), (6,4), (7,3); special points fixed/exchanged";
  return o;
}

Outcome vertex_counts() {
  Outcome o;
  for (auto [p, expected] : {std::pair{Params{4, 2}, std::size_t{2}}, std::pair{Params{5, 2}, std::size_t{5}}}) {
    const auto vertices = enumerate_vertices(p, 1000);
    if (vertices.size() != expected) {
      o.fail(pair(p) + " has " + std::to_string(vertices.size()) + " vertices, expected " + std::to_string(expected));
    }
    std::set<std::vector<Rational>> here, image;
    for (const auto& v : vertices) {
      if (!validate_full(v.tableau).valid) o.fail("a vertex of " + pair(p) + " does not validate");
      here.emplace(v.tableau.entries().begin(), v.tableau.entries().end());
      const Tableau w = phi(v.tableau);
      image.emplace(w.entries().begin(), w.entries().end());
    }
    if (here != image) o.fail("phi does not permute the vertices of " + pair(p));
  }
  if (o.ok) o.detail = "(4,2): 2 vertices, (5,2): 5 vertices, all valid, phi-invariant";
  return o;
}

Outcome frame_correspondences() {
  Outcome o;
  int cases = 0;
  double worst_map = 0;
  for (int N = 4; N <= 10; ++N) {
    for (int d = 2; d <= N - 2; ++d) {
      const Params p{N, d};
      ++cases;
      const FrameMatrix f = harmonic_frame(p);
      const auto steps = eigensteps_of_frame(f);
      if (interlacing_defect(steps) > 1e-8) o.fail("interlacing fails at " + pair(p));
      if (trace_defect(f, steps) > 1e-8) o.fail("column sums off at " + pair(p));
      if (!verify_phi_correspondence(f, 1e-7)) o.fail("phi correspondence fails at " + pair(p));
      if (!verify_psi_correspondence(f, 1e-7)) o.fail("psi correspondence fails at " + pair(p));
      worst_map = std::max({worst_map, phi_correspondence_error(f), psi_correspondence_error(f)});

      const FrameMatrix g = naimark_complement(f);
      const Eigen::MatrixXd gram = f.transpose() * f + g.transpose() * g - N * Eigen::MatrixXd::Identity(N, N);
      if (gram.cwiseAbs().maxCoeff() > 1e-9) o.fail("F*F + G*G != N I at " + pair(p));
      for (int n = 0; n < N; ++n) {
        if (std::abs(g.col(n).squaredNorm() - (N - d)) > 1e-9) o.fail("|g_n|^2 != N-d at " + pair(p));
      }
      const Eigen::MatrixXd tight = g * g.transpose() - N * Eigen::MatrixXd::Identity(N - d, N - d);
      if (tight.cwiseAbs().maxCoeff() > 1e-9) o.fail("GG* != N I at " + pair(p));
    }
  }
  if (o.ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d harmonic frames, largest map deviation %.2e", cases, worst_map);
    o.detail = buf;
  }
  return o;
}

Outcome superfluous_implication() {
  Outcome o;
  std::size_t inside = 0;
  for (const Params& p : {Params{6, 3}, Params{7, 4}}) {
    const auto dropped = superfluous_inequalities(p);
    for (const auto& t : sample_interior(p, 77, 1000)) {
      for (const auto& id : dropped) {
        if (condition_form(p, id).evaluate(t) < 0) o.fail(id.str() + " fails on a sample of " + pair(p));
      }
    }
    const FreeCoordinates chart(p);
    const HRep full = h_representation(p, HRepVariant::full_reduced);
    const HRep facets = h_representation(p, HRepVariant::non_redundant);
    if (facets.inequalities.size() + dropped.size() != full.inequalities.size()) o.fail("unexpected row counts");
    for (const auto& t : testing::hull_points(p, 78, 1000, 2)) {
      const auto x = chart.coordinates(t);
      const bool in_full = full.contains(x);
      if (in_full != facets.contains(x)) o.fail("membership changes at a point of " + pair(p));
      inside += in_full ? 1 : 0;
    }
  }
  if (o.ok) {
    o.detail = "1000 samples each for (6,3), (7,4); membership identical on 2000 hull points (" +
               std::to_string(inside) + " inside)";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"dimension formula matches the LP oracle", dimension_vs_oracle},
      {"facet formula matches the redundancy scan", facets_vs_oracle},
      {"special point slacks and printed matrices", special_point_slacks},
      {"witness points of the (5,2) example", worked_example_witnesses},
      {"map identities on samples", map_identities},
      {"vertex enumeration", vertex_counts},
      {"frame correspondences and Naimark complements", frame_correspondences},
      {"superfluous inequalities are implied", superfluous_implication},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu (%s): %s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str());
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
