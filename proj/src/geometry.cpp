#include "eigensteps/geometry.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "eigensteps/exact_linear_algebra.hpp"

namespace eigensteps {

namespace {

std::string cell_name(const Cell& c) { return "lambda[" + std::to_string(c.i) + "," + std::to_string(c.n) + "]"; }

std::string describe_elimination(const FreeCoordinates& chart) {
  std::string out;
  for (const Cell& e : chart.eliminated_cells()) {
    if (!out.empty()) out += "; ";
    const AffineExpr& expr = chart.entry(e.i, e.n);
    out += cell_name(e) + " = " + to_string(expr.constant);
    for (std::size_t k = 0; k < expr.coeffs.size(); ++k) {
      const Rational& c = expr.coeffs[k];
      if (c == 0) continue;
      out += c < 0 ? " - " : " + ";
      if (abs(c) != 1) out += to_string(abs(c)) + "*";
      out += cell_name(chart.free_cells()[k]);
    }
  }
  return out;
}

void require_range(bool ok, const Params& p, const std::string& what) {
  if (!ok) {
    throw DomainError(what + " (got N=" + std::to_string(p.N) + ", d=" + std::to_string(p.d) + ")");
  }
}

}  // namespace

FreeCoordinates::FreeCoordinates(const Params& p) : params_(p) {
  for (int n = 1; n < p.N; ++n) {
    for (int i = 1; i <= p.d; ++i) {
      if (!is_free_entry(p, i, n)) continue;
      eliminated_.push_back({i, n});
      break;
    }
  }
  for (int i = 1; i <= p.d; ++i) {
    for (int n = 1; n < p.N; ++n) {
      if (is_free_entry(p, i, n) && std::find(eliminated_.begin(), eliminated_.end(), Cell{i, n}) == eliminated_.end()) {
        free_.push_back({i, n});
      }
    }
  }

  const std::size_t k = free_.size();
  exprs_.assign(static_cast<std::size_t>(p.d) * (p.N + 1), AffineExpr{std::vector<Rational>(k), Rational(0)});
  const auto slot = [&](int i, int n) -> AffineExpr& {
    return exprs_[static_cast<std::size_t>(i - 1) * (p.N + 1) + static_cast<std::size_t>(n)];
  };
  for (int i = 1; i <= p.d; ++i) {
    for (int n = 0; n <= p.N; ++n) {
      if (in_n_triangle(p, i, n)) slot(i, n).constant = p.N;
    }
  }
  for (std::size_t v = 0; v < k; ++v) slot(free_[v].i, free_[v].n).coeffs[v] = 1;
  for (const Cell& e : eliminated_) {
    AffineExpr& target = slot(e.i, e.n);
    target.constant = p.d * e.n;
    for (int i = 1; i <= p.d; ++i) {
      if (i == e.i) continue;
      const AffineExpr& other = slot(i, e.n);
      target.constant -= other.constant;
      for (std::size_t v = 0; v < k; ++v) target.coeffs[v] -= other.coeffs[v];
    }
  }
}

const AffineExpr& FreeCoordinates::entry(int i, int n) const {
  return exprs_[static_cast<std::size_t>(i - 1) * (params_.N + 1) + static_cast<std::size_t>(n)];
}

AffineExpr FreeCoordinates::substitute(const LinearForm& form) const {
  AffineExpr out{std::vector<Rational>(size()), form.constant};
  for (const auto& term : form.terms) {
    const AffineExpr& e = entry(term.cell.i, term.cell.n);
    out.constant += term.coeff * e.constant;
    for (std::size_t v = 0; v < size(); ++v) out.coeffs[v] += term.coeff * e.coeffs[v];
  }
  return out;
}

Tableau FreeCoordinates::tableau(std::span<const Rational> x) const {
  if (x.size() != size()) throw ShapeError("expected " + std::to_string(size()) + " free coordinates");
  Tableau t(params_);
  for (int i = 1; i <= params_.d; ++i) {
    for (int n = 0; n <= params_.N; ++n) {
      const AffineExpr& e = entry(i, n);
      Rational value = e.constant;
      for (std::size_t v = 0; v < x.size(); ++v) {
        if (e.coeffs[v] != 0) value += e.coeffs[v] * x[v];
      }
      t(i, n) = value;
    }
  }
  return t;
}

std::vector<Rational> FreeCoordinates::coordinates(const Tableau& t) const {
  if (t.params() != params_) throw ShapeError("tableau parameters do not match the coordinate chart");
  std::vector<Rational> x;
  x.reserve(size());
  for (const Cell& c : free_) x.push_back(t[c]);
  return x;
}

std::string_view variant_name(HRepVariant variant) {
  return variant == HRepVariant::full_reduced ? "full-reduced" : "non-redundant";
}

HRepVariant parse_variant(std::string_view text) {
  if (text == "full-reduced") return HRepVariant::full_reduced;
  if (text == "non-redundant") return HRepVariant::non_redundant;
  throw ParseError("unknown H-representation variant '" + std::string(text) + "'");
}

Rational HalfSpace::slack(std::span<const Rational> x) const {
  Rational s = rhs;
  for (std::size_t v = 0; v < coeffs.size(); ++v) {
    if (coeffs[v] != 0) s -= coeffs[v] * x[v];
  }
  return s;
}

bool HRep::contains(std::span<const Rational> x) const {
  return std::all_of(inequalities.begin(), inequalities.end(), [&](const HalfSpace& h) { return h.slack(x) >= 0; });
}

int dimension(const Params& p) {
  if (p.d == 0 || p.d == p.N) return 0;
  return (p.d - 1) * (p.N - p.d - 1);
}

int facet_count(const Params& p) {
  if (p.d < 2 || p.d > p.N - 2) return 0;
  return p.d * (p.N - p.d - 1) + (p.N - p.d) * (p.d - 1) - 2;
}

std::vector<ConditionId> superfluous_inequalities(const Params& p) {
  require_range(p.d >= 2 && p.d <= p.N - 2, p, "superfluous inequalities need 2 <= d <= N-2");
  return {diagonal(2, 2), horizontal(1, 1), horizontal(p.d, p.N - 2), diagonal(p.d, p.N - 1)};
}

std::vector<ConditionId> facet_inequalities(const Params& p) {
  require_range(p.d >= 2 && p.d <= p.N - 2, p, "the facet description needs 2 <= d <= N-2");
  if (p.N == 4) {
    // Lambda_{4,2} is the segment 0 <= lambda_{2,2} <= 2; the two bounds
    // coincide and so do the four superfluous inequalities.
    return {horizontal(2, 2), lower_bound(p)};
  }
  const auto dropped = superfluous_inequalities(p);
  std::vector<ConditionId> out;
  for (auto& id : inequality_list(p, ConditionSystem::reduced)) {
    if (std::find(dropped.begin(), dropped.end(), id) == dropped.end()) out.push_back(std::move(id));
  }
  return out;
}

HRep h_representation(const Params& p, HRepVariant variant) {
  if (variant == HRepVariant::non_redundant) {
    require_range(p.d >= 2 && p.d <= p.N - 2, p, "the non-redundant variant needs 2 <= d <= N-2");
  } else {
    require_range(p.d >= 1 && p.d <= p.N - 1, p, "the full-reduced variant needs 1 <= d <= N-1");
  }
  const FreeCoordinates chart(p);
  HRep h;
  h.params = p;
  h.variant = variant;
  h.free_vars.assign(chart.free_cells().begin(), chart.free_cells().end());
  h.eliminated.assign(chart.eliminated_cells().begin(), chart.eliminated_cells().end());
  h.equalities_eliminated = describe_elimination(chart);
  const auto ids = variant == HRepVariant::full_reduced ? inequality_list(p, ConditionSystem::reduced)
                                                        : facet_inequalities(p);
  for (const auto& id : ids) {
    AffineExpr slack = chart.substitute(condition_form(p, id));
    for (auto& c : slack.coeffs) c = -c;
    h.inequalities.push_back({id, std::move(slack.coeffs), std::move(slack.constant)});
  }
  return h;
}

int condition_rank(const Params& p, std::span<const ConditionId> ids) {
  const FreeCoordinates chart(p);
  if (chart.size() == 0) return 0;
  RationalMatrix rows;
  for (const auto& id : ids) rows.push_back(chart.substitute(condition_form(p, id)).coeffs);
  return rank(std::move(rows));
}

std::vector<Vertex> enumerate_vertices(const Params& p, std::size_t limit) {
  const int dim = dimension(p);
  require_range(dim <= 6, p, "vertex enumeration is limited to dimension <= 6");

  const auto make_vertex = [&](Tableau t) {
    Vertex v{std::move(t), {}};
    for (const auto& [id, slack] : validate_reduced(v.tableau).slacks) {
      if (slack == 0) v.tight_conditions.push_back(id);
    }
    return v;
  };

  std::vector<Vertex> out;
  if (dim == 0) {
    if (limit < 1) throw DomainError("vertex limit exceeded");
    out.push_back(make_vertex(special_point(p)));
    return out;
  }

  const HRep h = h_representation(p, HRepVariant::non_redundant);
  const FreeCoordinates chart(p);
  const std::size_t m = h.inequalities.size();
  const auto k = static_cast<std::size_t>(dim);
  std::map<std::vector<Rational>, Tableau> found;

  std::vector<std::size_t> pick(k);
  for (std::size_t j = 0; j < k; ++j) pick[j] = j;
  while (true) {
    RationalMatrix a;
    std::vector<Rational> b;
    for (std::size_t j : pick) {
      a.push_back(h.inequalities[j].coeffs);
      b.push_back(h.inequalities[j].rhs);
    }
    if (auto x = solve_unique(a, b); x && h.contains(*x)) {
      Tableau t = chart.tableau(*x);
      if (validate_reduced(t).valid) {
        std::vector<Rational> key(t.entries().begin(), t.entries().end());
        found.emplace(std::move(key), std::move(t));
        if (found.size() > limit) throw DomainError("vertex limit exceeded (" + std::to_string(limit) + ")");
      }
    }
    // next k-subset in lexicographic order
    std::size_t j = k;
    while (j > 0 && pick[j - 1] == m - k + j - 1) --j;
    if (j == 0) break;
    ++pick[j - 1];
    for (std::size_t r = j; r < k; ++r) pick[r] = pick[r - 1] + 1;
  }

  out.reserve(found.size());
  for (auto& [key, t] : found) out.push_back(make_vertex(std::move(t)));
  return out;
}

std::vector<Tableau> sample_interior(const Params& p, std::uint64_t seed, std::size_t count) {
  require_range(p.d >= 1 && p.d <= p.N - 1, p, "sampling needs 1 <= d <= N-1");
  const Tableau center = special_point(p);
  if (dimension(p) == 0) return std::vector<Tableau>(count, center);

  const FreeCoordinates chart(p);
  const HRep h = h_representation(p, HRepVariant::full_reduced);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> step(-3, 3);

  std::vector<Rational> x = chart.coordinates(center);
  std::vector<Tableau> out;
  out.reserve(count);
  std::vector<Rational> dir(x.size());
  while (out.size() < count) {
    bool nonzero = false;
    for (auto& v : dir) {
      v = step(rng);
      nonzero = nonzero || v != 0;
    }
    if (!nonzero) continue;

    std::optional<Rational> lo;
    std::optional<Rational> hi;
    for (const auto& half : h.inequalities) {
      Rational rate = 0;
      for (std::size_t v = 0; v < dir.size(); ++v) {
        if (half.coeffs[v] != 0 && dir[v] != 0) rate += half.coeffs[v] * dir[v];
      }
      if (rate == 0) continue;
      const Rational limit = half.slack(x) / rate;
      if (rate > 0) {
        if (!hi || limit < *hi) hi = limit;
      } else if (!lo || limit > *lo) {
        lo = limit;
      }
    }
    // a nonzero direction leaves a bounded full-dimensional polytope both ways
    const Rational t = (*lo + *hi) / 2;
    for (std::size_t v = 0; v < x.size(); ++v) x[v] += t * dir[v];
    out.push_back(chart.tableau(x));
  }
  return out;
}

}  // namespace eigensteps
