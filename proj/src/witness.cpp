#include <algorithm>
#include <functional>

#include "eigensteps/affine_maps.hpp"
#include "eigensteps/geometry.hpp"

namespace eigensteps {

namespace {

struct Move {
  Cell cell;
  int delta;
};

bool violates_exactly(const Tableau& t, const ConditionId& target) {
  if (!in_affine_hull(t)) return false;
  const auto report = validate_reduced(t);
  return report.violations.size() == 1 && report.violations.front().id == target;
}

std::optional<Tableau> apply_moves(const Params& p, std::initializer_list<Move> moves) {
  Tableau t = special_point(p);
  for (const auto& [cell, delta] : moves) {
    if (cell.i < 1 || cell.i > p.d || !is_free_entry(p, cell.i, cell.n)) return std::nullopt;
    t[cell] += delta;
  }
  return t;
}

/// Local modifications of the special point, whose reduced slacks are all 1.
/// Each moves a few entries by small integers with zero column sums.
std::optional<Witness> local_pattern(const Params& p, const ConditionId& target) {
  const int N = p.N;
  const int d = p.d;
  std::optional<Tableau> t;
  std::string name;
  switch (target.kind) {
    case ConditionKind::horizontal: {
      const int i = *target.i;
      const int n = *target.n;
      if (i >= 2 && n <= N - d + i - 3) {
        t = apply_moves(p, {{{i, n}, 1}, {{i, n + 1}, -1}, {{i - 1, n}, -1}, {{i - 1, n + 1}, 1}});
        name = "horizontal-square";
      }
      break;
    }
    case ConditionKind::diagonal: {
      const int i = *target.i;
      const int n = *target.n;
      if (i < n && n <= N - d + i - 2) {
        t = apply_moves(p, {{{i, n - 1}, 1}, {{i, n}, 1}, {{i - 1, n - 1}, -1}, {{i - 1, n}, -1}});
        name = "diagonal-square";
      }
      break;
    }
    case ConditionKind::lower_bound:
      if (d == 2) {
        t = apply_moves(p, {{{2, 2}, -2}, {{2, 3}, -1}, {{1, 2}, 2}, {{1, 3}, 1}});
        name = "lower-bound-d2";
      } else if (d >= 3 && d <= N - 3) {
        t = apply_moves(p, {{{d, d}, -2}, {{d - 1, d}, 1}, {{d - 2, d}, 1}});
        name = "lower-bound-corner";
      }
      break;
    default:
      break;
  }
  if (!t || !violates_exactly(*t, target)) return std::nullopt;
  return Witness{std::move(*t), std::move(name)};
}

/// The pattern for `target` itself, or for its phi-image mapped back.
std::optional<Witness> pattern_or_phi(const Params& p, const ConditionId& target) {
  if (auto w = local_pattern(p, target)) return w;
  if (auto w = local_pattern(p, phi_condition(p, target))) {
    Witness mapped{phi(w->point), "phi(" + w->strategy + ")"};
    if (violates_exactly(mapped.point, target)) return mapped;
  }
  return std::nullopt;
}

void require_witness_params(const Params& p) {
  if (p.N < 5 || p.d < 2 || p.d > p.N - 2) {
    throw DomainError("witness points need N >= 5 and 2 <= d <= N-2 (got N=" + std::to_string(p.N) +
                      ", d=" + std::to_string(p.d) + ")");
  }
}

void require_facet_target(const Params& p, const ConditionId& target) {
  const auto all = inequality_list(p, ConditionSystem::reduced);
  if (std::find(all.begin(), all.end(), target) == all.end()) {
    throw DomainError(target.str() + " is not an inequality of the reduced system");
  }
  const auto dropped = superfluous_inequalities(p);
  if (std::find(dropped.begin(), dropped.end(), target) != dropped.end()) {
    throw DomainError(target.str() + " is implied by the other inequalities; no point violates it alone");
  }
}

}  // namespace

std::optional<Tableau> search_witness(const Params& p, const ConditionId& target, int max_entries) {
  const FreeCoordinates chart(p);
  const HRep h = h_representation(p, HRepVariant::full_reduced);
  const std::vector<Rational> base = chart.coordinates(special_point(p));
  const int k = static_cast<int>(chart.size());
  const auto target_it = std::find_if(h.inequalities.begin(), h.inequalities.end(),
                                      [&](const HalfSpace& half) { return half.id == target; });
  if (target_it == h.inequalities.end()) return std::nullopt;

  const auto accepts = [&](const std::vector<Rational>& x) {
    for (const auto& half : h.inequalities) {
      const bool violated = half.slack(x) < 0;
      if (violated != (half.id == target)) return false;
    }
    return true;
  };

  static constexpr int kSteps[] = {-2, -1, 1, 2};
  std::vector<int> chosen;
  std::vector<Rational> x = base;
  std::optional<Tableau> found;

  // assign a nonzero step to every chosen coordinate, recursively
  std::function<bool(std::size_t)> assign = [&](std::size_t pos) {
    if (pos == chosen.size()) {
      if (!accepts(x)) return false;
      found = chart.tableau(x);
      return true;
    }
    const auto v = static_cast<std::size_t>(chosen[pos]);
    for (int s : kSteps) {
      x[v] = base[v] + s;
      if (assign(pos + 1)) return true;
    }
    x[v] = base[v];
    return false;
  };
  std::function<bool(int, int)> choose = [&](int start, int remaining) {
    if (remaining == 0) return assign(0);
    for (int v = start; v <= k - remaining; ++v) {
      chosen.push_back(v);
      if (choose(v + 1, remaining - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int m = 1; m <= std::min(max_entries, k); ++m) {
    chosen.clear();
    if (choose(0, m)) return found;
  }
  return std::nullopt;
}

Witness find_witness(const Params& p, const ConditionId& target) {
  require_witness_params(p);
  require_facet_target(p, target);

  if (auto w = pattern_or_phi(p, target)) return *w;

  // Horizontal and diagonal inequalities trade places under psi.
  const Params q = p.complement();
  if (auto w = pattern_or_phi(q, psi_condition(p, target))) {
    Witness mapped{psi(w->point), "psi(" + w->strategy + ")"};
    if (violates_exactly(mapped.point, target)) return mapped;
  }

  if (auto t = search_witness(p, target)) return Witness{std::move(*t), "exhaustive-search"};
  throw DomainError("no witness point found for " + target.str());
}

Tableau witness_point(const Params& p, const ConditionId& target) { return find_witness(p, target).point; }

}  // namespace eigensteps
