#include "eigensteps/affine_maps.hpp"

namespace eigensteps {

Tableau phi(const Tableau& t) { return phi_map(t); }

Tableau psi(const Tableau& t) {
  if (!in_affine_hull(t)) {
    throw DomainError("psi is only defined on the affine hull; tableau violates a triangle or column-sum equality");
  }
  return psi_map(t);
}

bool check_identities(const Params& p, std::span<const Tableau> samples) {
  for (const auto& t : samples) {
    if (t.params() != p) throw ShapeError("sample parameters do not match (N, d)");
    const Tableau image = psi(t);
    if (psi(image) != t) return false;
    if (phi(phi(t)) != t) return false;
    if (phi(image) != psi(phi(t))) return false;
  }
  return true;
}

ConditionId phi_condition(const Params& p, const ConditionId& id) {
  switch (id.kind) {
    case ConditionKind::horizontal:
      return horizontal(p.d - *id.i + 1, p.N - *id.n - 1);
    case ConditionKind::diagonal:
      return diagonal(p.d - *id.i + 2, p.N - *id.n + 1);
    case ConditionKind::lower_bound:
      return upper_bound(p);
    case ConditionKind::upper_bound:
      return lower_bound(p);
    default:
      throw DomainError("phi_condition expects a reduced-system inequality, got " + id.str());
  }
}

ConditionId psi_condition(const Params& p, const ConditionId& id) {
  const Params q = p.complement();
  switch (id.kind) {
    case ConditionKind::horizontal:
    case ConditionKind::diagonal: {
      const int j = *id.i;
      const int m = *id.n;
      const int n = p.N - m;
      const int i = j - p.d + n;
      return id.kind == ConditionKind::horizontal ? diagonal(i, n) : horizontal(i, n);
    }
    case ConditionKind::lower_bound:
      return lower_bound(q);
    case ConditionKind::upper_bound:
      return upper_bound(q);
    default:
      throw DomainError("psi_condition expects a reduced-system inequality, got " + id.str());
  }
}

}  // namespace eigensteps
