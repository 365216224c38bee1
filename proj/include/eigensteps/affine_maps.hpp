#pragma once

#include <span>

#include "eigensteps/tableau.hpp"

namespace eigensteps {

/// Rotation by 180 degrees followed by complement in N:
/// phi(t)_{i,n} = N - t_{d-i+1, N-n}. Defined on every d x (N+1) matrix and
/// an involution there.
template <class Scalar>
BasicTableau<Scalar> phi_map(const BasicTableau<Scalar>& t) {
  const Params& p = t.params();
  BasicTableau<Scalar> out(p);
  for (int i = 1; i <= p.d; ++i) {
    for (int n = 0; n <= p.N; ++n) out(i, n) = Scalar(p.N) - t(p.d - i + 1, p.N - n);
  }
  return out;
}

/// Row/diagonal interchange (N, d) -> (N, N - d), applied by formula without
/// checking that the input lies on the affine hull:
///   out_{i,n} = t_{d+i-n, N-n}  for i <= n <= d+i-1,
///               0               for n < i,
///               N               for n > d+i-1.
template <class Scalar>
BasicTableau<Scalar> psi_map(const BasicTableau<Scalar>& t) {
  const Params& p = t.params();
  const Params q = p.complement();
  BasicTableau<Scalar> out(q);
  for (int i = 1; i <= q.d; ++i) {
    for (int n = 0; n <= q.N; ++n) {
      if (n < i) {
        out(i, n) = Scalar(0);
      } else if (n > p.d + i - 1) {
        out(i, n) = Scalar(p.N);
      } else {
        out(i, n) = t(p.d + i - n, p.N - n);
      }
    }
  }
  return out;
}

Tableau phi(const Tableau& t);

/// Throws DomainError when `t` is off aff(Lambda_{N,d}); the map is only
/// defined there.
Tableau psi(const Tableau& t);

/// Checks, exactly and on every sample, that psi over (N, N-d) inverts psi
/// over (N, d), that phi is an involution, and that
/// phi_{N,N-d} o psi_{N,d} == psi_{N,d} o phi_{N,d}.
bool check_identities(const Params& p, std::span<const Tableau> samples);

/// Image of a reduced-system inequality under phi (same parameters):
/// horizontal (i,n) -> (d-i+1, N-n-1), diagonal (i,n) -> (d-i+2, N-n+1),
/// lower <-> upper. Slacks are preserved: slack_c(t) == slack_phi(c)(phi(t)).
ConditionId phi_condition(const Params& p, const ConditionId& id);

/// Image of a reduced-system inequality under psi (into (N, N-d)):
/// horizontal <-> diagonal with (j, m) -> (j - d + N - m, N - m), bounds map
/// to the same bound. Slacks are preserved on the affine hull.
ConditionId psi_condition(const Params& p, const ConditionId& id);

}  // namespace eigensteps
