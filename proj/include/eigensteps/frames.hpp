#pragma once

#include <Eigen/Dense>

#include "eigensteps/tableau.hpp"

namespace eigensteps {

/// A real frame as a d x N matrix; column n - 1 is the frame vector f_n.
using FrameMatrix = Eigen::MatrixXd;

/// Eigensteps in floating point. Each column is non-increasing in i up to
/// `tol`.
struct FloatTableau {
  BasicTableau<double> values;
  double tol = 1e-9;

  const Params& params() const { return values.params(); }
};

/// F F^T.
Eigen::MatrixXd frame_operator(const FrameMatrix& f);

/// True when the columns of `f` span R^d (numerical rank d at `tol`).
bool spans(const FrameMatrix& f, double tol = 1e-9);

/// |f_n|^2 == d for every n and F F^T == N I_d, both entrywise within `tol`.
bool is_equal_norm_tight(const FrameMatrix& f, double tol = 1e-9);

/// Column n holds the spectrum of F_n F_n^T (first n columns), sorted
/// non-increasingly; column 0 is zero. Throws DomainError on non-finite
/// entries or when d > N.
FloatTableau eigensteps_of_frame(const FrameMatrix& f, double tol = 1e-9);

/// Largest violation of the interlacing chain
/// lambda_{d,n} <= lambda_{d,n+1} <= lambda_{d-1,n} <= ... <= lambda_{1,n+1}.
double interlacing_defect(const FloatTableau& t);

/// Largest deviation of a column sum from the running sum of squared norms.
double trace_defect(const FrameMatrix& f, const FloatTableau& t);

/// Frame vectors in reverse order.
FrameMatrix reverse_frame(const FrameMatrix& f);

/// An (N-d) x N frame G with F^T F + G^T G = N I_N. The rows of F/sqrt(N)
/// are completed to an orthonormal basis of R^N with the standard basis
/// vectors e_1, e_2, ... in order (Gram-Schmidt, skipping candidates whose
/// residual norm is below 1e-8). Throws DomainError unless F is equal norm
/// tight within `tol`.
FrameMatrix naimark_complement(const FrameMatrix& f, double tol = 1e-9);

/// Real harmonic equal norm tight frame: d rows of the orthogonal real
/// Fourier basis of R^N (the constant row when d is odd, then cosine/sine
/// pairs by increasing frequency), scaled so that |f_n|^2 = d. For d = N the
/// result is sqrt(N) I_N. Throws DomainError unless 1 <= d <= N.
FrameMatrix harmonic_frame(const Params& p);

struct SnappedTableau {
  Tableau tableau;
  /// Largest distance between an entry and its rational replacement.
  double max_error = 0;
};

/// Replaces every entry by its best rational approximation with denominator
/// at most `denominator_bound` (>= 1).
SnappedTableau snap_to_rational(const FloatTableau& t, long long denominator_bound);

/// Entrywise max |phi(lambda_F) - lambda_reverse(F)|.
double phi_correspondence_error(const FrameMatrix& f);
/// Entrywise max |psi(lambda_F) - lambda_reverse(G)| for the Naimark
/// complement G of F (built with tightness tolerance `tol`).
double psi_correspondence_error(const FrameMatrix& f, double tol = 1e-9);

/// Both throw DomainError unless F is equal norm tight within `tol`.
bool verify_phi_correspondence(const FrameMatrix& f, double tol = 1e-8);
bool verify_psi_correspondence(const FrameMatrix& f, double tol = 1e-8);

}  // namespace eigensteps
