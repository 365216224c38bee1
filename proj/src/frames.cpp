#include "eigensteps/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eigensteps/affine_maps.hpp"

namespace eigensteps {

namespace {

Params frame_params(const FrameMatrix& f) {
  const auto d = static_cast<int>(f.rows());
  const auto N = static_cast<int>(f.cols());
  if (d > N) {
    throw DomainError("a frame of " + std::to_string(N) + " vectors cannot span R^" + std::to_string(d));
  }
  return Params{N, d};
}

void require_tight(const FrameMatrix& f, double tol) {
  if (!is_equal_norm_tight(f, tol)) {
    throw DomainError("frame is not equal norm tight with |f_n|^2 = d within " + std::to_string(tol));
  }
}

double max_difference(const BasicTableau<double>& a, const BasicTableau<double>& b) {
  if (a.params() != b.params()) throw ShapeError("tableau shapes differ");
  double worst = 0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return worst;
}

}  // namespace

Eigen::MatrixXd frame_operator(const FrameMatrix& f) { return f * f.transpose(); }

bool spans(const FrameMatrix& f, double tol) {
  if (f.rows() == 0) return true;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(f);
  qr.setThreshold(tol);
  return qr.rank() == f.rows();
}

bool is_equal_norm_tight(const FrameMatrix& f, double tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  const auto d = static_cast<double>(f.rows());
  const auto N = static_cast<double>(f.cols());
  for (Eigen::Index n = 0; n < f.cols(); ++n) {
    if (!(std::abs(f.col(n).squaredNorm() - d) <= tol)) return false;
  }
  const Eigen::MatrixXd gap = frame_operator(f) - N * Eigen::MatrixXd::Identity(f.rows(), f.rows());
  return gap.size() == 0 || gap.cwiseAbs().maxCoeff() <= tol;
}

FloatTableau eigensteps_of_frame(const FrameMatrix& f, double tol) {
  if (!f.allFinite()) throw DomainError("frame has non-finite entries");
  const Params p = frame_params(f);
  FloatTableau out{BasicTableau<double>(p), tol};
  if (p.d == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  for (int n = 1; n <= p.N; ++n) {
    const Eigen::MatrixXd partial = f.leftCols(n) * f.leftCols(n).transpose();
    solver.compute(partial, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw DomainError("eigensolver failed");
    // ascending from the solver
    for (int i = 1; i <= p.d; ++i) out.values(i, n) = solver.eigenvalues()(p.d - i);
  }
  return out;
}

double interlacing_defect(const FloatTableau& t) {
  const Params& p = t.params();
  double worst = 0;
  const auto check = [&](double lo, double hi) { worst = std::max(worst, lo - hi); };
  for (int n = 0; n < p.N; ++n) {
    for (int i = 1; i <= p.d; ++i) {
      check(t.values(i, n), t.values(i, n + 1));
      if (i > 1) check(t.values(i, n + 1), t.values(i - 1, n));
    }
  }
  return worst;
}

double trace_defect(const FrameMatrix& f, const FloatTableau& t) {
  const Params& p = t.params();
  double running = 0;
  double worst = 0;
  for (int n = 0; n <= p.N; ++n) {
    if (n > 0) running += f.col(n - 1).squaredNorm();
    double column = 0;
    for (int i = 1; i <= p.d; ++i) column += t.values(i, n);
    worst = std::max(worst, std::abs(column - running));
  }
  return worst;
}

FrameMatrix reverse_frame(const FrameMatrix& f) { return f.rowwise().reverse(); }

FrameMatrix naimark_complement(const FrameMatrix& f, double tol) {
  const Params p = frame_params(f);
  require_tight(f, tol);
  const double root = std::sqrt(static_cast<double>(p.N));
  std::vector<Eigen::VectorXd> basis;
  for (Eigen::Index r = 0; r < f.rows(); ++r) basis.emplace_back(f.row(r).transpose() / root);

  FrameMatrix g(p.N - p.d, p.N);
  Eigen::Index added = 0;
  for (int j = 0; j < p.N && added < g.rows(); ++j) {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(p.N, j);
    // two passes of classical Gram-Schmidt keep the basis orthonormal to
    // working precision
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) v -= b.dot(v) * b;
    }
    const double norm = v.norm();
    if (norm < 1e-8) continue;
    v /= norm;
    basis.push_back(v);
    g.row(added++) = root * v.transpose();
  }
  if (added != g.rows()) throw DomainError("could not complete the rows of F to an orthonormal basis");
  return g;
}

FrameMatrix harmonic_frame(const Params& p) {
  if (p.d < 1 || p.d > p.N) throw DomainError("harmonic frames need 1 <= d <= N");
  const int N = p.N;
  const double root = std::sqrt(static_cast<double>(N));
  if (p.d == N) return root * Eigen::MatrixXd::Identity(N, N);

  // orthonormal rows, then scaled by sqrt(N)
  FrameMatrix f(p.d, N);
  int row = 0;
  if (p.d % 2 == 1) f.row(row++).setConstant(1.0 / root);
  const double pair_scale = std::sqrt(2.0 / N);
  for (int k = 1; row < p.d; ++k) {
    for (int n = 0; n < N; ++n) {
      const double angle = 2 * std::numbers::pi * k * n / N;
      f(row, n) = pair_scale * std::cos(angle);
      f(row + 1, n) = pair_scale * std::sin(angle);
    }
    row += 2;
  }
  f *= root;
  if (!is_equal_norm_tight(f, 1e-9)) {
    throw DomainError("harmonic construction is not equal norm tight for N=" + std::to_string(N) +
                      ", d=" + std::to_string(p.d));
  }
  return f;
}

SnappedTableau snap_to_rational(const FloatTableau& t, long long denominator_bound) {
  if (denominator_bound < 1) throw DomainError("denominator bound must be at least 1");
  const Params& p = t.params();
  SnappedTableau out{Tableau(p), 0};
  const Integer bound(denominator_bound);
  for (int i = 1; i <= p.d; ++i) {
    for (int n = 0; n <= p.N; ++n) {
      const double x = t.values(i, n);
      Rational r = limit_denominator(exact_rational(x), bound);
      out.max_error = std::max(out.max_error, std::abs(to_double(r) - x));
      out.tableau(i, n) = std::move(r);
    }
  }
  return out;
}

double phi_correspondence_error(const FrameMatrix& f) {
  const auto direct = eigensteps_of_frame(reverse_frame(f));
  return max_difference(phi_map(eigensteps_of_frame(f).values), direct.values);
}

double psi_correspondence_error(const FrameMatrix& f, double tol) {
  const auto direct = eigensteps_of_frame(reverse_frame(naimark_complement(f, tol)));
  return max_difference(psi_map(eigensteps_of_frame(f).values), direct.values);
}

bool verify_phi_correspondence(const FrameMatrix& f, double tol) {
  require_tight(f, tol);
  return phi_correspondence_error(f) <= tol;
}

bool verify_psi_correspondence(const FrameMatrix& f, double tol) {
  require_tight(f, tol);
  return psi_correspondence_error(f, tol) <= tol;
}

}  // namespace eigensteps
