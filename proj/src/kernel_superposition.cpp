#include "wavemask/kernel_superposition.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "wavemask/analytic.hpp"

namespace wavemask {

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (fa + 4.0 * flm + fm) * (m - a) / 6.0;
  const double right = (fm + 4.0 * frm + fb) * (b - m) / 6.0;
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol) {
  const double fa = f(a);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (fa + 4.0 * fm + fb) * (b - a) / 6.0;
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

double standard_normal_pdf(double s) {
  return std::exp(-0.5 * s * s) / std::sqrt(2.0 * pi);
}

}  // namespace

double kernel_profile(KernelShape shape, double s) {
  switch (shape) {
    case KernelShape::gaussian:
      return standard_normal_pdf(s);
    case KernelShape::truncated_sinc:
      return s <= 1.0 ? sinc(s) : 0.0;
  }
  throw std::invalid_argument("kernel_profile: unknown shape");
}

double normalization_constant(KernelShape shape) {
  switch (shape) {
    case KernelShape::gaussian:
      return 2.0 * pi;
    case KernelShape::truncated_sinc:
      return 4.0 / pi;
  }
  throw std::invalid_argument("normalization_constant: unknown shape");
}

double normalization_constant(const std::function<double(double)>& h,
                              double support_radius, double tol) {
  if (!(support_radius > 0.0)) {
    throw std::invalid_argument(
        "normalization_constant: support radius must be positive");
  }
  return adaptive_simpson(
      [&h](double s) { return 4.0 * pi * s * s * h(s); }, 0.0, support_radius,
      tol);
}

double basis_value(const KernelBasis& basis, std::size_t j, const Vec3& x) {
  if (j >= basis.centers.size()) {
    throw std::out_of_range("basis_value: kernel index out of range");
  }
  if (!(basis.width > 0.0)) {
    throw std::invalid_argument("basis_value: kernel width must be positive");
  }
  const double s = distance(x, basis.centers[j]) / basis.width;
  const double w3 = basis.width * basis.width * basis.width;
  return kernel_profile(basis.shape, s) /
         (normalization_constant(basis.shape) * w3);
}

std::vector<Vec3> lattice_centers(double spacing, double half_extent) {
  if (!(spacing > 0.0) || !(half_extent >= 0.0)) {
    throw std::invalid_argument("lattice_centers: bad spacing or extent");
  }
  const int n = static_cast<int>(std::floor(half_extent / spacing + 1e-12));
  std::vector<Vec3> centers;
  centers.reserve(static_cast<std::size_t>(2 * n + 1) * (2 * n + 1) *
                  (2 * n + 1));
  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) {
      for (int k = -n; k <= n; ++k) {
        centers.push_back({i * spacing, j * spacing, k * spacing});
      }
    }
  }
  return centers;
}

KernelExpansion fit_coefficients(const KernelBasis& basis,
                                 std::span<const Vec3> points,
                                 std::span<const double> values, double ridge) {
  if (basis.centers.empty()) {
    throw std::invalid_argument("fit_coefficients: basis has no centers");
  }
  if (points.size() != values.size()) {
    throw std::invalid_argument(
        "fit_coefficients: points/values size mismatch");
  }
  if (points.size() < basis.centers.size()) {
    throw std::invalid_argument(
        "fit_coefficients: fewer sample points than kernels");
  }

  const Eigen::Index n = static_cast<Eigen::Index>(points.size());
  const Eigen::Index m = static_cast<Eigen::Index>(basis.centers.size());
  Eigen::MatrixXd A(n, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      A(i, j) = basis_value(basis, static_cast<std::size_t>(j),
                            points[static_cast<std::size_t>(i)]);
    }
  }
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) b(i) = values[i];

  Eigen::MatrixXd N = Eigen::MatrixXd::Zero(m, m);
  N.selfadjointView<Eigen::Lower>().rankUpdate(A.transpose());
  N = N.selfadjointView<Eigen::Lower>();
  const double max_diag = N.diagonal().maxCoeff();
  const double mu = ridge < 0.0 ? 1e-10 * max_diag : ridge;
  N.diagonal().array() += mu;

  Eigen::LDLT<Eigen::MatrixXd> ldlt(N);
  if (ldlt.info() != Eigen::Success) {
    throw std::runtime_error("fit_coefficients: normal-matrix factorization "
                             "failed");
  }
  const Eigen::VectorXd c = ldlt.solve(A.transpose() * b);

  KernelExpansion out;
  out.basis = basis;
  out.coefficients.assign(c.data(), c.data() + c.size());
  out.fit.ridge = mu;
  const double bn = b.norm();
  out.fit.relative_residual = bn > 0.0 ? (A * c - b).norm() / bn : 0.0;
  // Conditioning estimate from the factor's diagonal spread.
  const Eigen::VectorXd d = ldlt.vectorD().cwiseAbs();
  const double dmin = d.minCoeff();
  out.fit.ill_conditioned = !(dmin > 0.0) || d.maxCoeff() / dmin > 1e12;
  return out;
}

Phasor synthesize_phasor(const KernelExpansion& expansion, const Vec3& x,
                         const Medium& m) {
  const KernelBasis& basis = expansion.basis;
  if (expansion.coefficients.size() != basis.centers.size()) {
    throw std::invalid_argument(
        "synthesize_phasor: coefficient/center count mismatch");
  }
  const double lambda = wavelength(m);
  double coeff = 0.0;
  switch (basis.shape) {
    case KernelShape::gaussian:
      coeff = qss_coeff_gaussian(basis.width, lambda, m.c);
      break;
    case KernelShape::truncated_sinc:
      coeff = qss_coeff_sinc(basis.width, lambda, m.c);
      break;
  }
  const double zh = normalization_constant(basis.shape);
  Phasor u = 0.0;
  for (std::size_t j = 0; j < basis.centers.size(); ++j) {
    const double rho = distance(x, basis.centers[j]);
    if (rho < min_radius) {
      throw SingularEvaluationError(
          "synthesize_phasor: x coincides with a kernel center");
    }
    u += phasor_of_sinusoid(expansion.coefficients[j] / zh * coeff / rho,
                            -m.omega * rho / m.c);
  }
  return u;
}

}  // namespace wavemask
