#pragma once

#include <functional>
#include <span>
#include <vector>

#include "wavemask/core.hpp"

// Approximation of arbitrary forcing profiles by superpositions of
// unit-normalized radial kernels
//
//     psi(x; x0, d) = 1/(Z_h * d^3) * h(|x - x0| / d),
//
// where Z_h = Int_0^inf 4*pi*s^2*h(s) ds makes each kernel integrate to one.
// The steady-state field of the fitted profile is then the same superposition
// of single-kernel fields.

namespace wavemask {

enum class KernelShape { gaussian, truncated_sinc };

// h(s): standard normal density for gaussian; sinc(s) truncated at s = 1 for
// truncated_sinc.
double kernel_profile(KernelShape shape, double s);

// Z_h in closed form: 2*pi for the gaussian, 4/pi for the truncated sinc.
double normalization_constant(KernelShape shape);

// Z_h for an arbitrary radial profile by adaptive Simpson quadrature of
// 4*pi*s^2*h(s) over [0, support_radius].
double normalization_constant(const std::function<double(double)>& h,
                              double support_radius, double tol = 1e-12);

struct KernelBasis {
  KernelShape shape = KernelShape::gaussian;
  double width = 0.0;
  std::vector<Vec3> centers{};
};

// psi(x; centers[j], width).
double basis_value(const KernelBasis& basis, std::size_t j, const Vec3& x);

// Cubic lattice of centers with the given spacing covering
// [-half_extent, half_extent]^3.
std::vector<Vec3> lattice_centers(double spacing, double half_extent);

struct FitReport {
  double relative_residual = 0.0;  // |A c - p| / |p| over the sample points
  double ridge = 0.0;              // regularization actually applied
  bool ill_conditioned = false;    // normal-matrix conditioning above 1e12
};

struct KernelExpansion {
  KernelBasis basis{};
  std::vector<double> coefficients{};
  FitReport fit{};
};

// Ridge-regularized least squares of values ~ sum_j c_j psi_j over the sample
// points, via the normal equations and a symmetric factorization.  ridge < 0
// selects the default 1e-10 * max(diagonal of the normal matrix).
KernelExpansion fit_coefficients(const KernelBasis& basis,
                                 std::span<const Vec3> points,
                                 std::span<const double> values,
                                 double ridge = -1.0);

// Steady-state phasor of the fitted profile: the coefficient-weighted sum of
// single-kernel far fields.  Valid outside every kernel's effective core.
Phasor synthesize_phasor(const KernelExpansion& expansion, const Vec3& x,
                         const Medium& m);

}  // namespace wavemask
