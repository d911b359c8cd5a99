#pragma once

#include <functional>

#include "wavemask/core.hpp"

// Closed-form solutions of the forced wave equation
//
//     u_tt - c^2 * Laplace(u) = F(x) * sin(omega * t)
//
// for spherically symmetric forcing profiles F, written as radial profiles
// sigma with unit normalization:
//
//   truncated sinc : F(r) = (1/d^3) * sinc(r/d),  r <= d, else 0
//   gaussian       : F(r) = (1/d^3) * rho(r/d),   rho = standard normal pdf
//   point          : F(x) = delta(x)
//   shell          : F(r) = delta(r - r0)
//
// Far enough outside the core and late enough that the start-up transient has
// passed, every such field settles into the quasi-steady state
//
//     u(r, t) = (C / r) * sin(omega * (t - r / c)),
//
// and the qss_coeff_* functions below return C.  For the truncated sinc the
// complete transient solution is also available in closed form.

namespace wavemask {

// Quasi-steady-state validity region for a source whose forcing is negligible
// beyond core_radius: points with r > core_radius that the first wavefront
// has fully passed (c*t - core_radius > r).
struct QssRegion {
  double core_radius = 0.0;
};

bool qss_contains(const QssRegion& region, double r, double t,
                  const Medium& m);

// Effective support multiplier for the gaussian profile: beyond 8 standard
// deviations the profile is below 1e-14 of its peak.
inline constexpr double gaussian_effective_support = 8.0;

// Steady-state coefficient for the truncated-sinc profile of core radius d.
double qss_coeff_sinc(double d, double lambda, double c);

// Steady-state coefficient for the gaussian profile of scale d.
double qss_coeff_gaussian(double d, double lambda, double c);

// Steady-state coefficient for the spherical shell of radius r0, per unit
// shell amplitude.
double qss_coeff_shell(double r0, double lambda, double c);

// Steady-state field of a point force at arbitrary position, as a phasor.
Phasor point_force_phasor(const PointForce& force, const Vec3& x,
                          const Medium& m);

// Steady-state field of a gaussian source, as a phasor.
Phasor gaussian_source_phasor(const SourceSpec& source, const Vec3& x,
                              const Medium& m);

// Steady-state phasor for any supported source kind.  Validity: outside the
// core (truncated_sinc: r > scale; spherical_shell: r > scale); the gaussian
// and point forms are evaluable at any r >= min_radius.
Phasor source_phasor(const SourceSpec& source, const Vec3& x, const Medium& m);

// Complete transient field of the truncated-sinc source of core radius d,
// valid for every r > 0 and t >= 0 (inside the core included).
double exact_field_sinc(double r, double t, double d, const Medium& m);

// Wave-equation residual u_tt - c^2 * (1/r^2) * d/dr(r^2 * u_r) by central
// finite differences with radial step h and time step h/c.  For a field that
// solves the homogeneous equation the result is O(h^2) relative to
// omega^2 * amplitude.
double fd_wave_residual(const std::function<double(double, double)>& u,
                        double r, double t, double h, const Medium& m);

}  // namespace wavemask
