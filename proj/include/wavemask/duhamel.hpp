#pragma once

#include <functional>
#include <vector>

#include "wavemask/core.hpp"

// Reference solver for the spherically symmetric forced wave equation,
// independent of the closed forms in analytic.hpp.  The field at radius r and
// time T is the superposition integral
//
//     u(r, T) = 1/(2*c*r) * Int_0^T f(T - tau) * (G(r + c*tau) - G(r - c*tau)) dtau,
//
// where f is the forcing time profile and G is the once-integrated radial
// profile G(s) = -Int_{|s|}^{inf} s' * sigma(s') ds' (even, and zero beyond
// the profile's support).  G is tabulated once by cumulative Simpson panels
// and interpolated with a not-a-knot cubic spline; the time integral is a
// composite Simpson rule over the only windows where G is active.

namespace wavemask {

// Interpolant of G on [0, support_radius], evaluated as an even function and
// clamped (zero) beyond the support.
class GSpline {
 public:
  // Tabulates g(s) = s * sigma(s) on `panels` uniform Simpson panels and
  // interpolates the cumulative integral shifted so G(support_radius) = 0.
  // Requires panels >= 4.
  static GSpline build(const std::function<double(double)>& sigma,
                       double support_radius, int panels = 2000);

  double operator()(double s) const;

  double support_radius() const { return support_; }
  int panels() const { return static_cast<int>(values_.size()) - 1; }

 private:
  GSpline() = default;

  double support_ = 0.0;
  double h_ = 0.0;
  std::vector<double> values_;   // G at the knots
  std::vector<double> second_;   // spline second derivatives at the knots
};

// Superposition integral above with forcing profile f.  h_u is the target
// quadrature step in time; windows shorter than h_u still get one panel.
// Valid for any r >= min_radius and T >= 0, inside the core included.
double compute_u(double r, double T, const Medium& m, const GSpline& g,
                 const std::function<double(double)>& f, double h_u);

}  // namespace wavemask
