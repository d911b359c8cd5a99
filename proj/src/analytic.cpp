#include "wavemask/analytic.hpp"

#include <algorithm>
#include <cmath>

namespace wavemask {

namespace {

void check_positive(double v, const char* what) {
  if (!(v > 0.0)) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
}

void check_radius(double r) {
  if (!(r >= min_radius)) {
    throw SingularEvaluationError("field evaluated within " +
                                  std::to_string(min_radius) +
                                  " m of a singular point");
  }
}

}  // namespace

bool qss_contains(const QssRegion& region, double r, double t,
                  const Medium& m) {
  return r > region.core_radius && m.c * t - region.core_radius > r;
}

double qss_coeff_sinc(double d, double lambda, double c) {
  check_positive(d, "qss_coeff_sinc: d");
  check_positive(lambda, "qss_coeff_sinc: lambda");
  check_positive(c, "qss_coeff_sinc: c");
  const double x = 2.0 * d / lambda;
  return (sinc(x) + 0.5 * sinc(x + 1.0) + 0.5 * sinc(x - 1.0)) /
         (pi * pi * c * c);
}

double qss_coeff_gaussian(double d, double lambda, double c) {
  check_positive(d, "qss_coeff_gaussian: d");
  check_positive(lambda, "qss_coeff_gaussian: lambda");
  check_positive(c, "qss_coeff_gaussian: c");
  return std::exp(-2.0 * pi * pi * d * d / (lambda * lambda)) /
         (2.0 * c * c);
}

double qss_coeff_shell(double r0, double lambda, double c) {
  check_positive(r0, "qss_coeff_shell: r0");
  check_positive(lambda, "qss_coeff_shell: lambda");
  check_positive(c, "qss_coeff_shell: c");
  return r0 * lambda / (2.0 * pi * c * c) * std::sin(2.0 * pi * r0 / lambda);
}

Phasor point_force_phasor(const PointForce& force, const Vec3& x,
                          const Medium& m) {
  const double rho = distance(x, force.location);
  check_radius(rho);
  const double a = force.amplitude / (4.0 * pi * m.c * m.c * rho);
  return phasor_of_sinusoid(a, force.phase - m.omega * rho / m.c);
}

Phasor gaussian_source_phasor(const SourceSpec& source, const Vec3& x,
                              const Medium& m) {
  if (source.kind != SourceKind::gaussian) {
    throw UnsupportedSourceError(
        "gaussian_source_phasor: source kind is not gaussian");
  }
  const double r = distance(x, source.center);
  check_radius(r);
  const double lambda = wavelength(m);
  const double scaled = source.amplitude *
                        std::exp(-2.0 * pi * pi * source.scale * source.scale /
                                 (lambda * lambda)) /
                        (2.0 * m.c * m.c);
  return phasor_of_sinusoid(scaled / r, source.phase - m.omega * r / m.c);
}

Phasor source_phasor(const SourceSpec& source, const Vec3& x, const Medium& m) {
  const double r = distance(x, source.center);
  check_radius(r);
  const double lambda = wavelength(m);
  double coeff = 0.0;
  switch (source.kind) {
    case SourceKind::gaussian:
      return gaussian_source_phasor(source, x, m);
    case SourceKind::point_delta:
      coeff = source.amplitude / (4.0 * pi * m.c * m.c);
      break;
    case SourceKind::truncated_sinc:
      if (r <= source.scale) {
        throw GeometryError(
            "source_phasor: truncated-sinc steady state is only valid outside "
            "the core radius");
      }
      coeff = source.amplitude * qss_coeff_sinc(source.scale, lambda, m.c);
      break;
    case SourceKind::spherical_shell:
      if (r <= source.scale) {
        throw GeometryError(
            "source_phasor: shell steady state is only valid outside the "
            "shell radius");
      }
      coeff = source.amplitude * qss_coeff_shell(source.scale, lambda, m.c);
      break;
  }
  return phasor_of_sinusoid(coeff / r, source.phase - m.omega * r / m.c);
}

// The transient field is a sum of retarded-time window integrals solved in
// closed form.  Each window [a, b] contributes terms of the shape
//   (b - a) * sinc(v * (b - a) / (2*pi)) * sin(phase at the window midpoint),
// one per frequency v in {omega, omega +/- pi*c/d}.
double exact_field_sinc(double r, double t, double d, const Medium& m) {
  check_radius(r);
  check_positive(d, "exact_field_sinc: d");
  if (t < 0.0) {
    throw std::invalid_argument("exact_field_sinc: t must be >= 0");
  }
  const double c = m.c;
  const double omega = m.omega;
  const double vp = omega + pi * c / d;
  const double vm = omega - pi * c / d;
  const double pref = 1.0 / (2.0 * pi * pi * c * d * r);

  double u = 0.0;

  // Outward wave, active for tau in [(r-d)/c, (r+d)/c] clipped to [0, t].
  const double tb = std::min(t, std::max(0.0, (r - d) / c));
  const double te = std::min(t, (r + d) / c);
  if (te > tb) {
    const double dt = te - tb;
    const double mid = 0.5 * (tb + te);
    const double a0 = omega * (t - mid);
    const double b0 = pi / d * (r - c * mid);
    u += pref * dt *
         (sinc(omega * dt / (2.0 * pi)) * std::sin(a0) +
          0.5 * sinc(vp * dt / (2.0 * pi)) * std::sin(a0 + b0) +
          0.5 * sinc(vm * dt / (2.0 * pi)) * std::sin(a0 - b0));
  }

  // Inward wave, active only inside the core, for tau in [0, (d-r)/c].
  const double t2 = std::min(t, std::max(0.0, -(r - d) / c));
  if (t2 > 0.0) {
    const double a0 = omega * (t - 0.5 * t2);
    const double b0 = pi / d * (r + 0.5 * c * t2);
    u -= pref * t2 *
         (sinc(omega * t2 / (2.0 * pi)) * std::sin(a0) +
          0.5 * sinc(vm * t2 / (2.0 * pi)) * std::sin(a0 + b0) +
          0.5 * sinc(vp * t2 / (2.0 * pi)) * std::sin(a0 - b0));
  }

  return u;
}

double fd_wave_residual(const std::function<double(double, double)>& u,
                        double r, double t, double h, const Medium& m) {
  check_positive(h, "fd_wave_residual: h");
  if (!(r - h >= min_radius)) {
    throw SingularEvaluationError(
        "fd_wave_residual: stencil reaches inside the minimum radius");
  }
  const double ht = h / m.c;
  const double u0 = u(r, t);
  const double utt = (u(r, t + ht) - 2.0 * u0 + u(r, t - ht)) / (ht * ht);
  const double rp = r + 0.5 * h;
  const double rm = r - 0.5 * h;
  const double flux = (rp * rp * (u(r + h, t) - u0) / h -
                       rm * rm * (u0 - u(r - h, t)) / h) /
                      (h * r * r);
  return utt - m.c * m.c * flux;
}

}  // namespace wavemask
