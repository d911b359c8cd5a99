#include "wavemask/masking.hpp"

#include <cmath>

#include "wavemask/analytic.hpp"

namespace wavemask {

namespace {

void require_gaussian(const SourceSpec& source, const char* who) {
  if (source.kind != SourceKind::gaussian) {
    throw UnsupportedSourceError(std::string(who) +
                                 ": only gaussian sources are supported");
  }
}

double gaussian_decay(const SourceSpec& source, double lambda) {
  return std::exp(-2.0 * pi * pi * source.scale * source.scale /
                  (lambda * lambda));
}

}  // namespace

void MaskingConfig::validate() const {
  for (const PointForce& f : forces) {
    if (distance(f.location, source.center) < exclusion_radius) {
      throw GeometryError(
          "MaskingConfig: force inside the exclusion ball around the source");
    }
  }
}

SourceSpec shell_mask(const SourceSpec& source, int k, const Medium& m) {
  require_gaussian(source, "shell_mask");
  if (k < 0) throw std::invalid_argument("shell_mask: k must be >= 0");
  const double lambda = wavelength(m);
  const double r0 = lambda * (2.0 * k + 1.0) / 4.0;
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^(k+1)
  const double a_m = sign * source.amplitude * pi / (r0 * lambda) *
                     gaussian_decay(source, lambda);
  return shell_source(source.center, a_m, r0, source.phase);
}

PointForce one_force_mask(const SourceSpec& source, const Vec3& x_d,
                          const Vec3& x_m, const Medium& m, double eps_min) {
  require_gaussian(source, "one_force_mask");
  const double r_d = distance(x_d, source.center);
  const double r_dm = distance(x_d, x_m);
  if (r_d < min_radius) {
    throw GeometryError("one_force_mask: x_d coincides with the source");
  }
  if (r_dm < min_radius) {
    throw GeometryError("one_force_mask: x_m coincides with x_d");
  }
  if (distance(x_m, source.center) < eps_min) {
    throw GeometryError("one_force_mask: x_m inside the exclusion ball");
  }
  const double lambda = wavelength(m);
  // Anti-phase at x_d: the force's retarded phase must land pi away from the
  // source's, and its 1/rho amplitude must match the source's there.
  const double phi =
      canonical_phase(source.phase + pi + 2.0 * pi * (r_dm - r_d) / lambda);
  const double scaled =
      source.amplitude / (2.0 * m.c * m.c) * gaussian_decay(source, lambda);
  const double a_m = 4.0 * pi * m.c * m.c * scaled * r_dm / r_d;
  return PointForce{x_m, a_m, phi};
}

PointForce optimal_one_force(const SourceSpec& source, const Vec3& x_d,
                             double eps_s, int sign, const Medium& m) {
  require_gaussian(source, "optimal_one_force");
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("optimal_one_force: sign must be +1 or -1");
  }
  if (!(eps_s > 0.0)) {
    throw std::invalid_argument("optimal_one_force: eps_s must be positive");
  }
  const double r_d = distance(x_d, source.center);
  if (!(eps_s < r_d)) {
    throw GeometryError(
        "optimal_one_force: exclusion ball reaches the protected point");
  }
  const Vec3 axis = normalized(x_d - source.center);
  const Vec3 x_m = source.center + (sign * eps_s) * axis;
  return one_force_mask(source, x_d, x_m, m, eps_s);
}

TwoForceDesign optimal_two_force(const SourceSpec& source, const Vec3& x_d,
                                 double eps_s, const Medium& m) {
  require_gaussian(source, "optimal_two_force");
  TwoForceDesign design;
  design.beta_s = eps_s / distance(x_d, source.center);
  // Blend weight that cancels the axial amplitude gradient of the pair:
  // gamma * beta/(1-beta) - (1-gamma) * beta/(1+beta) = 0.
  design.gamma = 0.5 * (1.0 - design.beta_s);
  design.force1 = optimal_one_force(source, x_d, eps_s, +1, m);
  design.force2 = optimal_one_force(source, x_d, eps_s, -1, m);
  design.force1.amplitude *= design.gamma;
  design.force2.amplitude *= 1.0 - design.gamma;
  return design;
}

MaskingConfig one_force_config(const SourceSpec& source, const Vec3& x_d,
                               double eps_s, double eps_d, int sign,
                               const Medium& m) {
  MaskingConfig cfg{source,
                    {optimal_one_force(source, x_d, eps_s, sign, m)},
                    eps_s,
                    x_d,
                    eps_d};
  cfg.validate();
  return cfg;
}

MaskingConfig two_force_config(const SourceSpec& source, const Vec3& x_d,
                               double eps_s, double eps_d, const Medium& m) {
  const TwoForceDesign design = optimal_two_force(source, x_d, eps_s, m);
  MaskingConfig cfg{
      source, {design.force1, design.force2}, eps_s, x_d, eps_d};
  cfg.validate();
  return cfg;
}

Phasor total_phasor(const MaskingConfig& config, const Vec3& x,
                    const Medium& m) {
  Phasor u = source_phasor(config.source, x, m);
  for (const PointForce& f : config.forces) {
    u += point_force_phasor(f, x, m);
  }
  return u;
}

double normalized_residual(const MaskingConfig& config, const Vec3& x,
                           const Medium& m) {
  const double denom = amplitude(source_phasor(config.source, x, m));
  if (denom == 0.0) {
    throw UndefinedMetricError(
        "normalized_residual: source amplitude vanishes at x");
  }
  return amplitude(total_phasor(config, x, m)) / denom;
}

}  // namespace wavemask
