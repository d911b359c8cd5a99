#pragma once

#include <vector>

#include "wavemask/core.hpp"

// Destructive-interference designs that cancel the field of a gaussian
// primary source at (or around) a protected point x_d, using either a
// concentric shell source or one or two point forces placed outside an
// exclusion ball of radius eps_s around the source.

namespace wavemask {

// A source plus its masking forces, with the geometry they were designed for.
struct MaskingConfig {
  SourceSpec source{};
  std::vector<PointForce> forces{};
  double exclusion_radius = 0.0;  // eps_s, around source.center
  Vec3 sensor_center{};           // x_d
  double sensor_radius = 0.0;     // eps_d

  // Throws GeometryError if any force sits inside the exclusion ball.
  void validate() const;
};

// Concentric shell that cancels the gaussian source's field everywhere
// outside the shell.  The shell radius is lambda*(2k+1)/4 (an anti-resonant
// radius); returns the shell as a SourceSpec with the required amplitude.
SourceSpec shell_mask(const SourceSpec& source, int k, const Medium& m);

// Point force at x_m whose steady-state field cancels the source's field at
// x_d exactly.  eps_min, when positive, enforces the exclusion ball around
// the source.
PointForce one_force_mask(const SourceSpec& source, const Vec3& x_d,
                          const Vec3& x_m, const Medium& m,
                          double eps_min = 0.0);

// One-force design with the force placed on the source-to-sensor axis at the
// exclusion-ball boundary, sign = +1 towards the sensor, -1 away from it.
PointForce optimal_one_force(const SourceSpec& source, const Vec3& x_d,
                             double eps_s, int sign, const Medium& m);

// Pair of axis-placed forces, one on each side of the source, blended so that
// both the field and its gradient along the axis vanish at x_d.  The returned
// force amplitudes are already scaled by the blend weights gamma and 1-gamma.
struct TwoForceDesign {
  PointForce force1{};  // towards the sensor, weight gamma applied
  PointForce force2{};  // away from the sensor, weight 1-gamma applied
  double gamma = 0.0;
  double beta_s = 0.0;  // eps_s / |x_d - source.center|
};

TwoForceDesign optimal_two_force(const SourceSpec& source, const Vec3& x_d,
                                 double eps_s, const Medium& m);

// Convenience builders for the evaluation configs.
MaskingConfig one_force_config(const SourceSpec& source, const Vec3& x_d,
                               double eps_s, double eps_d, int sign,
                               const Medium& m);
MaskingConfig two_force_config(const SourceSpec& source, const Vec3& x_d,
                               double eps_s, double eps_d, const Medium& m);

// Steady-state phasor of source plus all masking forces at x.
Phasor total_phasor(const MaskingConfig& config, const Vec3& x,
                    const Medium& m);

// amplitude(total) / amplitude(source alone) at x.  Throws
// UndefinedMetricError when the source amplitude vanishes.
double normalized_residual(const MaskingConfig& config, const Vec3& x,
                           const Medium& m);

}  // namespace wavemask
