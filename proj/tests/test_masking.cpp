#include <doctest.h>

#include <cmath>

#include "wavemask/analytic.hpp"
#include "wavemask/masking.hpp"

using namespace wavemask;

namespace {
// reference water-acoustics scenario used throughout
const Medium water(1500.0, 200.0 * pi);
const Vec3 x_d{750.0, 0.0, 0.0};
const double eps_s = 15.0;
const double eps_d = 15.0;
SourceSpec src() { return gaussian_source({}, 1.0, 1.0); }
}  // namespace

TEST_CASE("shell mask silences the gaussian source outside the shell") {
  for (int k = 0; k <= 3; ++k) {
    const SourceSpec shell = shell_mask(src(), k, water);
    CHECK(shell.kind == SourceKind::spherical_shell);
    CHECK(shell.scale == doctest::Approx(15.0 * (2 * k + 1) / 4.0));
    CHECK(shell.phase == src().phase);

    const double combined =
        src().amplitude * qss_coeff_gaussian(1.0, 15.0, water.c) +
        shell.amplitude * qss_coeff_shell(shell.scale, 15.0, water.c);
    const double reference =
        std::abs(src().amplitude * qss_coeff_gaussian(1.0, 15.0, water.c));
    CHECK(std::abs(combined) < 1e-15 * reference);
  }
}

TEST_CASE("shell mask amplitude: first anti-resonant radius") {
  const SourceSpec shell = shell_mask(src(), 1, water);
  CHECK(shell.amplitude == doctest::Approx(1.70531e-2).epsilon(1e-3));
  // alternating sign pattern in k
  CHECK(shell_mask(src(), 0, water).amplitude < 0.0);
  CHECK(shell_mask(src(), 2, water).amplitude < 0.0);
  CHECK(shell_mask(src(), 3, water).amplitude > 0.0);
}

TEST_CASE("shell mask argument validation") {
  CHECK_THROWS_AS(shell_mask(truncated_sinc_source({}, 1.0, 1.0), 1, water),
                  UnsupportedSourceError);
  CHECK_THROWS_AS(shell_mask(src(), -1, water), std::invalid_argument);
}

TEST_CASE("single point force cancels the source exactly at the target") {
  // arbitrary placements, including off-axis ones
  for (const Vec3& x_m : {Vec3{20.0, 30.0, -10.0}, Vec3{-40.0, 0.0, 0.0},
                          Vec3{0.0, 120.0, 5.0}}) {
    const PointForce f = one_force_mask(src(), x_d, x_m, water, eps_s);
    const Phasor total = source_phasor(src(), x_d, water) +
                         point_force_phasor(f, x_d, water);
    const Phasor alone = source_phasor(src(), x_d, water);
    CHECK(amplitude(total) < 1e-13 * amplitude(alone));
  }

  // shifted source with a nonzero drive phase
  const SourceSpec moved = gaussian_source({5.0, -3.0, 2.0}, 2.3, 1.2, 0.4);
  const Vec3 target{700.0, 100.0, 0.0};
  const PointForce f = one_force_mask(moved, target, {60.0, -20.0, 8.0}, water);
  const Phasor total = source_phasor(moved, target, water) +
                       point_force_phasor(f, target, water);
  CHECK(amplitude(total) <
        1e-12 * amplitude(source_phasor(moved, target, water)));
}

TEST_CASE("single point force placement validation") {
  CHECK_THROWS_AS(one_force_mask(src(), x_d, {1.0, 0.0, 0.0}, water, eps_s),
                  GeometryError);
  CHECK_THROWS_AS(one_force_mask(src(), x_d, x_d, water), GeometryError);
  CHECK_THROWS_AS(one_force_mask(src(), src().center, {20.0, 0.0, 0.0}, water),
                  GeometryError);
  CHECK_THROWS_AS(
      one_force_mask(shell_source({}, 1.0, 2.0), x_d, {20.0, 0.0, 0.0}, water),
      UnsupportedSourceError);
}

TEST_CASE("exclusion-boundary force designs: geometry, amplitude, phase") {
  const PointForce f1 = optimal_one_force(src(), x_d, eps_s, +1, water);
  CHECK(f1.location.x == doctest::Approx(15.0));
  CHECK(f1.location.y == 0.0);
  CHECK(f1.amplitude == doctest::Approx(5.64034).epsilon(1e-4));
  CHECK(f1.phase == doctest::Approx(pi));

  const PointForce f2 = optimal_one_force(src(), x_d, eps_s, -1, water);
  CHECK(f2.location.x == doctest::Approx(-15.0));
  CHECK(f2.amplitude == doctest::Approx(5.87055).epsilon(1e-4));
  CHECK(f2.phase == doctest::Approx(pi));

  // the nearer placement needs the smaller drive
  CHECK(f1.amplitude < f2.amplitude);

  CHECK_THROWS_AS(optimal_one_force(src(), x_d, eps_s, 0, water),
                  std::invalid_argument);
  CHECK_THROWS_AS(optimal_one_force(src(), x_d, -1.0, +1, water),
                  std::invalid_argument);
  CHECK_THROWS_AS(optimal_one_force(src(), x_d, 800.0, +1, water),
                  GeometryError);
}

TEST_CASE("weighted pair: blend weights and scaled amplitudes") {
  const TwoForceDesign d = optimal_two_force(src(), x_d, eps_s, water);
  CHECK(d.beta_s == doctest::Approx(0.02));
  CHECK(d.gamma == doctest::Approx(0.49));
  CHECK(d.force1.amplitude == doctest::Approx(0.49 * 5.64034).epsilon(1e-4));
  CHECK(d.force2.amplitude == doctest::Approx(0.51 * 5.87055).epsilon(1e-4));
  CHECK(d.force1.location.x == doctest::Approx(15.0));
  CHECK(d.force2.location.x == doctest::Approx(-15.0));
}

TEST_CASE("residual at the protected point is numerically zero") {
  const MaskingConfig one =
      one_force_config(src(), x_d, eps_s, eps_d, +1, water);
  const MaskingConfig two = two_force_config(src(), x_d, eps_s, eps_d, water);
  CHECK(normalized_residual(one, x_d, water) < 1e-12);
  CHECK(normalized_residual(two, x_d, water) < 1e-12);
}

TEST_CASE("one-force residual along the axis obeys the first-order bound") {
  const MaskingConfig one =
      one_force_config(src(), x_d, eps_s, eps_d, +1, water);
  const double towards =
      normalized_residual(one, x_d + Vec3{15.0, 0.0, 0.0}, water);
  const double away =
      normalized_residual(one, x_d + Vec3{-15.0, 0.0, 0.0}, water);
  CHECK(towards == doctest::Approx(4.0e-4).epsilon(5e-3));
  CHECK(away == doctest::Approx(4.16667e-4).epsilon(5e-3));
  CHECK(towards <= 4.2e-4);
  CHECK(away <= 4.2e-4);

  // Perpendicular to the axis the exact field's curvature term dominates at
  // the rim and the amplitude exceeds the axial values by about a factor of
  // pi; pinned here as expected behavior of the full solution.
  const double rim = normalized_residual(one, x_d + Vec3{0.0, 15.0, 0.0}, water);
  CHECK(rim == doctest::Approx(1.28191e-3).epsilon(1e-3));
}

TEST_CASE("pair cancels the gradient: quadratic axial growth") {
  const MaskingConfig two = two_force_config(src(), x_d, eps_s, eps_d, water);
  const double a1 = normalized_residual(two, x_d + Vec3{0.01, 0.0, 0.0}, water);
  const double a2 = normalized_residual(two, x_d + Vec3{0.02, 0.0, 0.0}, water);
  CHECK(a2 / a1 == doctest::Approx(4.0).epsilon(0.1));

  const MaskingConfig one =
      one_force_config(src(), x_d, eps_s, eps_d, +1, water);
  const double b1 = normalized_residual(one, x_d + Vec3{0.01, 0.0, 0.0}, water);
  const double b2 = normalized_residual(one, x_d + Vec3{0.02, 0.0, 0.0}, water);
  CHECK(b2 / b1 == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("pair beats the single force by three orders over the ball") {
  const MaskingConfig one =
      one_force_config(src(), x_d, eps_s, eps_d, +1, water);
  const MaskingConfig two = two_force_config(src(), x_d, eps_s, eps_d, water);
  const TargetRegion region(x_d, eps_d, 61, 33);
  double worst_one = 0.0;
  double worst_two = 0.0;
  for (const Vec3& p : region.sample_points()) {
    worst_one = std::max(worst_one, normalized_residual(one, p, water));
    worst_two = std::max(worst_two, normalized_residual(two, p, water));
  }
  CHECK(worst_two == doctest::Approx(8.6949e-7).epsilon(1e-3));
  CHECK(worst_one / worst_two > 1e3);
}

TEST_CASE("config validation and residual error cases") {
  MaskingConfig bad{src(), {PointForce{{5.0, 0.0, 0.0}, 1.0, 0.0}}, eps_s,
                    x_d, eps_d};
  CHECK_THROWS_AS(bad.validate(), GeometryError);

  MaskingConfig silent{gaussian_source({}, 0.0, 1.0), {}, eps_s, x_d, eps_d};
  CHECK_THROWS_AS(normalized_residual(silent, x_d, water),
                  UndefinedMetricError);

  CHECK_THROWS_AS(optimal_two_force(point_source({}, 1.0), x_d, eps_s, water),
                  UnsupportedSourceError);
}
