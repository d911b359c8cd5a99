#include <doctest.h>

#include <cmath>

#include "wavemask/core.hpp"

using namespace wavemask;

TEST_CASE("vector algebra") {
  const Vec3 a{1.0, 2.0, 3.0};
  const Vec3 b{-2.0, 0.5, 4.0};

  CHECK((a + b) == Vec3{-1.0, 2.5, 7.0});
  CHECK((a - b) == Vec3{3.0, 1.5, -1.0});
  CHECK((2.0 * a) == Vec3{2.0, 4.0, 6.0});
  CHECK((-a) == Vec3{-1.0, -2.0, -3.0});
  CHECK(dot(a, b) == doctest::Approx(-2.0 + 1.0 + 12.0));
  CHECK(norm(Vec3{3.0, 4.0, 0.0}) == doctest::Approx(5.0));
  CHECK(distance(a, a) == 0.0);

  const Vec3 c = cross(a, b);
  CHECK(dot(c, a) == doctest::Approx(0.0));
  CHECK(dot(c, b) == doctest::Approx(0.0));

  CHECK(norm(normalized(b)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(normalized(Vec3{0.0, 0.0, 0.0}), SingularEvaluationError);
}

TEST_CASE("canonical phase lands in (-pi, pi]") {
  CHECK(canonical_phase(0.0) == 0.0);
  CHECK(canonical_phase(pi) == doctest::Approx(pi));
  CHECK(canonical_phase(-pi) == doctest::Approx(pi));
  CHECK(canonical_phase(3.0 * pi) == doctest::Approx(pi));
  for (double phi : {-10.0, -2.5, 0.3, 1.7, 9.9, 123.456}) {
    const double r = canonical_phase(phi);
    CHECK(r > -pi);
    CHECK(r <= pi);
    // same angle modulo 2*pi
    CHECK(std::remainder(r - phi, 2.0 * pi) == doctest::Approx(0.0));
    CHECK(canonical_phase(phi + 2.0 * pi) == doctest::Approx(r));
  }
}

TEST_CASE("phasor round trip and time signal") {
  const double a = 2.5;
  const double psi = 0.7;
  const Phasor u = phasor_of_sinusoid(a, psi);
  CHECK(amplitude(u) == doctest::Approx(a));
  CHECK(phase(u) == doctest::Approx(psi));

  // negative amplitude is the same signal with a pi phase shift
  const Phasor v = phasor_of_sinusoid(-a, psi);
  CHECK(amplitude(v) == doctest::Approx(a));
  CHECK(canonical_phase(phase(v) - psi - pi) == doctest::Approx(0.0));

  const double omega = 2.0 * pi * 3.0;
  for (double t : {0.0, 0.01, 0.37, 1.0}) {
    CHECK(time_signal(u, omega, t) ==
          doctest::Approx(a * std::sin(omega * t + psi)));
  }
}

TEST_CASE("sinc values and series switchover") {
  CHECK(sinc(0.0) == 1.0);
  CHECK(sinc(1.0) == doctest::Approx(0.0));
  CHECK(sinc(0.5) == doctest::Approx(2.0 / pi));
  CHECK(sinc(-0.5) == sinc(0.5));
  CHECK(sinc(1.5) == doctest::Approx(-2.0 / (3.0 * pi)));

  // series and direct evaluation agree around the switch point
  for (double x : {9.0e-5, 9.9e-5, 1.0e-4, 1.1e-4, 2.0e-4}) {
    const double direct = std::sin(pi * x) / (pi * x);
    CHECK(sinc(x) == doctest::Approx(direct).epsilon(1e-14));
  }
}

TEST_CASE("medium validation and derived scales") {
  CHECK_THROWS_AS(Medium(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Medium(1.0, -3.0), std::invalid_argument);

  const Medium m(1500.0, 200.0 * pi);
  CHECK(wavelength(m) == doctest::Approx(15.0));
  CHECK(wavelength(m) * wavenumber(m) == doctest::Approx(2.0 * pi));
}

TEST_CASE("source factories validate their scale") {
  CHECK_THROWS_AS(gaussian_source({}, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(truncated_sinc_source({}, 1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(shell_source({}, 1.0, 0.0), std::invalid_argument);

  CHECK(gaussian_source({}, 2.0, 1.5).kind == SourceKind::gaussian);
  CHECK(truncated_sinc_source({}, 2.0, 1.5).kind == SourceKind::truncated_sinc);
  CHECK(point_source({}, 2.0).kind == SourceKind::point_delta);
  CHECK(shell_source({}, 2.0, 1.5).kind == SourceKind::spherical_shell);
  CHECK(shell_source({}, 2.0, 1.5).scale == 1.5);
}

TEST_CASE("target region frame and samples") {
  CHECK_THROWS_AS(TargetRegion({750.0, 0.0, 0.0}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(TargetRegion({750.0, 0.0, 0.0}, 1.0, 1, 33),
                  std::invalid_argument);
  CHECK_THROWS_AS(TargetRegion({0.0, 0.0, 0.0}, 1.0), GeometryError);

  const TargetRegion region({750.0, 0.0, 0.0}, 15.0, 5, 9);
  const auto [u, v] = region.frame();
  CHECK(norm(u) == doctest::Approx(1.0));
  CHECK(norm(v) == doctest::Approx(1.0));
  CHECK(dot(u, v) == doctest::Approx(0.0));
  CHECK(u.x == doctest::Approx(1.0));  // axis from origin to center

  const auto pts = region.sample_points();
  CHECK(pts.size() == 5 * 9);
  for (const Vec3& p : pts) {
    CHECK(distance(p, region.center) <= region.radius * (1.0 + 1e-12));
    CHECK(p.z == doctest::Approx(0.0));  // half-disk lies in the (x, y) plane
  }
  // first radial ring is the center itself
  CHECK(distance(pts.front(), region.center) == doctest::Approx(0.0));

  // axis nearly parallel to z still produces a valid frame
  const TargetRegion vertical({0.0, 0.0, 100.0}, 1.0);
  const auto [uz, vz] = vertical.frame();
  CHECK(std::abs(dot(uz, vz)) < 1e-12);
  CHECK(norm(vz) == doctest::Approx(1.0));
}
