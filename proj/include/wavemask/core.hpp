#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

// Shared vocabulary for a monochromatic scalar wave field in an unbounded
// homogeneous 3-D medium.  All quantities are SI: metres, seconds, radians.
//
// Sinusoidal signals a*sin(omega*t + psi) are represented by the complex
// phasor U = a*exp(i*psi); the instantaneous value is Im(U * exp(i*omega*t)).

namespace wavemask {

inline constexpr double pi = std::numbers::pi;

// Evaluation closer than this to a field singularity is refused.
inline constexpr double min_radius = 1e-9;

// Raised when a field would be evaluated at (or too near) a singular point.
struct SingularEvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a geometric precondition (placement, exclusion zone) is violated.
struct GeometryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when an operation is applied to a source kind it does not support.
struct UnsupportedSourceError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a requested ratio or metric has no defined value.
struct UndefinedMetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised on malformed or contradictory run configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  bool operator==(const Vec3& o) const = default;
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  if (n < min_radius) {
    throw SingularEvaluationError("cannot normalize a near-zero vector");
  }
  return v * (1.0 / n);
}

using Phasor = std::complex<double>;

inline double amplitude(const Phasor& u) { return std::abs(u); }

// Phase in (-pi, pi].  std::arg returns [-pi, pi]; fold the open end.
inline double phase(const Phasor& u) {
  double p = std::arg(u);
  if (p <= -pi) p += 2.0 * pi;
  return p;
}

// Reduce an angle to the canonical interval (-pi, pi].
inline double canonical_phase(double phi) {
  double r = std::remainder(phi, 2.0 * pi);
  if (r <= -pi) r += 2.0 * pi;
  return r;
}

// a*sin(omega*t + psi)  <->  U = a*exp(i*psi).  Negative a is permitted and
// is equivalent to (|a|, psi + pi).
inline Phasor phasor_of_sinusoid(double amplitude, double phase_psi) {
  return std::polar(1.0, phase_psi) * amplitude;
}

// Instantaneous value Im(U * exp(i*omega*t)).
inline double time_signal(const Phasor& u, double omega, double t) {
  return std::imag(u * std::polar(1.0, omega * t));
}

// Normalized sinc: sin(pi*x)/(pi*x).  A 4-term even Taylor series takes over
// for |x| < 1e-4 so the function stays smooth through x = 0.
inline double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double y = pi * x * pi * x;
    return 1.0 - y / 6.0 * (1.0 - y / 20.0 * (1.0 - y / 42.0));
  }
  return std::sin(pi * x) / (pi * x);
}

// Propagation medium: sound speed c and driving angular frequency omega.
struct Medium {
  double c;
  double omega;

  Medium(double c_, double omega_) : c(c_), omega(omega_) {
    if (!(c > 0.0)) throw std::invalid_argument("Medium: c must be positive");
    if (!(omega > 0.0)) {
      throw std::invalid_argument("Medium: omega must be positive");
    }
  }
};

inline double wavelength(const Medium& m) { return 2.0 * pi * m.c / m.omega; }

inline double wavenumber(const Medium& m) { return m.omega / m.c; }

// Radial profile of the forcing term.  `scale` is the core radius d for the
// smooth profiles, the shell radius r0 for spherical_shell, and unused for
// point_delta.
enum class SourceKind { gaussian, truncated_sinc, point_delta, spherical_shell };

struct SourceSpec {
  SourceKind kind = SourceKind::gaussian;
  Vec3 center{};
  double amplitude = 0.0;
  double scale = 0.0;
  double phase = 0.0;
};

inline SourceSpec gaussian_source(const Vec3& center, double amplitude,
                                  double scale, double phase = 0.0) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("gaussian_source: scale must be positive");
  }
  return {SourceKind::gaussian, center, amplitude, scale, phase};
}

inline SourceSpec truncated_sinc_source(const Vec3& center, double amplitude,
                                        double scale, double phase = 0.0) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument(
        "truncated_sinc_source: scale must be positive");
  }
  return {SourceKind::truncated_sinc, center, amplitude, scale, phase};
}

inline SourceSpec point_source(const Vec3& center, double amplitude,
                               double phase = 0.0) {
  return {SourceKind::point_delta, center, amplitude, 0.0, phase};
}

inline SourceSpec shell_source(const Vec3& center, double amplitude,
                               double radius, double phase = 0.0) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("shell_source: radius must be positive");
  }
  return {SourceKind::spherical_shell, center, amplitude, radius, phase};
}

// Concentrated monochromatic point force a*delta(x - location)*sin(omega*t + phase).
struct PointForce {
  Vec3 location{};
  double amplitude = 0.0;
  double phase = 0.0;
};

// Ball around a protected point, sampled on a polar half-disk grid in a fixed
// plane through `axis_origin` (the source) and `center`.  By symmetry about
// that axis the half-disk sweeps the whole ball.
struct TargetRegion {
  Vec3 center{};
  double radius = 0.0;
  int n_radial = 61;
  int n_azimuthal = 33;
  Vec3 axis_origin{};

  TargetRegion(const Vec3& center_, double radius_, int n_radial_ = 61,
               int n_azimuthal_ = 33, const Vec3& axis_origin_ = Vec3{})
      : center(center_),
        radius(radius_),
        n_radial(n_radial_),
        n_azimuthal(n_azimuthal_),
        axis_origin(axis_origin_) {
    if (!(radius >= 0.0)) {
      throw std::invalid_argument("TargetRegion: radius must be >= 0");
    }
    if (n_radial < 2 || n_azimuthal < 2) {
      throw std::invalid_argument(
          "TargetRegion: need at least 2 radial and 2 azimuthal samples");
    }
    if (distance(center, axis_origin) < min_radius) {
      throw GeometryError("TargetRegion: center coincides with axis origin");
    }
  }

  // In-plane orthonormal frame: u points from the axis origin to the center,
  // v is a deterministic perpendicular.
  std::pair<Vec3, Vec3> frame() const {
    const Vec3 u = normalized(center - axis_origin);
    Vec3 ref{0.0, 0.0, 1.0};
    if (std::abs(dot(u, ref)) > 0.9) ref = Vec3{0.0, 1.0, 0.0};
    const Vec3 v = normalized(cross(ref, u));
    return {u, v};
  }

  std::vector<Vec3> sample_points() const {
    const auto [u, v] = frame();
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(n_radial) * n_azimuthal);
    for (int i = 0; i < n_radial; ++i) {
      const double r = radius * i / (n_radial - 1);
      for (int j = 0; j < n_azimuthal; ++j) {
        const double phi = pi * j / (n_azimuthal - 1);
        pts.push_back(center + r * (std::cos(phi) * u + std::sin(phi) * v));
      }
    }
    return pts;
  }
};

}  // namespace wavemask
