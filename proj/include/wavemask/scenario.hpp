#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wavemask/core.hpp"

namespace wavemask {

// Run-time description of one masking scenario. Field values default to the
// reference water-acoustics setup: c = 1500 m/s, f = 100 Hz, unit-amplitude
// Gaussian source of width 1 m at the origin, sensor 750 m down the +x axis,
// 15 m exclusion and sensor-ball radii.
struct ScenarioConfig {
  struct MediumConfig {
    double c = 1500.0;
    double frequency = 100.0;
  };
  struct SourceConfig {
    double a_s = 1.0;
    double d = 1.0;
  };
  struct GeometryConfig {
    Vec3 x_d{750.0, 0.0, 0.0};
    double eps_s = 15.0;
    double eps_d = 15.0;
  };
  struct SamplingConfig {
    int n_radial = 61;
    int n_azimuthal = 33;
  };
  struct OptimizeConfig {
    std::vector<double> r_d{1.0, 2.0, 5.0, 10.0, 15.0, 30.0, 50.0, 75.0};
    int max_iters = 500;
    double f_tol = 1e-12;
  };

  MediumConfig medium;
  SourceConfig source;
  GeometryConfig geometry;
  SamplingConfig sampling;
  OptimizeConfig optimize;

  Medium make_medium() const;
  SourceSpec make_source() const;

  // Rejects unknown keys at every nesting level and type mismatches.
  static ScenarioConfig from_json(const nlohmann::json& j);
  static ScenarioConfig from_file(const std::string& path);
  nlohmann::ordered_json to_json() const;
};

// Scientific notation with 17 significant digits; round-trips doubles exactly.
std::string csv_number(double v);

std::string csv_row(std::initializer_list<double> values);

}  // namespace wavemask
