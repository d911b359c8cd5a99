// Command-line front end: scenario configs in, CSV/JSON data out.  All
// numeric output goes through csv_number so repeated runs are byte-identical.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wavemask/analytic.hpp"
#include "wavemask/core.hpp"
#include "wavemask/duhamel.hpp"
#include "wavemask/kernel_superposition.hpp"
#include "wavemask/masking.hpp"
#include "wavemask/region_optimizer.hpp"
#include "wavemask/scenario.hpp"

namespace {

using namespace wavemask;
using nlohmann::ordered_json;

constexpr double log_floor = -300.0;  // stands in for log10(0) in CSV output

double log10_clamped(double v) {
  if (!(v > 0.0)) return log_floor;
  return std::max(std::log10(v), log_floor);
}

Vec3 to_vec3(const std::vector<double>& v) { return {v[0], v[1], v[2]}; }

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_sidecar(const std::string& path, const std::string& figure,
                   const ScenarioConfig& cfg, const ordered_json& parameters,
                   const std::vector<std::string>& outputs) {
  ordered_json j;
  j["figure"] = figure;
  j["outputs"] = outputs;
  j["parameters"] = parameters;
  j["config"] = cfg.to_json();
  write_text(path, j.dump(2) + "\n");
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> out(count);
  const double la = std::log10(lo);
  const double lb = std::log10(hi);
  for (int i = 0; i < count; ++i) {
    out[i] = std::pow(10.0, la + (lb - la) * i / (count - 1));
  }
  return out;
}

struct DesignPair {
  MaskingConfig one;  // source + force 1 (towards the sensor)
  MaskingConfig two;  // source + weighted pair
};

DesignPair make_designs(const ScenarioConfig& cfg, const Medium& m) {
  const SourceSpec src = cfg.make_source();
  return {one_force_config(src, cfg.geometry.x_d, cfg.geometry.eps_s,
                           cfg.geometry.eps_d, +1, m),
          two_force_config(src, cfg.geometry.x_d, cfg.geometry.eps_s,
                           cfg.geometry.eps_d, m)};
}

// In-plane frame about the sensor: first axis along source -> sensor.
std::pair<Vec3, Vec3> sensor_frame(const ScenarioConfig& cfg) {
  const TargetRegion region(cfg.geometry.x_d, cfg.geometry.eps_d, 2, 2,
                            Vec3{0.0, 0.0, 0.0});
  return region.frame();
}

std::string rays_csv(const ScenarioConfig& cfg, const Medium& m, double r_min,
                     int count) {
  const DesignPair designs = make_designs(cfg, m);
  const auto [u, v] = sensor_frame(cfg);
  const std::vector<double> radii =
      log_spaced(r_min, cfg.geometry.eps_d, count);
  const struct {
    const char* label;
    double phi;
  } rays[] = {{"0", 0.0}, {"pi/2", pi / 2.0}, {"pi", pi}};

  std::string csv = "phi_label,r_m,A_NR_one_force,A_NR_two_force\n";
  for (const auto& ray : rays) {
    const Vec3 dir = std::cos(ray.phi) * u + std::sin(ray.phi) * v;
    for (double r : radii) {
      const Vec3 x = cfg.geometry.x_d + r * dir;
      csv += ray.label;
      csv += ',';
      csv += csv_number(r) + ',' + csv_number(normalized_residual(designs.one, x, m)) +
             ',' + csv_number(normalized_residual(designs.two, x, m)) + '\n';
    }
  }
  return csv;
}

std::string circles_csv(const ScenarioConfig& cfg, const Medium& m,
                        const std::vector<double>& radii, int n_angles) {
  const DesignPair designs = make_designs(cfg, m);
  const auto [u, v] = sensor_frame(cfg);
  std::string csv = "r_m,phi_rad,A_NR_one,A_NR_two\n";
  for (double r : radii) {
    for (int j = 0; j < n_angles; ++j) {
      const double phi = pi * j / (n_angles - 1);
      const Vec3 x =
          cfg.geometry.x_d + r * (std::cos(phi) * u + std::sin(phi) * v);
      csv += csv_row({r, phi, normalized_residual(designs.one, x, m),
                      normalized_residual(designs.two, x, m)});
    }
  }
  return csv;
}

std::string grid_csv(
    const ScenarioConfig& cfg, const Medium& m,
    const std::vector<std::pair<std::string, MaskingConfig>>& labeled,
    double half_extent, int n) {
  const auto [u, v] = sensor_frame(cfg);
  std::string csv = "design,x_m,y_m,log10_A_NR\n";
  for (const auto& [label, config] : labeled) {
    for (int i = 0; i < n; ++i) {
      const double x = -half_extent + 2.0 * half_extent * i / (n - 1);
      for (int j = 0; j < n; ++j) {
        const double y = -half_extent + 2.0 * half_extent * j / (n - 1);
        const Vec3 p = cfg.geometry.x_d + x * u + y * v;
        csv += label;
        csv += ',';
        csv += csv_number(x) + ',' + csv_number(y) + ',' +
               csv_number(log10_clamped(normalized_residual(config, p, m))) +
               '\n';
      }
    }
  }
  return csv;
}

std::string field_header(bool with_arclength) {
  std::string h = with_arclength ? "s_m," : "";
  return h + "x_m,y_m,z_m,amplitude,phase_rad,re,im\n";
}

Phasor field_phasor(const std::string& design, const DesignPair& designs,
                    const SourceSpec& src, const Vec3& x, const Medium& m) {
  if (design == "one") return total_phasor(designs.one, x, m);
  if (design == "two") return total_phasor(designs.two, x, m);
  return source_phasor(src, x, m);
}

// ---------------------------------------------------------------------------
// subcommand: field

struct FieldOptions {
  std::string config_path;
  std::string design = "none";
  std::vector<double> from;
  std::vector<double> to;
  int count = 201;
  bool grid = false;
  std::vector<double> center;
  double half_extent = 15.0;
  int n = 61;
  std::string out = "field.csv";
};

void run_field(const FieldOptions& opt) {
  const ScenarioConfig cfg = opt.config_path.empty()
                                 ? ScenarioConfig{}
                                 : ScenarioConfig::from_file(opt.config_path);
  const Medium m = cfg.make_medium();
  const SourceSpec src = cfg.make_source();
  const DesignPair designs = make_designs(cfg, m);

  std::string csv;
  if (opt.grid) {
    if (opt.center.size() != 3) {
      throw ConfigError("field --grid requires --center x,y,z");
    }
    const Vec3 c = to_vec3(opt.center);
    csv = field_header(false);
    for (int i = 0; i < opt.n; ++i) {
      const double dx = -opt.half_extent + 2.0 * opt.half_extent * i / (opt.n - 1);
      for (int j = 0; j < opt.n; ++j) {
        const double dy =
            -opt.half_extent + 2.0 * opt.half_extent * j / (opt.n - 1);
        const Vec3 x = c + Vec3{dx, dy, 0.0};
        const Phasor u = field_phasor(opt.design, designs, src, x, m);
        csv += csv_row({x.x, x.y, x.z, amplitude(u), phase(u), u.real(),
                        u.imag()});
      }
    }
  } else {
    if (opt.from.size() != 3 || opt.to.size() != 3) {
      throw ConfigError("field needs --from x,y,z and --to x,y,z (or --grid)");
    }
    const Vec3 a = to_vec3(opt.from);
    const Vec3 b = to_vec3(opt.to);
    csv = field_header(true);
    for (int i = 0; i < opt.count; ++i) {
      const double s = static_cast<double>(i) / (opt.count - 1);
      const Vec3 x = a + s * (b - a);
      const Phasor u = field_phasor(opt.design, designs, src, x, m);
      csv += csv_row({s * distance(a, b), x.x, x.y, x.z, amplitude(u),
                      phase(u), u.real(), u.imag()});
    }
  }
  write_text(opt.out, csv);
}

// ---------------------------------------------------------------------------
// subcommand: mask design

struct MaskDesignOptions {
  std::string config_path;
  int forces = 2;
  int sign = 1;
  std::string out = "design.json";
};

ordered_json force_json(const PointForce& f) {
  return {{"location", {f.location.x, f.location.y, f.location.z}},
          {"amplitude", f.amplitude},
          {"phase", f.phase}};
}

void run_mask_design(const MaskDesignOptions& opt) {
  const ScenarioConfig cfg = opt.config_path.empty()
                                 ? ScenarioConfig{}
                                 : ScenarioConfig::from_file(opt.config_path);
  const Medium m = cfg.make_medium();
  const SourceSpec src = cfg.make_source();

  ordered_json j;
  if (opt.forces == 1) {
    const PointForce f = optimal_one_force(src, cfg.geometry.x_d,
                                           cfg.geometry.eps_s, opt.sign, m);
    j["design"] = "one_force";
    j["forces"] = ordered_json::array({force_json(f)});
  } else {
    const TwoForceDesign d =
        optimal_two_force(src, cfg.geometry.x_d, cfg.geometry.eps_s, m);
    j["design"] = "two_force";
    j["forces"] = ordered_json::array({force_json(d.force1),
                                       force_json(d.force2)});
    j["gamma"] = d.gamma;
    j["beta_s"] = d.beta_s;
  }
  j["config"] = cfg.to_json();
  write_text(opt.out, j.dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// subcommand: mask evaluate

struct MaskEvaluateOptions {
  std::string config_path;
  std::string mode = "rays";
  double r_min = 0.05;
  int count = 200;
  std::vector<double> radii{1.0, 2.0, 4.0, 8.0, 15.0};
  int angles = 181;
  double half_extent = 0.0;  // 0: use eps_d
  int n = 61;
  std::string out = "evaluate.csv";
};

void run_mask_evaluate(const MaskEvaluateOptions& opt) {
  const ScenarioConfig cfg = opt.config_path.empty()
                                 ? ScenarioConfig{}
                                 : ScenarioConfig::from_file(opt.config_path);
  const Medium m = cfg.make_medium();

  std::string csv;
  if (opt.mode == "rays") {
    csv = rays_csv(cfg, m, opt.r_min, opt.count);
  } else if (opt.mode == "circles") {
    csv = circles_csv(cfg, m, opt.radii, opt.angles);
  } else {
    const DesignPair designs = make_designs(cfg, m);
    const double he =
        opt.half_extent > 0.0 ? opt.half_extent : cfg.geometry.eps_d;
    csv = grid_csv(cfg, m,
                   {{"one_force", designs.one}, {"two_force", designs.two}},
                   he, opt.n);
  }
  write_text(opt.out, csv);
}

// ---------------------------------------------------------------------------
// subcommand: optimize

struct OptimizeOptions {
  std::string config_path;
  std::vector<double> r_d;  // empty: use config list
  std::string out = "optimize.csv";
};

std::vector<ImprovementRow> run_curve(const ScenarioConfig& cfg,
                                      const std::vector<double>& r_d) {
  const Medium m = cfg.make_medium();
  const SourceSpec src = cfg.make_source();
  OptimizerSettings settings;
  settings.max_iters = cfg.optimize.max_iters;
  settings.f_tol = cfg.optimize.f_tol;
  return improvement_curve(src, m, cfg.geometry.x_d, cfg.geometry.eps_s, r_d,
                           cfg.sampling.n_radial, cfg.sampling.n_azimuthal,
                           settings);
}

void run_optimize(const OptimizeOptions& opt) {
  const ScenarioConfig cfg = opt.config_path.empty()
                                 ? ScenarioConfig{}
                                 : ScenarioConfig::from_file(opt.config_path);
  const std::vector<double>& r_d =
      opt.r_d.empty() ? cfg.optimize.r_d : opt.r_d;
  std::string csv = "r_d_m,E_opt0,E_optrd,ratio,dphi1_rad,dphi2_rad\n";
  for (const ImprovementRow& row : run_curve(cfg, r_d)) {
    csv += csv_row(
        {row.r_d, row.e_opt0, row.e_optrd, row.ratio, row.dphi1, row.dphi2});
  }
  write_text(opt.out, csv);
}

// ---------------------------------------------------------------------------
// subcommand: oracle

struct OracleOptions {
  std::string config_path;
  std::string kind = "sinc";
  double r = 100.0;
  double t = 1.0;
  double h_u = 0.0;  // 0: period / 2000
  int panels = 2000;
  std::string out;  // empty: stdout
};

void run_oracle(const OracleOptions& opt) {
  const ScenarioConfig cfg = opt.config_path.empty()
                                 ? ScenarioConfig{}
                                 : ScenarioConfig::from_file(opt.config_path);
  const Medium m = cfg.make_medium();
  const double d = cfg.source.d;
  const double a_s = cfg.source.a_s;
  const double h_u = opt.h_u > 0.0 ? opt.h_u : (2.0 * pi / m.omega) / 2000.0;
  const auto forcing = [&m](double t) { return std::sin(m.omega * t); };

  double exact = 0.0;
  const GSpline g = [&]() {
    if (opt.kind == "sinc") {
      exact = a_s * exact_field_sinc(opt.r, opt.t, d, m);
      return GSpline::build(
          [a_s, d](double s) {
            return s <= d ? a_s / (d * d * d) * sinc(s / d) : 0.0;
          },
          d, opt.panels);
    }
    const double support = gaussian_effective_support * d;
    if (!qss_contains(QssRegion{support}, opt.r, opt.t, m)) {
      throw UndefinedMetricError(
          "oracle: gaussian closed form only holds after the start-up wave "
          "has passed (need c*t - support > r)");
    }
    const double coeff = a_s * qss_coeff_gaussian(d, wavelength(m), m.c);
    exact = coeff / opt.r * std::sin(m.omega * (opt.t - opt.r / m.c));
    return GSpline::build(
        [a_s, d](double s) {
          const double u = s / d;
          return a_s / (d * d * d) * std::exp(-0.5 * u * u) /
                 std::sqrt(2.0 * pi);
        },
        support, opt.panels);
  }();
  const double quad = compute_u(opt.r, opt.t, m, g, forcing, h_u);

  std::string csv = "r_m,t_s,exact,quadrature,abs_diff\n";
  csv += csv_row({opt.r, opt.t, exact, quad, std::abs(exact - quad)});
  if (opt.out.empty()) {
    std::cout << csv;
  } else {
    write_text(opt.out, csv);
  }
}

// ---------------------------------------------------------------------------
// subcommand: reproduce

struct ReproduceOptions {
  std::string figure;
  std::string config_path;
  std::string out_dir = ".";
};

std::string reproduce_fig03(const ScenarioConfig& cfg, const Medium& m,
                            ordered_json& params) {
  const SourceSpec src = cfg.make_source();
  const Vec3 x_probe =
      cfg.geometry.x_d +
      cfg.geometry.eps_d * normalized(cfg.geometry.x_d - src.center);
  const Phasor us = source_phasor(src, x_probe, m);
  const Phasor b1 = point_force_phasor(
      optimal_one_force(src, cfg.geometry.x_d, cfg.geometry.eps_s, +1, m),
      x_probe, m);
  const Phasor b2 = point_force_phasor(
      optimal_one_force(src, cfg.geometry.x_d, cfg.geometry.eps_s, -1, m),
      x_probe, m);
  const TwoForceDesign d =
      optimal_two_force(src, cfg.geometry.x_d, cfg.geometry.eps_s, m);
  const Phasor w = point_force_phasor(d.force1, x_probe, m) +
                   point_force_phasor(d.force2, x_probe, m);

  const int n = 601;
  const double t_end = 3.0 / cfg.medium.frequency;
  params["probe"] = {x_probe.x, x_probe.y, x_probe.z};
  params["t_end_s"] = t_end;
  params["samples"] = n;

  std::string csv = "t_s,u_source,u_f1,u_f2,u_weighted\n";
  for (int i = 0; i < n; ++i) {
    const double t = t_end * i / (n - 1);
    csv += csv_row({t, time_signal(us, m.omega, t),
                    time_signal(us + b1, m.omega, t),
                    time_signal(us + b2, m.omega, t),
                    time_signal(us + w, m.omega, t)});
  }
  return csv;
}

std::string reproduce_fig09(const ScenarioConfig& cfg, const Medium& m,
                            ordered_json& params) {
  const SourceSpec src = cfg.make_source();
  const double r_d =
      *std::max_element(cfg.optimize.r_d.begin(), cfg.optimize.r_d.end());
  OptimizerSettings settings;
  settings.max_iters = cfg.optimize.max_iters;
  settings.f_tol = cfg.optimize.f_tol;
  const OptimizationProblem problem = make_two_force_problem(
      src, m, cfg.geometry.x_d, cfg.geometry.eps_s, r_d, cfg.sampling.n_radial,
      cfg.sampling.n_azimuthal, settings);
  const PhaseOptimum opt = optimize_phases(problem);

  MaskingConfig opt0 = two_force_config(src, cfg.geometry.x_d,
                                        cfg.geometry.eps_s, r_d, m);
  MaskingConfig optrd = opt0;
  optrd.forces[0].phase = opt.phi1;
  optrd.forces[1].phase = opt.phi2;

  params["r_d_m"] = r_d;
  params["grid_n"] = 61;
  params["optimized_phases_rad"] = {opt.phi1, opt.phi2};
  return grid_csv(cfg, m, {{"opt0", opt0}, {"optrd", optrd}}, r_d, 61);
}

void run_reproduce(const ReproduceOptions& opt) {
  const ScenarioConfig cfg = opt.config_path.empty()
                                 ? ScenarioConfig{}
                                 : ScenarioConfig::from_file(opt.config_path);
  const Medium m = cfg.make_medium();
  const std::string base = opt.out_dir + "/" + opt.figure;
  ordered_json params;
  std::string csv;

  if (opt.figure == "fig03") {
    csv = reproduce_fig03(cfg, m, params);
  } else if (opt.figure == "fig04") {
    params["r_min_m"] = 0.05;
    params["samples_per_ray"] = 200;
    csv = rays_csv(cfg, m, 0.05, 200);
  } else if (opt.figure == "fig05") {
    const std::vector<double> radii{1.0, 2.0, 4.0, 8.0, 15.0};
    params["radii_m"] = radii;
    params["angles"] = 181;
    csv = circles_csv(cfg, m, radii, 181);
  } else if (opt.figure == "fig06") {
    const DesignPair designs = make_designs(cfg, m);
    params["half_extent_m"] = cfg.geometry.eps_d;
    params["grid_n"] = 61;
    csv = grid_csv(cfg, m,
                   {{"one_force", designs.one}, {"two_force", designs.two}},
                   cfg.geometry.eps_d, 61);
  } else if (opt.figure == "fig07" || opt.figure == "fig08") {
    params["r_d_m"] = cfg.optimize.r_d;
    const std::vector<ImprovementRow> rows = run_curve(cfg, cfg.optimize.r_d);
    if (opt.figure == "fig07") {
      csv = "r_d_m,E_opt0,E_optrd,ratio\n";
      for (const ImprovementRow& r : rows) {
        csv += csv_row({r.r_d, r.e_opt0, r.e_optrd, r.ratio});
      }
    } else {
      csv = "r_d_m,dphi1_rad,dphi2_rad\n";
      for (const ImprovementRow& r : rows) {
        csv += csv_row({r.r_d, r.dphi1, r.dphi2});
      }
    }
  } else {
    csv = reproduce_fig09(cfg, m, params);
  }

  write_text(base + ".csv", csv);
  write_sidecar(base + ".json", opt.figure, cfg, params,
                {opt.figure + ".csv"});
}

// ---------------------------------------------------------------------------
// subcommand: fit

struct FitOptions {
  std::string profile_path;
  std::string shape = "sinc";
  double width = 0.0;
  double spacing = 0.0;
  double half_extent = 0.0;
  double ridge = -1.0;
  std::string out = "fit.json";
};

void read_profile(const std::string& path, std::vector<Vec3>& points,
                  std::vector<double>& values) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open profile file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double x, y, z, v;
    if (row >> x >> y >> z >> v) {
      points.push_back({x, y, z});
      values.push_back(v);
    }
    // non-numeric rows (the header) are skipped
  }
  if (points.empty()) {
    throw ConfigError("profile file has no data rows: " + path);
  }
}

void run_fit(const FitOptions& opt) {
  std::vector<Vec3> points;
  std::vector<double> values;
  read_profile(opt.profile_path, points, values);

  KernelBasis basis;
  basis.shape = opt.shape == "gaussian" ? KernelShape::gaussian
                                        : KernelShape::truncated_sinc;
  basis.width = opt.width;
  basis.centers = lattice_centers(opt.spacing, opt.half_extent);
  const KernelExpansion fit =
      fit_coefficients(basis, points, values, opt.ridge);

  ordered_json j;
  j["shape"] = opt.shape;
  j["width"] = opt.width;
  j["spacing"] = opt.spacing;
  j["half_extent"] = opt.half_extent;
  j["kernel_count"] = basis.centers.size();
  j["sample_count"] = points.size();
  j["relative_residual"] = fit.fit.relative_residual;
  j["ridge"] = fit.fit.ridge;
  j["ill_conditioned"] = fit.fit.ill_conditioned;
  ordered_json centers = ordered_json::array();
  for (const Vec3& c : basis.centers) {
    centers.push_back({c.x, c.y, c.z});
  }
  j["centers"] = centers;
  j["coefficients"] = fit.coefficients;
  write_text(opt.out, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acoustic masking designs: fields, force layouts, residual "
               "maps, phase optimization, oracle checks"};
  app.require_subcommand(1);

  FieldOptions field_opt;
  CLI::App* field = app.add_subcommand(
      "field", "Evaluate field amplitude/phasor along a ray or plane grid");
  field->add_option("--config", field_opt.config_path, "Scenario config JSON");
  field->add_option("--design", field_opt.design, "none, one or two")
      ->check(CLI::IsMember({"none", "one", "two"}));
  field->add_option("--from", field_opt.from, "Ray start x,y,z")
      ->delimiter(',')
      ->expected(3);
  field->add_option("--to", field_opt.to, "Ray end x,y,z")
      ->delimiter(',')
      ->expected(3);
  field->add_option("--count", field_opt.count, "Samples along the ray")
      ->check(CLI::PositiveNumber);
  field->add_flag("--grid", field_opt.grid, "Sample a plane grid instead");
  field->add_option("--center", field_opt.center, "Grid center x,y,z")
      ->delimiter(',')
      ->expected(3);
  field->add_option("--half-extent", field_opt.half_extent,
                    "Grid half extent (m)")
      ->check(CLI::PositiveNumber);
  field->add_option("--n", field_opt.n, "Grid points per side")
      ->check(CLI::Range(2, 100000));
  field->add_option("--out", field_opt.out, "Output CSV path");

  CLI::App* mask = app.add_subcommand("mask", "Masking designs");
  mask->require_subcommand(1);

  MaskDesignOptions design_opt;
  CLI::App* mask_design =
      mask->add_subcommand("design", "Emit the optimal force layout as JSON");
  mask_design->add_option("--config", design_opt.config_path,
                          "Scenario config JSON");
  mask_design->add_option("--forces", design_opt.forces, "1 or 2")
      ->check(CLI::IsMember({1, 2}));
  mask_design->add_option("--sign", design_opt.sign,
                          "1: towards sensor, -1: away (one-force only)")
      ->check(CLI::IsMember({1, -1}));
  mask_design->add_option("--out", design_opt.out, "Output JSON path");

  MaskEvaluateOptions eval_opt;
  CLI::App* mask_eval = mask->add_subcommand(
      "evaluate", "Residual amplitude on rays, semicircles or a grid");
  mask_eval->add_option("--config", eval_opt.config_path,
                        "Scenario config JSON");
  mask_eval->add_option("--mode", eval_opt.mode, "rays, circles or grid")
      ->check(CLI::IsMember({"rays", "circles", "grid"}));
  mask_eval->add_option("--r-min", eval_opt.r_min, "Smallest ray radius (m)")
      ->check(CLI::PositiveNumber);
  mask_eval->add_option("--count", eval_opt.count, "Samples per ray")
      ->check(CLI::Range(2, 100000));
  mask_eval->add_option("--radii", eval_opt.radii, "Semicircle radii (m)")
      ->delimiter(',');
  mask_eval->add_option("--angles", eval_opt.angles, "Angles per semicircle")
      ->check(CLI::Range(2, 100000));
  mask_eval->add_option("--half-extent", eval_opt.half_extent,
                        "Grid half extent (m); default eps_d")
      ->check(CLI::PositiveNumber);
  mask_eval->add_option("--n", eval_opt.n, "Grid points per side")
      ->check(CLI::Range(2, 100000));
  mask_eval->add_option("--out", eval_opt.out, "Output CSV path");

  OptimizeOptions optimize_opt;
  CLI::App* optimize = app.add_subcommand(
      "optimize", "Phase optimization over finite target regions");
  optimize->add_option("--config", optimize_opt.config_path,
                       "Scenario config JSON");
  optimize->add_option("--r-d", optimize_opt.r_d,
                       "Target radii (m); default from config")
      ->delimiter(',');
  optimize->add_option("--out", optimize_opt.out, "Output CSV path");

  OracleOptions oracle_opt;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Quadrature solution vs closed form at one (r, t)");
  oracle->add_option("--config", oracle_opt.config_path,
                     "Scenario config JSON");
  oracle->add_option("--case", oracle_opt.kind, "sinc or gaussian")
      ->check(CLI::IsMember({"sinc", "gaussian"}));
  oracle->add_option("--r", oracle_opt.r, "Radius (m)")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--t", oracle_opt.t, "Time (s)")
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--h-u", oracle_opt.h_u, "Quadrature step (s)")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--panels", oracle_opt.panels,
                     "Profile tabulation panels")
      ->check(CLI::Range(8, 1000000));
  oracle->add_option("--out", oracle_opt.out, "Output CSV path (default stdout)");

  ReproduceOptions repro_opt;
  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "Write one figure's data CSV plus a JSON sidecar");
  reproduce
      ->add_option("figure", repro_opt.figure,
                   "fig03, fig04, fig05, fig06, fig07, fig08 or fig09")
      ->required()
      ->check(CLI::IsMember({"fig03", "fig04", "fig05", "fig06", "fig07",
                             "fig08", "fig09"}));
  reproduce->add_option("--config", repro_opt.config_path,
                        "Scenario config JSON");
  reproduce->add_option("--out-dir", repro_opt.out_dir, "Output directory");

  FitOptions fit_opt;
  CLI::App* fit = app.add_subcommand(
      "fit", "Fit a kernel expansion to a sampled profile CSV");
  fit->add_option("--profile", fit_opt.profile_path,
                  "CSV with rows x,y,z,value")
      ->required();
  fit->add_option("--shape", fit_opt.shape, "gaussian or sinc")
      ->check(CLI::IsMember({"gaussian", "sinc"}));
  fit->add_option("--width", fit_opt.width, "Kernel width (m)")
      ->required()
      ->check(CLI::PositiveNumber);
  fit->add_option("--spacing", fit_opt.spacing, "Lattice spacing (m)")
      ->required()
      ->check(CLI::PositiveNumber);
  fit->add_option("--half-extent", fit_opt.half_extent,
                  "Lattice half extent (m)")
      ->required()
      ->check(CLI::PositiveNumber);
  fit->add_option("--ridge", fit_opt.ridge,
                  "Ridge parameter; negative selects the default");
  fit->add_option("--out", fit_opt.out, "Output JSON path");

  try {
    app.parse(argc, argv);
    if (field->parsed()) run_field(field_opt);
    if (mask_design->parsed()) run_mask_design(design_opt);
    if (mask_eval->parsed()) run_mask_evaluate(eval_opt);
    if (optimize->parsed()) run_optimize(optimize_opt);
    if (oracle->parsed()) run_oracle(oracle_opt);
    if (reproduce->parsed()) run_reproduce(repro_opt);
    if (fit->parsed()) run_fit(fit_opt);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const GeometryError& e) {
    std::cerr << "usage error (geometry): " << e.what() << "\n";
    return 1;
  } catch (const UnsupportedSourceError& e) {
    std::cerr << "usage error (source kind): " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const SingularEvaluationError& e) {
    std::cerr << "numeric error (singular evaluation): " << e.what() << "\n";
    return 2;
  } catch (const UndefinedMetricError& e) {
    std::cerr << "numeric error (undefined metric): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
