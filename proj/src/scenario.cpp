#include "wavemask/scenario.hpp"

#include <cstdio>
#include <fstream>

namespace wavemask {

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) {
    throw ConfigError(where + ": expected a JSON object");
  }
}

// Fails fast on typos: every key present must be consumed by the caller.
void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError(where + ": unknown key \"" + item.key() + "\"");
    }
  }
}

double get_number(const json& j, const std::string& where, const char* key,
                  double fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number()) {
    throw ConfigError(where + "." + key + ": expected a number");
  }
  return v.get<double>();
}

int get_int(const json& j, const std::string& where, const char* key,
            int fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer()) {
    throw ConfigError(where + "." + key + ": expected an integer");
  }
  return v.get<int>();
}

Vec3 get_vec3(const json& j, const std::string& where, const char* key,
              const Vec3& fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_array() || v.size() != 3 || !v[0].is_number() ||
      !v[1].is_number() || !v[2].is_number()) {
    throw ConfigError(where + "." + key + ": expected [x, y, z]");
  }
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

std::vector<double> get_number_list(const json& j, const std::string& where,
                                    const char* key,
                                    const std::vector<double>& fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_array() || v.empty()) {
    throw ConfigError(where + "." + key + ": expected a non-empty array");
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_number()) {
      throw ConfigError(where + "." + key + ": expected numbers");
    }
    out.push_back(e.get<double>());
  }
  return out;
}

}  // namespace

Medium ScenarioConfig::make_medium() const {
  return Medium(medium.c, 2.0 * pi * medium.frequency);
}

SourceSpec ScenarioConfig::make_source() const {
  return gaussian_source({0.0, 0.0, 0.0}, source.a_s, source.d);
}

ScenarioConfig ScenarioConfig::from_json(const json& j) {
  require_object(j, "config");
  check_keys(j, "config",
             {"medium", "source", "geometry", "sampling", "optimize"});
  ScenarioConfig cfg;

  if (j.contains("medium")) {
    const json& m = j.at("medium");
    require_object(m, "medium");
    check_keys(m, "medium", {"c", "frequency"});
    cfg.medium.c = get_number(m, "medium", "c", cfg.medium.c);
    cfg.medium.frequency =
        get_number(m, "medium", "frequency", cfg.medium.frequency);
  }
  if (j.contains("source")) {
    const json& s = j.at("source");
    require_object(s, "source");
    check_keys(s, "source", {"a_s", "d"});
    cfg.source.a_s = get_number(s, "source", "a_s", cfg.source.a_s);
    cfg.source.d = get_number(s, "source", "d", cfg.source.d);
  }
  if (j.contains("geometry")) {
    const json& g = j.at("geometry");
    require_object(g, "geometry");
    check_keys(g, "geometry", {"x_d", "eps_s", "eps_d"});
    cfg.geometry.x_d = get_vec3(g, "geometry", "x_d", cfg.geometry.x_d);
    cfg.geometry.eps_s = get_number(g, "geometry", "eps_s", cfg.geometry.eps_s);
    cfg.geometry.eps_d = get_number(g, "geometry", "eps_d", cfg.geometry.eps_d);
  }
  if (j.contains("sampling")) {
    const json& s = j.at("sampling");
    require_object(s, "sampling");
    check_keys(s, "sampling", {"n_radial", "n_azimuthal"});
    cfg.sampling.n_radial =
        get_int(s, "sampling", "n_radial", cfg.sampling.n_radial);
    cfg.sampling.n_azimuthal =
        get_int(s, "sampling", "n_azimuthal", cfg.sampling.n_azimuthal);
  }
  if (j.contains("optimize")) {
    const json& o = j.at("optimize");
    require_object(o, "optimize");
    check_keys(o, "optimize", {"r_d", "max_iters", "f_tol"});
    cfg.optimize.r_d = get_number_list(o, "optimize", "r_d", cfg.optimize.r_d);
    cfg.optimize.max_iters =
        get_int(o, "optimize", "max_iters", cfg.optimize.max_iters);
    cfg.optimize.f_tol = get_number(o, "optimize", "f_tol", cfg.optimize.f_tol);
  }

  if (!(cfg.medium.c > 0.0) || !(cfg.medium.frequency > 0.0)) {
    throw ConfigError("medium: c and frequency must be positive");
  }
  if (!(cfg.source.a_s > 0.0) || !(cfg.source.d > 0.0)) {
    throw ConfigError("source: a_s and d must be positive");
  }
  if (!(cfg.geometry.eps_s > 0.0) || !(cfg.geometry.eps_d >= 0.0)) {
    throw ConfigError("geometry: eps_s must be positive, eps_d non-negative");
  }
  if (norm(cfg.geometry.x_d) <= cfg.geometry.eps_s) {
    throw ConfigError("geometry: x_d must lie outside the exclusion ball");
  }
  if (cfg.sampling.n_radial < 2 || cfg.sampling.n_azimuthal < 2) {
    throw ConfigError("sampling: grid sizes must be at least 2");
  }
  if (cfg.optimize.max_iters < 1 || !(cfg.optimize.f_tol > 0.0)) {
    throw ConfigError("optimize: bad iteration budget or tolerance");
  }
  for (double r : cfg.optimize.r_d) {
    if (!(r > 0.0)) throw ConfigError("optimize.r_d: radii must be positive");
  }
  return cfg;
}

ScenarioConfig ScenarioConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }
  return from_json(j);
}

nlohmann::ordered_json ScenarioConfig::to_json() const {
  nlohmann::ordered_json j;
  j["medium"] = {{"c", medium.c}, {"frequency", medium.frequency}};
  j["source"] = {{"a_s", source.a_s}, {"d", source.d}};
  j["geometry"] = {{"x_d", {geometry.x_d.x, geometry.x_d.y, geometry.x_d.z}},
                   {"eps_s", geometry.eps_s},
                   {"eps_d", geometry.eps_d}};
  j["sampling"] = {{"n_radial", sampling.n_radial},
                   {"n_azimuthal", sampling.n_azimuthal}};
  j["optimize"] = {{"r_d", optimize.r_d},
                   {"max_iters", optimize.max_iters},
                   {"f_tol", optimize.f_tol}};
  return j;
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::string csv_row(std::initializer_list<double> values) {
  std::string out;
  bool first = true;
  for (double v : values) {
    if (!first) out += ',';
    out += csv_number(v);
    first = false;
  }
  out += '\n';
  return out;
}

}  // namespace wavemask
