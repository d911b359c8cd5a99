// Integration tests that drive the installed command-line binary.  The path
// to the binary arrives through the WAVEMASK_CLI environment variable set by
// the test harness.

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wavemask/analytic.hpp"
#include "wavemask/kernel_superposition.hpp"
#include "wavemask/scenario.hpp"

using namespace wavemask;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string cli() {
  const char* path = std::getenv("WAVEMASK_CLI");
  if (!path) throw std::runtime_error("WAVEMASK_CLI not set");
  return path;
}

int run(const std::string& args) {
  const std::string cmd = cli() + " " + args + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  if (!WIFEXITED(rc)) return -1;
  return WEXITSTATUS(rc);
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::string tmpl = (fs::temp_directory_path() / "wavemask_cli_XXXXXX").string();
    path = mkdtemp(tmpl.data());
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  return out;
}

double cell_value(const std::string& cell) {
  return std::strtod(cell.c_str(), nullptr);
}

}  // namespace

TEST_CASE("cli: help succeeds, bad invocations fail cleanly") {
  CHECK(run("--help >/dev/null") == 0);
  CHECK(run("") == 1);
  CHECK(run("frobnicate") == 1);
  CHECK(run("mask design --forces 3") == 1);
  CHECK(run("field") == 1);  // neither a ray nor a grid requested
  CHECK(run("field --grid") == 1);  // --center missing
}

TEST_CASE("cli: mask design emits the two-force layout") {
  TempDir dir;
  const std::string out = dir.file("design.json");
  REQUIRE(run("mask design --forces 2 --out " + out) == 0);
  const json j = json::parse(read_file(out));

  CHECK(j["design"] == "two_force");
  REQUIRE(j["forces"].size() == 2);
  const auto& f1 = j["forces"][0];
  const auto& f2 = j["forces"][1];
  CHECK(f1["location"][0].get<double>() == doctest::Approx(15.0));
  CHECK(f1["location"][1].get<double>() == 0.0);
  CHECK(f2["location"][0].get<double>() == doctest::Approx(-15.0));
  CHECK(f1["amplitude"].get<double>() == doctest::Approx(0.49 * 5.64034).epsilon(1e-4));
  CHECK(f2["amplitude"].get<double>() == doctest::Approx(0.51 * 5.87055).epsilon(1e-4));
  CHECK(f1["phase"].get<double>() == doctest::Approx(pi));
  CHECK(f2["phase"].get<double>() == doctest::Approx(pi));
  CHECK(j["gamma"].get<double>() == doctest::Approx(0.49));
  CHECK(j["beta_s"].get<double>() == doctest::Approx(0.02));
  CHECK(j["config"]["medium"]["c"].get<double>() == 1500.0);
}

TEST_CASE("cli: mask design one force honours sign and config overrides") {
  TempDir dir;
  const std::string out = dir.file("one.json");
  REQUIRE(run("mask design --forces 1 --sign -1 --out " + out) == 0);
  const json j = json::parse(read_file(out));
  CHECK(j["design"] == "one_force");
  REQUIRE(j["forces"].size() == 1);
  CHECK(j["forces"][0]["location"][0].get<double>() == doctest::Approx(-15.0));
  CHECK(j["forces"][0]["amplitude"].get<double>() ==
        doctest::Approx(5.87055).epsilon(1e-4));
  CHECK(j["forces"][0]["phase"].get<double>() == doctest::Approx(pi));

  // halving the frequency doubles the wavelength; the 15 m stand-off then
  // sits half a wavelength in, which rotates the optimal phase to zero
  const std::string cfg_path = dir.file("cfg.json");
  std::ofstream(cfg_path) << R"({"medium": {"frequency": 50.0}})";
  const std::string out2 = dir.file("one50.json");
  REQUIRE(run("mask design --forces 1 --config " + cfg_path + " --out " + out2) == 0);
  const json j2 = json::parse(read_file(out2));
  CHECK(std::abs(j2["forces"][0]["phase"].get<double>()) < 1e-12);
  CHECK(j2["config"]["medium"]["frequency"].get<double>() == 50.0);
}

TEST_CASE("cli: config errors exit with the usage code") {
  TempDir dir;
  const std::string bad = dir.file("bad.json");
  std::ofstream(bad) << R"({"medium": {"speed": 330.0}})";
  CHECK(run("mask design --config " + bad + " --out " + dir.file("x.json")) == 1);
  CHECK(run("optimize --config " + dir.file("missing.json") + " --out " +
            dir.file("y.csv")) == 1);
}

TEST_CASE("cli: field along a ray matches the closed-form source") {
  TempDir dir;
  const std::string out = dir.file("ray.csv");
  REQUIRE(run("field --design none --from 735,0,0 --to 765,0,0 --count 31 --out " +
              out) == 0);
  const auto lines = read_lines(out);
  REQUIRE(lines.size() == 32);
  CHECK(lines[0] == "s_m,x_m,y_m,z_m,amplitude,phase_rad,re,im");

  const auto last = split(lines.back());
  REQUIRE(last.size() == 8);
  CHECK(cell_value(last[0]) == doctest::Approx(30.0));
  CHECK(cell_value(last[1]) == doctest::Approx(765.0));
  const Medium m(1500.0, 200.0 * pi);
  const double want = qss_coeff_gaussian(1.0, wavelength(m), m.c) / 765.0;
  CHECK(cell_value(last[4]) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("cli: field with the weighted pair vanishes at the sensor") {
  TempDir dir;
  const std::string out = dir.file("two.csv");
  REQUIRE(run("field --design two --from 750,-15,0 --to 750,15,0 --count 3 --out " +
              out) == 0);
  const auto lines = read_lines(out);
  REQUIRE(lines.size() == 4);
  const auto mid = split(lines[2]);
  CHECK(cell_value(mid[2]) == doctest::Approx(0.0));  // y at the sensor
  CHECK(cell_value(mid[4]) <= 1e-18);  // residual amplitude
}

TEST_CASE("cli: mask evaluate rays") {
  TempDir dir;
  const std::string out = dir.file("rays.csv");
  REQUIRE(run("mask evaluate --mode rays --count 50 --out " + out) == 0);
  const auto lines = read_lines(out);
  REQUIRE(lines.size() == 1 + 3 * 50);
  CHECK(lines[0] == "phi_label,r_m,A_NR_one_force,A_NR_two_force");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = split(lines[i]);
    REQUIRE(row.size() == 4);
    // r is recomputed from 3d coordinates, so allow a rounding ulp below r_min
    const double r = cell_value(row[1]);
    CHECK(r >= 0.05 - 1e-12);
    CHECK(r <= 15.0 + 1e-9);
    CHECK(cell_value(row[2]) < 5e-3);   // one-force residual
    CHECK(cell_value(row[3]) < 1e-5);   // weighted pair residual
  }
  CHECK(split(lines[1])[0] == "0");
  CHECK(split(lines[1 + 50])[0] == "pi/2");
  CHECK(split(lines[1 + 100])[0] == "pi");
}

TEST_CASE("cli: mask evaluate circles and grid") {
  TempDir dir;
  const std::string circles = dir.file("circles.csv");
  REQUIRE(run("mask evaluate --mode circles --radii 1,15 --angles 5 --out " +
              circles) == 0);
  const auto clines = read_lines(circles);
  REQUIRE(clines.size() == 1 + 2 * 5);
  CHECK(clines[0] == "r_m,phi_rad,A_NR_one,A_NR_two");
  CHECK(cell_value(split(clines[1])[1]) == 0.0);
  CHECK(cell_value(split(clines[5])[1]) == doctest::Approx(pi));

  const std::string grid = dir.file("grid.csv");
  REQUIRE(run("mask evaluate --mode grid --n 21 --out " + grid) == 0);
  const auto glines = read_lines(grid);
  REQUIRE(glines.size() == 1 + 2 * 21 * 21);
  CHECK(glines[0] == "design,x_m,y_m,log10_A_NR");
  for (std::size_t i = 1; i < glines.size(); ++i) {
    const auto row = split(glines[i]);
    REQUIRE(row.size() == 4);
    CHECK((row[0] == "one_force" || row[0] == "two_force"));
    const double lg = cell_value(row[3]);
    CHECK(lg <= 0.0);
    CHECK(lg >= -300.0);
  }
}

TEST_CASE("cli: optimize at a small target radius reports no headroom") {
  TempDir dir;
  const std::string out = dir.file("opt.csv");
  REQUIRE(run("optimize --r-d 0.5 --out " + out) == 0);
  const auto lines = read_lines(out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "r_d_m,E_opt0,E_optrd,ratio,dphi1_rad,dphi2_rad");
  const auto row = split(lines[1]);
  REQUIRE(row.size() == 6);
  CHECK(cell_value(row[0]) == 0.5);
  CHECK(cell_value(row[1]) == doctest::Approx(1.780863e-10).epsilon(1e-3));
  CHECK(cell_value(row[2]) > 0.0);
  CHECK(cell_value(row[3]) == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("cli: oracle agrees with the closed forms") {
  TempDir dir;
  const std::string out = dir.file("sinc.csv");
  REQUIRE(run("oracle --case sinc --r 2.0 --t 10.0 --out " + out) == 0);
  auto row = split(read_lines(out)[1]);
  REQUIRE(row.size() == 5);
  CHECK(cell_value(row[4]) <= 1e-6 * std::abs(cell_value(row[2])) + 1e-18);

  // stdout is the default sink
  const std::string piped = dir.file("gauss.csv");
  REQUIRE(run("oracle --case gaussian --r 200.0 --t 1.0 > " + piped) == 0);
  const auto lines = read_lines(piped);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "r_m,t_s,exact,quadrature,abs_diff");
  row = split(lines[1]);
  CHECK(std::abs(cell_value(row[2])) > 0.0);
  CHECK(cell_value(row[4]) <= 1e-6 * std::abs(cell_value(row[2])) + 1e-18);

  // before the start-up wave clears the sensor the comparison is undefined
  CHECK(run("oracle --case gaussian --r 60.0 --t 0.01") == 2);
}

TEST_CASE("cli: reproduce fig04 is byte-deterministic with a full sidecar") {
  TempDir a;
  TempDir b;
  REQUIRE(run("reproduce fig04 --out-dir " + a.path.string()) == 0);
  REQUIRE(run("reproduce fig04 --out-dir " + b.path.string()) == 0);
  const std::string csv_a = read_file(a.file("fig04.csv"));
  CHECK(csv_a == read_file(b.file("fig04.csv")));
  CHECK(read_lines(a.file("fig04.csv")).size() == 1 + 3 * 200);

  const json sidecar = json::parse(read_file(a.file("fig04.json")));
  CHECK(sidecar["figure"] == "fig04");
  CHECK(sidecar["outputs"][0] == "fig04.csv");
  CHECK(sidecar["parameters"]["samples_per_ray"] == 200);
  CHECK(sidecar["config"]["geometry"]["eps_d"].get<double>() == 15.0);
}

TEST_CASE("cli: reproduce fig03 separates the designs by orders of magnitude") {
  TempDir dir;
  REQUIRE(run("reproduce fig03 --out-dir " + dir.path.string()) == 0);
  const auto lines = read_lines(dir.file("fig03.csv"));
  REQUIRE(lines.size() == 602);
  CHECK(lines[0] == "t_s,u_source,u_f1,u_f2,u_weighted");
  double max_src = 0.0, max_f1 = 0.0, max_w = 0.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = split(lines[i]);
    REQUIRE(row.size() == 5);
    max_src = std::max(max_src, std::abs(cell_value(row[1])));
    max_f1 = std::max(max_f1, std::abs(cell_value(row[2])));
    max_w = std::max(max_w, std::abs(cell_value(row[4])));
  }
  CHECK(max_f1 < 1e-3 * max_src);
  CHECK(max_w < 2e-6 * max_src);
  CHECK(max_w < max_f1);
}

TEST_CASE("cli: fit recovers a kernel profile written to CSV") {
  TempDir dir;

  KernelBasis basis;
  basis.shape = KernelShape::truncated_sinc;
  basis.width = 1.0;
  basis.centers = lattice_centers(1.0, 1.0);
  const std::size_t k = 13;  // origin-centered kernel
  REQUIRE(norm(basis.centers[k]) == 0.0);

  const std::string profile = dir.file("profile.csv");
  {
    std::ofstream out(profile);
    out << "x,y,z,value\n";
    for (const Vec3& p : lattice_centers(0.5, 2.0)) {
      out << csv_row({p.x, p.y, p.z, basis_value(basis, k, p)});
    }
  }

  const std::string out = dir.file("fit.json");
  REQUIRE(run("fit --profile " + profile +
              " --shape sinc --width 1.0 --spacing 1.0 --half-extent 1.0 "
              "--ridge 0.0 --out " + out) == 0);
  const json j = json::parse(read_file(out));
  CHECK(j["kernel_count"] == 27);
  CHECK(j["sample_count"] == 729);
  CHECK(j["relative_residual"].get<double>() < 1e-9);
  CHECK_FALSE(j["ill_conditioned"].get<bool>());
  REQUIRE(j["coefficients"].size() == 27);
  for (std::size_t i = 0; i < 27; ++i) {
    const double want = i == k ? 1.0 : 0.0;
    CHECK(std::abs(j["coefficients"][i].get<double>() - want) < 1e-9);
  }
}
