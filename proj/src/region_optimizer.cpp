#include "wavemask/region_optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>

#include "wavemask/analytic.hpp"

namespace wavemask {

namespace {

// Per-point cache: the total field with force phases (p1, p2) is
//   U(x) = us(x) + e^{i p1} * b1(x) + e^{i p2} * b2(x),
// so a phase sweep costs two complex rotations per point.
struct ResidualEvaluator {
  std::vector<Phasor> us, b1, b2;
  std::vector<double> inv_src_amp;

  ResidualEvaluator(const OptimizationProblem& p) {
    const auto pts = p.region.sample_points();
    us.reserve(pts.size());
    b1.reserve(pts.size());
    b2.reserve(pts.size());
    inv_src_amp.reserve(pts.size());
    PointForce f1 = p.design.force1;
    PointForce f2 = p.design.force2;
    f1.phase = 0.0;
    f2.phase = 0.0;
    for (const Vec3& x : pts) {
      const Phasor s = source_phasor(p.source, x, p.medium);
      us.push_back(s);
      b1.push_back(point_force_phasor(f1, x, p.medium));
      b2.push_back(point_force_phasor(f2, x, p.medium));
      const double a = amplitude(s);
      if (a == 0.0) {
        throw UndefinedMetricError(
            "e_max: source amplitude vanishes on the sample grid");
      }
      inv_src_amp.push_back(1.0 / a);
    }
  }

  double operator()(double p1, double p2) const {
    const Phasor r1 = std::polar(1.0, p1);
    const Phasor r2 = std::polar(1.0, p2);
    double worst = 0.0;
    for (std::size_t i = 0; i < us.size(); ++i) {
      const double v = std::abs(us[i] + r1 * b1[i] + r2 * b2[i]) *
                       inv_src_amp[i];
      if (v > worst) worst = v;
    }
    return worst;
  }
};

struct NmResult {
  std::array<double, 2> x{};
  double f = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Nelder-Mead in two dimensions with the standard coefficients
// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
NmResult nelder_mead(const std::function<double(double, double)>& f,
                     std::array<double, 2> x0, double step, int max_iters,
                     double f_tol, double x_tol) {
  using Pt = std::array<double, 2>;
  std::array<Pt, 3> v{Pt{x0[0], x0[1]}, Pt{x0[0] + step, x0[1]},
                      Pt{x0[0], x0[1] + step}};
  std::array<double, 3> fv{};
  for (int i = 0; i < 3; ++i) fv[i] = f(v[i][0], v[i][1]);

  auto order = [&] {
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return fv[a] < fv[b]; });
    std::array<Pt, 3> nv{v[idx[0]], v[idx[1]], v[idx[2]]};
    std::array<double, 3> nf{fv[idx[0]], fv[idx[1]], fv[idx[2]]};
    v = nv;
    fv = nf;
  };

  NmResult out;
  int it = 0;
  for (; it < max_iters; ++it) {
    order();
    const double spread = fv[2] - fv[0];
    const double diam =
        std::max(std::hypot(v[1][0] - v[0][0], v[1][1] - v[0][1]),
                 std::hypot(v[2][0] - v[0][0], v[2][1] - v[0][1]));
    if (spread < f_tol || diam < x_tol) {
      out.converged = true;
      break;
    }
    const Pt centroid{0.5 * (v[0][0] + v[1][0]), 0.5 * (v[0][1] + v[1][1])};
    auto blend = [&](double t) {
      return Pt{centroid[0] + t * (centroid[0] - v[2][0]),
                centroid[1] + t * (centroid[1] - v[2][1])};
    };
    const Pt xr = blend(1.0);
    const double fr = f(xr[0], xr[1]);
    if (fr < fv[0]) {
      const Pt xe = blend(2.0);
      const double fe = f(xe[0], xe[1]);
      if (fe < fr) {
        v[2] = xe;
        fv[2] = fe;
      } else {
        v[2] = xr;
        fv[2] = fr;
      }
    } else if (fr < fv[1]) {
      v[2] = xr;
      fv[2] = fr;
    } else {
      const bool outside = fr < fv[2];
      const Pt xc = blend(outside ? 0.5 : -0.5);
      const double fc = f(xc[0], xc[1]);
      if (fc < (outside ? fr : fv[2])) {
        v[2] = xc;
        fv[2] = fc;
      } else {
        // Shrink towards the best vertex.
        for (int i = 1; i < 3; ++i) {
          v[i] = Pt{v[0][0] + 0.5 * (v[i][0] - v[0][0]),
                    v[0][1] + 0.5 * (v[i][1] - v[0][1])};
          fv[i] = f(v[i][0], v[i][1]);
        }
      }
    }
  }
  order();
  out.x = v[0];
  out.f = fv[0];
  out.iterations = it;
  return out;
}

}  // namespace

OptimizationProblem make_two_force_problem(const SourceSpec& source,
                                           const Medium& m, const Vec3& x_d,
                                           double eps_s, double r_d,
                                           int n_radial, int n_azimuthal,
                                           OptimizerSettings settings) {
  TwoForceDesign design = optimal_two_force(source, x_d, eps_s, m);
  TargetRegion region(x_d, r_d, n_radial, n_azimuthal, source.center);
  return OptimizationProblem{source, m,      x_d,     eps_s,
                             region, design, settings};
}

double e_max(const OptimizationProblem& problem, double phi1, double phi2) {
  return ResidualEvaluator(problem)(phi1, phi2);
}

PhaseOptimum optimize_phases(const OptimizationProblem& problem) {
  const ResidualEvaluator eval(problem);
  const double p10 = problem.design.force1.phase;
  const double p20 = problem.design.force2.phase;
  const OptimizerSettings& s = problem.settings;

  std::vector<std::array<double, 2>> starts;
  starts.push_back({p10, p20});
  for (int j = 0; j < 8; ++j) {
    const double a = j * pi / 4.0;
    starts.push_back({p10 + s.start_offset * std::cos(a),
                      p20 + s.start_offset * std::sin(a)});
  }

  NmResult best;
  bool have_best = false;
  for (const auto& x0 : starts) {
    const NmResult r =
        nelder_mead([&eval](double a, double b) { return eval(a, b); }, x0,
                    s.init_step, s.max_iters, s.f_tol, s.x_tol);
    if (!have_best || r.f < best.f) {
      best = r;
      have_best = true;
    }
  }

  PhaseOptimum out;
  out.phi1 = p10 + canonical_phase(best.x[0] - p10);
  out.phi2 = p20 + canonical_phase(best.x[1] - p20);
  out.e_value = best.f;
  out.iterations = best.iterations;
  out.converged = best.converged;
  return out;
}

std::vector<ImprovementRow> improvement_curve(
    const SourceSpec& source, const Medium& m, const Vec3& x_d, double eps_s,
    std::span<const double> r_d_values, int n_radial, int n_azimuthal,
    OptimizerSettings settings) {
  std::vector<ImprovementRow> rows;
  rows.reserve(r_d_values.size());
  for (const double r_d : r_d_values) {
    const OptimizationProblem problem = make_two_force_problem(
        source, m, x_d, eps_s, r_d, n_radial, n_azimuthal, settings);
    const ResidualEvaluator eval(problem);
    const double e0 =
        eval(problem.design.force1.phase, problem.design.force2.phase);
    const PhaseOptimum opt = optimize_phases(problem);
    ImprovementRow row;
    row.r_d = r_d;
    row.e_opt0 = e0;
    row.e_optrd = opt.e_value;
    if (opt.e_value <= 0.0) {
      throw UndefinedMetricError(
          "improvement_curve: optimized worst case is zero; ratio undefined");
    }
    row.ratio = e0 / opt.e_value;
    row.dphi1 = canonical_phase(opt.phi1 - problem.design.force1.phase);
    row.dphi2 = canonical_phase(opt.phi2 - problem.design.force2.phase);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace wavemask
