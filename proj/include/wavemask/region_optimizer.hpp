#pragma once

#include <span>
#include <vector>

#include "wavemask/core.hpp"
#include "wavemask/masking.hpp"

// Worst-case residual over a finite protected ball, and derivative-free
// optimization of the two masking-force phases against that worst case.
// Geometry, amplitudes and blend weights stay fixed at the analytic design;
// only the two phases move.

namespace wavemask {

struct OptimizerSettings {
  int max_iters = 500;          // Nelder-Mead iteration cap per start
  double f_tol = 1e-12;         // stop when the simplex value spread is below
  double x_tol = 1e-10;         // ... or the simplex diameter is below
  double start_offset = 0.05;   // radius of the 8 perturbed starts (rad)
  double init_step = 0.05;      // initial simplex edge (rad)
};

struct OptimizationProblem {
  SourceSpec source{};
  Medium medium;
  Vec3 x_d{};
  double eps_s = 0.0;
  TargetRegion region;
  TwoForceDesign design{};
  OptimizerSettings settings{};
};

// Two-force problem over the ball B(x_d, r_d), sampled on the standard polar
// half-disk grid.
OptimizationProblem make_two_force_problem(const SourceSpec& source,
                                           const Medium& m, const Vec3& x_d,
                                           double eps_s, double r_d,
                                           int n_radial = 61,
                                           int n_azimuthal = 33,
                                           OptimizerSettings settings = {});

// Worst-case normalized residual over the region's sample grid with the force
// phases overridden by (phi1, phi2).
double e_max(const OptimizationProblem& problem, double phi1, double phi2);

struct PhaseOptimum {
  double phi1 = 0.0;
  double phi2 = 0.0;
  double e_value = 0.0;
  int iterations = 0;   // iterations used by the winning start
  bool converged = false;
};

// Deterministic multi-start Nelder-Mead over the two phases: the analytic
// phases plus 8 perturbations of magnitude start_offset.  Reported phases are
// folded into the 2*pi cell centered on the analytic phases.
PhaseOptimum optimize_phases(const OptimizationProblem& problem);

struct ImprovementRow {
  double r_d = 0.0;
  double e_opt0 = 0.0;    // worst case at the analytic phases
  double e_optrd = 0.0;   // worst case after phase optimization
  double ratio = 0.0;     // e_opt0 / e_optrd
  double dphi1 = 0.0;     // optimized minus analytic, canonical
  double dphi2 = 0.0;
};

std::vector<ImprovementRow> improvement_curve(
    const SourceSpec& source, const Medium& m, const Vec3& x_d, double eps_s,
    std::span<const double> r_d_values, int n_radial = 61, int n_azimuthal = 33,
    OptimizerSettings settings = {});

}  // namespace wavemask
