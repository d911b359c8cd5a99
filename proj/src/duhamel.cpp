#include "wavemask/duhamel.hpp"

#include <algorithm>
#include <cmath>

namespace wavemask {

namespace {

// Composite Simpson with per-panel midpoints over [a, b] split into n panels.
double simpson(const std::function<double(double)>& w, double a, double b,
               int n) {
  const double h = (b - a) / n;
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double lo = a + k * h;
    const double hi = lo + h;
    acc += (w(lo) + 4.0 * w(0.5 * (lo + hi)) + w(hi)) * h / 6.0;
  }
  return acc;
}

}  // namespace

GSpline GSpline::build(const std::function<double(double)>& sigma,
                       double support_radius, int panels) {
  if (!(support_radius > 0.0)) {
    throw std::invalid_argument("GSpline: support radius must be positive");
  }
  if (panels < 4) {
    throw std::invalid_argument("GSpline: need at least 4 panels");
  }

  GSpline sp;
  sp.support_ = support_radius;
  const int n = panels;
  sp.h_ = support_radius / n;
  const double h = sp.h_;

  // Cumulative Simpson of g(s) = s * sigma(s), then shift so the value at the
  // support edge is zero; the result is G(s) = -Int_s^support g.
  auto g = [&sigma](double s) { return s * sigma(s); };
  std::vector<double>& G = sp.values_;
  G.assign(n + 1, 0.0);
  for (int j = 1; j <= n; ++j) {
    const double a = (j - 1) * h;
    const double b = j * h;
    G[j] = G[j - 1] + (g(a) + 4.0 * g(0.5 * (a + b)) + g(b)) * h / 6.0;
  }
  const double edge = G[n];
  for (double& v : G) v -= edge;

  // Not-a-knot cubic spline on a uniform grid, solved for the second
  // derivatives M.  The end conditions (third derivative continuous across
  // the first and last interior knots) reduce, after eliminating M[0] and
  // M[n] via M[0] = 2*M[1] - M[2] and M[n] = 2*M[n-1] - M[n-2], to
  //   M[1]   = d2(1) / h,
  //   M[n-1] = d2(n-1) / h,
  // with the standard tridiagonal rows in between.  d2(i) is the second
  // divided difference (G[i+1] - 2*G[i] + G[i-1]) / h.
  std::vector<double>& M = sp.second_;
  M.assign(n + 1, 0.0);
  auto d2 = [&G, h](int i) {
    return (G[i + 1] - 2.0 * G[i] + G[i - 1]) / h;
  };
  M[1] = d2(1) / h;
  M[n - 1] = d2(n - 1) / h;
  if (n > 2) {
    const int m = n - 3;  // unknowns M[2] .. M[n-2]
    if (m > 0) {
      std::vector<double> diag(m, 2.0 / 3.0), rhs(m);
      for (int i = 0; i < m; ++i) rhs[i] = d2(i + 2) / h;
      rhs[0] -= M[1] / 6.0;
      rhs[m - 1] -= M[n - 1] / 6.0;
      // Thomas elimination; off-diagonals are all 1/6.
      for (int i = 1; i < m; ++i) {
        const double w = (1.0 / 6.0) / diag[i - 1];
        diag[i] -= w / 6.0;
        rhs[i] -= w * rhs[i - 1];
      }
      for (int i = m - 1; i >= 0; --i) {
        const double upper = (i + 1 < m) ? M[i + 3] / 6.0 : 0.0;
        M[i + 2] = (rhs[i] - upper) / diag[i];
      }
    }
  }
  M[0] = 2.0 * M[1] - M[2];
  M[n] = 2.0 * M[n - 1] - M[n - 2];

  return sp;
}

double GSpline::operator()(double s) const {
  double x = std::abs(s);
  if (x >= support_) return 0.0;
  const int n = static_cast<int>(values_.size()) - 1;
  int i = static_cast<int>(x / h_);
  i = std::clamp(i, 0, n - 1);
  const double xl = i * h_;
  const double a = (xl + h_ - x) / h_;
  const double b = (x - xl) / h_;
  const double h2 = h_ * h_ / 6.0;
  return a * values_[i] + b * values_[i + 1] +
         ((a * a * a - a) * second_[i] + (b * b * b - b) * second_[i + 1]) * h2;
}

double compute_u(double r, double T, const Medium& m, const GSpline& g,
                 const std::function<double(double)>& f, double h_u) {
  if (!(r >= min_radius)) {
    throw SingularEvaluationError("compute_u: r below the minimum radius");
  }
  if (T < 0.0) throw std::invalid_argument("compute_u: T must be >= 0");
  if (!(h_u > 0.0)) {
    throw std::invalid_argument("compute_u: h_u must be positive");
  }
  const double c = m.c;
  const double R = g.support_radius();
  double u = 0.0;

  // Outward window: G(r - c*tau) is active for tau in [(r-R)/c, (r+R)/c].
  const double tb = std::min(T, std::max(0.0, (r - R) / c));
  const double te = std::min(T, (r + R) / c);
  if (te > tb) {
    const int n = std::max(1, static_cast<int>(std::ceil((te - tb) / h_u)));
    u += simpson([&](double tau) { return -f(T - tau) * g(r - c * tau); }, tb,
                 te, n);
  }

  // Inward window: G(r + c*tau) is active for tau in [0, (R-r)/c], which is
  // non-empty only inside the core.
  const double t2 = std::min(T, std::max(0.0, -(r - R) / c));
  if (t2 > 0.0) {
    const int n = std::max(1, static_cast<int>(std::ceil(t2 / h_u)));
    u += simpson([&](double tau) { return f(T - tau) * g(r + c * tau); }, 0.0,
                 t2, n);
  }

  return u / (2.0 * c * r);
}

}  // namespace wavemask
