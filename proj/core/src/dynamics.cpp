#include "nctorus/dynamics.hpp"

#include "nctorus/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nctorus {

namespace {

double frac(double v) {
  double r = v - std::floor(v);
  return r >= 1.0 ? 0.0 : r;
}

// Squared torus distance for reduced points; agrees with the nine-translate minimum.
double wrapped_sq_distance(double ax, double ay, double bx, double by) {
  double dx = std::fabs(ax - bx);
  double dy = std::fabs(ay - by);
  dx = std::min(dx, 1.0 - dx);
  dy = std::min(dy, 1.0 - dy);
  return dx * dx + dy * dy;
}

}  // namespace

TorusPoint TorusPoint::reduced(double x1, double x2) { return {frac(x1), frac(x2)}; }

double torus_distance(const TorusPoint& x, const TorusPoint& y) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) {
      best = std::min(best, std::hypot(x.x1 - y.x1 + i, x.x2 - y.x2 + j));
    }
  }
  return best;
}

TorusPoint apply_matrix(const Mat2Z& a, const TorusPoint& x) {
  const double p = a.a.get_d(), q = a.b.get_d(), r = a.c.get_d(), s = a.d.get_d();
  return TorusPoint::reduced(p * x.x1 + q * x.x2, r * x.x1 + s * x.x2);
}

AsymptoticReport asymptotic_pair_report(const Mat2Z& a, const TorusPoint& x, std::int64_t m, std::int64_t n, int n_max,
                                        double tol) {
  const HypMatrix h = HypMatrix::certify(a);
  if (n_max < 0 || n_max > kMaxAsymptoticSteps) {
    throw std::invalid_argument("n_max must lie in [0, " + std::to_string(kMaxAsymptoticSteps) + "], got " +
                                std::to_string(n_max));
  }
  const ThetaVector theta = theta_from_eigenvectors(h);
  const auto [t1, t2] = alpha_translation(theta, BigInt(static_cast<long>(m)), BigInt(static_cast<long>(n)));
  const TorusPoint start = TorusPoint::reduced(x.x1, x.x2);
  const TorusPoint partner = TorusPoint::reduced(start.x1 + to_double(t1), start.x2 + to_double(t2));

  AsymptoticReport report;
  auto run = [&](const Mat2Z& step, std::vector<double>& out) {
    TorusPoint p = start;
    TorusPoint q = partner;
    out.push_back(torus_distance(p, q));
    for (int k = 0; k < n_max; ++k) {
      p = apply_matrix(step, p);
      q = apply_matrix(step, q);
      out.push_back(torus_distance(p, q));
    }
  };
  run(a, report.forward);
  run(mat_inv(a), report.backward);
  report.converged_forward = report.forward.back() < tol;
  report.converged_backward = report.backward.back() < tol;
  return report;
}

double measured_contraction(std::span<const double> distances, double below, double above) {
  auto inside = [&](double d) { return d < below && d > above; };
  std::size_t first = 0;
  while (first < distances.size() && !inside(distances[first])) ++first;
  std::size_t last = first;
  while (last + 1 < distances.size() && inside(distances[last + 1])) ++last;
  if (first >= distances.size() || last == first) return 0.0;
  return std::pow(distances[last] / distances[first], 1.0 / static_cast<double>(last - first));
}

double orbit_density_estimate(const Mat2Z& a, const TorusPoint& x, std::int64_t N, int grid) {
  if (N < 0 || grid <= 0) throw std::invalid_argument("orbit_density_estimate: N must be >= 0 and grid > 0");
  const ThetaVector theta = theta_from_eigenvectors(HypMatrix::certify(a));
  const double th1 = to_double(theta[0]), th2 = to_double(theta[1]);
  const double th3 = to_double(theta[2]), th4 = to_double(theta[3]);
  const TorusPoint start = TorusPoint::reduced(x.x1, x.x2);

  std::vector<TorusPoint> orbit;
  orbit.reserve(static_cast<std::size_t>((2 * N + 1) * (2 * N + 1)));
  for (std::int64_t m = -N; m <= N; ++m) {
    for (std::int64_t n = -N; n <= N; ++n) {
      const double dm = static_cast<double>(m), dn = static_cast<double>(n);
      orbit.push_back(TorusPoint::reduced(start.x1 + frac(dm * th1) + frac(dn * th3),
                                          start.x2 + frac(dm * th2) + frac(dn * th4)));
    }
  }

  double radius_sq = 0.0;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double sx = static_cast<double>(i) / grid, sy = static_cast<double>(j) / grid;
      double nearest = std::numeric_limits<double>::infinity();
      for (const TorusPoint& p : orbit) nearest = std::min(nearest, wrapped_sq_distance(sx, sy, p.x1, p.x2));
      radius_sq = std::max(radius_sq, nearest);
    }
  }
  return std::sqrt(radius_sq);
}

}  // namespace nctorus
