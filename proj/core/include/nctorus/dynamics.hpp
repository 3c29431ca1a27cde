#pragma once

// Floating-point oracle for the toral automorphism x -> A x mod Z^2.

#include "nctorus/hyperbolic.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace nctorus {

struct TorusPoint {
  double x1 = 0.0;
  double x2 = 0.0;

  /// Both coordinates reduced into [0, 1).
  static TorusPoint reduced(double x1, double x2);
};

/// Quotient of the Euclidean metric: minimum over the nine nearest lift translates.
double torus_distance(const TorusPoint& x, const TorusPoint& y);

TorusPoint apply_matrix(const Mat2Z& a, const TorusPoint& x);

struct AsymptoticReport {
  std::vector<double> forward;   // d(A^k x, A^k z), k = 0..n_max
  std::vector<double> backward;  // d(A^-k x, A^-k z)
  bool converged_forward = false;
  bool converged_backward = false;

  bool converged() const { return converged_forward && converged_backward; }
};

/// Iteration count beyond which rounding growth (about |λ_u|^n ulp) swamps the signal.
inline constexpr int kMaxAsymptoticSteps = 25;

/// z = x + α_(m,n)(0); iterates A and A⁻¹ n_max times each. A flag is set when
/// the final distance is below tol. Throws NotHyperbolic, and std::invalid_argument
/// when n_max is outside [0, kMaxAsymptoticSteps].
AsymptoticReport asymptotic_pair_report(const Mat2Z& a, const TorusPoint& x, std::int64_t m, std::int64_t n, int n_max,
                                        double tol);

/// Geometric-mean step ratio d_{k+1}/d_k over the first run of samples with
/// above < d_k < below; the lower cut keeps rounding noise out. Returns 0 when
/// the run has fewer than two samples.
double measured_contraction(std::span<const double> distances, double below = 0.1, double above = 1e-6);

/// Covering radius of the orbit {α_(m,n)(x) : |m|, |n| <= N}, estimated on the
/// grid×grid lattice of sample points {(i/grid, j/grid)}. Throws NotHyperbolic.
double orbit_density_estimate(const Mat2Z& a, const TorusPoint& x, std::int64_t N, int grid);

}  // namespace nctorus
