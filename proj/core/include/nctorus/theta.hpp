#pragma once

// Rotation parameters θ = (θ1, θ2, θ3, θ4) of the four-dimensional
// non-commutative torus attached to a hyperbolic matrix, the 4x4 skew form
// built from them, and the trace-range generators of exp_∧(Θ).

#include "nctorus/hyperbolic.hpp"
#include "nctorus/quadnum.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace nctorus {

enum class ThetaSource { ClosedForm, Eigenvector };

struct ThetaVector {
  std::array<QuadNum, 4> values;  // values[0] is θ1
  ThetaSource source = ThetaSource::ClosedForm;

  const QuadNum& operator[](std::size_t i) const { return values[i]; }
  friend bool operator==(const ThetaVector& x, const ThetaVector& y) { return x.values == y.values; }
};

/// θ1 = (1 + (a-d)/√Δ)/2, θ2 = c/√Δ, θ3 = b/√Δ, θ4 = (1 - (a-d)/√Δ)/2.
ThetaVector theta_closed_form(const HypMatrix& h);

/// Slopes from the (projective) eigenvectors v_u = (u1, u2), v_s = (s1, s2):
/// θ1 = u1 s2 / w, θ2 = u2 s2 / w, θ3 = -u1 s1 / w, θ4 = -u2 s1 / w, w = u1 s2 - u2 s1.
ThetaVector theta_from_eigenvectors(const HypMatrix& h);

/// (θ1, θ2, θ3, θ4) -> (θ4, -θ2, -θ3, θ1): the second sign variant, and also
/// the tuple of the inverse matrix.
ThetaVector flip_variant(const ThetaVector& theta);

enum class Eigenvalue { Unstable, Stable, Neither };

const char* to_string(Eigenvalue e);

/// Exact outcome of every linear/quadratic identity θ must satisfy for H.
struct IdentityReport {
  bool sum_is_one = false;          // θ1 + θ4 = 1
  bool product_relation = false;    // θ1 θ4 = θ2 θ3
  bool off_diagonal = false;        // b θ2 = c θ3
  // a θ1 + b θ2 = λ θ1, a θ3 + b θ4 = λ θ3, c θ1 + d θ2 = λ θ2, c θ3 + d θ4 = λ θ4
  std::array<bool, 4> unstable_rows{};          // with λ = λ_u
  std::array<bool, 4> unstable_rows_swapped{};  // with λ = λ_s
  // a θ3 - b θ1 = λ θ3, a θ4 - b θ2 = λ θ4, c θ3 - d θ1 = -λ θ1, c θ4 - d θ2 = -λ θ2
  std::array<bool, 4> stable_rows{};            // with λ = λ_s
  std::array<bool, 4> stable_rows_swapped{};    // with λ = λ_u
  QuadNum reconstruction;                       // a θ1 + b θ2 + c θ3 + d θ4
  Eigenvalue reconstruction_hits = Eigenvalue::Neither;

  /// Everything holds in the standard orientation (reconstruction = λ_u).
  bool all_pass() const;
};

/// Throws FieldMismatch if θ and H live in different fields.
IdentityReport verify_theta_identities(const ThetaVector& theta, const HypMatrix& h);

/// Antisymmetric 4x4 form. Indices are 0-based: entry(0, 1) is θ_{12}.
class SkewForm {
 public:
  using Matrix = std::array<std::array<QuadNum, 4>, 4>;

  /// θ13 = θ4, θ14 = θ3, θ23 = θ2, θ24 = θ1, θ12 = θ34 = 0.
  static SkewForm from_theta(const ThetaVector& theta);
  /// Throws std::invalid_argument unless entries + entriesᵀ = 0.
  static SkewForm from_entries(const Matrix& entries);

  const QuadNum& entry(std::size_t j, std::size_t k) const { return entries_[j][k]; }
  const Matrix& entries() const { return entries_; }

  /// θ12 θ34 - θ13 θ24 + θ14 θ23.
  QuadNum pfaffian() const;

 private:
  explicit SkewForm(const Matrix& entries) : entries_(entries) {}
  Matrix entries_;
};

/// [1, Pf, θ12, θ13, θ14, θ23, θ24, θ34]; their Z-span is the trace range.
std::array<QuadNum, 8> exp_wedge_generators(const SkewForm& form);

/// (m θ1 + n θ3 mod 1, m θ2 + n θ4 mod 1).
std::pair<QuadNum, QuadNum> alpha_translation(const ThetaVector& theta, const BigInt& m, const BigInt& n);

/// Every (m, n) with |m|, |n| <= bound whose translation is trivial on the torus.
std::vector<std::pair<std::int64_t, std::int64_t>> freeness_check(const ThetaVector& theta, std::int64_t bound);

}  // namespace nctorus
