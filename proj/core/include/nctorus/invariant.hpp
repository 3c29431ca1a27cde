#pragma once

// The trace range Z + Zθ1 + Zθ2 + Zθ3 as a canonical lattice.
//
// A finitely generated subgroup of Q(√D) is written over the common
// denominator m as integer coordinate rows (p, q) meaning (p + q√D)/m, and
// reduced to row Hermite normal form
//
//     [[h11, h12],
//      [  0, h22]]     h11 > 0, h22 > 0, 0 <= h12 < h22,
//
// with m minimal. Two modules are equal iff their (D, m, basis) agree.
// Degenerate (rank < 2) modules keep zero rows at the bottom.

#include "nctorus/hyperbolic.hpp"
#include "nctorus/quadnum.hpp"
#include "nctorus/theta.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace nctorus {

struct TraceRangeInvariant {
  BigInt D{0};  // 0 when the module is rational
  BigInt m{1};
  std::array<std::array<BigInt, 2>, 2> basis{};

  /// The basis rows as field elements; zero rows are included.
  std::array<QuadNum, 2> generators() const;

  friend bool operator==(const TraceRangeInvariant&, const TraceRangeInvariant&) = default;
};

/// Throws std::invalid_argument on an empty list and FieldMismatch on mixed fields.
TraceRangeInvariant canonicalize(std::span<const QuadNum> gens);

/// canonicalize([1, θ1, θ2, θ3]) with the closed-form θ. Throws NotHyperbolic.
TraceRangeInvariant trace_range(const Mat2Z& x);
TraceRangeInvariant trace_range(const ThetaVector& theta);

bool invariants_equal(const TraceRangeInvariant& i, const TraceRangeInvariant& j);

/// Throws FieldMismatch when x is irrational and outside the module's field.
bool module_contains(const TraceRangeInvariant& inv, const QuadNum& x);

/// `{"D":5,"m":10,"basis":[[5,1],[0,2]]}`
std::string to_json(const TraceRangeInvariant& inv);
TraceRangeInvariant invariant_from_json(std::string_view text);
/// `Z·(5+√5)/10 + Z·(2√5)/10`
std::string to_string(const TraceRangeInvariant& inv, Glyph glyph = Glyph::Unicode);

struct Conjugator {
  Mat2Z M;
  bool flip = false;  // true: A M = M B⁻¹
};

/// Brute-force search over M in GL(2, Z) with entries in [-bound, bound].
/// Candidates are ordered by the sum of |entries|, then lexicographically
/// with 0 < 1 < -1 < 2 < -2 < ...; all candidates are tried for A M = M B
/// before any is tried for A M = M B⁻¹. Throws NotHyperbolic.
std::optional<Conjugator> conjugator_search(const Mat2Z& a, const Mat2Z& b, std::int64_t bound);

struct InvarianceReport {
  bool conjugate_equal = false;    // trace_range(A) == trace_range(M⁻¹ A M)
  bool inverse_equal = false;      // trace_range(A) == trace_range(A⁻¹)
  bool inverse_tuple_map = false;  // θ(A⁻¹) == flip_variant(θ(A)) on eigenvector tuples
  bool square_equal = false;       // trace_range(A) == trace_range(A²)

  bool all() const { return conjugate_equal && inverse_equal && inverse_tuple_map && square_equal; }
};

/// Throws NotHyperbolic for A and std::domain_error when M is not unimodular.
InvarianceReport invariance_suite(const Mat2Z& a, const Mat2Z& m);

}  // namespace nctorus
