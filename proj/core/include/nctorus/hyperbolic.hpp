#pragma once

#include "nctorus/bigint.hpp"
#include "nctorus/quadnum.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace nctorus {

/// Integer 2x2 matrix [[a, b], [c, d]].
struct Mat2Z {
  BigInt a{0}, b{0}, c{0}, d{0};

  static Mat2Z identity() { return {1, 0, 0, 1}; }

  BigInt det() const { return a * d - b * c; }
  BigInt trace() const { return a + d; }
  Mat2Z transpose() const { return {a, c, b, d}; }
  /// Adjugate [[d, -b], [-c, a]].
  Mat2Z adjugate() const { return {d, -b, -c, a}; }

  friend bool operator==(const Mat2Z&, const Mat2Z&) = default;
};

Mat2Z operator*(const Mat2Z& x, const Mat2Z& y);
Mat2Z operator*(const BigInt& s, const Mat2Z& x);

/// Inverse of a unimodular matrix; throws std::domain_error when |det| != 1.
Mat2Z mat_inv(const Mat2Z& x);
/// x^k for any integer k (negative powers need |det| = 1).
Mat2Z mat_pow(const Mat2Z& x, long k);

/// Text form `a,b;c,d`.
std::string to_string(const Mat2Z& x);
/// JSON form `{"rows":[[a,b],[c,d]]}`.
std::string to_json(const Mat2Z& x);
/// Accepts either the text form or the JSON form. Throws std::invalid_argument.
Mat2Z parse_matrix(std::string_view text);

/// det = ±1 and no eigenvalue of modulus one.
bool is_hyperbolic(const Mat2Z& x);

class NotHyperbolic : public std::domain_error {
 public:
  explicit NotHyperbolic(const Mat2Z& x);
};

/// Eigenvector (x, y), projective: only its direction is meaningful.
struct EigenVector {
  QuadNum x;
  QuadNum y;
};

/// A hyperbolic matrix with its exact eigen data in Q(sqrt(Δ)).
///
/// λ_u, λ_s = (t ± f√D)/2 where Δ = t² - 4·det = f²D; λ_u is the root of
/// modulus greater than one. Eigenvectors are fixed as (b, λ - a).
class HypMatrix {
 public:
  /// Throws NotHyperbolic.
  static HypMatrix certify(const Mat2Z& x);

  const Mat2Z& mat() const { return mat_; }
  int det() const { return det_; }
  const BigInt& trace() const { return trace_; }
  const BigInt& delta() const { return delta_; }
  /// √Δ in the form f√D.
  const QuadNum& sqrt_delta() const { return sqrt_delta_; }
  const QuadNum& lambda_u() const { return lambda_u_; }
  const QuadNum& lambda_s() const { return lambda_s_; }
  const EigenVector& v_u() const { return v_u_; }
  const EigenVector& v_s() const { return v_s_; }
  /// Squarefree part D of Δ.
  const BigInt& field() const { return sqrt_delta_.D(); }

 private:
  HypMatrix() = default;

  Mat2Z mat_;
  int det_ = 1;
  BigInt trace_;
  BigInt delta_;
  QuadNum sqrt_delta_;
  QuadNum lambda_u_;
  QuadNum lambda_s_;
  EigenVector v_u_;
  EigenVector v_s_;
};

}  // namespace nctorus
