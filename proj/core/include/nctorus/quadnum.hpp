#pragma once

// Exact arithmetic in real quadratic fields Q(sqrt(D)).
//
// A QuadNum stores (p + q*sqrt(D)) / m in canonical form:
//   m > 0, gcd(p, q, m) = 1, D squarefree and > 1 whenever q != 0,
//   and D == 0 (the rational sentinel) whenever q == 0.
// Canonical form makes equality syntactic. Rationals combine with any field;
// two irrationals from different fields raise FieldMismatch.

#include "nctorus/bigint.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nctorus {

struct SquarefreeDecomposition {
  BigInt f;  // n = f^2 * D
  BigInt D;
};

/// Splits n >= 1 as f^2 * D with D squarefree. Trial division is bounded; a
/// leftover cofactor that is neither 1, prime, nor a perfect square is rejected.
SquarefreeDecomposition squarefree_decompose(const BigInt& n);

class FieldMismatch : public std::domain_error {
 public:
  FieldMismatch(const BigInt& d1, const BigInt& d2);
};

enum class Glyph { Unicode, Ascii };

class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(long v) : p_(v) {}  // NOLINT(google-explicit-constructor)
  explicit QuadNum(BigInt p) : p_(std::move(p)) {}
  /// p / m.
  static QuadNum rational(BigInt p, BigInt m);
  /// (p + q*sqrt(n)) / m; n >= 0 need not be squarefree.
  static QuadNum make(BigInt p, BigInt q, BigInt m, const BigInt& n);
  /// sqrt(n) for n >= 0, as f*sqrt(D).
  static QuadNum sqrt(const BigInt& n);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& m() const { return m_; }
  /// 0 for rationals.
  const BigInt& D() const { return D_; }
  bool is_rational() const { return sgn(q_) == 0; }
  bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }

  /// Galois conjugate (p - q*sqrt(D)) / m.
  QuadNum conjugate() const;

  friend QuadNum operator+(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator-(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator*(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator/(const QuadNum& x, const QuadNum& y);
  QuadNum operator-() const;
  QuadNum& operator+=(const QuadNum& y) { return *this = *this + y; }
  QuadNum& operator-=(const QuadNum& y) { return *this = *this - y; }
  QuadNum& operator*=(const QuadNum& y) { return *this = *this * y; }

  friend bool operator==(const QuadNum& x, const QuadNum& y) = default;
  /// Exact ordering; throws FieldMismatch across fields.
  friend std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y);

 private:
  QuadNum(BigInt p, BigInt q, BigInt m, BigInt D, bool);
  void normalize();

  BigInt p_{0};
  BigInt q_{0};
  BigInt m_{1};
  BigInt D_{0};
};

/// Sign of x: -1, 0 or +1, decided without floating point.
int sign(const QuadNum& x);
QuadNum abs(const QuadNum& x);
std::strong_ordering compare(const QuadNum& x, const QuadNum& y);

/// The common field of x and y (0 if both rational); throws FieldMismatch.
BigInt common_field(const QuadNum& x, const QuadNum& y);

bool is_integer(const QuadNum& x);
BigInt floor(const QuadNum& x);
/// x - floor(x), in [0, 1).
QuadNum mod_one(const QuadNum& x);

/// Nearest-double approximation (well within 4 ulp); throws std::overflow_error
/// if the magnitude exceeds the double range.
double to_double(const QuadNum& x);

/// `(p+q√D)/m`; `√D` dropped when q = 0, `/m` dropped when m = 1.
std::string to_string(const QuadNum& x, Glyph glyph = Glyph::Unicode);
/// Inverse of to_string; also accepts `sqrt(D)` and `+-q`. Throws std::invalid_argument.
QuadNum parse_quadnum(std::string_view text);

}  // namespace nctorus
