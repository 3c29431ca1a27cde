#include "nctorus/quadnum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nctorus {

namespace {

constexpr unsigned long kTrialDivisionLimit = 1UL << 20;
constexpr std::string_view kSqrtGlyph = "\xE2\x88\x9A";  // U+221A

// floor((p + q*sqrt(D)) / m) for m > 0, D squarefree > 1 or q == 0.
BigInt floor_quadratic(const BigInt& p, const BigInt& q, const BigInt& D, const BigInt& m) {
  if (sgn(q) == 0) return floor_div(p, m);
  // q*sqrt(D) is irrational, so its floor is isqrt(q^2 D) or -(isqrt(q^2 D) + 1).
  BigInt s = isqrt(q * q * D);
  BigInt floor_irr = sgn(q) > 0 ? s : BigInt(-s - 1);
  return floor_div(p + floor_irr, m);
}

}  // namespace

SquarefreeDecomposition squarefree_decompose(const BigInt& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("squarefree_decompose: n must be positive, got " + to_string(n));
  BigInt f = 1;
  BigInt D = 1;
  BigInt r = n;
  unsigned long p = 2;
  for (; p <= kTrialDivisionLimit; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > r) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(r.get_mpz_t(), p) != 0) {
      r /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) f *= p;
    if (e % 2 == 1) D *= p;
  }
  if (r > 1) {
    if (BigInt(p) * p > r || mpz_probab_prime_p(r.get_mpz_t(), 40) != 0) {
      D *= r;
    } else if (is_perfect_square(r)) {
      f *= isqrt(r);
    } else {
      throw std::runtime_error("squarefree_decompose: cofactor " + to_string(r) +
                               " of " + to_string(n) + " is composite beyond the trial-division bound");
    }
  }
  return {f, D};
}

FieldMismatch::FieldMismatch(const BigInt& d1, const BigInt& d2)
    : std::domain_error("field mismatch: Q(sqrt(" + to_string(d1) + ")) vs Q(sqrt(" + to_string(d2) + "))") {}

QuadNum::QuadNum(BigInt p, BigInt q, BigInt m, BigInt D, bool)
    : p_(std::move(p)), q_(std::move(q)), m_(std::move(m)), D_(std::move(D)) {
  normalize();
}

void QuadNum::normalize() {
  if (sgn(m_) == 0) throw std::domain_error("division by zero");
  if (sgn(m_) < 0) {
    p_ = -p_;
    q_ = -q_;
    m_ = -m_;
  }
  if (sgn(D_) == 0) q_ = 0;
  if (D_ == 1) {
    p_ += q_;
    q_ = 0;
  }
  if (sgn(q_) == 0) D_ = 0;
  BigInt g = gcd(gcd(p_, q_), m_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    m_ /= g;
  }
}

QuadNum QuadNum::rational(BigInt p, BigInt m) { return QuadNum(std::move(p), 0, std::move(m), 0, true); }

QuadNum QuadNum::make(BigInt p, BigInt q, BigInt m, const BigInt& n) {
  if (sgn(n) < 0) throw std::invalid_argument("QuadNum: negative radicand " + to_string(n));
  if (sgn(n) == 0 || sgn(q) == 0) return rational(std::move(p), std::move(m));
  auto [f, D] = squarefree_decompose(n);
  return QuadNum(std::move(p), q * f, std::move(m), D, true);
}

QuadNum QuadNum::sqrt(const BigInt& n) { return make(0, 1, 1, n); }

QuadNum QuadNum::conjugate() const { return QuadNum(p_, -q_, m_, D_, true); }

BigInt common_field(const QuadNum& x, const QuadNum& y) {
  if (x.is_rational()) return y.D();
  if (y.is_rational() || x.D() == y.D()) return x.D();
  throw FieldMismatch(x.D(), y.D());
}

QuadNum operator+(const QuadNum& x, const QuadNum& y) {
  BigInt D = common_field(x, y);
  return QuadNum(x.p_ * y.m_ + y.p_ * x.m_, x.q_ * y.m_ + y.q_ * x.m_, x.m_ * y.m_, D, true);
}

QuadNum operator-(const QuadNum& x, const QuadNum& y) { return x + (-y); }

QuadNum QuadNum::operator-() const { return QuadNum(-p_, -q_, m_, D_, true); }

QuadNum operator*(const QuadNum& x, const QuadNum& y) {
  BigInt D = common_field(x, y);
  return QuadNum(x.p_ * y.p_ + x.q_ * y.q_ * D, x.p_ * y.q_ + x.q_ * y.p_, x.m_ * y.m_, D, true);
}

QuadNum operator/(const QuadNum& x, const QuadNum& y) {
  if (y.is_zero()) throw std::domain_error("division by zero");
  BigInt D = common_field(x, y);
  // x / y = x * conj(y) * m_y / (p_y^2 - q_y^2 D); the norm is nonzero since D is not a square.
  BigInt norm = y.p_ * y.p_ - y.q_ * y.q_ * D;
  QuadNum num = x * QuadNum(y.p_ * y.m_, -y.q_ * y.m_, 1, D, true);
  return QuadNum(num.p_, num.q_, num.m_ * norm, D, true);
}

int sign(const QuadNum& x) {
  const int sp = sgn(x.p());
  const int sq = sgn(x.q());
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare p^2 against q^2 D.
  const int c = cmp(x.p() * x.p(), x.q() * x.q() * x.D());
  return c > 0 ? sp : sq;
}

QuadNum abs(const QuadNum& x) { return sign(x) < 0 ? -x : x; }

std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y) {
  const int s = sign(x - y);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const QuadNum& x, const QuadNum& y) { return x <=> y; }

bool is_integer(const QuadNum& x) { return x.is_rational() && x.m() == 1; }

BigInt floor(const QuadNum& x) { return floor_quadratic(x.p(), x.q(), x.D(), x.m()); }

QuadNum mod_one(const QuadNum& x) { return x - QuadNum(floor(x)); }

double to_double(const QuadNum& x) {
  if (x.is_zero()) return 0.0;
  // Compute N = floor(x * 2^k) exactly with |N| >= 2^62, then scale back.
  const long est = static_cast<long>(std::max(bit_length(x.p()), bit_length(x.q()) + bit_length(x.D()) / 2)) -
                   static_cast<long>(bit_length(x.m()));
  long k = 64 - est;
  BigInt N;
  for (int attempt = 0; attempt < 64; ++attempt) {
    BigInt P = x.p();
    BigInt Q = x.q();
    BigInt M = x.m();
    if (k >= 0) {
      mpz_mul_2exp(P.get_mpz_t(), P.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
      mpz_mul_2exp(Q.get_mpz_t(), Q.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    } else {
      mpz_mul_2exp(M.get_mpz_t(), M.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
    }
    N = floor_quadratic(P, Q, x.D(), M);
    const auto bits = static_cast<long>(bit_length(N));
    if (bits >= 62) break;
    k += 64 - bits;
  }
  const long exponent = static_cast<long>(bit_length(N)) - k;
  if (exponent > std::numeric_limits<double>::max_exponent) {
    throw std::overflow_error("to_double: value " + to_string(x) + " exceeds double range");
  }
  if (k > std::numeric_limits<int>::max() || k < std::numeric_limits<int>::min()) return 0.0;
  return std::ldexp(N.get_d(), static_cast<int>(-k));
}

std::string to_string(const QuadNum& x, Glyph glyph) {
  if (x.is_rational()) {
    return x.m() == 1 ? to_string(x.p()) : to_string(x.p()) + "/" + to_string(x.m());
  }
  std::string out = "(" + to_string(x.p());
  out += sgn(x.q()) < 0 ? "-" : "+";
  out += to_string(abs(x.q()));
  if (glyph == Glyph::Unicode) {
    out += kSqrtGlyph;
    out += to_string(x.D());
  } else {
    out += "sqrt(" + to_string(x.D()) + ")";
  }
  out += ")";
  if (x.m() != 1) out += "/" + to_string(x.m());
  return out;
}

namespace {

[[noreturn]] void bad_quadnum(std::string_view text) {
  throw std::invalid_argument("malformed number '" + std::string(text) + "'");
}

// Reads [sign] digits at pos; advances pos.
BigInt read_integer(std::string_view s, std::size_t& pos, std::string_view whole) {
  const std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  const std::size_t digits = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == digits) bad_quadnum(whole);
  return parse_bigint(s.substr(start, pos - start));
}

}  // namespace

QuadNum parse_quadnum(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') compact.push_back(c);
  }
  const std::string_view s = compact;
  if (s.empty()) bad_quadnum(text);
  std::size_t pos = 0;
  if (s[0] != '(') {
    BigInt p = read_integer(s, pos, text);
    BigInt m = 1;
    if (pos < s.size()) {
      if (s[pos] != '/') bad_quadnum(text);
      ++pos;
      m = read_integer(s, pos, text);
    }
    if (pos != s.size() || sgn(m) <= 0) bad_quadnum(text);
    return QuadNum::rational(std::move(p), std::move(m));
  }
  ++pos;
  BigInt p = read_integer(s, pos, text);
  if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) bad_quadnum(text);
  bool negative = s[pos] == '-';
  ++pos;
  if (pos < s.size() && s[pos] == '-') {
    negative = !negative;
    ++pos;
  }
  const std::size_t qstart = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  BigInt q = pos == qstart ? BigInt(1) : parse_bigint(s.substr(qstart, pos - qstart));
  if (negative) q = -q;
  BigInt radicand;
  if (s.substr(pos, kSqrtGlyph.size()) == kSqrtGlyph) {
    pos += kSqrtGlyph.size();
    const std::size_t dstart = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == dstart) bad_quadnum(text);
    radicand = parse_bigint(s.substr(dstart, pos - dstart));
  } else if (s.substr(pos, 5) == "sqrt(") {
    pos += 5;
    const std::size_t dstart = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == dstart || pos >= s.size() || s[pos] != ')') bad_quadnum(text);
    radicand = parse_bigint(s.substr(dstart, pos - dstart));
    ++pos;
  } else {
    bad_quadnum(text);
  }
  if (pos >= s.size() || s[pos] != ')') bad_quadnum(text);
  ++pos;
  BigInt m = 1;
  if (pos < s.size()) {
    if (s[pos] != '/') bad_quadnum(text);
    ++pos;
    m = read_integer(s, pos, text);
  }
  if (pos != s.size() || sgn(m) <= 0) bad_quadnum(text);
  return QuadNum::make(std::move(p), std::move(q), std::move(m), radicand);
}

}  // namespace nctorus
