#include "nctorus/bigint.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace nctorus {

int sign(const BigInt& x) { return sgn(x); }

BigInt abs(const BigInt& x) {
  BigInt r;
  mpz_abs(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

BigInt gcd(const BigInt& x, const BigInt& y) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return r;
}

BigInt isqrt(const BigInt& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt of a negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const BigInt& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("division by zero");
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

bool divides(const BigInt& d, const BigInt& n) {
  if (sgn(d) == 0) return sgn(n) == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

std::size_t bit_length(const BigInt& x) {
  if (sgn(x) == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

bool fits_int64(const BigInt& x) {
  static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return x >= lo && x <= hi;
}

std::int64_t to_int64(const BigInt& x) {
  if (!fits_int64(x)) throw std::overflow_error("integer " + to_string(x) + " exceeds 64 bits");
  return std::stoll(x.get_str(10));
}

}  // namespace nctorus
