#include "nctorus/hyperbolic.hpp"

#include <json.hpp>

#include <cctype>

namespace nctorus {

Mat2Z operator*(const Mat2Z& x, const Mat2Z& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2Z operator*(const BigInt& s, const Mat2Z& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }

Mat2Z mat_inv(const Mat2Z& x) {
  const BigInt det = x.det();
  if (abs(det) != 1) throw std::domain_error("matrix " + to_string(x) + " is not invertible over Z (det=" + to_string(det) + ")");
  // For det = ±1 the inverse is det * adj.
  return det * x.adjugate();
}

Mat2Z mat_pow(const Mat2Z& x, long k) {
  Mat2Z base = k < 0 ? mat_inv(x) : x;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1 : static_cast<unsigned long>(k);
  Mat2Z result = Mat2Z::identity();
  while (e != 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

std::string to_string(const Mat2Z& x) {
  return to_string(x.a) + "," + to_string(x.b) + ";" + to_string(x.c) + "," + to_string(x.d);
}

std::string to_json(const Mat2Z& x) {
  nlohmann::json j;
  j["rows"] = {{to_int64(x.a), to_int64(x.b)}, {to_int64(x.c), to_int64(x.d)}};
  return j.dump();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt json_integer(const nlohmann::json& v) {
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<std::int64_t>()));
  throw std::invalid_argument("matrix JSON entries must be integers");
}

}  // namespace

Mat2Z parse_matrix(std::string_view text) {
  const std::string_view s = trim(text);
  if (!s.empty() && s.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("malformed matrix JSON: ") + e.what());
    }
    const auto rows = j.find("rows");
    if (rows == j.end() || !rows->is_array() || rows->size() != 2 || !(*rows)[0].is_array() ||
        !(*rows)[1].is_array() || (*rows)[0].size() != 2 || (*rows)[1].size() != 2) {
      throw std::invalid_argument("matrix JSON must be {\"rows\":[[a,b],[c,d]]}");
    }
    return {json_integer((*rows)[0][0]), json_integer((*rows)[0][1]), json_integer((*rows)[1][0]),
            json_integer((*rows)[1][1])};
  }
  const auto semi = s.find(';');
  if (semi == std::string_view::npos || s.find(';', semi + 1) != std::string_view::npos) {
    throw std::invalid_argument("malformed matrix '" + std::string(text) + "', expected a,b;c,d");
  }
  auto split_row = [&](std::string_view row) {
    const auto comma = row.find(',');
    if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
      throw std::invalid_argument("malformed matrix '" + std::string(text) + "', expected a,b;c,d");
    }
    return std::pair{parse_bigint(trim(row.substr(0, comma))), parse_bigint(trim(row.substr(comma + 1)))};
  };
  auto [a, b] = split_row(s.substr(0, semi));
  auto [c, d] = split_row(s.substr(semi + 1));
  return {a, b, c, d};
}

bool is_hyperbolic(const Mat2Z& x) {
  const BigInt det = x.det();
  const BigInt t = x.trace();
  if (det == 1) return abs(t) > 2;
  if (det == -1) return sgn(t) != 0;
  return false;
}

NotHyperbolic::NotHyperbolic(const Mat2Z& x)
    : std::domain_error("matrix is not hyperbolic (det=" + to_string(x.det()) + ", trace=" + to_string(x.trace()) + ")") {}

HypMatrix HypMatrix::certify(const Mat2Z& x) {
  if (!is_hyperbolic(x)) throw NotHyperbolic(x);
  HypMatrix h;
  h.mat_ = x;
  h.det_ = x.det() == 1 ? 1 : -1;
  h.trace_ = x.trace();
  h.delta_ = h.trace_ * h.trace_ - 4 * x.det();
  h.sqrt_delta_ = QuadNum::sqrt(h.delta_);

  const QuadNum t(h.trace_);
  const QuadNum plus = (t + h.sqrt_delta_) / 2;
  const QuadNum minus = (t - h.sqrt_delta_) / 2;
  if (abs(plus) > QuadNum(1)) {
    h.lambda_u_ = plus;
    h.lambda_s_ = minus;
  } else {
    h.lambda_u_ = minus;
    h.lambda_s_ = plus;
  }
  const QuadNum a(x.a);
  const QuadNum b(x.b);
  h.v_u_ = {b, h.lambda_u_ - a};
  h.v_s_ = {b, h.lambda_s_ - a};
  return h;
}

}  // namespace nctorus
