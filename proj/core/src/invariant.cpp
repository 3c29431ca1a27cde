#include "nctorus/invariant.hpp"

#include <json.hpp>

#include <algorithm>
#include <tuple>
#include <vector>

namespace nctorus {

namespace {

using Row = std::array<BigInt, 2>;

BigInt lcm(const BigInt& x, const BigInt& y) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return r;
}

// Euclid on rows: afterwards at most one row has a nonzero entry in `col`.
void eliminate_column(std::vector<Row>& rows, std::size_t col) {
  for (;;) {
    auto pivot = rows.end();
    for (auto it = rows.begin(); it != rows.end(); ++it) {
      if (sgn((*it)[col]) != 0 && (pivot == rows.end() || abs((*it)[col]) < abs((*pivot)[col]))) pivot = it;
    }
    if (pivot == rows.end()) return;
    bool changed = false;
    for (auto it = rows.begin(); it != rows.end(); ++it) {
      if (it == pivot || sgn((*it)[col]) == 0) continue;
      BigInt qt;
      mpz_tdiv_q(qt.get_mpz_t(), (*it)[col].get_mpz_t(), (*pivot)[col].get_mpz_t());
      (*it)[0] -= qt * (*pivot)[0];
      (*it)[1] -= qt * (*pivot)[1];
      changed = true;
    }
    if (!changed) return;
  }
}

}  // namespace

std::array<QuadNum, 2> TraceRangeInvariant::generators() const {
  return {QuadNum::make(basis[0][0], basis[0][1], m, D), QuadNum::make(basis[1][0], basis[1][1], m, D)};
}

TraceRangeInvariant canonicalize(std::span<const QuadNum> gens) {
  if (gens.empty()) throw std::invalid_argument("canonicalize: empty generator list");
  BigInt D = 0;
  BigInt m = 1;
  for (const QuadNum& g : gens) {
    if (!g.is_rational()) {
      if (sgn(D) == 0) {
        D = g.D();
      } else if (D != g.D()) {
        throw FieldMismatch(D, g.D());
      }
    }
    m = lcm(m, g.m());
  }

  std::vector<Row> rows;
  rows.reserve(gens.size());
  for (const QuadNum& g : gens) {
    const BigInt scale = m / g.m();
    rows.push_back({g.p() * scale, g.q() * scale});
  }

  eliminate_column(rows, 0);
  BigInt h11 = 0, h12 = 0;
  auto pivot = std::find_if(rows.begin(), rows.end(), [](const Row& r) { return sgn(r[0]) != 0; });
  if (pivot != rows.end()) {
    h11 = (*pivot)[0];
    h12 = (*pivot)[1];
    rows.erase(pivot);
  }
  BigInt h22 = 0;
  for (const Row& r : rows) h22 = gcd(h22, r[1]);

  TraceRangeInvariant inv;
  if (sgn(h11) < 0) {
    h11 = -h11;
    h12 = -h12;
  }
  if (sgn(h11) == 0) {
    inv.basis = {Row{0, h22}, Row{0, 0}};
  } else {
    if (sgn(h22) != 0) h12 -= h22 * floor_div(h12, h22);
    inv.basis = {Row{h11, h12}, Row{0, h22}};
  }

  BigInt content = m;
  for (const Row& r : inv.basis) content = gcd(gcd(content, r[0]), r[1]);
  inv.m = m / content;
  for (Row& r : inv.basis) {
    r[0] /= content;
    r[1] /= content;
  }
  const bool rational = sgn(inv.basis[0][1]) == 0 && sgn(inv.basis[1][1]) == 0;
  inv.D = rational ? BigInt(0) : D;
  return inv;
}

TraceRangeInvariant trace_range(const ThetaVector& theta) {
  const std::array<QuadNum, 4> gens{QuadNum(1), theta[0], theta[1], theta[2]};
  return canonicalize(gens);
}

TraceRangeInvariant trace_range(const Mat2Z& x) { return trace_range(theta_closed_form(HypMatrix::certify(x))); }

bool invariants_equal(const TraceRangeInvariant& i, const TraceRangeInvariant& j) { return i == j; }

bool module_contains(const TraceRangeInvariant& inv, const QuadNum& x) {
  if (!x.is_rational() && x.D() != inv.D) throw FieldMismatch(inv.D, x.D());
  const BigInt P_scaled = x.p() * inv.m;
  const BigInt Q_scaled = x.q() * inv.m;
  if (!divides(x.m(), P_scaled) || !divides(x.m(), Q_scaled)) return false;
  const BigInt P = P_scaled / x.m();
  const BigInt Q = Q_scaled / x.m();
  const auto& b = inv.basis;
  if (sgn(b[0][0]) == 0) return sgn(P) == 0 && divides(b[0][1], Q);
  if (!divides(b[0][0], P)) return false;
  const BigInt k = P / b[0][0];
  return divides(b[1][1], Q - k * b[0][1]);
}

std::string to_json(const TraceRangeInvariant& inv) {
  nlohmann::ordered_json j;
  j["D"] = to_int64(inv.D);
  j["m"] = to_int64(inv.m);
  j["basis"] = {{to_int64(inv.basis[0][0]), to_int64(inv.basis[0][1])},
                {to_int64(inv.basis[1][0]), to_int64(inv.basis[1][1])}};
  return j.dump();
}

TraceRangeInvariant invariant_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed invariant JSON: ") + e.what());
  }
  auto integer = [](const nlohmann::json& v) {
    if (!v.is_number_integer()) throw std::invalid_argument("invariant JSON fields must be integers");
    return BigInt(std::to_string(v.get<std::int64_t>()));
  };
  if (!j.is_object() || !j.contains("D") || !j.contains("m") || !j.contains("basis")) {
    throw std::invalid_argument("invariant JSON needs D, m and basis");
  }
  const auto& b = j["basis"];
  if (!b.is_array() || b.size() != 2 || b[0].size() != 2 || b[1].size() != 2) {
    throw std::invalid_argument("invariant basis must be a 2x2 array");
  }
  TraceRangeInvariant inv;
  inv.D = integer(j["D"]);
  inv.m = integer(j["m"]);
  inv.basis = {Row{integer(b[0][0]), integer(b[0][1])}, Row{integer(b[1][0]), integer(b[1][1])}};
  return inv;
}

std::string to_string(const TraceRangeInvariant& inv, Glyph glyph) {
  const std::string root = glyph == Glyph::Unicode ? "\xE2\x88\x9A" + to_string(inv.D) : "sqrt(" + to_string(inv.D) + ")";
  auto coefficient = [&](const BigInt& q) {
    if (q == 1) return root;
    if (q == -1) return "-" + root;
    return to_string(q) + root;
  };
  std::string out;
  for (const Row& r : inv.basis) {
    if (sgn(r[0]) == 0 && sgn(r[1]) == 0) continue;
    std::string term;
    if (sgn(r[1]) == 0) {
      term = to_string(r[0]);
      if (inv.m != 1) term += "/" + to_string(inv.m);
    } else {
      if (sgn(r[0]) == 0) {
        term = "(" + coefficient(r[1]) + ")";
      } else {
        const BigInt q = abs(r[1]);
        term = "(" + to_string(r[0]) + (sgn(r[1]) < 0 ? "-" : "+") + coefficient(q) + ")";
      }
      if (inv.m != 1) term += "/" + to_string(inv.m);
    }
    if (!out.empty()) out += " + ";
    out += "Z\xC2\xB7" + term;
  }
  return out.empty() ? "0" : out;
}

namespace {

struct Candidate {
  std::array<std::int64_t, 4> entries;
  std::int64_t weight;
};

std::int64_t value_rank(std::int64_t v) { return v > 0 ? 2 * v - 1 : -2 * v; }

std::vector<Candidate> unimodular_candidates(std::int64_t bound) {
  std::vector<Candidate> out;
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t b = -bound; b <= bound; ++b)
      for (std::int64_t c = -bound; c <= bound; ++c)
        for (std::int64_t d = -bound; d <= bound; ++d) {
          const std::int64_t det = a * d - b * c;
          if (det != 1 && det != -1) continue;
          out.push_back({{a, b, c, d}, std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d)});
        }
  std::sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
    auto key = [](const Candidate& k) {
      return std::tuple(k.weight, value_rank(k.entries[0]), value_rank(k.entries[1]), value_rank(k.entries[2]),
                        value_rank(k.entries[3]));
    };
    return key(x) < key(y);
  });
  return out;
}

Mat2Z to_matrix(const Candidate& c) {
  return {static_cast<long>(c.entries[0]), static_cast<long>(c.entries[1]), static_cast<long>(c.entries[2]),
          static_cast<long>(c.entries[3])};
}

}  // namespace

std::optional<Conjugator> conjugator_search(const Mat2Z& a, const Mat2Z& b, std::int64_t bound) {
  if (!is_hyperbolic(a)) throw NotHyperbolic(a);
  if (!is_hyperbolic(b)) throw NotHyperbolic(b);
  const auto candidates = unimodular_candidates(bound);
  const Mat2Z b_inv = mat_inv(b);
  for (const bool flip : {false, true}) {
    const Mat2Z& target = flip ? b_inv : b;
    // Conjugate matrices share trace and determinant.
    if (target.trace() != a.trace() || target.det() != a.det()) continue;
    for (const Candidate& c : candidates) {
      const Mat2Z m = to_matrix(c);
      if (a * m == m * target) return Conjugator{m, flip};
    }
  }
  return std::nullopt;
}

InvarianceReport invariance_suite(const Mat2Z& a, const Mat2Z& m) {
  const HypMatrix h = HypMatrix::certify(a);
  const Mat2Z m_inv = mat_inv(m);
  const Mat2Z a_inv = mat_inv(a);
  const TraceRangeInvariant base = trace_range(a);

  InvarianceReport r;
  r.conjugate_equal = invariants_equal(base, trace_range(m_inv * a * m));
  r.inverse_equal = invariants_equal(base, trace_range(a_inv));
  r.inverse_tuple_map =
      theta_from_eigenvectors(HypMatrix::certify(a_inv)) == flip_variant(theta_from_eigenvectors(h));
  r.square_equal = invariants_equal(base, trace_range(a * a));
  return r;
}

}  // namespace nctorus
