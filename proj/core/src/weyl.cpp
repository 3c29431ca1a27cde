#include "nctorus/weyl.hpp"

#include <cctype>
#include <sstream>

namespace nctorus {

namespace {

// Positions in the normal order V1 U1 V2 U2.
constexpr int kV1 = 0;
constexpr int kU1 = 1;
constexpr int kV2 = 2;
constexpr int kU2 = 3;

int position(Generator g) {
  switch (g) {
    case Generator::V1:
      return kV1;
    case Generator::U1:
      return kU1;
    case Generator::V2:
      return kV2;
    case Generator::U2:
      return kU2;
    case Generator::W:
      break;
  }
  throw std::invalid_argument("W has no place in a Weyl monomial");
}

// X Y = e(sign·θ_index) Y X for X, Y at positions p, q; index < 0 when they commute.
struct Swap {
  int index;
  int sign;
};

constexpr Swap kSwap[4][4] = {
    //           V1        U1        V2        U2
    /* V1 */ {{-1, 0}, {0, +1}, {-1, 0}, {1, +1}},
    /* U1 */ {{0, -1}, {-1, 0}, {2, -1}, {-1, 0}},
    /* V2 */ {{-1, 0}, {2, +1}, {-1, 0}, {3, +1}},
    /* U2 */ {{1, -1}, {-1, 0}, {3, -1}, {-1, 0}},
};

using Coefficients = std::array<BigInt, 4>;

QuadNum dot(const ThetaVector& theta, const Coefficients& c) {
  QuadNum sum;
  for (std::size_t i = 0; i < 4; ++i) {
    if (sgn(c[i]) != 0) sum += QuadNum(c[i]) * theta[i];
  }
  return sum;
}

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

// Phase collected while moving the letters of u_h left past those of u_g.
Coefficients reorder_cost(const Exponents& g, const Exponents& h) {
  Coefficients c{};
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < p; ++q) {
      const Swap s = kSwap[p][q];
      if (s.index < 0 || g[p] == 0 || h[q] == 0) continue;
      c[s.index] += big(s.sign) * big(g[p]) * big(h[q]);
    }
  }
  return c;
}

}  // namespace

const char* to_string(Generator g) {
  switch (g) {
    case Generator::U1:
      return "U1";
    case Generator::U2:
      return "U2";
    case Generator::V1:
      return "V1";
    case Generator::V2:
      return "V2";
    case Generator::W:
      return "W";
  }
  return "?";
}

Generator parse_generator(std::string_view name) {
  for (Generator g : {Generator::U1, Generator::U2, Generator::V1, Generator::V2, Generator::W}) {
    if (name == to_string(g)) return g;
  }
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

Exponents wedge(const Exponents& g, const Exponents& h) {
  return {g[0] * h[1] - g[1] * h[0], g[0] * h[3] - g[3] * h[0], g[2] * h[1] - g[1] * h[2], g[2] * h[3] - g[3] * h[2]};
}

QuadNum rho_exponent(const ThetaVector& theta, const Exponents& g, const Exponents& h) {
  const Exponents w = wedge(g, h);
  return mod_one(dot(theta, {big(w[0]), big(w[1]), big(w[2]), big(w[3])}));
}

WeylElement WeylElement::generator(Generator g, std::int64_t power) {
  WeylElement e;
  e.exp[position(g)] = power;
  return e;
}

WeylElement weyl_mul(const WeylElement& x, const WeylElement& y, const ThetaVector& theta) {
  WeylElement r;
  for (std::size_t i = 0; i < 4; ++i) r.exp[i] = x.exp[i] + y.exp[i];
  r.phase = mod_one(x.phase + y.phase + dot(theta, reorder_cost(x.exp, y.exp)));
  return r;
}

WeylElement weyl_inverse(const WeylElement& x, const ThetaVector& theta) {
  WeylElement r;
  for (std::size_t i = 0; i < 4; ++i) r.exp[i] = -x.exp[i];
  // u_g u_{-g} = e(cost(g, -g)), so u_g⁻¹ = e(-cost(g, -g)) u_{-g}.
  r.phase = mod_one(-x.phase - dot(theta, reorder_cost(x.exp, r.exp)));
  return r;
}

QuadNum commutator_phase(const WeylElement& x, const WeylElement& y, const ThetaVector& theta) {
  const WeylElement xy = weyl_mul(x, y, theta);
  const WeylElement c = weyl_mul(weyl_mul(xy, weyl_inverse(x, theta), theta), weyl_inverse(y, theta), theta);
  return c.phase;
}

bool commutator_check(const ThetaVector& theta, const Exponents& g, const Exponents& h) {
  return commutator_phase({QuadNum(), g}, {QuadNum(), h}, theta) == rho_exponent(theta, g, h);
}

std::vector<Exponents> nondegeneracy_scan(const ThetaVector& theta, std::int64_t bound) {
  static constexpr std::array<Exponents, 4> kBasis{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  std::vector<Exponents> degenerate;
  Exponents g{};
  for (g[0] = -bound; g[0] <= bound; ++g[0])
    for (g[1] = -bound; g[1] <= bound; ++g[1])
      for (g[2] = -bound; g[2] <= bound; ++g[2])
        for (g[3] = -bound; g[3] <= bound; ++g[3]) {
          bool trivial = true;
          for (const Exponents& e : kBasis) {
            if (!rho_exponent(theta, g, e).is_zero()) {
              trivial = false;
              break;
            }
          }
          if (trivial) degenerate.push_back(g);
        }
  return degenerate;
}

GeneratorWord::GeneratorWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const Letter& l : letters_) {
    if (l.power == 0) throw std::invalid_argument(std::string("zero power on ") + to_string(l.gen) + " in word");
  }
}

GeneratorWord parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    const auto caret = token.find('^');
    const Generator g = parse_generator(std::string_view(token).substr(0, caret));
    std::int64_t power = 1;
    if (caret != std::string::npos) power = to_int64(parse_bigint(std::string_view(token).substr(caret + 1)));
    letters.push_back({g, power});
  }
  return GeneratorWord(std::move(letters));
}

std::string to_string(const GeneratorWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += to_string(l.gen);
    if (l.power != 1) out += "^" + std::to_string(l.power);
  }
  return out;
}

WeylElement evaluate(const GeneratorWord& w, const ThetaVector& theta) {
  WeylElement acc = WeylElement::identity();
  for (const Letter& l : w.letters()) acc = weyl_mul(acc, WeylElement::generator(l.gen, l.power), theta);
  return acc;
}

std::vector<Relation> torus_relations(const ThetaVector& theta) {
  return {{Generator::U1, Generator::U2, QuadNum(0)}, {Generator::V1, Generator::V2, QuadNum(0)},
          {Generator::V1, Generator::U1, theta[0]},   {Generator::V1, Generator::U2, theta[1]},
          {Generator::V2, Generator::U1, theta[2]},   {Generator::V2, Generator::U2, theta[3]}};
}

namespace {

WeylElement image_of(const Substitution& images, Generator g, const ThetaVector& theta) {
  const auto it = images.find(g);
  if (it == images.end()) throw std::invalid_argument(std::string("substitution has no image for ") + to_string(g));
  return evaluate(it->second, theta);
}

}  // namespace

std::vector<Relation> substitution_phases(const ThetaVector& theta, const Substitution& images,
                                          const std::vector<std::pair<Generator, Generator>>& pairs) {
  std::vector<Relation> out;
  out.reserve(pairs.size());
  for (const auto& [left, right] : pairs) {
    out.push_back({left, right,
                   commutator_phase(image_of(images, left, theta), image_of(images, right, theta), theta)});
  }
  return out;
}

bool substitution_check(const ThetaVector& theta, const Substitution& images, const std::vector<Relation>& expected) {
  for (const Relation& rel : expected) {
    const QuadNum got =
        commutator_phase(image_of(images, rel.left, theta), image_of(images, rel.right, theta), theta);
    if (got != mod_one(rel.phase)) return false;
  }
  return true;
}

namespace {

GeneratorWord word(std::initializer_list<std::pair<Generator, BigInt>> parts) {
  std::vector<Letter> letters;
  for (const auto& [g, power] : parts) {
    if (sgn(power) != 0) letters.push_back({g, to_int64(power)});
  }
  return GeneratorWord(std::move(letters));
}

WReading reading(const ThetaVector& theta, Substitution images) {
  WReading r;
  r.images = std::move(images);
  r.preserves_relations = substitution_check(theta, r.images, torus_relations(theta));
  return r;
}

}  // namespace

RuellePresentation ruelle_presentation(const HypMatrix& h) {
  const Mat2Z& x = h.mat();
  RuellePresentation p;
  p.matrix = x;
  p.delta = h.det();
  p.theta = theta_closed_form(h);
  p.relations = torus_relations(p.theta);
  p.u_map = x.transpose();
  p.v_map = mat_inv(x);

  const BigInt delta(p.delta);
  const GeneratorWord u1 = word({{Generator::U1, x.a}, {Generator::U2, x.b}});
  const GeneratorWord u2 = word({{Generator::U1, x.c}, {Generator::U2, x.d}});
  p.corrected = reading(p.theta, {{Generator::U1, u1},
                                  {Generator::U2, u2},
                                  {Generator::V1, word({{Generator::V1, delta * x.d}, {Generator::V2, -delta * x.c}})},
                                  {Generator::V2, word({{Generator::V1, -delta * x.b}, {Generator::V2, delta * x.a}})}});
  p.literal = reading(p.theta, {{Generator::U1, u1},
                                {Generator::U2, u2},
                                {Generator::V1, word({{Generator::V1, delta * x.d}, {Generator::U2, -delta * x.c}})},
                                {Generator::V2, word({{Generator::V1, -delta * x.b}, {Generator::U2, delta * x.a}})}});
  p.automorphism_check = ruelle_automorphism_check(h);
  return p;
}

bool bicharacter_preserved(const Mat2Z& a, const ThetaVector& theta) {
  const Mat2Z inv_t = mat_inv(a).transpose();
  const Mat2Z a_t = a.transpose();
  const std::array<std::array<QuadNum, 2>, 2> q{{{theta[0], theta[1]}, {theta[2], theta[3]}}};
  auto entry = [](const Mat2Z& m, int i, int j) -> QuadNum {
    const BigInt& v = i == 0 ? (j == 0 ? m.a : m.b) : (j == 0 ? m.c : m.d);
    return QuadNum(v);
  };
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      QuadNum sum;
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) sum += entry(inv_t, i, k) * q[k][l] * entry(a_t, l, j);
      }
      if (sum != q[i][j]) return false;
    }
  }
  return true;
}

bool ruelle_automorphism_check(const HypMatrix& h) {
  return bicharacter_preserved(h.mat(), theta_from_eigenvectors(h));
}

}  // namespace nctorus
