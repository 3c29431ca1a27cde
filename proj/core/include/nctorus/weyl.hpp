#pragma once

// Normal-ordered monomials e^{2πi·phase} V1^a1 U1^b1 V2^a2 U2^b2 in the unitaries
// of the four-dimensional non-commutative torus, subject to
//
//   U1 U2 = U2 U1,  V1 V2 = V2 V1,
//   V1 U1 = e(θ1) U1 V1,  V1 U2 = e(θ2) U2 V1,
//   V2 U1 = e(θ3) U1 V2,  V2 U2 = e(θ4) U2 V2,      e(t) = e^{2πi t}.
//
// Phases are exact field elements reduced into [0, 1).

#include "nctorus/hyperbolic.hpp"
#include "nctorus/quadnum.hpp"
#include "nctorus/theta.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nctorus {

/// (a1, b1, a2, b2): exponents of V1, U1, V2, U2 in normal order.
using Exponents = std::array<std::int64_t, 4>;

enum class Generator { U1, U2, V1, V2, W };

const char* to_string(Generator g);
/// Throws std::invalid_argument for unknown names.
Generator parse_generator(std::string_view name);

/// Componentwise 2x2 determinants
/// (a1 d1 - b1 c1, a1 d2 - b2 c1, a2 d1 - b1 c2, a2 d2 - b2 c2).
Exponents wedge(const Exponents& g, const Exponents& h);

/// θ·(g∧h) mod 1.
QuadNum rho_exponent(const ThetaVector& theta, const Exponents& g, const Exponents& h);

struct WeylElement {
  QuadNum phase;  // in [0, 1)
  Exponents exp{};

  static WeylElement identity() { return {}; }
  /// Throws std::invalid_argument for W.
  static WeylElement generator(Generator g, std::int64_t power = 1);

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

WeylElement weyl_mul(const WeylElement& x, const WeylElement& y, const ThetaVector& theta);
WeylElement weyl_inverse(const WeylElement& x, const ThetaVector& theta);

/// Phase φ with x y = e(φ) y x, i.e. the phase of x y x⁻¹ y⁻¹.
QuadNum commutator_phase(const WeylElement& x, const WeylElement& y, const ThetaVector& theta);

/// u_g u_h u_g⁻¹ u_h⁻¹ (via weyl_mul) against rho_exponent(θ, g, h).
bool commutator_check(const ThetaVector& theta, const Exponents& g, const Exponents& h);

/// All g with max-norm <= bound such that θ·(g∧e_i) is an integer for every basis vector e_i.
std::vector<Exponents> nondegeneracy_scan(const ThetaVector& theta, std::int64_t bound);

struct Letter {
  Generator gen;
  std::int64_t power;
};

class GeneratorWord {
 public:
  GeneratorWord() = default;
  /// Throws std::invalid_argument on a zero power.
  explicit GeneratorWord(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

 private:
  std::vector<Letter> letters_;
};

/// Space-separated letters such as `U1 U2^2 V1^-1`; `1` is the empty word.
GeneratorWord parse_word(std::string_view text);
std::string to_string(const GeneratorWord& w);

/// Normal-orders a word. Throws std::invalid_argument if it contains W.
WeylElement evaluate(const GeneratorWord& w, const ThetaVector& theta);

/// X Y = e(phase) Y X.
struct Relation {
  Generator left;
  Generator right;
  QuadNum phase;
};

/// The six defining relations, phases θ_i as given (not reduced).
std::vector<Relation> torus_relations(const ThetaVector& theta);

using Substitution = std::map<Generator, GeneratorWord>;

/// Commutation phases (mod 1) between the images of the pairs listed in `pairs`.
std::vector<Relation> substitution_phases(const ThetaVector& theta, const Substitution& images,
                                          const std::vector<std::pair<Generator, Generator>>& pairs);

/// Every expected (X, Y, φ) holds for the images modulo 1.
/// Throws std::invalid_argument when an image is missing or contains W.
bool substitution_check(const ThetaVector& theta, const Substitution& images, const std::vector<Relation>& expected);

/// Images of U1, U2, V1, V2 under conjugation by W, and whether they preserve every relation.
struct WReading {
  Substitution images;
  bool preserves_relations = false;
};

struct RuellePresentation {
  Mat2Z matrix;
  int delta = 1;
  ThetaVector theta;                 // closed form
  std::vector<Relation> relations;   // the six torus relations
  Mat2Z u_map;                       // Aᵀ acting on (b1, b2)
  Mat2Z v_map;                       // δ·adj(A) = A⁻¹ acting on (a1, a2)
  WReading corrected;                // W V_i W* written in V1, V2
  WReading literal;                  // W V_i W* written in V1, U2 as printed
  bool automorphism_check = false;
};

RuellePresentation ruelle_presentation(const HypMatrix& h);

/// (A⁻¹)ᵀ Q Aᵀ = Q for Q = [[θ1, θ2], [θ3, θ4]], exactly.
bool bicharacter_preserved(const Mat2Z& a, const ThetaVector& theta);

/// bicharacter_preserved with the eigenvector-route θ of H.
bool ruelle_automorphism_check(const HypMatrix& h);

}  // namespace nctorus
