#include "nctorus/theta.hpp"

#include <algorithm>

namespace nctorus {

ThetaVector theta_closed_form(const HypMatrix& h) {
  const Mat2Z& x = h.mat();
  const QuadNum& root = h.sqrt_delta();
  const QuadNum skew = QuadNum(x.a - x.d) / root;
  const QuadNum half = QuadNum::rational(1, 2);
  return {{half * (QuadNum(1) + skew), QuadNum(x.c) / root, QuadNum(x.b) / root, half * (QuadNum(1) - skew)},
          ThetaSource::ClosedForm};
}

ThetaVector theta_from_eigenvectors(const HypMatrix& h) {
  const QuadNum& u1 = h.v_u().x;
  const QuadNum& u2 = h.v_u().y;
  const QuadNum& s1 = h.v_s().x;
  const QuadNum& s2 = h.v_s().y;
  const QuadNum w = u1 * s2 - u2 * s1;
  return {{u1 * s2 / w, u2 * s2 / w, -(u1 * s1) / w, -(u2 * s1) / w}, ThetaSource::Eigenvector};
}

ThetaVector flip_variant(const ThetaVector& theta) {
  return {{theta[3], -theta[1], -theta[2], theta[0]}, theta.source};
}

const char* to_string(Eigenvalue e) {
  switch (e) {
    case Eigenvalue::Unstable:
      return "lambda_u";
    case Eigenvalue::Stable:
      return "lambda_s";
    case Eigenvalue::Neither:
      break;
  }
  return "neither";
}

bool IdentityReport::all_pass() const {
  auto all = [](const std::array<bool, 4>& rows) { return std::all_of(rows.begin(), rows.end(), [](bool b) { return b; }); };
  return sum_is_one && product_relation && off_diagonal && all(unstable_rows) && all(stable_rows) &&
         reconstruction_hits == Eigenvalue::Unstable;
}

namespace {

std::array<bool, 4> unstable_rows_for(const ThetaVector& t, const Mat2Z& x, const QuadNum& lambda) {
  const QuadNum a(x.a), b(x.b), c(x.c), d(x.d);
  return {a * t[0] + b * t[1] == lambda * t[0], a * t[2] + b * t[3] == lambda * t[2],
          c * t[0] + d * t[1] == lambda * t[1], c * t[2] + d * t[3] == lambda * t[3]};
}

std::array<bool, 4> stable_rows_for(const ThetaVector& t, const Mat2Z& x, const QuadNum& lambda) {
  const QuadNum a(x.a), b(x.b), c(x.c), d(x.d);
  return {a * t[2] - b * t[0] == lambda * t[2], a * t[3] - b * t[1] == lambda * t[3],
          c * t[2] - d * t[0] == -(lambda * t[0]), c * t[3] - d * t[1] == -(lambda * t[1])};
}

}  // namespace

IdentityReport verify_theta_identities(const ThetaVector& t, const HypMatrix& h) {
  for (const QuadNum& v : t.values) common_field(v, h.sqrt_delta());
  const Mat2Z& x = h.mat();
  IdentityReport r;
  r.sum_is_one = t[0] + t[3] == QuadNum(1);
  r.product_relation = t[0] * t[3] == t[1] * t[2];
  r.off_diagonal = QuadNum(x.b) * t[1] == QuadNum(x.c) * t[2];
  r.unstable_rows = unstable_rows_for(t, x, h.lambda_u());
  r.unstable_rows_swapped = unstable_rows_for(t, x, h.lambda_s());
  r.stable_rows = stable_rows_for(t, x, h.lambda_s());
  r.stable_rows_swapped = stable_rows_for(t, x, h.lambda_u());
  r.reconstruction = QuadNum(x.a) * t[0] + QuadNum(x.b) * t[1] + QuadNum(x.c) * t[2] + QuadNum(x.d) * t[3];
  if (r.reconstruction == h.lambda_u()) {
    r.reconstruction_hits = Eigenvalue::Unstable;
  } else if (r.reconstruction == h.lambda_s()) {
    r.reconstruction_hits = Eigenvalue::Stable;
  }
  return r;
}

SkewForm SkewForm::from_theta(const ThetaVector& theta) {
  Matrix e{};
  auto set = [&](std::size_t j, std::size_t k, const QuadNum& v) {
    e[j][k] = v;
    e[k][j] = -v;
  };
  set(0, 2, theta[3]);
  set(0, 3, theta[2]);
  set(1, 2, theta[1]);
  set(1, 3, theta[0]);
  return SkewForm(e);
}

SkewForm SkewForm::from_entries(const Matrix& entries) {
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = j; k < 4; ++k) {
      if (!(entries[j][k] + entries[k][j]).is_zero()) {
        throw std::invalid_argument("skew form is not antisymmetric at (" + std::to_string(j + 1) + "," +
                                    std::to_string(k + 1) + ")");
      }
    }
  }
  return SkewForm(entries);
}

QuadNum SkewForm::pfaffian() const {
  const Matrix& t = entries_;
  return t[0][1] * t[2][3] - t[0][2] * t[1][3] + t[0][3] * t[1][2];
}

std::array<QuadNum, 8> exp_wedge_generators(const SkewForm& form) {
  const auto& t = form.entries();
  return {QuadNum(1), form.pfaffian(), t[0][1], t[0][2], t[0][3], t[1][2], t[1][3], t[2][3]};
}

std::pair<QuadNum, QuadNum> alpha_translation(const ThetaVector& theta, const BigInt& m, const BigInt& n) {
  const QuadNum qm(m), qn(n);
  return {mod_one(qm * theta[0] + qn * theta[2]), mod_one(qm * theta[1] + qn * theta[3])};
}

std::vector<std::pair<std::int64_t, std::int64_t>> freeness_check(const ThetaVector& theta, std::int64_t bound) {
  std::vector<std::pair<std::int64_t, std::int64_t>> fixing;
  for (std::int64_t m = -bound; m <= bound; ++m) {
    for (std::int64_t n = -bound; n <= bound; ++n) {
      const auto [x1, x2] = alpha_translation(theta, BigInt(static_cast<long>(m)), BigInt(static_cast<long>(n)));
      if (x1.is_zero() && x2.is_zero()) fixing.emplace_back(m, n);
    }
  }
  return fixing;
}

}  // namespace nctorus
