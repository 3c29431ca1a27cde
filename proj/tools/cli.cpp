#include "cli.hpp"

#include "nctorus/dynamics.hpp"
#include "nctorus/hyperbolic.hpp"
#include "nctorus/invariant.hpp"
#include "nctorus/theta.hpp"
#include "nctorus/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace nctorus::cli {

namespace {

using Json = nlohmann::ordered_json;

// Bad input text; mapped to exit code 2 like any other usage error.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Output {
  std::ostream& out;
  bool json = false;
  Glyph glyph = Glyph::Unicode;

  std::string str(const QuadNum& x) const { return to_string(x, glyph); }
  std::string theta_name(int i) const {
    return (glyph == Glyph::Unicode ? "\xCE\xB8" : "theta") + std::to_string(i + 1);
  }
  void emit(const Json& j) const { out << j.dump() << '\n'; }
};

Mat2Z matrix_arg(const std::string& text) {
  try {
    return parse_matrix(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

template <class T>
std::pair<T, T> pair_arg(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(std::string(what) + " must be two comma-separated values, got '" + text + "'");
  auto one = [&](const std::string& s) {
    std::istringstream in(s);
    T v{};
    in >> v;
    if (in.fail() || !(in >> std::ws).eof()) throw UsageError(std::string("malformed ") + what + " '" + text + "'");
    return v;
  };
  return {one(text.substr(0, comma)), one(text.substr(comma + 1))};
}

Json theta_json(const ThetaVector& t, const Output& o) {
  Json arr = Json::array();
  for (const QuadNum& v : t.values) arr.push_back(o.str(v));
  return arr;
}

Json rows_json(const std::array<bool, 4>& rows) {
  Json arr = Json::array();
  for (bool b : rows) arr.push_back(b);
  return arr;
}

Json identities_json(const IdentityReport& r, const ThetaVector& t, const Output& o) {
  Json j;
  j["sum_is"] = to_string(r.reconstruction_hits);
  j["sum"] = o.str(r.reconstruction);
  j["theta1_plus_theta4_is_one"] = r.sum_is_one;
  j["theta1_theta4_eq_theta2_theta3"] = r.product_relation;
  j["b_theta2_eq_c_theta3"] = r.off_diagonal;
  j["unstable_rows"] = rows_json(r.unstable_rows);
  j["stable_rows"] = rows_json(r.stable_rows);
  j["unstable_rows_swapped"] = rows_json(r.unstable_rows_swapped);
  j["stable_rows_swapped"] = rows_json(r.stable_rows_swapped);
  j["pfaffian_zero"] = SkewForm::from_theta(t).pfaffian().is_zero();
  return j;
}

Json mat_json(const Mat2Z& x) {
  return Json::array({Json::array({to_int64(x.a), to_int64(x.b)}), Json::array({to_int64(x.c), to_int64(x.d)})});
}

Json relations_json(const std::vector<Relation>& rels, const Output& o) {
  Json arr = Json::array();
  for (const Relation& r : rels) {
    Json j;
    j["left"] = to_string(r.left);
    j["right"] = to_string(r.right);
    j["phase"] = o.str(r.phase);
    arr.push_back(j);
  }
  return arr;
}

std::string relation_text(const Relation& r, const Output& o) {
  const std::string l = to_string(r.left), rt = to_string(r.right);
  if (r.phase.is_zero()) return l + " " + rt + " = " + rt + " " + l;
  return l + " " + rt + " = e(" + o.str(r.phase) + ") " + rt + " " + l;
}

std::string pass(bool b) { return b ? "pass" : "FAIL"; }

std::string rows_text(const std::array<bool, 4>& rows) {
  std::string s;
  for (bool b : rows) s += b ? '+' : '-';
  return s;
}

// ---- subcommands ----

int cmd_theta(const Output& o, const Mat2Z& x) {
  const HypMatrix h = HypMatrix::certify(x);
  const ThetaVector eig = theta_from_eigenvectors(h);
  const ThetaVector closed = theta_closed_form(h);
  const std::string relation = eig == closed ? "identity" : eig == flip_variant(closed) ? "variant" : "unrelated";
  const IdentityReport er = verify_theta_identities(eig, h);
  const IdentityReport cr = verify_theta_identities(closed, h);

  if (o.json) {
    Json j;
    j["matrix"] = to_string(x);
    j["lambda_u"] = o.str(h.lambda_u());
    j["lambda_s"] = o.str(h.lambda_s());
    j["theta"] = theta_json(eig, o);
    j["closed_form"] = theta_json(closed, o);
    j["route_relation"] = relation;
    j["identities"] = identities_json(er, eig, o);
    j["closed_form_identities"] = identities_json(cr, closed, o);
    o.emit(j);
    return 0;
  }
  o.out << "matrix " << to_string(x) << "  det=" << h.det() << "  trace=" << to_string(h.trace())
        << "  discriminant=" << to_string(h.delta()) << '\n';
  o.out << "lambda_u = " << o.str(h.lambda_u()) << "\nlambda_s = " << o.str(h.lambda_s()) << '\n';
  auto tuple = [&](const char* label, const ThetaVector& t) {
    o.out << label << '\n';
    for (int i = 0; i < 4; ++i) o.out << "  " << o.theta_name(i) << " = " << o.str(t[i]) << '\n';
  };
  tuple("eigenvector route:", eig);
  tuple("closed form:", closed);
  o.out << "routes related by: " << relation << '\n';
  auto report = [&](const char* label, const IdentityReport& r, const ThetaVector& t) {
    o.out << label << '\n'
          << "  theta1+theta4 = 1            " << pass(r.sum_is_one) << '\n'
          << "  theta1 theta4 = theta2 theta3  " << pass(r.product_relation) << '\n'
          << "  b theta2 = c theta3          " << pass(r.off_diagonal) << '\n'
          << "  unstable rows (lambda_u)     " << rows_text(r.unstable_rows) << '\n'
          << "  stable rows (lambda_s)       " << rows_text(r.stable_rows) << '\n'
          << "  pfaffian = 0                 " << pass(SkewForm::from_theta(t).pfaffian().is_zero()) << '\n'
          << "  a theta1+b theta2+c theta3+d theta4 = " << o.str(r.reconstruction) << "  ("
          << to_string(r.reconstruction_hits) << ")\n";
  };
  report("identities, eigenvector route:", er, eig);
  report("identities, closed form:", cr, closed);
  return 0;
}

int cmd_invariant(const Output& o, const Mat2Z& x) {
  const TraceRangeInvariant inv = trace_range(x);
  if (o.json) {
    o.out << to_json(inv) << '\n';
    return 0;
  }
  o.out << to_string(inv, o.glyph) << '\n' << to_json(inv) << '\n';
  return 0;
}

Json invariant_json(const TraceRangeInvariant& inv) { return Json::parse(to_json(inv)); }

int cmd_compare(const Output& o, const Mat2Z& a, const Mat2Z& b) {
  const TraceRangeInvariant ia = trace_range(a);
  const TraceRangeInvariant ib = trace_range(b);
  const bool equal = invariants_equal(ia, ib);
  if (o.json) {
    Json j;
    j["A"] = invariant_json(ia);
    j["B"] = invariant_json(ib);
    j["equal"] = equal;
    j["verdict"] = equal ? "inconclusive" : "non-isomorphic";
    o.emit(j);
    return 0;
  }
  o.out << "A: " << to_string(ia, o.glyph) << "\nB: " << to_string(ib, o.glyph) << '\n';
  if (equal) {
    o.out << "equal trace ranges: inconclusive (equal invariants do not decide flip conjugacy)\n";
  } else {
    o.out << "NOT equal: algebras non-isomorphic, (T^2, A) and (T^2, B) not flip conjugate\n";
  }
  return 0;
}

int cmd_compare_batch(const Output& o, std::istream& in) {
  std::vector<std::pair<Mat2Z, TraceRangeInvariant>> seen;
  std::vector<std::size_t> cls;
  std::size_t classes = 0;
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto end = line.find_last_not_of(" \t\r");
    const Mat2Z x = matrix_arg(line.substr(start, end - start + 1));
    TraceRangeInvariant inv = trace_range(x);
    std::size_t c = classes;
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i].second == inv) {
        c = cls[i];
        break;
      }
    }
    if (c == classes) ++classes;
    seen.emplace_back(x, std::move(inv));
    cls.push_back(c);
  }
  if (o.json) {
    Json j;
    Json arr = Json::array();
    for (std::size_t i = 0; i < seen.size(); ++i) {
      Json e;
      e["matrix"] = to_string(seen[i].first);
      e["invariant"] = invariant_json(seen[i].second);
      e["class"] = cls[i];
      arr.push_back(e);
    }
    j["matrices"] = arr;
    j["classes"] = classes;
    o.emit(j);
    return 0;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    o.out << to_string(seen[i].first) << "\tclass " << cls[i] << '\t' << to_string(seen[i].second, o.glyph) << '\n';
  }
  o.out << classes << " distinct invariant" << (classes == 1 ? "" : "s") << " among " << seen.size()
        << " matrices; distinct classes are pairwise non-isomorphic\n";
  return 0;
}

int cmd_conjugate(const Output& o, const Mat2Z& a, const Mat2Z& b, std::int64_t bound) {
  if (bound < 0) throw UsageError("--bound must be non-negative");
  const auto found = conjugator_search(a, b, bound);
  if (o.json) {
    Json j;
    j["bound"] = bound;
    j["found"] = found.has_value();
    j["M"] = found ? mat_json(found->M) : Json(nullptr);
    j["flip"] = found ? found->flip : false;
    o.emit(j);
    return 0;
  }
  if (!found) {
    o.out << "no conjugator with entries in [" << -bound << ", " << bound << "]\n";
  } else if (found->flip) {
    o.out << "A M = M B^-1 with M = " << to_string(found->M) << " (flip conjugate)\n";
  } else {
    o.out << "A M = M B with M = " << to_string(found->M) << '\n';
  }
  return 0;
}

int cmd_presentation(const Output& o, const Mat2Z& x) {
  const HypMatrix h = HypMatrix::certify(x);
  const ThetaVector t = theta_closed_form(h);
  const auto rels = torus_relations(t);
  if (o.json) {
    Json j;
    j["generators"] = {"U1", "U2", "V1", "V2"};
    j["theta"] = theta_json(t, o);
    j["relations"] = relations_json(rels, o);
    o.emit(j);
    return 0;
  }
  for (int i = 0; i < 4; ++i) o.out << o.theta_name(i) << " = " << o.str(t[i]) << '\n';
  for (const Relation& r : rels) o.out << relation_text(r, o) << '\n';
  return 0;
}

Json reading_json(const WReading& r) {
  Json j;
  Json images;
  for (const auto& [g, w] : r.images) images[to_string(g)] = to_string(w);
  j["images"] = images;
  j["preserves_relations"] = r.preserves_relations;
  return j;
}

int cmd_ruelle(const Output& o, const Mat2Z& x) {
  const RuellePresentation p = ruelle_presentation(HypMatrix::certify(x));
  const char* verified = p.corrected.preserves_relations ? "V2" : p.literal.preserves_relations ? "U2" : "none";
  if (o.json) {
    Json j;
    j["generators"] = {"U1", "U2", "V1", "V2", "W"};
    j["delta"] = p.delta;
    j["theta"] = theta_json(p.theta, o);
    j["relations"] = relations_json(p.relations, o);
    j["u_map"] = mat_json(p.u_map);
    j["v_map"] = mat_json(p.v_map);
    j["w_conjugation"] = {{"V2_reading", reading_json(p.corrected)},
                          {"U2_reading", reading_json(p.literal)},
                          {"verified", verified}};
    j["automorphism_check"] = p.automorphism_check;
    o.emit(j);
    return 0;
  }
  o.out << "delta = det A = " << p.delta << '\n';
  for (const Relation& r : p.relations) o.out << relation_text(r, o) << '\n';
  o.out << "U-exponent map (A^T): " << to_string(p.u_map) << '\n';
  o.out << "V-exponent map (delta adj A = A^-1): " << to_string(p.v_map) << '\n';
  auto reading = [&](const char* label, const WReading& r, bool marked) {
    o.out << label << (marked ? "  [verified]" : "") << (r.preserves_relations ? "" : "  [breaks relations]") << '\n';
    for (const auto& [g, w] : r.images) o.out << "  W " << to_string(g) << " W* = " << to_string(w) << '\n';
  };
  reading("W conjugation, V1/V2 reading:", p.corrected, p.corrected.preserves_relations);
  reading("W conjugation, V1/U2 reading:", p.literal, !p.corrected.preserves_relations && p.literal.preserves_relations);
  o.out << "bicharacter preserved: " << (p.automorphism_check ? "yes" : "no") << '\n';
  return 0;
}

int cmd_nondegeneracy(const Output& o, const Mat2Z& x, std::int64_t bound) {
  if (bound < 0) throw UsageError("--bound must be non-negative");
  const ThetaVector t = theta_from_eigenvectors(HypMatrix::certify(x));
  const auto degenerate = nondegeneracy_scan(t, bound);
  const auto fixing = freeness_check(t, bound);
  const bool ok = degenerate.size() == 1 && degenerate[0] == Exponents{} && fixing.size() == 1 &&
                  fixing[0] == std::pair<std::int64_t, std::int64_t>{0, 0};
  if (o.json) {
    Json j;
    j["bound"] = bound;
    j["degenerate"] = degenerate;
    j["fixing_pairs"] = fixing;
    j["nondegenerate"] = ok;
    o.emit(j);
    return 0;
  }
  auto vec = [](const Exponents& g) {
    return "(" + std::to_string(g[0]) + "," + std::to_string(g[1]) + "," + std::to_string(g[2]) + "," +
           std::to_string(g[3]) + ")";
  };
  o.out << "degenerate g with |g| <= " << bound << ":";
  for (const Exponents& g : degenerate) o.out << ' ' << vec(g);
  o.out << "\nfixing (m,n) with |m|,|n| <= " << bound << ":";
  for (const auto& [m, n] : fixing) o.out << " (" << m << ',' << n << ')';
  o.out << '\n' << (ok ? "non-degenerate and free within bound" : "DEGENERATE within bound") << '\n';
  return 0;
}

int cmd_simulate(const Output& o, const Mat2Z& x, const std::string& point, const std::string& mn, int steps, double tol,
                 bool csv) {
  const auto [x1, x2] = pair_arg<double>(point, "--point");
  const auto [m, n] = pair_arg<std::int64_t>(mn, "--mn");
  const HypMatrix h = HypMatrix::certify(x);
  if (steps < 0 || steps > kMaxAsymptoticSteps) {
    throw UsageError("--steps must lie in [0, " + std::to_string(kMaxAsymptoticSteps) + "]");
  }
  const AsymptoticReport r = asymptotic_pair_report(x, TorusPoint::reduced(x1, x2), m, n, steps, tol);
  if (csv) {
    o.out << "k,forward,backward\n" << std::setprecision(17);
    for (std::size_t k = 0; k < r.forward.size(); ++k) o.out << k << ',' << r.forward[k] << ',' << r.backward[k] << '\n';
    return 0;
  }
  if (o.json) {
    Json j;
    j["forward"] = r.forward;
    j["backward"] = r.backward;
    j["converged"] = r.converged();
    o.emit(j);
    return 0;
  }
  o.out << std::setw(3) << "k" << std::setw(16) << "forward" << std::setw(16) << "backward" << '\n';
  o.out << std::scientific << std::setprecision(6);
  for (std::size_t k = 0; k < r.forward.size(); ++k) {
    o.out << std::setw(3) << k << std::setw(16) << r.forward[k] << std::setw(16) << r.backward[k] << '\n';
  }
  o.out << std::defaultfloat << std::setprecision(6);
  o.out << "forward contraction " << measured_contraction(r.forward) << " (|lambda_s| = " << std::fabs(to_double(h.lambda_s()))
        << ")\n";
  o.out << "backward contraction " << measured_contraction(r.backward)
        << " (1/|lambda_u| = " << 1.0 / std::fabs(to_double(h.lambda_u())) << ")\n";
  o.out << "converged below " << tol << ": forward " << (r.converged_forward ? "yes" : "no") << ", backward "
        << (r.converged_backward ? "yes" : "no") << '\n';
  return 0;
}

int cmd_density(const Output& o, const Mat2Z& x, std::int64_t N, int grid, const std::string& point) {
  if (N < 0) throw UsageError("--N must be non-negative");
  if (grid <= 0) throw UsageError("--grid must be positive");
  const auto [x1, x2] = pair_arg<double>(point, "--point");
  const double radius = orbit_density_estimate(x, TorusPoint::reduced(x1, x2), N, grid);
  if (o.json) {
    Json j;
    j["N"] = N;
    j["grid"] = grid;
    j["covering_radius"] = radius;
    o.emit(j);
    return 0;
  }
  o.out << "covering radius (N=" << N << ", grid=" << grid << "): " << std::setprecision(6) << radius << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact slope tuples and trace-range invariants of hyperbolic toral automorphisms", "nctorus"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false, ascii = false;
  app.add_flag("--json", json, "Machine-readable JSON output");
  app.add_flag("--ascii", ascii, "Render square roots as sqrt(D)");

  std::string a_text, b_text, point = "0,0", mn = "1,0";
  std::int64_t bound = 3, N = 40;
  int steps = 20, grid = 50;
  double tol = 1e-5;
  bool use_stdin = false, csv = false;

  auto matrix_help = "Matrix a,b;c,d or {\"rows\":[[a,b],[c,d]]}";
  auto* theta = app.add_subcommand("theta", "Slope tuple by both routes with identity report");
  theta->add_option("A", a_text, matrix_help)->required();
  auto* invariant = app.add_subcommand("invariant", "Canonical trace-range invariant");
  invariant->add_option("A", a_text, matrix_help)->required();
  auto* compare = app.add_subcommand("compare", "Compare invariants of A and B (or of matrices on stdin)");
  compare->add_option("A", a_text, matrix_help);
  compare->add_option("B", b_text, matrix_help);
  compare->add_flag("--stdin", use_stdin, "Read one matrix per line and group by invariant");
  auto* conjugate = app.add_subcommand("conjugate", "Search M in GL(2,Z) with A M = M B or A M = M B^-1");
  conjugate->add_option("A", a_text, matrix_help)->required();
  conjugate->add_option("B", b_text, matrix_help)->required();
  conjugate->add_option("--bound", bound, "Entry bound for M")->capture_default_str();
  auto* presentation = app.add_subcommand("presentation", "Commutation relations of the four unitaries");
  presentation->add_option("A", a_text, matrix_help)->required();
  auto* ruelle = app.add_subcommand("ruelle", "Five-unitary presentation and bicharacter check");
  ruelle->add_option("A", a_text, matrix_help)->required();
  auto* nondeg = app.add_subcommand("nondegeneracy", "Bounded scan for degenerate exponents");
  nondeg->add_option("A", a_text, matrix_help)->required();
  nondeg->add_option("--bound", bound, "Max-norm bound")->capture_default_str();
  auto* simulate = app.add_subcommand("simulate", "Float check that x and x + alpha(m,n) are asymptotic");
  simulate->add_option("A", a_text, matrix_help)->required();
  simulate->add_option("--point", point, "Torus point x1,x2")->capture_default_str();
  simulate->add_option("--mn", mn, "Translation index m,n")->capture_default_str();
  simulate->add_option("--steps", steps, "Iterations in each direction (<= 25)")->capture_default_str();
  simulate->add_option("--tol", tol, "Convergence tolerance")->capture_default_str();
  simulate->add_flag("--csv", csv, "Distance sequences as CSV");
  auto* density = app.add_subcommand("density", "Covering radius of a finite alpha-orbit");
  density->add_option("A", a_text, matrix_help)->required();
  density->add_option("--N", N, "Orbit index bound")->capture_default_str();
  density->add_option("--grid", grid, "Sample grid size")->capture_default_str();
  density->add_option("--point", point, "Base point x1,x2")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; every genuine parse failure is a usage error.
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  const Output o{out, json, ascii ? Glyph::Ascii : Glyph::Unicode};
  try {
    if (theta->parsed()) return cmd_theta(o, matrix_arg(a_text));
    if (invariant->parsed()) return cmd_invariant(o, matrix_arg(a_text));
    if (compare->parsed()) {
      if (use_stdin) {
        if (!a_text.empty()) throw UsageError("compare --stdin takes no matrix arguments");
        return cmd_compare_batch(o, in);
      }
      if (a_text.empty() || b_text.empty()) throw UsageError("compare needs two matrices A B, or --stdin");
      return cmd_compare(o, matrix_arg(a_text), matrix_arg(b_text));
    }
    if (conjugate->parsed()) return cmd_conjugate(o, matrix_arg(a_text), matrix_arg(b_text), bound);
    if (presentation->parsed()) return cmd_presentation(o, matrix_arg(a_text));
    if (ruelle->parsed()) return cmd_ruelle(o, matrix_arg(a_text));
    if (nondeg->parsed()) return cmd_nondegeneracy(o, matrix_arg(a_text), bound);
    if (simulate->parsed()) return cmd_simulate(o, matrix_arg(a_text), point, mn, steps, tol, csv);
    if (density->parsed()) return cmd_density(o, matrix_arg(a_text), N, grid, point);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace nctorus::cli
