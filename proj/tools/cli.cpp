#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qaff/character.hpp"
#include "qaff/io.hpp"
#include "qaff/prefund.hpp"
#include "qaff/weyl.hpp"

namespace qaff::cli {

namespace {

using ojson = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  int r = 0;
  int depth = 0;
  int kmax = 4;
  std::string sign = "neg";
  std::string format = "json";
  std::string method = "both";
  std::string root;
  std::string order = "type";
  bool pretty = false;
};

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

ojson integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

const CartanData& load_type(const Options& o) {
  try {
    return cartan_data(o.type);
  } catch (const CartanError& e) {
    throw UsageError(std::string(e.what()) +
                     " (valid: A1.., B2.., C2.., D4.., E6, E7, E8, F4, G2)");
  }
}

void check_r(const CartanData& cd, int r) {
  if (r < 1 || r > cd.rank())
    throw UsageError("--r " + std::to_string(r) + " out of range for " + cd.type().name() + ": need 1.." +
                     std::to_string(cd.rank()));
}

std::vector<int> cominuscule_nodes(const CartanData& cd) {
  std::vector<int> out;
  for (int r = 1; r <= cd.rank(); ++r)
    if (cd.is_cominuscule(r)) out.push_back(r);
  return out;
}

Realization make_realization(const CartanData& cd, const Options& o) {
  check_r(cd, o.r);
  Sign s;
  try {
    s = parse_sign(o.sign);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!cd.is_cominuscule(o.r)) {
    auto nodes = cominuscule_nodes(cd);
    throw UsageError("node " + std::to_string(o.r) + " of " + cd.type().name() +
                     " is not cominuscule; the module realization requires a cominuscule node (" +
                     (nodes.empty() ? std::string("none in this type") : "valid: " + join(nodes)) + ")");
  }
  return Realization(cd, o.r, s);
}

void emit(std::ostream& out, const ojson& j, const Options& o) {
  out << (o.pretty ? j.dump(2) : j.dump()) << "\n";
}

ojson shuffle_json(const ShuffleElement& x) {
  ojson arr = ojson::array();
  for (const auto& [w, c] : canonical_terms(x)) arr.push_back({{"word", word_str(w)}, {"coefficient", c.str()}});
  return arr;
}

ojson module_vector_json(const ModuleVector& v) {
  ojson arr = ojson::array();
  for (const auto& [k, x] : v.parts()) arr.push_back({{"a_power", k}, {"terms", shuffle_json(x)}});
  return arr;
}

std::string coords_text(const Coords& c) { return "(" + join(c) + ")"; }

// subcommands

int cmd_cartan(const Options& o, std::ostream& out) {
  const CartanData& cd = load_type(o);
  if (o.format == "text") {
    out << "type " << cd.type().name() << "\n";
    for (const auto& row : cd.matrix()) out << "  " << join(row, " ") << "\n";
    out << "kac labels " << join(cd.kac_labels(), " ") << "\n";
    out << "dual kac labels " << join(cd.dual_kac_labels(), " ") << "\n";
    out << "symmetrizers " << join(cd.symmetrizers(), " ") << "\n";
    out << "cominuscule " << join(cominuscule_nodes(cd), " ") << "\n";
    return kOk;
  }
  ojson j;
  j["type"] = cd.type().name();
  j["rank"] = cd.rank();
  j["matrix"] = cd.matrix();
  j["kac_labels"] = cd.kac_labels();
  j["dual_kac_labels"] = cd.dual_kac_labels();
  j["symmetrizers"] = cd.symmetrizers();
  j["theta"] = cd.theta();
  j["cominuscule"] = cominuscule_nodes(cd);
  emit(out, j, o);
  return kOk;
}

int cmd_weyl_factor(const Options& o, std::ostream& out) {
  const CartanData& cd = load_type(o);
  check_r(cd, o.r);
  ExtendedWeylElement g = factor_translation(cd, o.r);
  // the reported permutation sends tau(i) back to i
  std::vector<int> tau = g.tau_inverse();
  if (o.format == "text") {
    out << "w_r = s_" << join(g.word, " s_") << "\n";
    out << "tau " << join(tau, " ") << "\n";
    out << "length " << g.length() << "\n";
    return kOk;
  }
  ojson j;
  j["word"] = g.word;
  j["tau"] = tau;
  j["length"] = g.length();
  emit(out, j, o);
  return kOk;
}

int cmd_weyl_inversions(const Options& o, std::ostream& out) {
  const CartanData& cd = load_type(o);
  check_r(cd, o.r);
  auto inv = inversion_set_from_word(cd, factor_translation(cd, o.r).word);
  if (o.format == "text") {
    for (const auto& b : inv) out << b.str() << "\n";
    return kOk;
  }
  ojson j = ojson::array();
  for (const auto& b : inv) j.push_back({{"root", b.finite}, {"delta", b.delta}});
  emit(out, j, o);
  return kOk;
}

int cmd_character(const Options& o, std::ostream& out) {
  const CartanData& cd = load_type(o);
  check_r(cd, o.r);
  if (o.depth < 0) throw UsageError("--depth must be nonnegative");
  if (o.method != "pbw" && o.method != "product" && o.method != "both")
    throw UsageError("--method must be pbw, product or both");
  std::optional<CharacterSeries> pbw, prod;
  if (o.method != "product") pbw = pbw_character(cd, o.r, o.depth);
  if (o.method != "pbw") prod = my_product_series(cd, o.r, o.depth);
  const CharacterSeries& shown = prod ? *prod : *pbw;
  std::optional<CharacterComparison> cmp;
  if (pbw && prod) cmp = compare(*pbw, *prod);
  std::vector<std::pair<Coords, mpz_class>> coeffs(shown.coefficients.begin(), shown.coefficients.end());
  std::stable_sort(coeffs.begin(), coeffs.end(), [](const auto& a, const auto& b) {
    int ha = height(a.first), hb = height(b.first);
    return ha != hb ? ha < hb : a.first < b.first;
  });
  if (o.format == "text") {
    if (cmp) out << "equal " << (cmp->equal ? "true" : "false") << "\n";
    for (const auto& [w, c] : coeffs) out << coords_text(w) << " " << c.get_str() << "\n";
  } else {
    ojson j;
    if (cmp) {
      j["equal"] = cmp->equal;
      j["first_discrepancy"] = cmp->first_discrepancy ? ojson(*cmp->first_discrepancy) : ojson(nullptr);
      if (!cmp->equal) {
        j["pbw"] = integer_json(cmp->left);
        j["product"] = integer_json(cmp->right);
      }
    }
    j["type"] = cd.type().name();
    j["r"] = o.r;
    j["depth"] = o.depth;
    j["method"] = o.method;
    ojson arr = ojson::array();
    for (const auto& [w, c] : coeffs) arr.push_back({{"weight", w}, {"value", integer_json(c)}});
    j["coefficients"] = arr;
    emit(out, j, o);
  }
  return cmp && !cmp->equal ? kVerificationFailed : kOk;
}

int cmd_rootvec(const Options& o, std::ostream& out) {
  const CartanData& cd = load_type(o);
  Coords beta;
  {
    std::stringstream ss(o.root);
    std::string tok;
    try {
      while (std::getline(ss, tok, ',')) beta.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("--root expects comma-separated integers");
    }
  }
  if (static_cast<int>(beta.size()) != cd.rank() || !cd.is_root(beta))
    throw UsageError("--root " + o.root + " is not a positive root of " + cd.type().name());
  ShuffleElement x;
  try {
    ShuffleAlgebra alg(cd);
    if (o.order == "module") {
      check_r(cd, o.r);
      RootVectors rv(alg, Alphabet::module_default(cd, o.r));
      x = rv.get(beta);
    } else if (o.order == "type") {
      x = dual_root_vector(alg, beta);
    } else {
      throw UsageError("--order must be type or module");
    }
  } catch (const LyndonError& e) {
    throw UsageError(e.what());
  }
  if (o.format == "text") {
    for (const auto& [w, c] : canonical_terms(x)) out << "[" << word_str(w) << "] " << c.str() << "\n";
    return kOk;
  }
  emit(out, shuffle_json(x), o);
  return kOk;
}

int cmd_serre(const Options& o, std::ostream& out) {
  const CartanData& cd = load_type(o);
  if (o.depth < 0) throw UsageError("--depth must be nonnegative");
  Realization real = make_realization(cd, o);
  SerreReport rep = real.serre_check(o.depth);
  if (o.format == "text") {
    out << (rep.pass ? "PASS" : "FAIL") << " serre " << cd.type().name() << " r=" << o.r << " "
        << sign_name(real.sign()) << " depth=" << o.depth << " basis=" << rep.basis_size << " checks=" << rep.checks
        << "\n";
    for (const auto& f : rep.failures)
      out << "  (i,j)=(" << f.i << "," << f.j << ") basis vector " << f.basis_index << "\n";
  } else {
    ojson j;
    j["pass"] = rep.pass;
    j["type"] = cd.type().name();
    j["r"] = o.r;
    j["sign"] = sign_name(real.sign());
    j["depth"] = o.depth;
    j["basis_size"] = rep.basis_size;
    j["checks"] = rep.checks;
    ojson fails = ojson::array();
    for (const auto& f : rep.failures)
      fails.push_back({{"i", f.i}, {"j", f.j}, {"basis_index", f.basis_index}, {"defect", module_vector_json(f.defect)}});
    j["failures"] = fails;
    emit(out, j, o);
  }
  return rep.pass ? kOk : kVerificationFailed;
}

int cmd_ell_weight(const Options& o, std::ostream& out) {
  const CartanData& cd = load_type(o);
  if (o.kmax < 3) throw UsageError("--kmax must be at least 3");
  Realization real = make_realization(cd, o);
  LWeightSeries s = real.ell_weight(o.kmax);
  bool ok = real.sign() == Sign::negative ? s.fit == FitKind::geometric && s.consistency : s.fit == FitKind::linear;
  for (int i = 1; i <= cd.rank(); ++i)
    if (i != o.r) ok = ok && real.psi_coefficient(i, 1).is_zero();
  if (o.format == "text") {
    out << "k  Psi_{" << o.r << ",k}\n";
    for (std::size_t k = 0; k < s.psi.size(); ++k) out << k << "  " << s.psi[k].str() << "\n";
    out << "fit " << fit_name(s.fit) << "\n";
    if (s.c_r) out << "c_r " << s.c_r->str() << "\n";
  } else {
    ojson j;
    ojson psi = ojson::array();
    for (const auto& p : s.psi) psi.push_back(p.str());
    j["psi"] = psi;
    j["fit"] = fit_name(s.fit);
    j["c_r"] = s.c_r ? ojson(s.c_r->str()) : ojson(nullptr);
    j["type"] = cd.type().name();
    j["r"] = o.r;
    j["sign"] = sign_name(real.sign());
    j["kmax"] = o.kmax;
    j["o_r"] = 1;
    j["b"] = s.b.str();
    if (s.fit == FitKind::geometric) {
      j["ratio"] = s.ratio.str();
      j["consistency"] = s.consistency;
    }
    j["pass"] = ok;
    emit(out, j, o);
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const CartanData& cd = load_type(o);
  if (o.depth < 0) throw UsageError("--depth must be nonnegative");
  Realization real = make_realization(cd, o);
  ClosureReport rep = real.closure_check(o.depth);
  if (o.format == "text") {
    out << (rep.pass ? "PASS" : "FAIL") << " closure " << cd.type().name() << " r=" << o.r << " "
        << sign_name(real.sign()) << " depth=" << o.depth << " basis=" << rep.basis_size << " checks=" << rep.checks
        << "\n";
    for (const auto& f : rep.failures) out << "  i=" << f.i << " basis vector " << f.basis_index << ": " << f.reason << "\n";
  } else {
    ojson j;
    j["pass"] = rep.pass;
    j["type"] = cd.type().name();
    j["r"] = o.r;
    j["sign"] = sign_name(real.sign());
    j["depth"] = o.depth;
    j["basis_size"] = rep.basis_size;
    j["checks"] = rep.checks;
    ojson fails = ojson::array();
    for (const auto& f : rep.failures)
      fails.push_back({{"i", f.i}, {"basis_index", f.basis_index}, {"reason", f.reason}});
    j["failures"] = fails;
    emit(out, j, o);
  }
  return rep.pass ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for prefundamental modules of quantum affine algebras", "qaff"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sc, bool needs_r) {
    sc->add_option("--type", o.type, "Type such as A2, C3, E6")->required();
    auto* r = sc->add_option("--r", o.r, "Node index in 1..n");
    if (needs_r) r->required();
    sc->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sc->add_flag("--pretty", o.pretty, "Indent JSON output");
  };

  auto* cartan = app.add_subcommand("cartan", "Affine Cartan matrix, labels and symmetrizers");
  add_common(cartan, false);

  auto* weyl = app.add_subcommand("weyl", "Translation factorization and inversion sets");
  weyl->require_subcommand(1);
  auto* factor = weyl->add_subcommand("factor", "t_r^{-1} as a reduced word times a diagram automorphism");
  add_common(factor, true);
  auto* inversions = weyl->add_subcommand("inversions", "Inversion set of the reduced word");
  add_common(inversions, true);

  auto* character = app.add_subcommand("character", "Truncated character of the PBW basis and the product formula");
  add_common(character, true);
  character->add_option("--depth", o.depth, "Truncation height")->required();
  character->add_option("--method", o.method, "pbw, product or both");

  auto* rootvec = app.add_subcommand("rootvec", "Dual root vector in the shuffle algebra");
  add_common(rootvec, false);
  rootvec->add_option("--root", o.root, "Root coordinates, e.g. 1,2,2")->required();
  rootvec->add_option("--order", o.order, "Alphabet: type (default) or module (needs --r)");

  auto* serre = app.add_subcommand("serre-check", "Quantum Serre relations on the module basis");
  add_common(serre, true);
  serre->add_option("--sign", o.sign, "neg or pos");
  serre->add_option("--depth", o.depth, "Basis height bound")->required();

  auto* ell = app.add_subcommand("ell-weight", "Highest l-weight coefficients and their closed form");
  add_common(ell, true);
  ell->add_option("--sign", o.sign, "neg or pos");
  ell->add_option("--kmax", o.kmax, "Number of coefficients (>= 3)");

  auto* closure = app.add_subcommand("closure", "Closure of the module basis under the e_i");
  add_common(closure, true);
  closure->add_option("--sign", o.sign, "neg or pos");
  closure->add_option("--depth", o.depth, "Basis height bound")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (cartan->parsed()) return cmd_cartan(o, out);
    if (factor->parsed()) return cmd_weyl_factor(o, out);
    if (inversions->parsed()) return cmd_weyl_inversions(o, out);
    if (character->parsed()) return cmd_character(o, out);
    if (rootvec->parsed()) return cmd_rootvec(o, out);
    if (serre->parsed()) return cmd_serre(o, out);
    if (ell->parsed()) return cmd_ell_weight(o, out);
    if (closure->parsed()) return cmd_closure(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedCase& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CartanError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace qaff::cli
