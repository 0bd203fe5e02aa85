#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>

#include "qhess/classical_f.hpp"
#include "qhess/coordinate_ring.hpp"
#include "qhess/hessenberg.hpp"
#include "qhess/poly_io.hpp"
#include "qhess/quantized.hpp"
#include "qhess/symmetric.hpp"
#include "qhess/verify.hpp"

namespace {

using namespace qhess;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GlobalFlags {
  bool json = false;
  std::uint64_t seed = 20240917;
  int n_max = 0;
  std::string order = "grevlex";
  long degree_bound = 40;
};

MonomialOrder order_from_name(const std::string& name) {
  MonomialOrder order;
  if (name == "grevlex")
    order.kind = MonomialOrder::Kind::grevlex;
  else if (name == "grlex")
    order.kind = MonomialOrder::Kind::grlex;
  else
    throw CLI::ValidationError("--order", "must be grevlex or grlex");
  return order;
}

void emit_poly(const Polynomial& p, bool json) {
  if (json)
    std::cout << poly_to_json(p).dump() << "\n";
  else
    std::cout << to_text(p) << "\n";
}

nlohmann::json vars_json(const Registry& reg) {
  nlohmann::json out = nlohmann::json::array();
  for (VarId id = 0; id < reg.size(); ++id)
    out.push_back({{"name", reg.var(id).name}, {"degree", reg.var(id).degree}});
  return out;
}

int run_gen(const GlobalFlags& flags, const std::string& object, int a, int b,
            const std::string& method, const std::string& hess_csv, int n_flag) {
  if (object == "f" || object == "F") {
    const int i = a, j = b;
    auto reg = Registry::xq(std::max(i, 1));
    if (object == "f") {
      FMethod m = FMethod::recursion;
      if (method == "closed")
        m = FMethod::closed;
      else if (method == "recursion" || method.empty())
        m = FMethod::recursion;
      else if (method == "eh")
        m = FMethod::eh;
      else if (method == "determinant")
        m = FMethod::determinant;
      else
        throw std::invalid_argument("unknown f method '" + method + "'");
      emit_poly(classical_f(reg, i, j, m), flags.json);
    } else {
      QFMethod m = QFMethod::recursion;
      if (method == "quantize")
        m = QFMethod::quantize;
      else if (method == "recursion" || method.empty())
        m = QFMethod::recursion;
      else if (method == "determinant")
        m = QFMethod::determinant;
      else
        throw std::invalid_argument("unknown F method '" + method + "'");
      emit_poly(quantized_f(reg, i, j, m), flags.json);
    }
    return kExitPass;
  }
  if (object == "E") {
    const int i = a, n = b;
    auto reg = Registry::full(std::max(n, 1));
    EMethod m = EMethod::recursion;
    if (method == "charpoly")
      m = EMethod::charpoly;
    else if (method == "recursion" || method.empty())
      m = EMethod::recursion;
    else if (method == "strings")
      m = EMethod::strings;
    else
      throw std::invalid_argument("unknown E method '" + method + "'");
    emit_poly(quantized_elementary(reg, i, n, m), flags.json);
    return kExitPass;
  }
  if (object == "hE") {
    const int i = a, n = b;
    if (hess_csv.empty()) throw std::invalid_argument("hE requires --hess");
    auto h = HessenbergFunction::parse_csv(hess_csv);
    auto reg = Registry::xq(std::max(n, 1));
    emit_poly(truncated_quantized_elementary(reg, h, i, n), flags.json);
    return kExitPass;
  }
  if (object == "e" || object == "h_sym") {
    const int i = a, n = b;
    auto reg = Registry::xs(std::max(n, 1));
    emit_poly(object == "e" ? elementary(reg, i, n) : complete(reg, i, n), flags.json);
    return kExitPass;
  }
  if (object == "nu" || object == "xi") {
    const int i = a, j = b;
    const int n = n_flag > 0 ? n_flag : std::max(i, j);
    auto reg = Registry::full(n);
    OperatorChoice choice = object == "nu" ? OperatorChoice::regular_nilpotent
                                           : OperatorChoice::regular_semisimple;
    emit_poly(defining_minor(reg, choice, i, j, n), flags.json);
    return kExitPass;
  }
  throw std::invalid_argument("unknown object '" + object + "'");
}

int run_verify(const GlobalFlags& flags, const std::string& suite) {
  VerifyOptions opt;
  opt.n_max = flags.n_max;
  opt.seed = flags.seed;
  opt.order = order_from_name(flags.order);
  opt.degree_bound = flags.degree_bound;
  VerificationReport report = run_suite(suite, opt);
  if (flags.json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.to_text();
  if (report.resource_exhausted()) return kExitUsage;
  return report.passed() ? kExitPass : kExitFail;
}

int run_presentation(const GlobalFlags& flags, const std::string& target_name,
                     const std::string& hess_csv, bool with_hilbert) {
  auto h = HessenbergFunction::parse_csv(hess_csv);
  const int n = h.n();
  PresentationTarget target;
  RegistryPtr reg;
  if (target_name == "cohomology") {
    target = PresentationTarget::cohomology_regular_nilpotent;
    reg = Registry::xs(n);
  } else if (target_name == "semisimple") {
    target = PresentationTarget::coordring_regular_semisimple;
    reg = Registry::xq(n);
  } else if (target_name == "nilpotent") {
    target = PresentationTarget::coordring_regular_nilpotent;
    reg = Registry::xq(n);
  } else {
    throw std::invalid_argument("unknown presentation target '" + target_name + "'");
  }
  std::vector<Polynomial> gens = presentation_generators(reg, target, h);

  nlohmann::json out;
  out["target"] = target_name;
  out["h"] = h.values();
  out["h_dual"] = h.dual().values();
  out["n"] = n;
  out["vars"] = vars_json(*reg);
  nlohmann::json jgens = nlohmann::json::array();
  nlohmann::json jdegs = nlohmann::json::array();
  for (const auto& g : gens) {
    jgens.push_back(to_text(g));
    auto d = g.homogeneous_degree();
    jdegs.push_back(d ? nlohmann::json(*d) : nlohmann::json(nullptr));
  }
  out["generators"] = jgens;
  out["degrees"] = jdegs;
  if (with_hilbert) {
    MonomialOrder order = order_from_name(flags.order);
    GroebnerBasis gb = buchberger(gens, order);
    HilbertSeries series = hilbert_series(gb, flags.degree_bound);
    out["hilbert"] = series.coeffs;
  }
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact constructors and verification suites for Hessenberg polynomial families\n"
      "(f, E, F, truncations, defining minors) with Groebner and Hilbert tools"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "emit machine-readable JSON");
  app.add_option("--seed", flags.seed, "seed for randomized checks");
  app.add_option("--n-max", flags.n_max,
                 "bound for verification suites (>= 2; Groebner-backed checks stay at their "
                 "documented caps)");
  app.add_option("--order", flags.order, "monomial order: grevlex or grlex")
      ->check(CLI::IsMember({"grevlex", "grlex"}));
  app.add_option("--degree-bound", flags.degree_bound, "degree bound for Hilbert series");

  // gen
  auto* gen = app.add_subcommand("gen", "construct one polynomial and print it");
  std::string gen_object, gen_method, gen_hess;
  int gen_a = 0, gen_b = 0, gen_n = 0;
  gen->add_option("object", gen_object, "f|F|E|hE|e|h_sym|nu|xi")->required();
  gen->add_option("a", gen_a, "first index")->required();
  gen->add_option("b", gen_b, "second index (j for f/F/nu/xi, n for E/hE/e/h_sym)")->required();
  gen->add_option("--method", gen_method, "construction route where applicable");
  gen->add_option("--hess", gen_hess, "Hessenberg function csv (for hE)");
  gen->add_option("--n", gen_n, "ambient rank n (for nu/xi)");

  // verify
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  verify->add_option("suite", suite, "suite name or 'all'")
      ->required()
      ->check(CLI::IsMember(suite_names()));

  // presentation
  auto* pres = app.add_subcommand("presentation", "emit presentation generators as JSON");
  std::string pres_target, pres_h;
  bool pres_hilbert = false;
  pres->add_option("target", pres_target, "cohomology|semisimple|nilpotent")->required();
  pres->add_option("h", pres_h, "Hessenberg function csv, e.g. 3,4,4,5,5")->required();
  pres->add_flag("--hilbert", pres_hilbert, "include the Hilbert series of the quotient");

  // diagram
  auto* diagram = app.add_subcommand("diagram", "render the shaded-box configuration");
  std::string diagram_h;
  bool diagram_dual = false;
  diagram->add_option("h", diagram_h, "Hessenberg function csv")->required();
  diagram->add_flag("--dual", diagram_dual, "render the dual function instead");

  // dual
  auto* dual = app.add_subcommand("dual", "print the dual Hessenberg function");
  std::string dual_h;
  dual->add_option("h", dual_h, "Hessenberg function csv")->required();

  // dim
  auto* dim = app.add_subcommand("dim", "print the dimension sum of h(j) - j");
  std::string dim_h;
  dim->add_option("h", dim_h, "Hessenberg function csv")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(flags, gen_object, gen_a, gen_b, gen_method, gen_hess, gen_n);
    if (verify->parsed()) return run_verify(flags, suite);
    if (pres->parsed()) return run_presentation(flags, pres_target, pres_h, pres_hilbert);
    if (diagram->parsed()) {
      auto h = HessenbergFunction::parse_csv(diagram_h);
      if (diagram_dual) h = h.dual();
      if (flags.json) {
        nlohmann::json rows = nlohmann::json::array();
        std::string grid = h.diagram();
        std::string row;
        for (char c : grid + "\n")
          if (c == '\n') {
            rows.push_back(row);
            row.clear();
          } else {
            row += c;
          }
        std::cout << nlohmann::json{{"h", h.values()}, {"grid", rows}}.dump(2) << "\n";
      } else {
        std::cout << h.diagram() << "\n";
      }
      return kExitPass;
    }
    if (dual->parsed()) {
      auto h = HessenbergFunction::parse_csv(dual_h);
      if (flags.json)
        std::cout << nlohmann::json{{"h", h.values()}, {"dual", h.dual().values()}}.dump() << "\n";
      else
        std::cout << h.dual().to_csv() << "\n";
      return kExitPass;
    }
    if (dim->parsed()) {
      auto h = HessenbergFunction::parse_csv(dim_h);
      if (flags.json)
        std::cout << nlohmann::json{{"h", h.values()}, {"dimension", h.dimension()}}.dump()
                  << "\n";
      else
        std::cout << h.dimension() << "\n";
      return kExitPass;
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
