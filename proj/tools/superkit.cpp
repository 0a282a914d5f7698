#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "superkit/catalog.hpp"
#include "superkit/enveloping.hpp"
#include "superkit/errors.hpp"
#include "superkit/families.hpp"
#include "superkit/io.hpp"
#include "superkit/reps.hpp"
#include "superkit/roots.hpp"
#include "superkit/supercomm.hpp"
#include "superkit/verify.hpp"

using namespace superkit;
using json = nlohmann::ordered_json;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;
constexpr int kWitness = 3;
constexpr int kInconclusive = 4;
constexpr int kNotInG1ss = 5;

struct Common {
  std::string family;
  std::string algebra_file;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  bool lax = false;
};

void add_source(CLI::App* cmd, Common& c) {
  auto* f = cmd->add_option("--family", c.family, "Built-in family spec, e.g. osp1:2, gl:1:1, product:osp1:1,osp1:1");
  auto* a = cmd->add_option("--algebra", c.algebra_file, "Algebra file");
  f->excludes(a);
  cmd->add_flag("--lax", c.lax, "Accept files that fail validation, with warnings");
}

void add_output(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Seed for randomized searches (default from SUPERKIT_SEED)");
  cmd->add_flag("--json", c.json, "Machine-readable output");
}

ParsedAlgebra load(const Common& c, bool strict = true) {
  if (!c.family.empty()) return {build_family(c.family), {}};
  if (!c.algebra_file.empty()) return load_algebra(c.algebra_file, ParseOptions{strict && !c.lax});
  throw InvalidArgument("one of --family or --algebra is required");
}

std::vector<std::string> strings(const RatVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

SuperModule named_module(const LieSuperalgebra& g, const std::string& name) {
  if (name == "induced") return induced_trivial(g);
  if (name == "trivial") return trivial_module(g);
  if (name == "adjoint") return adjoint_module(g);
  if (name == "defining") {
    if (!g.faithful_rep()) throw MissingFaithfulRep("algebra has no defining representation");
    return *g.faithful_rep();
  }
  return load_module(name, g).module;
}

int cmd_check(const Common& c) {
  // Axiom violations are reported here rather than rejected by the parser.
  const auto parsed = load(c, false);
  const auto& g = parsed.algebra;
  const auto report = validate(g);
  const bool qr = report.ok() && g.faithful_rep() && is_quasireductive(g);
  const auto z = report.ok() ? center(g) : std::vector<RatVector>{};
  json j{{"name", g.name()}, {"even_dim", g.even_dim()}, {"odd_dim", g.odd_dim()}, {"valid", report.ok()},
         {"violations", json::array()}, {"warnings", parsed.warnings}, {"quasireductive", qr},
         {"center", json::array()}};
  for (const auto& v : report.violations) j["violations"].push_back(v.detail);
  for (const auto& v : z) j["center"].push_back(format_element(g, v));
  std::ostringstream os;
  os << g.name() << ": dim " << g.even_dim() << "|" << g.odd_dim() << "\n";
  for (const auto& w : parsed.warnings)
    if (w != report.summary(10)) os << "warning: " << w << "\n";
  os << "axioms: " << report.summary() << "\n";
  if (report.ok()) {
    os << "quasireductive: " << (qr ? "yes" : g.faithful_rep() ? "no" : "unknown (no faithful representation)")
       << "\n";
    os << "center: dim " << z.size();
    for (const auto& v : z) os << "  " << format_element(g, v);
    os << "\n";
  }
  emit(c, j, os.str());
  return report.ok() ? kOk : kViolation;
}

int cmd_classify(const Common& c) {
  const auto g = load(c).algebra;
  const auto scan = g1ss_structural_scan(g, {}, c.seed);
  bool inconclusive = false;
  json j{{"name", g.name()}, {"factors", json::array()}};
  std::ostringstream os;
  os << g.name() << "\n";
  for (std::size_t i = 0; i < scan.factors.size(); ++i) {
    const auto& f = scan.factors[i];
    inconclusive |= f.outcome.kind == ClassificationOutcome::Kind::Inconclusive;
    json jf{{"dim", std::to_string(f.even_dim) + "|" + std::to_string(f.odd_dim)},
            {"outcome", to_string(f.outcome.kind)}};
    if (f.outcome.kind == ClassificationOutcome::Kind::Osp) jf["n"] = f.outcome.n;
    if (!f.outcome.reason.empty()) jf["reason"] = f.outcome.reason;
    j["factors"].push_back(jf);
    os << "factor " << i + 1 << " (" << f.even_dim << "|" << f.odd_dim << "): ";
    if (f.outcome.kind == ClassificationOutcome::Kind::Witness)
      os << "witness (see below)\n";
    else if (f.outcome.kind == ClassificationOutcome::Kind::Osp)
      os << "Osp(" << f.outcome.n << ")\n";
    else if (f.odd_dim == 0)
      os << "even\n";
    else
      os << "inconclusive: " << f.outcome.reason << "\n";
  }
  if (scan.used_fallback) os << "no direct-sum splitting; odd root spaces of g searched directly\n";
  j["used_fallback"] = scan.used_fallback;
  j["certified_zero"] = scan.certified_zero;
  if (scan.witness) {
    j["witness"] = strings(*scan.witness);
    j["witness_text"] = format_element(g, *scan.witness);
    os << "witness u = " << format_element(g, *scan.witness) << "\n";
    os << "u^2 = " << format_element(g, odd_square(g, *scan.witness)) << "\n";
    os << "coordinates: " << to_string(*scan.witness) << "\n";
  } else if (scan.certified_zero) {
    os << "g1ss = {0}\n";
  } else if (!scan.reason.empty()) {
    os << scan.reason << "\n";
  }
  emit(c, j, os.str());
  if (scan.witness) return kWitness;
  if (inconclusive || !scan.certified_zero) return kInconclusive;
  return kOk;
}

int cmd_ghost(const Common& c, int djokovic, const std::string& side_name) {
  if (djokovic > 0) {
    const auto d = verify_djokovic(djokovic);
    json j{{"n", djokovic},
           {"invariant_left", d.invariant_left},
           {"antipode_invariant_right", d.antipode_invariant_right},
           {"proportional_to_ghost", d.proportional_to_ghost},
           {"epsilon", d.epsilon.to_string()},
           {"expected_epsilon", d.expected_epsilon.to_string()},
           {"ok", d.ok()}};
    std::ostringstream os;
    os << "Djokovic element for osp(1|" << 2 * djokovic << ")\n"
       << "v invariant in U/(U g0): " << (d.invariant_left ? "yes" : "no") << "\n"
       << "S(v) invariant in U/(g0 U): " << (d.antipode_invariant_right ? "yes" : "no") << "\n"
       << "spans the invariant line: " << (d.proportional_to_ghost ? "yes" : "no") << "\n"
       << "eps(v) = " << d.epsilon << " (expected " << d.expected_epsilon << ")\n";
    emit(c, j, os.str());
    return d.ok() ? kOk : kViolation;
  }
  const auto g = load(c).algebra;
  const Side side = side_name == "left" ? Side::Left : Side::Right;
  const auto r = ghost_criterion(g, side);
  json j{{"name", g.name()},
         {"side", to_string(side)},
         {"coinvariant_dim", r.ghost.v.size()},
         {"invariant_dim", r.ghost.invariant_dim},
         {"v", strings(r.ghost.v)},
         {"epsilon", r.ghost.epsilon.to_string()},
         {"verdict", to_string(r.verdict)}};
  std::ostringstream os;
  os << g.name() << ", " << to_string(side) << " coinvariants of dim " << r.ghost.v.size() << "\n"
     << "invariant dim: " << r.ghost.invariant_dim << "\n";
  if (r.ghost.invariant_dim > 0) {
    os << "v =";
    for (std::size_t mask = 0; mask < r.ghost.v.size(); ++mask) {
      if (r.ghost.v[mask].is_zero()) continue;
      os << " " << (r.ghost.v[mask] > Rational(0) ? "+" : "") << r.ghost.v[mask] << "*(";
      const auto m = subset_monomial(g, mask);
      for (std::size_t k = 0; k < m.size(); ++k) os << (k ? " " : "") << g.label(m[k]);
      os << ")";
    }
    os << "\n";
  }
  os << "eps(v) = " << r.ghost.epsilon << "\n" << "verdict: " << to_string(r.verdict) << "\n";
  emit(c, j, os.str());
  return kOk;
}

json ds_json(const DSResult& d) {
  return json{{"even", d.even_dim}, {"odd", d.odd_dim}, {"fixed_dim", d.fixed_dim}};
}

int cmd_ds(const Common& c, const std::string& u_text, const std::string& module, const std::vector<std::string>& pair) {
  const auto g = load(c).algebra;
  const RatVector u = u_text.empty() ? RatVector(g.dim()) : parse_element(g, u_text);
  if (!is_odd_element(g, u) || !in_g1ss(g, u)) {
    std::cerr << "error: u = " << format_element(g, u) << " is not in g1ss"
              << (is_odd_element(g, u) ? " (u^2 = " + format_element(g, odd_square(g, u)) + " is not semisimple)"
                                       : " (not odd)")
              << "\n";
    return kNotInG1ss;
  }
  json j{{"name", g.name()}, {"u", format_element(g, u)}};
  std::ostringstream os;
  os << g.name() << ", u = " << format_element(g, u) << "\n";
  if (!pair.empty()) {
    const auto m = named_module(g, pair[0]);
    const auto n = named_module(g, pair[1]);
    const auto r = ds_tensor_check(g, u, m, n);
    j["m"] = ds_json(r.m);
    j["n"] = ds_json(r.n);
    j["tensor"] = ds_json(r.product);
    j["expected"] = json{{"even", r.expected_even}, {"odd", r.expected_odd}};
    j["ok"] = r.ok();
    os << "DS(M) = " << r.m.even_dim << "|" << r.m.odd_dim << ", DS(N) = " << r.n.even_dim << "|" << r.n.odd_dim
       << "\nDS(M (x) N) = " << r.product.even_dim << "|" << r.product.odd_dim << ", expected " << r.expected_even
       << "|" << r.expected_odd << (r.ok() ? " (ok)" : " (MISMATCH)") << "\n";
    emit(c, j, os.str());
    return r.ok() ? kOk : kViolation;
  }
  const auto m = named_module(g, module.empty() ? "induced" : module);
  const auto d = ds_functor(g, u, m);
  j["module_dim"] = json{{"even", m.even_dim()}, {"odd", m.odd_dim()}};
  j["ds"] = ds_json(d);
  os << "module dim " << m.even_dim() << "|" << m.odd_dim() << ", h-invariants " << d.fixed_dim << "\n"
     << "DS = " << d.even_dim << "|" << d.odd_dim << "\n";
  emit(c, j, os.str());
  return kOk;
}

int cmd_witness_splitting(const Common& c, const std::string& file, const std::string& pair_name) {
  SupercommPair p;
  if (!file.empty()) {
    const auto parsed = load_supercomm(file, ParseOptions{!c.lax});
    p = SupercommPair{parsed.algebra.name(), parsed.algebra, parsed.u, true};
  } else if (!pair_name.empty()) {
    bool found = false;
    for (const auto& q : supercomm_catalog())
      if (q.name == pair_name) {
        p = q;
        found = true;
      }
    if (!found) throw InvalidArgument("unknown pair '" + pair_name + "'");
  } else {
    // Dual coinvariant algebra of a g1ss witness of g.
    const auto g = load(c).algebra;
    const auto scan = g1ss_structural_scan(g, {}, c.seed);
    if (!scan.witness) throw InvalidArgument(g.name() + " has no g1ss witness to build a derivation from");
    p = coinvariant_dual_pair(g, *scan.witness);
  }
  json j{{"name", p.name}, {"dim", p.algebra.dim()}};
  std::ostringstream os;
  os << p.name << ", dim " << p.algebra.dim() << "\n";
  try {
    const auto r = splitting_witness(p.algebra, p.u);
    const bool verified = p.u.apply(r.f) == p.algebra.unit();
    j["f"] = format_element(p.algebra, r.f);
    j["f_coords"] = strings(r.f);
    j["eta_nilpotency"] = r.eta_nilpotency;
    j["verified"] = verified;
    os << "f = " << format_element(p.algebra, r.f) << "\n"
       << "u(f) = 1: " << (verified ? "yes" : "NO") << "\n"
       << "eta nilpotent of order " << r.eta_nilpotency << "\n";
    emit(c, j, os.str());
    return verified ? kOk : kViolation;
  } catch (const Vanishing& e) {
    j["vanishing"] = true;
    j["error"] = e.what();
    os << "vanishing: " << e.what() << "\n";
    emit(c, j, os.str());
    return kViolation;
  }
}

int cmd_modcheck(const Common& c, const std::string& module) {
  const auto g = load(c).algebra;
  const auto parsed = load_module(module, g, ParseOptions{!c.lax});
  const auto& m = parsed.module;
  const auto report = validate_module(g, m);
  json j{{"module", parsed.name}, {"dim", std::to_string(m.even_dim()) + "|" + std::to_string(m.odd_dim())},
         {"valid", report.ok()}, {"warnings", parsed.warnings}};
  std::ostringstream os;
  os << parsed.name << ": dim " << m.even_dim() << "|" << m.odd_dim() << "\n";
  for (const auto& w : parsed.warnings) os << "warning: " << w << "\n";
  os << "module axioms: " << report.summary() << "\n";
  if (report.ok()) {
    const bool ss = is_module_semisimple(g, m);
    const bool integ = is_integrable(g, m);
    j["semisimple"] = ss;
    j["integrable"] = integ;
    os << "semisimple: " << (ss ? "yes" : "no") << "\nintegrable: " << (integ ? "yes" : "no") << "\n";
  }
  emit(c, j, os.str());
  return report.ok() ? kOk : kViolation;
}

int cmd_verify_all(const Common& c, const std::string& filter, bool corrupt, bool verbose) {
  VerifyOptions opts;
  opts.seed = c.seed;
  opts.filter = filter;
  opts.corrupt_structure = corrupt;
  const auto report = verify_all(opts);
  json j{{"seed", c.seed}, {"ok", report.ok()}, {"criteria", json::array()}};
  std::ostringstream os;
  for (const auto& r : report.results) {
    j["criteria"].push_back(json{{"id", r.id},
                                 {"key", r.key},
                                 {"title", r.title},
                                 {"pass", r.pass},
                                 {"seconds", r.seconds},
                                 {"budget_seconds", r.budget_seconds},
                                 {"failure", r.failure},
                                 {"details", r.details}});
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.key << "  " << r.title << "  ("
       << static_cast<int>(r.seconds * 1000) << " ms)\n";
    if (verbose || !r.pass)
      for (const auto& d : r.details) os << "        " << d << "\n";
  }
  if (const auto* f = report.first_failure()) {
    j["first_failure"] = f->key;
    os << "first failing criterion: " << f->id << " " << f->key << ": " << f->failure << "\n";
  } else {
    os << "all " << report.results.size() << " criteria passed\n";
  }
  emit(c, j, os.str());
  return report.ok() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional Lie superalgebras"};
  app.require_subcommand(1);
  Common c;
  if (const char* s = std::getenv("SUPERKIT_SEED")) {
    try {
      c.seed = std::stoull(s);
    } catch (const std::exception&) {
      std::cerr << "error: SUPERKIT_SEED is not an unsigned integer\n";
      return kInputError;
    }
  }

  auto* check = app.add_subcommand("check", "Validate the axioms, report quasireductivity and the center");
  add_source(check, c);
  add_output(check, c);

  auto* classify = app.add_subcommand("classify", "Decompose and classify factors; find a g1ss witness");
  add_source(classify, c);
  add_output(classify, c);

  int djokovic = 0;
  std::string side = "right";
  auto* ghost = app.add_subcommand("ghost", "Ghost element and the eps(v) semisimplicity criterion");
  add_source(ghost, c);
  add_output(ghost, c);
  ghost->add_option("--djokovic", djokovic, "Verify the Djokovic element of osp(1|2n)")->check(CLI::Range(1, 4));
  ghost->add_option("--side", side, "Coinvariant side")->check(CLI::IsMember({"left", "right"}));

  std::string u_text, module;
  std::vector<std::string> tensor;
  auto* ds = app.add_subcommand("ds", "Duflo-Serganova functor");
  add_source(ds, c);
  add_output(ds, c);
  ds->add_option("--u", u_text, "Odd element, e.g. E12=1,E21=1 or coordinates (default 0)");
  auto* mod_opt =
      ds->add_option("--module", module, "Module file, or one of induced, defining, trivial, adjoint (default induced)");
  ds->add_option("--tensor", tensor, "Two modules M N for the tensor check")->expected(2)->excludes(mod_opt);

  std::string sc_file, pair_name;
  auto* split = app.add_subcommand("witness-splitting", "Construct f with u(f) = 1 for an odd derivation");
  add_source(split, c);
  add_output(split, c);
  split->add_option("--file", sc_file, "Supercommutative algebra file with a derivation");
  split->add_option("--pair", pair_name, "Built-in pair: exterior_d, circle_x_dxi, coinvariant_dual_gl(1|1), ...");

  std::string modfile;
  auto* modcheck = app.add_subcommand("modcheck", "Validate a module and test semisimplicity");
  add_source(modcheck, c);
  add_output(modcheck, c);
  modcheck->add_option("--module", modfile, "Module file")->required();

  std::string filter;
  bool corrupt = false, verbose = false;
  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
  add_output(verify, c);
  verify->add_option("--filter", filter, "Run one criterion, by key or number");
  verify->add_flag("--corrupt", corrupt, "Perturb one structure constant of every built family");
  verify->add_flag("-v,--verbose", verbose, "Print every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*check) return cmd_check(c);
    if (*classify) return cmd_classify(c);
    if (*ghost) return cmd_ghost(c, djokovic, side);
    if (*ds) return cmd_ds(c, u_text, module, tensor);
    if (*split) return cmd_witness_splitting(c, sc_file, pair_name);
    if (*modcheck) return cmd_modcheck(c, modfile);
    if (*verify) return cmd_verify_all(c, filter, corrupt, verbose);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
  return kInputError;
}
