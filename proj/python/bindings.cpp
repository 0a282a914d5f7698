#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superkit/catalog.hpp"
#include "superkit/enveloping.hpp"
#include "superkit/errors.hpp"
#include "superkit/families.hpp"
#include "superkit/io.hpp"
#include "superkit/reps.hpp"
#include "superkit/roots.hpp"
#include "superkit/supercomm.hpp"
#include "superkit/verify.hpp"

namespace py = pybind11;
using namespace superkit;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.to_string());
}

py::list to_py(const RatVector& v) {
  py::list out;
  for (const auto& x : v) out.append(fraction(x));
  return out;
}

// Accepts ints, Fractions, or rational strings; or a "label=coef" string.
RatVector from_py(const LieSuperalgebra& g, const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_element(g, obj.cast<std::string>());
  RatVector v;
  for (auto item : obj) v.push_back(Rational::parse(py::str(item).cast<std::string>()));
  if (v.size() != g.dim()) throw DimensionMismatch("element has " + std::to_string(v.size()) + " coordinates");
  return v;
}

SuperModule module_of(const LieSuperalgebra& g, const std::string& spec) {
  if (spec == "induced") return induced_trivial(g);
  if (spec == "trivial") return trivial_module(g);
  if (spec == "adjoint") return adjoint_module(g);
  if (spec == "defining") {
    if (!g.faithful_rep()) throw MissingFaithfulRep("algebra has no defining representation");
    return *g.faithful_rep();
  }
  return parse_module_string(spec, g).module;
}

py::dict ds_dict(const DSResult& d) {
  py::dict out;
  out["even"] = d.even_dim;
  out["odd"] = d.odd_dim;
  out["fixed_dim"] = d.fixed_dim;
  return out;
}

py::dict splitting(const SupercommPair& p) {
  const auto r = splitting_witness(p.algebra, p.u);
  py::dict out;
  out["name"] = p.name;
  out["f"] = to_py(r.f);
  out["f_text"] = format_element(p.algebra, r.f);
  out["verified"] = p.u.apply(r.f) == p.algebra.unit();
  out["eta_nilpotency"] = r.eta_nilpotency;
  return out;
}

}  // namespace

PYBIND11_MODULE(_superkit, m) {
  m.doc() = "Exact computations with finite-dimensional Lie superalgebras";

  auto base = py::register_exception<Error>(m, "SuperkitError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<Vanishing>(m, "Vanishing", base.ptr());
  py::register_exception<NotInG1ss>(m, "NotInG1ss", base.ptr());

  m.attr("DEFAULT_SEED") = kDefaultSeed;

  py::class_<LieSuperalgebra>(m, "LieSuperalgebra")
      .def_property_readonly("name", &LieSuperalgebra::name)
      .def_property_readonly("dim", &LieSuperalgebra::dim)
      .def_property_readonly("even_dim", &LieSuperalgebra::even_dim)
      .def_property_readonly("odd_dim", &LieSuperalgebra::odd_dim)
      .def_property_readonly("labels", &LieSuperalgebra::labels)
      .def_property_readonly("parities",
                             [](const LieSuperalgebra& g) {
                               std::vector<std::string> out;
                               for (auto p : g.parities()) out.push_back(to_string(p));
                               return out;
                             })
      .def("bracket", [](const LieSuperalgebra& g, const py::object& x,
                         const py::object& y) { return to_py(bracket(g, from_py(g, x), from_py(g, y))); })
      .def("format", [](const LieSuperalgebra& g, const py::object& x) { return format_element(g, from_py(g, x)); })
      .def("to_text", [](const LieSuperalgebra& g) { return write_algebra(g); })
      .def("__eq__", [](const LieSuperalgebra& a, const LieSuperalgebra& b) { return a == b; })
      .def("__repr__", [](const LieSuperalgebra& g) {
        return "<LieSuperalgebra " + g.name() + " " + std::to_string(g.even_dim()) + "|" +
               std::to_string(g.odd_dim()) + ">";
      });

  m.def("family", &build_family, py::arg("spec"), "Built-in family, e.g. 'osp1:2', 'gl:1:1', 'product:osp1:1,torus:1'");
  m.def("parse_algebra", [](const std::string& text, bool strict) {
    return parse_algebra_string(text, ParseOptions{strict}).algebra;
  }, py::arg("text"), py::arg("strict") = true);
  m.def("load_algebra", [](const std::string& path, bool strict) {
    return load_algebra(path, ParseOptions{strict}).algebra;
  }, py::arg("path"), py::arg("strict") = true);

  m.def("check", [](const LieSuperalgebra& g) {
    const auto report = validate(g);
    py::dict out;
    std::vector<std::string> violations;
    for (const auto& v : report.violations) violations.push_back(v.detail);
    out["valid"] = report.ok();
    out["violations"] = violations;
    if (report.ok()) {
      out["quasireductive"] = g.faithful_rep() ? py::cast(is_quasireductive(g)) : py::none();
      py::list z;
      for (const auto& v : center(g)) z.append(to_py(v));
      out["center"] = z;
    }
    return out;
  }, py::arg("g"));

  m.def("in_g1ss", [](const LieSuperalgebra& g, const py::object& u) {
    const RatVector v = from_py(g, u);
    return is_odd_element(g, v) && in_g1ss(g, v);
  }, py::arg("g"), py::arg("u"));

  m.def("classify", [](const LieSuperalgebra& g, std::uint64_t seed) {
    const auto scan = g1ss_structural_scan(g, {}, seed);
    py::dict out;
    py::list factors;
    for (const auto& f : scan.factors) {
      py::dict d;
      d["even_dim"] = f.even_dim;
      d["odd_dim"] = f.odd_dim;
      d["outcome"] = to_string(f.outcome.kind);
      d["n"] = f.outcome.n;
      d["reason"] = f.outcome.reason;
      factors.append(d);
    }
    out["factors"] = factors;
    out["witness"] = scan.witness ? py::object(to_py(*scan.witness)) : py::none();
    out["certified_zero"] = scan.certified_zero;
    out["used_fallback"] = scan.used_fallback;
    return out;
  }, py::arg("g"), py::arg("seed") = kDefaultSeed);

  m.def("ghost", [](const LieSuperalgebra& g, const std::string& side) {
    const auto r = ghost_criterion(g, side == "left" ? Side::Left : Side::Right);
    py::dict out;
    out["invariant_dim"] = r.ghost.invariant_dim;
    out["v"] = to_py(r.ghost.v);
    out["epsilon"] = fraction(r.ghost.epsilon);
    out["verdict"] = to_string(r.verdict);
    return out;
  }, py::arg("g"), py::arg("side") = "right");

  m.def("djokovic", [](int n) {
    const auto d = verify_djokovic(n);
    py::dict out;
    out["invariant_left"] = d.invariant_left;
    out["antipode_invariant_right"] = d.antipode_invariant_right;
    out["proportional_to_ghost"] = d.proportional_to_ghost;
    out["epsilon"] = fraction(d.epsilon);
    out["expected_epsilon"] = fraction(d.expected_epsilon);
    out["ok"] = d.ok();
    return out;
  }, py::arg("n"));

  m.def("ds", [](const LieSuperalgebra& g, const py::object& u, const std::string& module) {
    const RatVector v = u.is_none() ? RatVector(g.dim()) : from_py(g, u);
    if (!is_odd_element(g, v) || !in_g1ss(g, v)) throw NotInG1ss("u = " + format_element(g, v) + " is not in g1ss");
    return ds_dict(ds_functor(g, v, module_of(g, module)));
  }, py::arg("g"), py::arg("u") = py::none(), py::arg("module") = "induced",
        "Graded dims of DS_u(M); module is 'induced', 'defining', 'trivial', 'adjoint' or module-file text.");

  m.def("ds_tensor", [](const LieSuperalgebra& g, const py::object& u, const std::string& a, const std::string& b) {
    const RatVector v = from_py(g, u);
    if (!is_odd_element(g, v) || !in_g1ss(g, v)) throw NotInG1ss("u = " + format_element(g, v) + " is not in g1ss");
    const auto r = ds_tensor_check(g, v, module_of(g, a), module_of(g, b));
    py::dict out;
    out["m"] = ds_dict(r.m);
    out["n"] = ds_dict(r.n);
    out["tensor"] = ds_dict(r.product);
    out["ok"] = r.ok();
    return out;
  }, py::arg("g"), py::arg("u"), py::arg("m"), py::arg("n"));

  m.def("is_module_semisimple", [](const LieSuperalgebra& g, const std::string& module) {
    return is_module_semisimple(g, module_of(g, module));
  }, py::arg("g"), py::arg("module"));

  m.def("supercomm_pairs", [] {
    std::vector<std::string> names;
    for (const auto& p : supercomm_catalog()) names.push_back(p.name);
    return names;
  });

  m.def("witness_splitting", [](const std::string& source) {
    for (const auto& p : supercomm_catalog())
      if (p.name == source) return splitting(p);
    const auto parsed = parse_supercomm_string(source);
    return splitting(SupercommPair{parsed.algebra.name(), parsed.algebra, parsed.u, true});
  }, py::arg("source"), "Splitting element f with u(f) = 1 for a built-in pair name or supercomm-file text.");

  m.def("witness_splitting_dual", [](const LieSuperalgebra& g, std::uint64_t seed) {
    const auto scan = g1ss_structural_scan(g, {}, seed);
    if (!scan.witness) throw InvalidArgument(g.name() + " has no g1ss witness");
    return splitting(coinvariant_dual_pair(g, *scan.witness));
  }, py::arg("g"), py::arg("seed") = kDefaultSeed);

  m.def("verify_all", [](const std::string& filter, std::uint64_t seed, bool corrupt) {
    VerifyOptions opts;
    opts.filter = filter;
    opts.seed = seed;
    opts.corrupt_structure = corrupt;
    py::list out;
    for (const auto& r : verify_all(opts).results) {
      py::dict d;
      d["id"] = r.id;
      d["key"] = r.key;
      d["pass"] = r.pass;
      d["seconds"] = r.seconds;
      d["failure"] = r.failure;
      d["details"] = r.details;
      out.append(d);
    }
    return out;
  }, py::arg("filter") = "", py::arg("seed") = kDefaultSeed, py::arg("corrupt") = false);
}
