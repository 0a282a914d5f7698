#include "superkit/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "superkit/errors.hpp"
#include "superkit/reps.hpp"

namespace superkit {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    std::istringstream ss(text);
    Line line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::string rest_of(const Line& l) {
  std::string s;
  for (std::size_t t = 1; t < l.tokens.size(); ++t) s += (t > 1 ? " " : "") + l.tokens[t];
  return s;
}

[[noreturn]] void fail(const Line& l, const std::string& msg) {
  throw ParseError("line " + std::to_string(l.number) + ": " + msg);
}

Rational rat(const Line& l, const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    fail(l, "bad rational '" + s + "'");
  }
}

Parity par(const Line& l, const std::string& s) {
  if (s == "even" || s == "0") return Parity::Even;
  if (s == "odd" || s == "1") return Parity::Odd;
  fail(l, "bad parity '" + s + "'");
}

void arity(const Line& l, std::size_t n) {
  if (l.tokens.size() != n) {
    fail(l, "'" + l.tokens[0] + "' expects " + std::to_string(n - 1) + " argument(s), got " +
                std::to_string(l.tokens.size() - 1));
  }
}

// Reads `rows` lines of `cols` rationals starting at lines[pos].
RatMatrix read_grid(const std::vector<Line>& lines, std::size_t& pos, std::size_t rows, std::size_t cols,
                    const Line& header) {
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (pos >= lines.size()) fail(header, "matrix ends early, expected " + std::to_string(rows) + " rows");
    const Line& l = lines[pos++];
    if (l.tokens.size() != cols) {
      fail(l, "matrix row has " + std::to_string(l.tokens.size()) + " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rat(l, l.tokens[c]);
  }
  return m;
}

void write_grid(std::ostream& os, const RatMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << " ";
    for (std::size_t c = 0; c < m.cols(); ++c) os << ' ' << m(r, c);
    os << '\n';
  }
}

std::size_t label_index(const Line& l, const std::map<std::string, std::size_t>& labels, const std::string& s) {
  auto it = labels.find(s);
  if (it == labels.end()) fail(l, "unknown label '" + s + "'");
  return it->second;
}

template <class T>
T open_and(const std::string& path, T (*parse)(std::istream&, const ParseOptions&), const ParseOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse(in, opts);
}

}  // namespace

ParsedAlgebra parse_algebra(std::istream& in, const ParseOptions& opts) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("line 0: empty input");
  std::size_t pos = 0;
  const Line& head = lines[pos++];
  if (head.tokens[0] != "algebra" || head.tokens.size() < 2) fail(head, "expected 'algebra <name>'");
  const std::string name = rest_of(head);

  std::vector<std::string> labels;
  std::vector<Parity> parity;
  std::map<std::string, std::size_t> index;
  std::vector<Parity> rep_parity;
  bool has_rep_parity = false;
  std::map<std::size_t, RatMatrix> rep;
  bool ended = false;

  // Basis lines must come first so later references resolve.
  while (pos < lines.size()) {
    const Line& l = lines[pos];
    const std::string& kw = l.tokens[0];
    if (kw == "basis") {
      arity(l, 3);
      if (index.count(l.tokens[1])) fail(l, "duplicate label '" + l.tokens[1] + "'");
      index[l.tokens[1]] = labels.size();
      labels.push_back(l.tokens[1]);
      parity.push_back(par(l, l.tokens[2]));
      ++pos;
    } else {
      break;
    }
  }
  LieSuperalgebra g(name, labels, parity);
  std::vector<RatVector> cartan;

  while (pos < lines.size()) {
    const Line& l = lines[pos++];
    const std::string& kw = l.tokens[0];
    if (kw == "end") {
      arity(l, 1);
      ended = true;
      if (pos != lines.size()) fail(lines[pos], "content after 'end'");
      break;
    } else if (kw == "basis") {
      fail(l, "basis lines must precede all other content");
    } else if (kw == "bracket") {
      arity(l, 5);
      const auto i = label_index(l, index, l.tokens[1]);
      const auto j = label_index(l, index, l.tokens[2]);
      const auto k = label_index(l, index, l.tokens[3]);
      if (!g.structure_constant(i, j, k).is_zero()) fail(l, "bracket entry given twice");
      g.set_structure_constant(i, j, k, rat(l, l.tokens[4]));
    } else if (kw == "rep_parity") {
      if (has_rep_parity) fail(l, "rep_parity given twice");
      has_rep_parity = true;
      for (std::size_t t = 1; t < l.tokens.size(); ++t) rep_parity.push_back(par(l, l.tokens[t]));
      if (rep_parity.empty()) fail(l, "rep_parity needs at least one parity");
    } else if (kw == "rep") {
      arity(l, 2);
      if (!has_rep_parity) fail(l, "'rep' before 'rep_parity'");
      const auto i = label_index(l, index, l.tokens[1]);
      if (rep.count(i)) fail(l, "rep matrix for '" + l.tokens[1] + "' given twice");
      rep[i] = read_grid(lines, pos, rep_parity.size(), rep_parity.size(), l);
    } else if (kw == "cartan") {
      arity(l, 2);
      cartan.push_back(g.basis_vector(label_index(l, index, l.tokens[1])));
    } else if (kw == "cartan_vector") {
      if (l.tokens.size() != g.dim() + 1) fail(l, "cartan_vector needs " + std::to_string(g.dim()) + " coordinates");
      RatVector v;
      for (std::size_t t = 1; t < l.tokens.size(); ++t) v.push_back(rat(l, l.tokens[t]));
      cartan.push_back(std::move(v));
    } else {
      fail(l, "unknown keyword '" + kw + "'");
    }
  }
  if (!ended) fail(lines.back(), "missing 'end'");
  if (has_rep_parity) {
    SuperModule m;
    m.parity = rep_parity;
    for (std::size_t i = 0; i < g.dim(); ++i) {
      auto it = rep.find(i);
      m.action.push_back(it == rep.end() ? RatMatrix(rep_parity.size(), rep_parity.size()) : it->second);
    }
    g.set_faithful_rep(std::move(m));
  }
  g.set_cartan(std::move(cartan));

  ParsedAlgebra out{std::move(g), {}};
  const auto report = validate(out.algebra);
  if (!report.ok()) {
    if (opts.strict) throw ParseError("line " + std::to_string(head.number) + ": algebra fails validation: " + report.summary(3));
    out.warnings.push_back(report.summary(10));
  }
  if (out.algebra.faithful_rep()) {
    const auto mr = validate_module(out.algebra, *out.algebra.faithful_rep());
    if (!mr.ok()) {
      if (opts.strict) throw ParseError("line " + std::to_string(head.number) + ": faithful rep is not a representation: " + mr.summary(3));
      out.warnings.push_back("faithful rep: " + mr.summary(10));
    }
  }
  return out;
}

ParsedAlgebra parse_algebra_string(const std::string& text, const ParseOptions& opts) {
  std::istringstream in(text);
  return parse_algebra(in, opts);
}

ParsedAlgebra load_algebra(const std::string& path, const ParseOptions& opts) {
  return open_and<ParsedAlgebra>(path, &parse_algebra, opts);
}

std::string write_algebra(const LieSuperalgebra& g) {
  std::ostringstream os;
  os << "algebra " << g.name() << '\n';
  for (std::size_t i = 0; i < g.dim(); ++i) os << "basis " << g.label(i) << ' ' << to_string(g.parity(i)) << '\n';
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (const auto& t : g.structure(i, j))
        os << "bracket " << g.label(i) << ' ' << g.label(j) << ' ' << g.label(t.index) << ' ' << t.coeff << '\n';
  if (const auto& rep = g.faithful_rep()) {
    os << "rep_parity";
    for (auto p : rep->parity) os << ' ' << to_string(p);
    os << '\n';
    for (std::size_t i = 0; i < g.dim(); ++i) {
      if (rep->action[i].is_zero()) continue;
      os << "rep " << g.label(i) << '\n';
      write_grid(os, rep->action[i]);
    }
  }
  for (const auto& t : g.cartan()) {
    std::size_t nonzero = 0, at = 0;
    for (std::size_t k = 0; k < t.size(); ++k)
      if (!t[k].is_zero()) ++nonzero, at = k;
    if (nonzero == 1 && t[at].is_one()) {
      os << "cartan " << g.label(at) << '\n';
    } else {
      os << "cartan_vector";
      for (const auto& c : t) os << ' ' << c;
      os << '\n';
    }
  }
  os << "end\n";
  return os.str();
}

ParsedModule parse_module(std::istream& in, const LieSuperalgebra& g, const ParseOptions& opts) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("line 0: empty input");
  std::size_t pos = 0;
  const Line& head = lines[pos++];
  if (head.tokens[0] != "module" || head.tokens.size() < 2) fail(head, "expected 'module <name>'");
  ParsedModule out;
  out.name = rest_of(head);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g.dim(); ++i) index[g.label(i)] = i;
  std::map<std::size_t, RatMatrix> action;
  bool has_parity = false, ended = false;
  while (pos < lines.size()) {
    const Line& l = lines[pos++];
    const std::string& kw = l.tokens[0];
    if (kw == "end") {
      arity(l, 1);
      ended = true;
      if (pos != lines.size()) fail(lines[pos], "content after 'end'");
      break;
    } else if (kw == "algebra") {
      if (l.tokens.size() < 2) fail(l, "'algebra' expects a reference");
      out.algebra_ref = rest_of(l);
    } else if (kw == "parity") {
      if (has_parity) fail(l, "parity given twice");
      has_parity = true;
      for (std::size_t t = 1; t < l.tokens.size(); ++t) out.module.parity.push_back(par(l, l.tokens[t]));
    } else if (kw == "action") {
      arity(l, 2);
      if (!has_parity) fail(l, "'action' before 'parity'");
      const auto i = label_index(l, index, l.tokens[1]);
      if (action.count(i)) fail(l, "action of '" + l.tokens[1] + "' given twice");
      const std::size_t d = out.module.parity.size();
      action[i] = read_grid(lines, pos, d, d, l);
    } else {
      fail(l, "unknown keyword '" + kw + "'");
    }
  }
  if (!ended) fail(lines.back(), "missing 'end'");
  if (!has_parity) fail(head, "missing 'parity'");
  const std::size_t d = out.module.parity.size();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    auto it = action.find(i);
    out.module.action.push_back(it == action.end() ? RatMatrix(d, d) : it->second);
  }
  const auto report = validate_module(g, out.module);
  if (!report.ok()) {
    if (opts.strict) throw ParseError("line " + std::to_string(head.number) + ": module fails validation: " + report.summary(3));
    out.warnings.push_back(report.summary(10));
  }
  return out;
}

ParsedModule parse_module_string(const std::string& text, const LieSuperalgebra& g, const ParseOptions& opts) {
  std::istringstream in(text);
  return parse_module(in, g, opts);
}

ParsedModule load_module(const std::string& path, const LieSuperalgebra& g, const ParseOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_module(in, g, opts);
}

std::string write_module(const LieSuperalgebra& g, const SuperModule& m, const std::string& name,
                         const std::string& algebra_ref) {
  std::ostringstream os;
  os << "module " << name << '\n';
  if (!algebra_ref.empty()) os << "algebra " << algebra_ref << '\n';
  os << "parity";
  for (auto p : m.parity) os << ' ' << to_string(p);
  os << '\n';
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (m.action[i].is_zero()) continue;
    os << "action " << g.label(i) << '\n';
    write_grid(os, m.action[i]);
  }
  os << "end\n";
  return os.str();
}

ParsedSupercomm parse_supercomm(std::istream& in, const ParseOptions& opts) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("line 0: empty input");
  std::size_t pos = 0;
  const Line& head = lines[pos++];
  if (head.tokens[0] != "supercomm" || head.tokens.size() < 2) fail(head, "expected 'supercomm <name>'");
  std::vector<std::string> labels;
  std::vector<Parity> parity;
  std::map<std::string, std::size_t> index;
  while (pos < lines.size() && lines[pos].tokens[0] == "basis") {
    const Line& l = lines[pos++];
    arity(l, 3);
    if (index.count(l.tokens[1])) fail(l, "duplicate label '" + l.tokens[1] + "'");
    index[l.tokens[1]] = labels.size();
    labels.push_back(l.tokens[1]);
    parity.push_back(par(l, l.tokens[2]));
  }
  SupercommAlgebra a(rest_of(head), labels, parity);
  const std::size_t n = a.dim();
  std::vector<RatVector> products(n * n, RatVector(n));
  RatMatrix u(n, n);
  bool has_unit = false, has_u = false, ended = false;
  while (pos < lines.size()) {
    const Line& l = lines[pos++];
    const std::string& kw = l.tokens[0];
    if (kw == "end") {
      arity(l, 1);
      ended = true;
      if (pos != lines.size()) fail(lines[pos], "content after 'end'");
      break;
    } else if (kw == "basis") {
      fail(l, "basis lines must precede all other content");
    } else if (kw == "unit") {
      arity(l, n + 1);
      RatVector v;
      for (std::size_t t = 1; t <= n; ++t) v.push_back(rat(l, l.tokens[t]));
      a.set_unit(std::move(v));
      has_unit = true;
    } else if (kw == "multiplication") {
      arity(l, 5);
      const auto i = label_index(l, index, l.tokens[1]);
      const auto j = label_index(l, index, l.tokens[2]);
      const auto k = label_index(l, index, l.tokens[3]);
      if (!products[i * n + j][k].is_zero()) fail(l, "multiplication entry given twice");
      products[i * n + j][k] = rat(l, l.tokens[4]);
    } else if (kw == "derivation") {
      arity(l, 1);
      if (has_u) fail(l, "derivation given twice");
      u = read_grid(lines, pos, n, n, l);
      has_u = true;
    } else {
      fail(l, "unknown keyword '" + kw + "'");
    }
  }
  if (!ended) fail(lines.back(), "missing 'end'");
  if (!has_unit) fail(head, "missing 'unit'");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.set_product(i, j, products[i * n + j]);
  ParsedSupercomm out{std::move(a), OddDerivation{std::move(u)}, {}};
  for (const auto& report : {validate_algebra(out.algebra), validate_derivation(out.algebra, out.u)}) {
    if (report.ok()) continue;
    if (opts.strict) throw ParseError("line " + std::to_string(head.number) + ": " + report.summary(3));
    out.warnings.push_back(report.summary(10));
  }
  return out;
}

ParsedSupercomm parse_supercomm_string(const std::string& text, const ParseOptions& opts) {
  std::istringstream in(text);
  return parse_supercomm(in, opts);
}

ParsedSupercomm load_supercomm(const std::string& path, const ParseOptions& opts) {
  return open_and<ParsedSupercomm>(path, &parse_supercomm, opts);
}

std::string write_supercomm(const SupercommAlgebra& a, const OddDerivation& u) {
  std::ostringstream os;
  os << "supercomm " << a.name() << '\n';
  for (std::size_t i = 0; i < a.dim(); ++i) os << "basis " << a.label(i) << ' ' << to_string(a.parity(i)) << '\n';
  os << "unit";
  for (const auto& c : a.unit()) os << ' ' << c;
  os << '\n';
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& t : a.product(i, j))
        os << "multiplication " << a.label(i) << ' ' << a.label(j) << ' ' << a.label(t.index) << ' ' << t.coeff << '\n';
  os << "derivation\n";
  write_grid(os, u.matrix);
  os << "end\n";
  return os.str();
}

RatVector parse_element(const LieSuperalgebra& g, const std::string& text) {
  std::string s = text;
  for (char& c : s)
    if (c == ',' || c == ';') c = ' ';
  std::istringstream ss(s);
  std::vector<std::string> toks;
  std::string tok;
  while (ss >> tok) toks.push_back(tok);
  const Line l{1, toks};
  RatVector v(g.dim());
  if (toks.empty()) return v;
  if (toks[0].find('=') != std::string::npos) {
    for (const auto& t : toks) {
      const auto eq = t.find('=');
      if (eq == std::string::npos) fail(l, "expected label=coefficient, got '" + t + "'");
      const auto idx = g.index_of(t.substr(0, eq));
      if (!idx) fail(l, "unknown label '" + t.substr(0, eq) + "'");
      v[*idx] += rat(l, t.substr(eq + 1));
    }
    return v;
  }
  if (toks.size() != g.dim()) {
    fail(l, "expected " + std::to_string(g.dim()) + " coordinates, got " + std::to_string(toks.size()));
  }
  for (std::size_t i = 0; i < toks.size(); ++i) v[i] = rat(l, toks[i]);
  return v;
}

}  // namespace superkit
