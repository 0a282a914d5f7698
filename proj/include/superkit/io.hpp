#ifndef SUPERKIT_IO_HPP
#define SUPERKIT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "superkit/liesuper.hpp"
#include "superkit/supercomm.hpp"
#include "superkit/supermodule.hpp"

namespace superkit {

// Line-oriented text formats. Blank lines and '#' comments are ignored,
// rationals are written "p" or "p/q", labels contain no whitespace.
//
//   algebra gl(1|1)
//   basis E11 even
//   basis E12 odd
//   bracket E12 E21 E11 1          [E12, E21] has coefficient 1 on E11
//   rep_parity even odd            optional faithful representation
//   rep E12                        followed by one line per matrix row
//     0 1
//     0 0
//   cartan E11                     basis label, or
//   cartan_vector 1 0 0 -1         coordinates
//   end
//
//   module defining
//   algebra gl:1:1                 informational
//   parity even odd
//   action E11                     one per basis element, rows follow
//     1 0
//     0 0
//   end
//
//   supercomm exterior_1
//   basis 1 even
//   basis xi odd
//   unit 1 0
//   multiplication xi 1 xi 1       xi * 1 has coefficient 1 on xi
//   derivation                     rows of the matrix of u follow
//     0 1
//     0 0
//   end
//
// Parse errors throw ParseError("line N: ...").

struct ParseOptions {
  bool strict = true;  // reject algebras failing validate / modules failing validate_module
};

struct ParsedAlgebra {
  LieSuperalgebra algebra;
  std::vector<std::string> warnings;  // validation problems in lax mode
};

ParsedAlgebra parse_algebra(std::istream& in, const ParseOptions& opts = {});
ParsedAlgebra parse_algebra_string(const std::string& text, const ParseOptions& opts = {});
ParsedAlgebra load_algebra(const std::string& path, const ParseOptions& opts = {});
std::string write_algebra(const LieSuperalgebra& g);

struct ParsedModule {
  std::string name;
  std::string algebra_ref;
  SuperModule module;
  std::vector<std::string> warnings;
};

// Action labels are resolved against g; strict mode runs validate_module.
ParsedModule parse_module(std::istream& in, const LieSuperalgebra& g, const ParseOptions& opts = {});
ParsedModule parse_module_string(const std::string& text, const LieSuperalgebra& g, const ParseOptions& opts = {});
ParsedModule load_module(const std::string& path, const LieSuperalgebra& g, const ParseOptions& opts = {});
std::string write_module(const LieSuperalgebra& g, const SuperModule& m, const std::string& name,
                         const std::string& algebra_ref);

struct ParsedSupercomm {
  SupercommAlgebra algebra;
  OddDerivation u;
  std::vector<std::string> warnings;
};

ParsedSupercomm parse_supercomm(std::istream& in, const ParseOptions& opts = {});
ParsedSupercomm parse_supercomm_string(const std::string& text, const ParseOptions& opts = {});
ParsedSupercomm load_supercomm(const std::string& path, const ParseOptions& opts = {});
std::string write_supercomm(const SupercommAlgebra& a, const OddDerivation& u);

// Comma or whitespace separated rationals, or "label=coef" pairs resolved
// against g (e.g. "E12=1,E21=1"). Throws ParseError.
RatVector parse_element(const LieSuperalgebra& g, const std::string& text);

}  // namespace superkit

#endif  // SUPERKIT_IO_HPP
