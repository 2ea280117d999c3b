#ifndef HIJAC_RG_IO_HPP
#define HIJAC_RG_IO_HPP

#include <iosfwd>
#include <string>

#include "hijac/resolve.hpp"

namespace hijac {

// Line-oriented graph format. Chart-local polynomials use variables y1..yd;
// chart maps list the root coordinates as ';'-separated polynomials.
//
//   ambient d=<int>
//   divisor id=<name> N=<int> nu=<int> kind=<exceptional|strict>
//   intersect <id> <id> chart=<id> point=<rat>,<rat>
//   intersect <id> <id> chart=<id> minpoly="<poly>"      (non-rational crossing)
//   stratum I=<id[,id]> class=<name> cover=<int> unit="<poly>" chart=<id>
//   chart id=<name> map="<poly>;<poly>" [divisors="<id>:<coord>,..."]
//   transform chart=<id> f="<poly>"
//   stricteq divisor=<id> chart=<id> eq="<poly>"
//   # comment
//
// The minpoly/divisors/transform/stricteq forms are emitted by `resolve` so
// that parsed graphs stay separable and unit-recomputable; hand-written files
// may omit them.
std::string write_rg(const ResolutionGraph& G);
ResolutionGraph parse_rg(const std::string& text);

struct RgParseError : std::runtime_error {
    std::size_t line;
    RgParseError(const std::string& msg, std::size_t l)
        : std::runtime_error(msg + " (line " + std::to_string(l) + ")"), line(l) {}
};

}  // namespace hijac

#endif
