#ifndef HIJAC_PARSE_HPP
#define HIJAC_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hijac/polynomial.hpp"

namespace hijac {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t at)
        : std::runtime_error(msg + " at position " + std::to_string(at)), pos(at) {}
};

// Grammar:
//   expr     := ('+'|'-')? term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | variable | '(' expr ')'
//   rational := '-'? uint ('/' uint)?
// Multiplication is always explicit; variables come from the declared list.
Polynomial parse_poly(std::string_view text, const std::vector<std::string>& var_names);
Polynomial parse_poly(std::string_view text, int d);  // variables x1..xd

Rat parse_rat(std::string_view text);

}  // namespace hijac

#endif
