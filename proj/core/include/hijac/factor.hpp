#ifndef HIJAC_FACTOR_HPP
#define HIJAC_FACTOR_HPP

#include <utility>
#include <vector>

#include "hijac/polynomial.hpp"

namespace hijac {

// gcd of polynomials over Q, primitive with positive leading coefficient;
// primitive pseudo-remainder sequences in the top variable, recursing on
// coefficient contents
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// f / (gcd of f and its partials): every prime factor exactly once
Polynomial squarefree_part(const Polynomial& f);

// f = unit * prod p_i^{e_i} with the p_i squarefree, pairwise coprime,
// primitive; pairs are (p, e) with e ascending
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f);

struct Factorization {
    Rat unit = 1;
    std::vector<std::pair<Polynomial, int>> factors;  // irreducible, primitive, positive lead
    Polynomial product(int d) const;
};

// Irreducible factorization over Q for polynomials in at most two variables.
// Kronecker-style: desk-scale inputs only; throws std::runtime_error when the
// divisor enumeration would explode.
Factorization factor_polynomial(const Polynomial& f);

}  // namespace hijac

#endif
