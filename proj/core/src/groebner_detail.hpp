#ifndef HIJAC_GROEBNER_DETAIL_HPP
#define HIJAC_GROEBNER_DETAIL_HPP

#include <vector>

#include "hijac/groebner.hpp"

namespace hijac::detail {

struct Term {
    MultiIndex m;
    Rat c;
};

// term list sorted strictly descending w.r.t. a monomial order
using TermVec = std::vector<Term>;

TermVec to_ordered(const Polynomial& p, const MonomialOrder& ord);
Polynomial to_poly(const TermVec& v, int d);

bool divides(const MultiIndex& a, const MultiIndex& b);
MultiIndex mono_lcm(const MultiIndex& a, const MultiIndex& b);

// h - c * x^m * g, merged
TermVec axpy(const TermVec& h, const Rat& c, const MultiIndex& m, const TermVec& g,
             const MonomialOrder& ord);

// total degree spread between the polynomial and its leading term
int ecart(const TermVec& f);

// one reduction step target selection + full division remainder (global)
TermVec normal_form_global(TermVec h, const std::vector<TermVec>& G, const MonomialOrder& ord);

// Mora weak normal form with ecart selection (local orders)
TermVec normal_form_mora(TermVec h, const std::vector<TermVec>& G, const MonomialOrder& ord);

// Buchberger loop shared by the global and local engines
std::vector<TermVec> complete_basis(std::vector<TermVec> G, const MonomialOrder& ord);

// divisibility-minimal, sign-normalized, deterministically sorted basis
std::vector<Polynomial> finalize_basis(std::vector<TermVec> G, const MonomialOrder& ord, int d,
                                       bool interreduce);

}  // namespace hijac::detail

#endif
