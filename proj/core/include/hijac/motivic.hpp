#ifndef HIJAC_MOTIVIC_HPP
#define HIJAC_MOTIVIC_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hijac/rational.hpp"
#include "hijac/report.hpp"
#include "hijac/resolve.hpp"

namespace hijac {

/**
 * Free symbol for the class of a covered stratum in the equivariant
 * Grothendieck ring. Symbols are opaque generators: equality is syntactic,
 * and symbols from different graphs are incomparable unless relabeled after
 * a covering comparison. This is sound for the identities computed here but
 * is not a decision procedure for the actual ring.
 */
struct ClassSymbol {
    std::string origin;                 // graph id the class came from
    std::vector<std::string> stratum;   // sorted divisor ids; empty for the unit class
    long cover_degree = 1;              // N_I
    long action_order = 1;              // order of the labeled cyclic action
    std::string name;                   // display name

    bool is_unit() const { return stratum.empty() && origin.empty(); }
    auto operator<=>(const ClassSymbol&) const = default;
};

ClassSymbol stratum_symbol(const ResolutionGraph& G, const Stratum& s);

/** Normalized integer combination of symbols times powers of L. */
class GroVal {
public:
    GroVal() = default;
    static GroVal zero() { return GroVal(); }
    // coeff * L^p * [sym]
    static GroVal term(const ClassSymbol& sym, long Lexp, Int coeff);
    static GroVal L_power(long p);
    static GroVal constant(Int c);

    bool is_zero() const { return terms_.empty(); }
    // only unit-class symbols, i.e. an integer Laurent polynomial in L
    bool is_laurent() const;
    const std::map<std::pair<ClassSymbol, long>, Int>& terms() const { return terms_; }

    GroVal operator+(const GroVal& o) const;
    GroVal operator-(const GroVal& o) const;
    GroVal operator-() const;
    GroVal scaled(const Int& c) const;
    GroVal shifted(long Lexp) const;  // multiply by L^Lexp
    // product with an integer Laurent polynomial in L (either side)
    GroVal operator*(const GroVal& laurent) const;
    bool operator==(const GroVal& o) const { return terms_ == o.terms_; }

    std::vector<std::string> origins() const;
    GroVal relabeled(const std::string& from, const std::string& to) const;

    std::string str() const;

private:
    // (symbol, L-exponent) -> coefficient, zero coefficients never stored
    std::map<std::pair<ClassSymbol, long>, Int> terms_;
    void add_term(const ClassSymbol& s, long e, const Int& c);
};

// (L-1)^k expanded into a Laurent polynomial
GroVal L_minus_one_pow(int k);

/**
 * Element of the rational-series submodule: a sum of terms
 * c * prod L^p T^q / (1 - L^p T^q) plus a constant, normalized by merging
 * terms with the same factor multiset.
 */
class RationalSeries {
public:
    RationalSeries() = default;
    // factors: multiset of (p, q) pairs, q >= 1
    void add_term(const GroVal& coeff, std::vector<std::pair<long, long>> factors);
    const std::map<std::vector<std::pair<long, long>>, GroVal>& terms() const { return terms_; }

    RationalSeries operator+(const RationalSeries& o) const;
    bool operator==(const RationalSeries& o) const { return terms_ == o.terms_; }
    std::string str() const;

private:
    std::map<std::vector<std::pair<long, long>>, GroVal> terms_;  // sorted factor multiset -> coeff
};

// first display of the Denef-Loeser theorem: the class of the m-th contact locus
GroVal contact_locus_class(const ResolutionGraph& G, long m, int d);

// second display: the motivic zeta function as a rational series
RationalSeries zeta(const ResolutionGraph& G, int d);

// coefficients of T^1..T^M, each multiplied by L^{dm}
std::vector<GroVal> expand(const RationalSeries& Z, int M, int d);

GroVal limit_T_infinity(const RationalSeries& Z);

// minus the limit of zeta; also evaluated through the closed form and checked
GroVal nearby_cycle(const ResolutionGraph& G, int d);

Report check_separating_specialization(const ResolutionGraph& G, long m, int d);

// syntactic equality of normal forms; throws std::invalid_argument when the
// two sides carry symbols of different origins (relabel after a covering
// comparison first)
bool gro_equal(const GroVal& a, const GroVal& b);

}  // namespace hijac

#endif
