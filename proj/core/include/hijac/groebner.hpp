#ifndef HIJAC_GROEBNER_HPP
#define HIJAC_GROEBNER_HPP

#include <memory>
#include <string>
#include <vector>

#include "hijac/ideal.hpp"
#include "hijac/multiindex.hpp"
#include "hijac/polynomial.hpp"

namespace hijac {

// LocalGraded is the degree-anticompatible order realizing computations in
// the localization at the origin: lower total degree is larger, ties broken
// reverse-lexicographically. It is not a well-order; Mora normal form is
// used instead of ordinary division.
//
// HomogenizedLocal is the companion global order on k[x, t] (t last) used to
// compute standard bases by homogenization: total degree first, ties by
// LocalGraded on the x-part. Not exposed on the CLI surface.
enum class OrderKind { GradedLex, GradedRevLex, Lex, LocalGraded, HomogenizedLocal };

struct MonomialOrder {
    OrderKind kind = OrderKind::GradedLex;
    bool is_global() const { return kind != OrderKind::LocalGraded; }
    // monomial comparison: <0, 0, >0 for a < b, a == b, a > b
    int cmp(const MultiIndex& a, const MultiIndex& b) const;
    std::string name() const;
};

/**
 * Generators together with a monomial order and the computed basis: the
 * reduced Groebner basis for global orders, a Mora standard basis for
 * LocalGraded. Immutable once constructed.
 */
class OrderedIdeal {
public:
    // reduced Groebner basis; throws if order is local
    static OrderedIdeal groebner(const IdealGens& gens, MonomialOrder order);
    // standard basis w.r.t. LocalGraded via Mora weak normal form
    static OrderedIdeal standard(const IdealGens& gens);

    const IdealGens& gens() const { return gens_; }
    MonomialOrder order() const { return order_; }
    int vars() const { return gens_.vars(); }
    const std::vector<Polynomial>& basis() const { return basis_; }
    // leading monomials of the basis, divisibility-minimal generators
    std::vector<MultiIndex> leading_ideal() const;

    // normal form: the unique fully reduced remainder for global orders, a
    // Mora weak normal form for the local order
    Polynomial normal_form(const Polynomial& f) const;
    // f in the ideal (global) resp. in the localized ideal (local)
    bool contains(const Polynomial& f) const;

private:
    OrderedIdeal(IdealGens gens, MonomialOrder order, std::vector<Polynomial> basis)
        : gens_(std::move(gens)), order_(order), basis_(std::move(basis)) {}
    IdealGens gens_;
    MonomialOrder order_;
    std::vector<Polynomial> basis_;
    // Local ideals with a finite-dimensional quotient decide membership
    // through ordinary global division: f lies in the localized ideal iff it
    // lies in I + m^K once m^K is contained in the localization.
    std::shared_ptr<const OrderedIdeal> membership_oracle_;
};

bool ideal_equal(const IdealGens& I, const IdealGens& J, MonomialOrder order);

struct QuotientBasis {
    bool finite = false;
    long dimension = 0;                  // meaningful when finite
    std::vector<MultiIndex> monomials;   // standard monomials, listing order
};

// Dimension of the local quotient ring at the origin: the number of standard
// monomials outside the local leading-term ideal.
QuotientBasis local_dimension(const IdealGens& I);
// Same count for a global order (vector-space dimension of k[x]/I).
QuotientBasis global_dimension(const IdealGens& I, MonomialOrder order);

// standard monomials of a monomial ideal given by (leading) generators
QuotientBasis standard_monomials(const std::vector<MultiIndex>& lead, int d);

}  // namespace hijac

#endif
