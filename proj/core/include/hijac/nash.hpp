#ifndef HIJAC_NASH_HPP
#define HIJAC_NASH_HPP

#include <vector>

#include "hijac/groebner.hpp"
#include "hijac/ideal.hpp"
#include "hijac/polynomial.hpp"
#include "hijac/report.hpp"

namespace hijac {

/**
 * Local algebra at the origin cut out by f together with its n-th Jacobian
 * ideal; at n = 1 this is the Milnor algebra.
 */
struct NashAlgebra {
    Polynomial f;
    int n;
    IdealGens ideal;                       // f plus the n-th Jacobian ideal
    std::vector<Polynomial> standard_basis;
    bool finite = false;
    long dimension = 0;
    std::vector<MultiIndex> monomial_basis;
};

// Requires f(0) = 0, n >= 1. Also certifies that the ZeroDiagonal and
// FDiagonal matrix versions induce the same local ideal.
NashAlgebra nash_algebra(const Polynomial& f, int n);

/** Automorphism candidate and unit witnessing g = u * sigma(f). */
struct ContactWitness {
    Substitution sigma;
    Polynomial u;
    int degree_bound = -1;  // < 0 means the identity must hold exactly
};

Report check_unit_invariance(const Polynomial& f, const Polynomial& u, int n);
Report check_det_congruence(const Polynomial& f, const Polynomial& u, int n);
Report check_automorphism_equivariance(const Polynomial& f, const Substitution& sigma, int n);
Report check_contact_invariance(const Polynomial& f, const Polynomial& g,
                                const ContactWitness& w, int n);
Report check_inclusion_J1_power(const Polynomial& f, int n);
Report check_weighted_homogeneous_invariance(const Polynomial& f,
                                             const std::vector<int>& weights,
                                             const Polynomial& u, int n);

}  // namespace hijac

#endif
