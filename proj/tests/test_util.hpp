#ifndef HIJAC_TEST_UTIL_HPP
#define HIJAC_TEST_UTIL_HPP

#include <cstdint>
#include <vector>

#include "hijac/polynomial.hpp"

namespace hijac::testutil {

// Small deterministic generator so property tests are reproducible.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    // uniform in [0, n)
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }
};

inline Polynomial random_poly(Rng& rng, int d, int max_deg, int max_terms, bool force_nonconstant = false) {
    Polynomial p = Polynomial::zero(d);
    int nterms = rng.range(1, max_terms);
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> e(static_cast<std::size_t>(d), 0);
        int deg = rng.range(0, max_deg);
        for (int k = 0; k < deg; ++k) e[static_cast<std::size_t>(rng.below(d))] += 1;
        int c = rng.range(-5, 5);
        if (c == 0) c = 1;
        p = p + Polynomial::monomial(MultiIndex(e), make_rat(c));
    }
    if (force_nonconstant && p.is_constant()) p = p + Polynomial::variable(d, 0);
    return p;
}

}  // namespace hijac::testutil

#endif
