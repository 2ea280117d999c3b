#ifndef HIJAC_RATIONAL_HPP
#define HIJAC_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace hijac {

// All coefficient arithmetic in the library is exact; Rat is the only
// number type that ever touches a polynomial coefficient.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Exact k-th root of a rational if one exists.
inline std::optional<Rat> rat_root(const Rat& q, unsigned long k) {
    if (k == 0) return std::nullopt;
    if (sgn(q) < 0 && k % 2 == 0) return std::nullopt;
    Int n, d;
    int exact_n = mpz_root(n.get_mpz_t(), q.get_num_mpz_t(), k);
    int exact_d = mpz_root(d.get_mpz_t(), q.get_den_mpz_t(), k);
    if (!exact_n || !exact_d) return std::nullopt;
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// Canonical text form p or p/q used everywhere polynomials are printed.
inline std::string rat_str(const Rat& q) {
    return q.get_str();
}

}  // namespace hijac

#endif
