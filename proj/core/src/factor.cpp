#include <algorithm>
#include <stdexcept>

#include "hijac/factor.hpp"

namespace hijac {

Polynomial Factorization::product(int d) const {
    Polynomial p = Polynomial::constant(d, unit);
    for (const auto& [f, e] : factors) p = p * f.pow(static_cast<unsigned>(e));
    return p;
}

namespace {

constexpr long kDivisorCap = 200000;  // tuple-enumeration guard

// all divisors of |n|, both signs
std::vector<Int> signed_divisors(const Int& n) {
    Int a = abs(n);
    std::vector<Int> ds;
    for (Int i = 1; i * i <= a; ++i) {
        if (a % i != 0) continue;
        ds.push_back(i);
        if (i * i != a) ds.push_back(a / i);
    }
    std::vector<Int> out;
    out.reserve(2 * ds.size());
    for (const auto& d : ds) {
        out.push_back(d);
        out.push_back(-d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// dense coefficients of a univariate-in-var polynomial
std::vector<Rat> dense(const Polynomial& f, int v) { return f.univariate_coeffs(v); }

Rat eval_dense(const std::vector<Rat>& cs, long x) {
    Rat r(0);
    for (std::size_t k = cs.size(); k-- > 0;) r = r * x + cs[k];
    return r;
}

// Lagrange interpolation through (points[i], values[i])
std::vector<Rat> interpolate(const std::vector<long>& pts, const std::vector<Rat>& vals) {
    std::size_t n = pts.size();
    std::vector<Rat> acc(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        // basis polynomial for point i
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * Rat(pts[j]);
            }
            basis = std::move(next);
            denom *= Rat(pts[i] - pts[j]);
        }
        Rat scale = vals[i] / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * scale;
    }
    while (!acc.empty() && acc.back() == 0) acc.pop_back();
    return acc;
}

// rational roots p/q of a primitive integer polynomial with nonzero constant
// term: p | tail, q | lead
std::vector<Rat> rational_roots(const std::vector<Rat>& cs) {
    std::vector<Rat> roots;
    if (cs.size() < 2 || cs.front() == 0) return roots;
    Int lead = cs.back().get_num();
    Int tail = cs.front().get_num();
    for (const Int& p : signed_divisors(tail)) {
        for (const Int& q : signed_divisors(lead)) {
            if (q < 0) continue;
            Rat cand(p, q);
            cand.canonicalize();
            Rat v(0);
            for (std::size_t k = cs.size(); k-- > 0;) v = v * cand + cs[k];
            if (v == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
                roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Rat> divide_dense(const std::vector<Rat>& num, const std::vector<Rat>& den, bool& exact) {
    std::vector<Rat> rem(num), q;
    exact = false;
    if (den.empty()) return q;
    if (rem.size() < den.size()) { exact = rem.empty(); return q; }
    q.assign(rem.size() - den.size() + 1, Rat(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Rat c = rem[k + den.size() - 1] / den.back();
        q[k] = c;
        for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= c * den[j];
    }
    for (const auto& r : rem)
        if (r != 0) return q;
    exact = true;
    return q;
}

// irreducible factorization of a squarefree primitive integer polynomial,
// univariate in variable v, with no rational roots; Kronecker's method
void kronecker_univariate(Polynomial f, int v, std::vector<Polynomial>& out) {
    int deg = f.degree_in(v);
    if (deg <= 3) {  // no rational roots: quadratics and cubics are irreducible
        out.push_back(f.primitive_part());
        return;
    }
    auto cs = dense(f, v);
    int half = deg / 2;
    // evaluation points 0, 1, -1, 2, -2, ...
    std::vector<long> pts;
    for (long k = 0; static_cast<int>(pts.size()) <= half; ++k) {
        pts.push_back(k == 0 ? 0 : (k % 2 ? (k + 1) / 2 : -(k / 2)));
    }
    for (int k = 2; k <= half; ++k) {
        std::vector<long> p(pts.begin(), pts.begin() + k + 1);
        std::vector<std::vector<Int>> divs;
        long combos = 1;
        for (long pt : p) {
            Rat val = eval_dense(cs, pt);
            auto ds = signed_divisors(val.get_num());
            combos *= static_cast<long>(ds.size());
            if (combos > kDivisorCap)
                throw std::runtime_error("univariate factorization exceeded desk-scale bounds");
            divs.push_back(std::move(ds));
        }
        std::vector<std::size_t> idx(p.size(), 0);
        while (true) {
            // fix the first divisor positive: factors are determined up to sign
            if (divs[0][idx[0]] > 0) {
                std::vector<Rat> vals;
                for (std::size_t i = 0; i < p.size(); ++i) vals.push_back(Rat(divs[i][idx[i]]));
                auto cand = interpolate(p, vals);
                if (static_cast<int>(cand.size()) - 1 == k) {
                    bool exact = false;
                    auto q = divide_dense(cs, cand, exact);
                    if (exact) {
                        Polynomial cp = Polynomial::from_univariate(f.vars(), v, cand).primitive_part();
                        kronecker_univariate(cp, v, out);
                        kronecker_univariate(Polynomial::from_univariate(f.vars(), v, q).primitive_part(), v, out);
                        return;
                    }
                }
            }
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == divs[pos].size()) idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
    }
    out.push_back(f.primitive_part());
}

// squarefree primitive, no monomial part, univariate in v
void factor_univariate_squarefree(Polynomial f, int v, std::vector<Polynomial>& out) {
    auto cs = dense(f, v);
    for (const Rat& r : rational_roots(cs)) {
        // divide out (q*x - p) for root p/q
        std::vector<Rat> lin{-r.get_num(), r.get_den()};
        bool exact = false;
        auto q = divide_dense(cs, lin, exact);
        if (!exact) continue;
        out.push_back(Polynomial::from_univariate(f.vars(), v, lin).primitive_part());
        cs = q;
        // a squarefree polynomial has simple roots; no repeat division needed
    }
    Polynomial rest = Polynomial::from_univariate(f.vars(), v, cs).primitive_part();
    if (rest.degree_in(v) > 0) kronecker_univariate(rest, v, out);
}

// irreducible factors of a squarefree primitive bivariate polynomial with no
// monomial part and no factor free of either variable
void factor_bivariate_squarefree(const Polynomial& g, std::vector<Polynomial>& out) {
    int dx = g.degree_in(0);
    int D = dx + 1;
    // Kronecker substitution y -> x^D is injective on the monomials of any factor
    Polynomial img = Polynomial::zero(2);
    for (const auto& [m, c] : g.terms()) {
        std::vector<int> e{m[0] + D * m[1], 0};
        img = img + Polynomial::monomial(MultiIndex(std::move(e)), c);
    }
    std::vector<Polynomial> uni;
    {  // strip x powers of the image first (g(0,0) may vanish)
        int k = img.var_order(0);
        if (k > 0) {
            img = img.shift_down(0, k);
            for (int i = 0; i < k; ++i) uni.push_back(Polynomial::variable(2, 0));
        }
    }
    for (const auto& [p, e] : squarefree_decomposition(img)) {
        std::vector<Polynomial> fs;
        factor_univariate_squarefree(p, 0, fs);
        for (int i = 0; i < e; ++i) uni.insert(uni.end(), fs.begin(), fs.end());
    }

    auto invert = [&](const Polynomial& p) {
        Polynomial r = Polynomial::zero(2);
        for (const auto& [m, c] : p.terms()) {
            std::vector<int> e{m[0] % D, m[0] / D};
            r = r + Polynomial::monomial(MultiIndex(std::move(e)), c);
        }
        return r.primitive_part();
    };

    Polynomial rest = g;
    std::vector<Polynomial> pool = uni;
    bool progress = true;
    while (progress && !pool.empty()) {
        progress = false;
        std::size_t n = pool.size();
        if (n > 20) throw std::runtime_error("bivariate factorization exceeded desk-scale bounds");
        for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << n); ++mask) {
            Polynomial prod = Polynomial::constant(2, 1);
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t(1) << i)) prod = prod * pool[i];
            Polynomial cand = invert(prod);
            if (cand.is_constant()) continue;
            auto q = rest.divide_exact(cand);
            if (!q) continue;
            out.push_back(cand.primitive_part());
            rest = q->primitive_part();
            std::vector<Polynomial> next;
            for (std::size_t i = 0; i < n; ++i)
                if (!(mask & (std::size_t(1) << i))) next.push_back(pool[i]);
            pool = std::move(next);
            progress = true;
            break;
        }
    }
    if (!rest.is_constant()) out.push_back(rest.primitive_part());
}

void factor_into(const Polynomial& f, int mult, Factorization& out);

// f squarefree, primitive, positive lead
void factor_squarefree(const Polynomial& f, int mult, Factorization& out) {
    int d = f.vars();
    if (f.degree() == 1) {  // linear is irreducible
        out.factors.emplace_back(f, mult);
        return;
    }
    // univariate in some variable
    for (int v = 0; v < d; ++v) {
        bool uni = f.is_univariate_in(v);
        if (uni && f.degree_in(v) > 0) {
            std::vector<Polynomial> fs;
            factor_univariate_squarefree(f, v, fs);
            for (auto& p : fs) out.factors.emplace_back(p.primitive_part(), mult);
            return;
        }
    }
    if (d > 2) throw std::runtime_error("factorization implemented for at most two variables");
    std::vector<Polynomial> irr;
    factor_bivariate_squarefree(f, irr);
    for (auto& p : irr) out.factors.emplace_back(p.primitive_part(), mult);
}

void factor_into(const Polynomial& f, int mult, Factorization& out) {
    for (const auto& [p, e] : squarefree_decomposition(f)) factor_squarefree(p, e * mult, out);
}

}  // namespace

Factorization factor_polynomial(const Polynomial& f) {
    Factorization out;
    if (f.is_zero()) throw std::invalid_argument("factor_polynomial: zero polynomial");
    int d = f.vars();
    if (d > 2)
        throw std::runtime_error("factorization implemented for at most two variables");
    out.unit = f.content();
    Polynomial g = f.primitive_part();
    // monomial part
    for (int v = 0; v < d; ++v) {
        int k = g.var_order(v);
        if (k > 0) {
            g = g.shift_down(v, k);
            out.factors.emplace_back(Polynomial::variable(d, v), k);
        }
    }
    if (!g.is_constant()) {
        // contents: factors free of one of the variables split off first
        if (d == 2) {
            for (int v = 0; v < 2; ++v) {
                if (g.degree_in(v) == 0) continue;
                // content of g as a polynomial in v
                Polynomial cont = Polynomial::zero(2);
                {
                    // gcd of coefficients
                    std::vector<Polynomial> cs;
                    for (int k = 0; k <= g.degree_in(v); ++k) cs.push_back(Polynomial::zero(2));
                    for (const auto& [m, c] : g.terms()) {
                        std::vector<int> e = m.entries();
                        int k = e[static_cast<std::size_t>(v)];
                        e[static_cast<std::size_t>(v)] = 0;
                        cs[static_cast<std::size_t>(k)] =
                            cs[static_cast<std::size_t>(k)] + Polynomial::monomial(MultiIndex(std::move(e)), c);
                    }
                    for (const auto& p : cs) {
                        if (p.is_zero()) continue;
                        cont = cont.is_zero() ? p.primitive_part() : poly_gcd(cont, p);
                        if (cont.is_constant()) break;
                    }
                }
                if (!cont.is_constant()) {
                    factor_into(cont, 1, out);
                    g = *g.divide_exact(cont);
                }
            }
        }
        if (!g.is_constant()) factor_into(g, 1, out);
    }
    // normalize: positive-lead primitive factors, deterministic order
    Rat lead_fix(1);
    for (auto& [p, e] : out.factors) {
        Rat c = p.content();
        if (c != 1) {
            lead_fix *= rat_pow(c, static_cast<unsigned long>(e));
            p = p.primitive_part();
        }
    }
    out.unit *= lead_fix;
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return Polynomial::cmp(a.first, b.first) < 0;
    });
    return out;
}

}  // namespace hijac
