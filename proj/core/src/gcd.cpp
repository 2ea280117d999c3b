#include <algorithm>
#include <stdexcept>

#include "hijac/factor.hpp"

namespace hijac {

namespace {

int main_variable(const Polynomial& a, const Polynomial& b) {
    int d = a.vars();
    for (int v = d - 1; v >= 0; --v)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    return -1;
}

// coefficients of f as a polynomial in variable v, entries in the same ring
std::vector<Polynomial> coeffs_in(const Polynomial& f, int v) {
    int deg = std::max(0, f.degree_in(v));
    std::vector<Polynomial> cs(static_cast<std::size_t>(deg) + 1, Polynomial::zero(f.vars()));
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e = m.entries();
        int k = e[static_cast<std::size_t>(v)];
        e[static_cast<std::size_t>(v)] = 0;
        cs[static_cast<std::size_t>(k)] =
            cs[static_cast<std::size_t>(k)] + Polynomial::monomial(MultiIndex(std::move(e)), c);
    }
    return cs;
}

Polynomial from_coeffs(const std::vector<Polynomial>& cs, int v) {
    Polynomial f = Polynomial::zero(cs.at(0).vars());
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k].is_zero()) continue;
        f = f + cs[k] * Polynomial::monomial(MultiIndex::unit(cs[k].vars(), v), 1).pow(static_cast<unsigned>(k));
    }
    return f;
}

// content of f w.r.t. variable v: gcd of the coefficient polynomials
Polynomial content_in(const Polynomial& f, int v) {
    Polynomial c = Polynomial::zero(f.vars());
    for (const auto& p : coeffs_in(f, v)) {
        if (p.is_zero()) continue;
        c = c.is_zero() ? p.primitive_part() : poly_gcd(c, p);
        if (c.is_constant()) break;
    }
    return c.is_zero() ? c : c.primitive_part();
}

// pseudo-remainder of a by b in variable v: lc(b)^(da-db+1) * a mod b
Polynomial pseudo_rem(Polynomial a, const Polynomial& b, int v) {
    int db = b.degree_in(v);
    auto bc = coeffs_in(b, v);
    Polynomial lc_b = bc[static_cast<std::size_t>(db)];
    while (!a.is_zero() && a.degree_in(v) >= db) {
        int da = a.degree_in(v);
        auto ac = coeffs_in(a, v);
        Polynomial lc_a = ac[static_cast<std::size_t>(da)];
        Polynomial shift = Polynomial::monomial(MultiIndex::unit(a.vars(), v), 1).pow(static_cast<unsigned>(da - db));
        a = a * lc_b - b * lc_a * shift;
    }
    return a;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.vars() != b.vars()) throw std::invalid_argument("poly_gcd: ring mismatch");
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.vars(), 1);

    int v = main_variable(a, b);
    if (a.degree_in(v) == 0 || b.degree_in(v) == 0) {
        // one side is free of the main variable: gcd divides its content
        const Polynomial& flat = a.degree_in(v) == 0 ? a : b;
        const Polynomial& tall = a.degree_in(v) == 0 ? b : a;
        return poly_gcd(flat, content_in(tall, v));
    }

    Polynomial ca = content_in(a, v), cb = content_in(b, v);
    Polynomial cont = poly_gcd(ca, cb);
    Polynomial pa = *a.divide_exact(ca), pb = *b.divide_exact(cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (true) {
        Polynomial r = pseudo_rem(pa, pb, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            pb = Polynomial::constant(a.vars(), 1);
            break;
        }
        pa = std::move(pb);
        pb = *r.divide_exact(content_in(r, v));
    }
    Polynomial g = pb.is_constant() ? cont : cont * *pb.divide_exact(content_in(pb, v));
    return g.primitive_part();
}

Polynomial squarefree_part(const Polynomial& f) {
    if (f.is_zero() || f.is_constant()) return f.is_zero() ? f : Polynomial::constant(f.vars(), 1);
    Polynomial g = Polynomial::zero(f.vars());
    for (int i = 0; i < f.vars(); ++i) {
        Polynomial di = f.derivative(i);
        if (di.is_zero()) continue;
        g = g.is_zero() ? poly_gcd(f, di) : poly_gcd(g, di);
        if (g.is_constant()) break;
    }
    if (g.is_zero() || g.is_constant()) return f.primitive_part();
    return f.divide_exact(g)->primitive_part();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f) {
    std::vector<std::pair<Polynomial, int>> out;
    if (f.is_zero() || f.is_constant()) return out;
    // layers s_k = product of primes of multiplicity >= k; then the
    // multiplicity-exactly-k part is s_k / s_{k+1}
    std::vector<Polynomial> layers;
    Polynomial w = f.primitive_part();
    while (!w.is_constant()) {
        Polynomial s = squarefree_part(w);
        layers.push_back(s);
        w = w.divide_exact(s)->primitive_part();
    }
    for (std::size_t k = 0; k < layers.size(); ++k) {
        Polynomial part = k + 1 < layers.size()
                              ? layers[k].divide_exact(layers[k + 1])->primitive_part()
                              : layers[k];
        if (!part.is_constant()) out.emplace_back(part, static_cast<int>(k) + 1);
    }
    return out;
}

}  // namespace hijac
