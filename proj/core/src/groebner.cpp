#include "hijac/groebner.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "groebner_detail.hpp"

namespace hijac {

int MonomialOrder::cmp(const MultiIndex& a, const MultiIndex& b) const {
    auto lex = [](const MultiIndex& x, const MultiIndex& y) {
        for (int i = 0; i < x.dim(); ++i)
            if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
        return 0;
    };
    auto revlex_tie = [](const MultiIndex& x, const MultiIndex& y) {
        // larger when the last nonzero entry of x - y is negative
        for (int i = x.dim() - 1; i >= 0; --i)
            if (x[i] != y[i]) return x[i] > y[i] ? -1 : 1;
        return 0;
    };
    switch (kind) {
        case OrderKind::Lex:
            return lex(a, b);
        case OrderKind::GradedLex:
            return grlex_cmp(a, b);
        case OrderKind::GradedRevLex: {
            int da = a.total(), db = b.total();
            if (da != db) return da < db ? -1 : 1;
            return revlex_tie(a, b);
        }
        case OrderKind::LocalGraded: {
            int da = a.total(), db = b.total();
            if (da != db) return da < db ? 1 : -1;
            return revlex_tie(a, b);
        }
        case OrderKind::HomogenizedLocal: {
            int da = a.total(), db = b.total();
            if (da != db) return da < db ? -1 : 1;
            // t is the last variable; ties follow LocalGraded on the x-part
            int xa = da - a[a.dim() - 1], xb = db - b[b.dim() - 1];
            if (xa != xb) return xa < xb ? 1 : -1;
            for (int i = a.dim() - 2; i >= 0; --i)
                if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

std::string MonomialOrder::name() const {
    switch (kind) {
        case OrderKind::Lex: return "lex";
        case OrderKind::GradedLex: return "grlex";
        case OrderKind::GradedRevLex: return "grevlex";
        case OrderKind::LocalGraded: return "local";
    }
    return "?";
}

namespace detail {

// guard against pathological reduction chains; local membership normally goes
// through the finite-dimension shortcut instead
constexpr long kMoraIterationCap = 2000000;

TermVec to_ordered(const Polynomial& p, const MonomialOrder& ord) {
    TermVec v;
    v.reserve(p.num_terms());
    for (const auto& [m, c] : p.terms()) v.push_back({m, c});
    std::sort(v.begin(), v.end(),
              [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
    return v;
}

Polynomial to_poly(const TermVec& v, int d) {
    Polynomial p = Polynomial::zero(d);
    for (const auto& t : v) p = p + Polynomial::monomial(t.m, t.c);
    return p;
}

bool divides(const MultiIndex& a, const MultiIndex& b) { return a.leq(b); }

MultiIndex mono_lcm(const MultiIndex& a, const MultiIndex& b) {
    std::vector<int> e(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) e[static_cast<std::size_t>(i)] = std::max(a[i], b[i]);
    return MultiIndex(std::move(e));
}

TermVec axpy(const TermVec& h, const Rat& c, const MultiIndex& m, const TermVec& g,
             const MonomialOrder& ord) {
    TermVec out;
    out.reserve(h.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < h.size() || j < g.size()) {
        if (j == g.size()) { out.push_back(h[i++]); continue; }
        MultiIndex gm = g[j].m + m;
        if (i == h.size()) { out.push_back({gm, -c * g[j].c}); ++j; continue; }
        int cmp = ord.cmp(h[i].m, gm);
        if (cmp > 0) {
            out.push_back(h[i++]);
        } else if (cmp < 0) {
            out.push_back({gm, -c * g[j].c});
            ++j;
        } else {
            Rat nc = h[i].c - c * g[j].c;
            if (nc != 0) out.push_back({h[i].m, nc});
            ++i;
            ++j;
        }
    }
    return out;
}

int ecart(const TermVec& f) {
    if (f.empty()) return 0;
    int lead = f.front().m.total();
    int maxdeg = lead;
    for (const auto& t : f) maxdeg = std::max(maxdeg, t.m.total());
    return maxdeg - lead;
}

TermVec normal_form_global(TermVec h, const std::vector<TermVec>& G, const MonomialOrder& ord) {
    TermVec rem;
    while (!h.empty()) {
        bool reduced = false;
        for (const auto& g : G) {
            if (g.empty() || !divides(g.front().m, h.front().m)) continue;
            Rat c = h.front().c / g.front().c;
            h = axpy(h, c, *h.front().m.minus(g.front().m), g, ord);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(h.front());
            h.erase(h.begin());
        }
    }
    return rem;
}

TermVec normal_form_mora(TermVec h, const std::vector<TermVec>& G, const MonomialOrder& ord) {
    std::vector<TermVec> T(G);
    long iters = 0;
    while (!h.empty()) {
        if (++iters > kMoraIterationCap)
            throw std::runtime_error("Mora normal form exceeded the iteration cap");
        int best = -1, best_ecart = 0;
        for (std::size_t k = 0; k < T.size(); ++k) {
            if (T[k].empty() || !divides(T[k].front().m, h.front().m)) continue;
            int e = ecart(T[k]);
            if (best < 0 || e < best_ecart) { best = static_cast<int>(k); best_ecart = e; }
        }
        if (best < 0) return h;
        if (best_ecart > ecart(h)) T.push_back(h);
        const TermVec& g = T[static_cast<std::size_t>(best)];
        Rat c = h.front().c / g.front().c;
        h = axpy(h, c, *h.front().m.minus(g.front().m), g, ord);
    }
    return h;
}

namespace {

struct SPair {
    int i, j;
    MultiIndex lcm;
    int deg;
};

TermVec spoly(const TermVec& f, const TermVec& g, const MultiIndex& lcm, const MonomialOrder& ord) {
    TermVec a = axpy(TermVec{}, Rat(-1) / f.front().c, *lcm.minus(f.front().m), f, ord);
    return axpy(a, Rat(1) / g.front().c, *lcm.minus(g.front().m), g, ord);
}

}  // namespace

std::vector<TermVec> complete_basis(std::vector<TermVec> G, const MonomialOrder& ord) {
    G.erase(std::remove_if(G.begin(), G.end(), [](const TermVec& v) { return v.empty(); }),
            G.end());
    std::deque<SPair> pairs;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            MultiIndex l = mono_lcm(G[static_cast<std::size_t>(i)].front().m,
                                    G[static_cast<std::size_t>(j)].front().m);
            // product criterion: coprime leading monomials reduce to zero
            if (l == G[static_cast<std::size_t>(i)].front().m + G[static_cast<std::size_t>(j)].front().m)
                continue;
            pairs.push_back({i, j, l, l.total()});
        }
    };
    for (int j = 0; j < static_cast<int>(G.size()); ++j) push_pairs(j);

    auto nf = [&](TermVec h) {
        return ord.is_global() ? normal_form_global(std::move(h), G, ord)
                               : normal_form_mora(std::move(h), G, ord);
    };

    while (!pairs.empty()) {
        // normal strategy: lowest lcm degree, ties by graded-lex on the lcm,
        // then by pair age
        std::size_t sel = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const SPair &a = pairs[k], &b = pairs[sel];
            if (a.deg != b.deg) { if (a.deg < b.deg) sel = k; continue; }
            int c = grlex_cmp(a.lcm, b.lcm);
            if (c < 0) sel = k;
        }
        SPair p = pairs[sel];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(sel));
        TermVec r = nf(spoly(G[static_cast<std::size_t>(p.i)], G[static_cast<std::size_t>(p.j)],
                             p.lcm, ord));
        if (!r.empty()) {
            G.push_back(std::move(r));
            push_pairs(static_cast<int>(G.size()) - 1);
        }
    }
    return G;
}

std::vector<Polynomial> finalize_basis(std::vector<TermVec> G, const MonomialOrder& ord, int d,
                                       bool interreduce) {
    // divisibility-minimal leading terms: keep greedily in ascending LM order
    G.erase(std::remove_if(G.begin(), G.end(), [](const TermVec& v) { return v.empty(); }),
            G.end());
    // listing order puts any divisor before its multiples, for local orders too
    std::sort(G.begin(), G.end(), [&](const TermVec& a, const TermVec& b) {
        if (a.front().m != b.front().m) return listing_before(a.front().m, b.front().m);
        return a.size() < b.size();
    });
    std::vector<TermVec> kept;
    for (auto& g : G) {
        bool redundant = false;
        for (const auto& k : kept)
            if (divides(k.front().m, g.front().m)) { redundant = true; break; }
        if (!redundant) kept.push_back(std::move(g));
    }
    if (interreduce) {
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<TermVec> others;
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            kept[i] = normal_form_global(kept[i], others, ord);
        }
        kept.erase(std::remove_if(kept.begin(), kept.end(),
                                  [](const TermVec& v) { return v.empty(); }),
                   kept.end());
    }
    std::vector<Polynomial> out;
    out.reserve(kept.size());
    for (const auto& v : kept) {
        Polynomial p = to_poly(v, d).primitive_part();
        // sign normalized by the leading coefficient of the order in use
        if (!p.is_zero() && p.coeff(v.front().m) < 0) p = -p;
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        TermVec ta = to_ordered(a, ord), tb = to_ordered(b, ord);
        int c = ord.cmp(ta.front().m, tb.front().m);
        if (c != 0) return c > 0;
        return Polynomial::cmp(a, b) > 0;
    });
    return out;
}

}  // namespace detail

OrderedIdeal OrderedIdeal::groebner(const IdealGens& gens, MonomialOrder order) {
    if (!order.is_global())
        throw std::invalid_argument("groebner_basis: local order passed, use standard_basis");
    std::vector<detail::TermVec> G;
    for (const auto& g : gens.gens()) G.push_back(detail::to_ordered(g, order));
    auto full = detail::complete_basis(std::move(G), order);
    auto basis = detail::finalize_basis(std::move(full), order, gens.vars(), true);
    return OrderedIdeal(gens, order, std::move(basis));
}

std::vector<MultiIndex> OrderedIdeal::leading_ideal() const {
    std::vector<MultiIndex> lead;
    for (const auto& g : basis_) {
        auto v = detail::to_ordered(g, order_);
        if (!v.empty()) lead.push_back(v.front().m);
    }
    std::sort(lead.begin(), lead.end(), listing_before);
    std::vector<MultiIndex> min;
    for (const auto& m : lead) {
        bool red = false;
        for (const auto& k : min)
            if (detail::divides(k, m)) { red = true; break; }
        if (!red) min.push_back(m);
    }
    return min;
}

Polynomial OrderedIdeal::normal_form(const Polynomial& f) const {
    std::vector<detail::TermVec> B;
    B.reserve(basis_.size());
    for (const auto& g : basis_) B.push_back(detail::to_ordered(g, order_));
    auto h = detail::to_ordered(f, order_);
    auto r = order_.is_global() ? detail::normal_form_global(std::move(h), B, order_)
                                : detail::normal_form_mora(std::move(h), B, order_);
    return detail::to_poly(r, vars());
}

bool OrderedIdeal::contains(const Polynomial& f) const {
    if (membership_oracle_) return membership_oracle_->contains(f);
    return normal_form(f).is_zero();
}

bool ideal_equal(const IdealGens& I, const IdealGens& J, MonomialOrder order) {
    if (I.vars() != J.vars()) throw std::invalid_argument("ideal_equal: ring mismatch");
    if (order.is_global()) {
        return OrderedIdeal::groebner(I, order).basis() ==
               OrderedIdeal::groebner(J, order).basis();
    }
    OrderedIdeal a = OrderedIdeal::standard(I);
    OrderedIdeal b = OrderedIdeal::standard(J);
    for (const auto& g : J.gens())
        if (!a.contains(g)) return false;
    for (const auto& g : I.gens())
        if (!b.contains(g)) return false;
    return true;
}

}  // namespace hijac
