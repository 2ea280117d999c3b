#include <algorithm>
#include <set>

#include "groebner_detail.hpp"
#include "hijac/groebner.hpp"

namespace hijac {

namespace {

// total-degree homogenization into k[x1..xd, t], t last
Polynomial homogenize(const Polynomial& f, int d) {
    int deg = f.degree();
    Polynomial out = Polynomial::zero(d + 1);
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e(static_cast<std::size_t>(d + 1), 0);
        for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i)] = m[i];
        e[static_cast<std::size_t>(d)] = deg - m.total();
        out = out + Polynomial::monomial(MultiIndex(std::move(e)), c);
    }
    return out;
}

Polynomial dehomogenize(const Polynomial& F, int d) {
    Polynomial out = Polynomial::zero(d);
    for (const auto& [m, c] : F.terms()) {
        std::vector<int> e(static_cast<std::size_t>(d), 0);
        for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i)] = m[i];
        out = out + Polynomial::monomial(MultiIndex(std::move(e)), c);
    }
    return out;
}

}  // namespace

// Standard bases by Lazard's method: a Groebner basis of the homogenized
// generators under HomogenizedLocal dehomogenizes to a standard basis for
// LocalGraded. Ordinary Buchberger termination applies, unlike a Mora-only
// completion whose reduction chains can climb in degree for a long time.
OrderedIdeal OrderedIdeal::standard(const IdealGens& gens) {
    int d = gens.vars();
    MonomialOrder local{OrderKind::LocalGraded};
    MonomialOrder homog{OrderKind::HomogenizedLocal};

    std::vector<detail::TermVec> G;
    G.reserve(gens.size());
    for (const auto& g : gens.gens()) G.push_back(detail::to_ordered(homogenize(g, d), homog));
    auto completed = detail::complete_basis(std::move(G), homog);
    auto hbasis = detail::finalize_basis(std::move(completed), homog, d + 1, true);

    std::vector<detail::TermVec> dehom;
    dehom.reserve(hbasis.size());
    for (const auto& H : hbasis)
        dehom.push_back(detail::to_ordered(dehomogenize(H, d), local));
    auto basis = detail::finalize_basis(std::move(dehom), local, d, false);

    OrderedIdeal out(gens, local, std::move(basis));

    QuotientBasis q = standard_monomials(out.leading_ideal(), d);
    if (q.finite) {
        // m^K sits inside the localized ideal once no standard monomial has
        // degree >= K, so membership reduces to a global question
        int K = 0;
        for (const auto& m : q.monomials) K = std::max(K, m.total() + 1);
        std::vector<Polynomial> mgens = gens.gens();
        for (const auto& m : multiindices(d, K, K)) mgens.push_back(Polynomial::monomial(m, 1));
        out.membership_oracle_ = std::make_shared<OrderedIdeal>(
            OrderedIdeal::groebner(IdealGens(d, std::move(mgens)), MonomialOrder{OrderKind::GradedLex}));
    }
    return out;
}

QuotientBasis standard_monomials(const std::vector<MultiIndex>& lead, int d) {
    QuotientBasis out;
    for (const auto& m : lead)
        if (m.is_zero()) {
            out.finite = true;
            return out;
        }
    // finite codimension needs a pure power of every variable
    for (int i = 0; i < d; ++i) {
        bool pure = false;
        for (const auto& m : lead) {
            bool only_i = m[i] > 0;
            for (int j = 0; only_i && j < d; ++j)
                if (j != i && m[j] != 0) only_i = false;
            if (only_i) { pure = true; break; }
        }
        if (!pure) return out;  // infinite
    }
    auto divisible = [&](const MultiIndex& m) {
        for (const auto& g : lead)
            if (detail::divides(g, m)) return true;
        return false;
    };
    // standard monomials are downward closed, so BFS from 1 reaches them all
    auto cmp = [](const MultiIndex& a, const MultiIndex& b) { return listing_before(a, b); };
    std::set<MultiIndex, decltype(cmp)> seen(cmp);
    std::vector<MultiIndex> queue{MultiIndex::zero(d)};
    seen.insert(queue.front());
    while (!queue.empty()) {
        MultiIndex m = queue.back();
        queue.pop_back();
        if (divisible(m)) continue;
        out.monomials.push_back(m);
        for (int i = 0; i < d; ++i) {
            MultiIndex next = m + MultiIndex::unit(d, i);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    std::sort(out.monomials.begin(), out.monomials.end(), listing_before);
    out.finite = true;
    out.dimension = static_cast<long>(out.monomials.size());
    return out;
}

QuotientBasis local_dimension(const IdealGens& I) {
    OrderedIdeal std_basis = OrderedIdeal::standard(I);
    return standard_monomials(std_basis.leading_ideal(), I.vars());
}

QuotientBasis global_dimension(const IdealGens& I, MonomialOrder order) {
    OrderedIdeal gb = OrderedIdeal::groebner(I, order);
    return standard_monomials(gb.leading_ideal(), I.vars());
}

}  // namespace hijac
