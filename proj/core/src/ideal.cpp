#include "hijac/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace hijac {

IdealGens::IdealGens(int d, std::vector<Polynomial> gens) : vars_(d) {
    for (auto& g : gens) {
        if (g.vars() != d) throw std::invalid_argument("IdealGens: generator in wrong ring");
        if (g.is_zero()) continue;
        gens_.push_back(g.primitive_part());
    }
    std::sort(gens_.begin(), gens_.end(), [](const Polynomial& a, const Polynomial& b) {
        int c = grlex_cmp(a.leading_monomial(), b.leading_monomial());
        if (c != 0) return c > 0;
        return Polynomial::cmp(a, b) > 0;
    });
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

IdealGens IdealGens::unit(int d) {
    return IdealGens(d, {Polynomial::constant(d, 1)});
}

bool IdealGens::is_unit_trivially() const {
    for (const auto& g : gens_)
        if (g.is_constant()) return true;
    return false;
}

IdealGens ideal_sum(const IdealGens& a, const IdealGens& b) {
    if (a.vars() != b.vars()) throw std::invalid_argument("ideal_sum: ring mismatch");
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return IdealGens(a.vars(), std::move(gens));
}

IdealGens ideal_product(const IdealGens& a, const IdealGens& b) {
    if (a.vars() != b.vars()) throw std::invalid_argument("ideal_product: ring mismatch");
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return IdealGens(a.vars(), std::move(gens));
}

IdealGens ideal_power(const IdealGens& a, int k) {
    if (k < 0) throw std::invalid_argument("ideal_power: negative exponent");
    IdealGens r = IdealGens::unit(a.vars());
    for (int i = 0; i < k; ++i) r = ideal_product(r, a);
    return r;
}

IdealGens apply_automorphism(const IdealGens& a, const Substitution& sigma) {
    std::vector<Polynomial> gens;
    for (const auto& g : a.gens()) gens.push_back(g.substitute(sigma));
    return IdealGens(a.vars(), std::move(gens));
}

}  // namespace hijac
