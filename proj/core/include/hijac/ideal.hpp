#ifndef HIJAC_IDEAL_HPP
#define HIJAC_IDEAL_HPP

#include <vector>

#include "hijac/polynomial.hpp"

namespace hijac {

/**
 * Generator list of an ideal in canonical form: zero generators dropped,
 * duplicates removed, every generator primitive with positive leading
 * coefficient, list sorted descending by graded-lex leading monomial.
 */
class IdealGens {
public:
    explicit IdealGens(int d) : vars_(d) {}
    IdealGens(int d, std::vector<Polynomial> gens);
    static IdealGens unit(int d);

    int vars() const { return vars_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero_ideal() const { return gens_.empty(); }
    // true when some generator is a nonzero constant
    bool is_unit_trivially() const;

    bool operator==(const IdealGens& o) const {
        return vars_ == o.vars_ && gens_ == o.gens_;
    }

private:
    int vars_;
    std::vector<Polynomial> gens_;
};

IdealGens ideal_sum(const IdealGens& a, const IdealGens& b);
IdealGens ideal_product(const IdealGens& a, const IdealGens& b);
IdealGens ideal_power(const IdealGens& a, int k);
IdealGens apply_automorphism(const IdealGens& a, const Substitution& sigma);

}  // namespace hijac

#endif
