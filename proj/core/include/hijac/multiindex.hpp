#ifndef HIJAC_MULTIINDEX_HPP
#define HIJAC_MULTIINDEX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hijac/rational.hpp"

namespace hijac {

/**
 * Exponent vector of a monomial x1^a1 ... xd^ad.
 *
 * Two orderings are derived from the same comparison primitive:
 *  - monomial order: graded lex with x1 > x2 > ... (used for leading terms
 *    and canonical term serialization, largest first);
 *  - listing order: ascending total degree, within a degree largest monomial
 *    first (used for matrix row/column indexing).
 */
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : e_(std::move(e)) {}
    static MultiIndex zero(int d) { return MultiIndex(std::vector<int>(d, 0)); }
    static MultiIndex unit(int d, int i);

    int dim() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[i]; }
    const std::vector<int>& entries() const { return e_; }

    int total() const;        // |alpha|
    Int factorial() const;    // alpha!

    bool is_zero() const;
    bool leq(const MultiIndex& b) const;  // componentwise <=
    MultiIndex operator+(const MultiIndex& b) const;
    // componentwise difference, nullopt when some entry would go negative
    std::optional<MultiIndex> minus(const MultiIndex& b) const;

    bool operator==(const MultiIndex& b) const { return e_ == b.e_; }
    bool operator!=(const MultiIndex& b) const { return e_ != b.e_; }

    std::string str() const;  // "(a1,...,ad)"

private:
    std::vector<int> e_;
};

// Graded-lex monomial comparison: total degree first, ties lexicographic on
// entries. Returns <0, 0, >0 for a < b, a == b, a > b as monomials.
int grlex_cmp(const MultiIndex& a, const MultiIndex& b);

// Listing order used for matrix rows/columns: ascending degree, within a
// degree the grlex-larger monomial first.
bool listing_before(const MultiIndex& a, const MultiIndex& b);

// std::map comparator: descending graded-lex, so begin() is the leading term.
struct GrlexDesc {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return grlex_cmp(a, b) > 0;
    }
};

// All alpha with lo <= |alpha| <= hi in listing order.
std::vector<MultiIndex> multiindices(int d, int lo, int hi);

Int binomial(int n, int k);

}  // namespace hijac

#endif
