#ifndef HIJAC_POLYNOMIAL_HPP
#define HIJAC_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hijac/multiindex.hpp"
#include "hijac/rational.hpp"

namespace hijac {

class Substitution;

/**
 * Sparse multivariate polynomial with exact rational coefficients.
 *
 * Terms are stored in descending graded-lex order; no zero coefficient is
 * ever stored, so the zero polynomial is the empty map and structural
 * equality is semantic equality. Values are immutable in spirit: every
 * operation returns a fresh polynomial.
 */
class Polynomial {
public:
    using TermMap = std::map<MultiIndex, Rat, GrlexDesc>;

    Polynomial() = default;
    static Polynomial zero(int d);
    static Polynomial constant(int d, const Rat& c);
    static Polynomial variable(int d, int i);
    static Polynomial monomial(const MultiIndex& m, const Rat& c);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // coefficient of the zero multi-index (the value at the origin)
    Rat constant_term() const;
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rat coeff(const MultiIndex& m) const;

    int degree() const;      // max |alpha|, -1 for the zero polynomial
    int low_degree() const;  // min |alpha| (vanishing order at 0), -1 for zero
    int degree_in(int var) const;

    // leading term w.r.t. the canonical graded-lex order
    const MultiIndex& leading_monomial() const;
    const Rat& leading_coeff() const;

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& g) const;
    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    Polynomial scaled(const Rat& c) const;
    Polynomial pow(unsigned e) const;

    Polynomial derivative(int var) const;
    Polynomial derivative(const MultiIndex& alpha) const;
    // normalized higher derivative d^alpha f / alpha!
    Polynomial taylor_coefficient(const MultiIndex& alpha) const;

    Polynomial substitute(const Substitution& s) const;
    Rat evaluate(const std::vector<Rat>& p) const;
    Polynomial eval_partial(int var, const Rat& value) const;

    // image in a ring with new_d >= vars() variables, variable i -> i + shift
    Polynomial embed(int new_d, int shift = 0) const;
    Polynomial permute_vars(const std::vector<int>& perm) const;

    // exact division; nullopt when g does not divide this exactly
    std::optional<Polynomial> divide_exact(const Polynomial& g) const;
    // largest k with x_var^k dividing this (0 for the zero polynomial)
    int var_order(int var) const;
    // divide by x_var^k, k <= var_order
    Polynomial shift_down(int var, int k) const;

    // content: positive rational c with this = c * (primitive integer poly
    // with positive leading coefficient); zero polynomial has content 0
    Rat content() const;
    Polynomial primitive_part() const;  // this / content (zero stays zero)

    bool is_univariate_in(int var) const;
    // dense coefficient list c0 + c1 t + ... of a polynomial univariate in var
    std::vector<Rat> univariate_coeffs(int var) const;
    static Polynomial from_univariate(int d, int var, const std::vector<Rat>& cs);

    // deterministic total order (by term lists); only used for sorting
    static int cmp(const Polynomial& a, const Polynomial& b);

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const;  // x1..xd names

private:
    int vars_ = 0;
    TermMap terms_;

    void add_term(const MultiIndex& m, const Rat& c);
    void check_same_ring(const Polynomial& g) const;
    friend class Substitution;
};

/** Variable images of a ring endomorphism x_i -> images[i]. */
class Substitution {
public:
    Substitution() = default;
    explicit Substitution(std::vector<Polynomial> images);
    static Substitution identity(int d);

    int dim() const { return static_cast<int>(images_.size()); }
    const Polynomial& image(int i) const { return images_.at(i); }
    const std::vector<Polynomial>& images() const { return images_; }

    bool fixes_origin() const;
    // determinant of the linear part (exact); zero means not a local
    // automorphism candidate
    Rat linear_part_det() const;

    // (this o inner): first apply inner, then this; images of the composite
    // are this->images substituted through inner
    Substitution compose(const Substitution& inner) const;

    bool operator==(const Substitution& o) const { return images_ == o.images_; }

private:
    std::vector<Polynomial> images_;
};

std::vector<std::string> x_names(int d);
std::vector<std::string> y_names(int d);

}  // namespace hijac

#endif
