#include "doctest.h"

#include "hijac/factor.hpp"
#include "hijac/parse.hpp"
#include "test_util.hpp"

using namespace hijac;
using testutil::Rng;
using testutil::random_poly;

namespace {
Polynomial P(const std::string& s, int d) { return parse_poly(s, d); }

bool same_factors(const Factorization& got, std::vector<std::pair<std::string, int>> expect, int d) {
    if (got.factors.size() != expect.size()) return false;
    std::vector<std::pair<Polynomial, int>> want;
    for (auto& [s, e] : expect) want.emplace_back(P(s, d), e);
    for (const auto& [p, e] : got.factors) {
        auto it = std::find(want.begin(), want.end(), std::make_pair(p, e));
        if (it == want.end()) return false;
        want.erase(it);
    }
    return want.empty();
}
}

TEST_CASE("polynomial gcd") {
    CHECK(poly_gcd(P("x1^2 - x2^2", 2), P("x1^2 + 2*x1*x2 + x2^2", 2)) == P("x1 + x2", 2));
    CHECK(poly_gcd(P("x1^3", 2), P("x1*x2", 2)) == P("x1", 2));
    CHECK(poly_gcd(P("x1 + 1", 2), P("x2 + 1", 2)) == P("1", 2));
    CHECK(poly_gcd(P("0", 2), P("3*x1", 2)) == P("x1", 2));
    Rng rng(101);
    for (int it = 0; it < 10; ++it) {
        Polynomial a = random_poly(rng, 2, 3, 3, true);
        Polynomial b = random_poly(rng, 2, 3, 3, true);
        Polynomial c = random_poly(rng, 2, 2, 2, true);
        Polynomial g = poly_gcd(a * c, b * c);
        // gcd contains c
        CHECK(g.divide_exact(poly_gcd(g, c.primitive_part())).has_value());
        CHECK(g.divide_exact(c.primitive_part()).has_value());
        CHECK((a * c).divide_exact(g).has_value());
        CHECK((b * c).divide_exact(g).has_value());
    }
}

TEST_CASE("squarefree machinery") {
    Polynomial f = P("x1^2", 2) * P("x1 - x2", 2).pow(3) * P("x2 + 1", 2);
    Polynomial sf = squarefree_part(f);
    CHECK(sf == (P("x1", 2) * P("x1 - x2", 2) * P("x2 + 1", 2)).primitive_part());
    auto dec = squarefree_decomposition(f);
    REQUIRE(dec.size() == 3);
    CHECK(dec[0] == std::make_pair(P("x2 + 1", 2), 1));
    CHECK(dec[1] == std::make_pair(P("x1", 2), 2));
    CHECK(dec[2] == std::make_pair(P("x1 - x2", 2), 3));
}

TEST_CASE("univariate factorization") {
    Factorization f1 = factor_polynomial(P("x1^2 - 1", 1));
    CHECK(same_factors(f1, {{"x1 - 1", 1}, {"x1 + 1", 1}}, 1));

    Factorization f2 = factor_polynomial(P("x1^6 + 1", 1));
    CHECK(same_factors(f2, {{"x1^2 + 1", 1}, {"x1^4 - x1^2 + 1", 1}}, 1));

    Factorization f3 = factor_polynomial(P("2*x1^2 + 2", 1));
    CHECK(f3.unit == 2);
    CHECK(same_factors(f3, {{"x1^2 + 1", 1}}, 1));

    Factorization f4 = factor_polynomial(P("6*x1^2 - 5*x1 + 1", 1));
    CHECK(same_factors(f4, {{"2*x1 - 1", 1}, {"3*x1 - 1", 1}}, 1));

    Factorization f5 = factor_polynomial(P("x1^4 + 4", 1));  // Sophie Germain
    CHECK(same_factors(f5, {{"x1^2 - 2*x1 + 2", 1}, {"x1^2 + 2*x1 + 2", 1}}, 1));
}

TEST_CASE("bivariate factorization on the germs used downstream") {
    // the cusp is irreducible
    Factorization cusp = factor_polynomial(P("x1^3 - x2^2", 2));
    CHECK(same_factors(cusp, {{"x1^3 - x2^2", 1}}, 2));

    Factorization axes = factor_polynomial(P("x1*x2", 2));
    CHECK(same_factors(axes, {{"x1", 1}, {"x2", 1}}, 2));

    Factorization nonred = factor_polynomial(P("x1^2*x2", 2));
    CHECK(same_factors(nonred, {{"x1", 2}, {"x2", 1}}, 2));

    Factorization node = factor_polynomial(P("x1^2 - x2^2", 2));
    CHECK(same_factors(node, {{"x1 - x2", 1}, {"x1 + x2", 1}}, 2));

    // rational node with irrational branches stays irreducible over Q
    Factorization qnode = factor_polynomial(P("x1^2 + x2^2", 2));
    CHECK(same_factors(qnode, {{"x1^2 + x2^2", 1}}, 2));

    // nodal cubic: irreducible despite two rational branches at the origin
    Factorization nodal = factor_polynomial(P("x2^2 - x1^2 - x1^3", 2));
    CHECK(same_factors(nodal, {{"x1^3 + x1^2 - x2^2", 1}}, 2));

    // the compare-pipeline input: unit factor away from the origin
    Factorization comp = factor_polynomial(P("(1 + x1^6)*(x1^3 - x2^2)", 2));
    REQUIRE(comp.factors.size() == 3);
    CHECK(same_factors(comp, {{"x1^3 - x2^2", 1}, {"x1^2 + 1", 1}, {"x1^4 - x1^2 + 1", 1}}, 2));
}

TEST_CASE("factorization reassembles the input") {
    Rng rng(107);
    std::vector<Polynomial> stock = {
        P("x1", 2), P("x2", 2), P("x1 - x2", 2), P("x1 + x2 + 1", 2),
        P("x1^2 + x2", 2), P("x1^3 - x2^2", 2)};
    for (int it = 0; it < 10; ++it) {
        Polynomial f = Polynomial::constant(2, make_rat(rng.range(1, 4)));
        int n = rng.range(1, 3);
        for (int k = 0; k < n; ++k)
            f = f * stock[static_cast<std::size_t>(rng.below(static_cast<int>(stock.size())))];
        Factorization fac = factor_polynomial(f);
        CHECK(fac.product(2) == f);
    }
}
