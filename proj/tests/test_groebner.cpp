#include "doctest.h"

#include "hijac/groebner.hpp"
#include "hijac/jacobian.hpp"
#include "hijac/parse.hpp"
#include "test_util.hpp"

using namespace hijac;
using testutil::Rng;
using testutil::random_poly;

namespace {
Polynomial P(const std::string& s, int d) { return parse_poly(s, d); }
const MonomialOrder kGrlex{OrderKind::GradedLex};
IdealGens I2(std::initializer_list<const char*> ss) {
    std::vector<Polynomial> gens;
    for (const char* s : ss) gens.push_back(P(s, 2));
    return IdealGens(2, std::move(gens));
}
}

TEST_CASE("reduced basis collapses redundant generators") {
    OrderedIdeal g = OrderedIdeal::groebner(I2({"x1^2", "x1"}), kGrlex);
    CHECK(g.basis() == std::vector<Polynomial>{P("x1", 2)});

    OrderedIdeal h = OrderedIdeal::groebner(I2({"3*x1^2", "-2*x2"}), kGrlex);
    CHECK(h.basis() == std::vector<Polynomial>{P("x1^2", 2), P("x2", 2)});
}

TEST_CASE("second Jacobian ideal of the cusp equals the five-generator form") {
    IdealGens J2 = jacobian_ideal(P("x1^3 - x2^2", 2), 2);
    IdealGens expect = I2({"x1^6", "x1^4*x2", "x1^2*x2^2", "x2^3", "4*x1*x2^2 - 3*x1^4"});
    CHECK(ideal_equal(J2, expect, kGrlex));
}

TEST_CASE("every S-polynomial of a returned basis reduces to zero") {
    Rng rng(51);
    for (int it = 0; it < 10; ++it) {
        int d = rng.range(2, 3);
        std::vector<Polynomial> gens;
        int n = rng.range(2, 4);
        for (int k = 0; k < n; ++k) gens.push_back(random_poly(rng, d, 3, 3, true));
        OrderedIdeal G = OrderedIdeal::groebner(IdealGens(d, gens), kGrlex);
        const auto& B = G.basis();
        for (std::size_t i = 0; i < B.size(); ++i)
            for (std::size_t j = i + 1; j < B.size(); ++j) {
                const MultiIndex &mi = B[i].leading_monomial(), &mj = B[j].leading_monomial();
                std::vector<int> l(static_cast<std::size_t>(d));
                for (int v = 0; v < d; ++v) l[static_cast<std::size_t>(v)] = std::max(mi[v], mj[v]);
                MultiIndex lcm{l};
                Polynomial s =
                    Polynomial::monomial(*lcm.minus(mi), Rat(1) / B[i].leading_coeff()) * B[i] -
                    Polynomial::monomial(*lcm.minus(mj), Rat(1) / B[j].leading_coeff()) * B[j];
                CHECK(G.normal_form(s).is_zero());
            }
    }
}

TEST_CASE("normal form is linear and vanishes exactly on members") {
    Rng rng(53);
    OrderedIdeal G = OrderedIdeal::groebner(I2({"x1^2 - x2", "x1*x2 - 1"}), kGrlex);
    for (int it = 0; it < 10; ++it) {
        Polynomial f = random_poly(rng, 2, 4, 4);
        Polynomial g = random_poly(rng, 2, 4, 4);
        Rat a = make_rat(rng.range(-3, 3));
        Rat b = make_rat(rng.range(-3, 3));
        CHECK(G.normal_form(f.scaled(a) + g.scaled(b)) ==
              G.normal_form(f).scaled(a) + G.normal_form(g).scaled(b));
        CHECK(G.normal_form(f) == G.normal_form(G.normal_form(f)));
    }
}

TEST_CASE("membership") {
    IdealGens J2 = jacobian_ideal(P("x1^3 - x2^2", 2), 2);
    OrderedIdeal G = OrderedIdeal::groebner(J2, kGrlex);
    CHECK(G.contains(P("x1^6", 2)));
    CHECK(!OrderedIdeal::groebner(I2({"x1", "x2"}), kGrlex).contains(P("1", 2)));
    OrderedIdeal J1sq = OrderedIdeal::groebner(ideal_power(I2({"x1^2", "x2"}), 2), kGrlex);
    CHECK(J1sq.contains(P("x1^6", 2)));
}

TEST_CASE("ideal equality") {
    CHECK(ideal_equal(I2({"x1", "x2"}), I2({"x2", "x1"}), kGrlex));
    CHECK(!ideal_equal(I2({"x1^2", "x2"}), I2({"x1"}), kGrlex));
    // invariant under generator permutation and unit rescaling
    Rng rng(59);
    for (int it = 0; it < 8; ++it) {
        Polynomial f = random_poly(rng, 2, 3, 3, true);
        Polynomial g = random_poly(rng, 2, 3, 3, true);
        IdealGens a(2, {f, g});
        IdealGens b(2, {g.scaled(make_rat(-7, 2)), f.scaled(make_rat(3))});
        CHECK(ideal_equal(a, b, kGrlex));
    }
}

TEST_CASE("ideal sum, product, power") {
    IdealGens m = I2({"x1", "x2"});
    CHECK(ideal_power(m, 2) == I2({"x1^2", "x1*x2", "x2^2"}));
    IdealGens i = I2({"x1^2 - x2", "x1*x2"});
    CHECK(ideal_product(i, IdealGens::unit(2)) == i);
    CHECK(ideal_power(i, 0) == IdealGens::unit(2));
    IdealGens j1cubed = ideal_power(I2({"x1^2", "x2"}), 3);
    CHECK(j1cubed == I2({"x1^6", "x1^4*x2", "x1^2*x2^2", "x2^3"}));
    CHECK(ideal_sum(m, i) == I2({"x1", "x2", "x1^2 - x2", "x1*x2"}));
}

TEST_CASE("apply automorphism to ideals") {
    IdealGens i = I2({"x1"});
    Substitution swap({P("x2", 2), P("x1", 2)});
    CHECK(apply_automorphism(i, swap) == I2({"x2"}));
    IdealGens j = I2({"x1^2", "x2"});
    CHECK(apply_automorphism(j, Substitution::identity(2)) == j);
    Substitution shear({P("x1 + x2", 2), P("x2", 2)});
    CHECK(ideal_equal(apply_automorphism(j, shear), j, kGrlex));
}

TEST_CASE("local order semantics") {
    MonomialOrder local{OrderKind::LocalGraded};
    CHECK(local.cmp(MultiIndex({0, 0}), MultiIndex({1, 0})) > 0);  // 1 beats x1 locally
    CHECK(local.cmp(MultiIndex({0, 2}), MultiIndex({3, 0})) > 0);  // lower degree wins
    CHECK_THROWS_AS(OrderedIdeal::groebner(I2({"x1"}), local), std::invalid_argument);
}

TEST_CASE("standard bases via Mora") {
    // a local unit generates everything
    OrderedIdeal u = OrderedIdeal::standard(I2({"1 + x1"}));
    CHECK(u.contains(P("1", 2)));
    CHECK(u.contains(P("x2^5", 2)));
    CHECK(local_dimension(I2({"1 + x1"})).dimension == 0);

    OrderedIdeal s = OrderedIdeal::standard(I2({"x1^3 - x2^2", "x1^2", "x2"}));
    auto lead = s.leading_ideal();
    REQUIRE(lead.size() == 2);
    CHECK(lead[0] == MultiIndex({0, 1}));
    CHECK(lead[1] == MultiIndex({2, 0}));

    OrderedIdeal c = OrderedIdeal::standard(I2({"x1^3 - x2^2"}));
    REQUIRE(c.basis().size() == 1);
    auto clead = c.leading_ideal();
    REQUIRE(clead.size() == 1);
    CHECK(clead[0] == MultiIndex({0, 2}));  // lowest-degree part leads locally
}

TEST_CASE("local dimensions") {
    auto q = local_dimension(I2({"x1^2", "x2"}));
    REQUIRE(q.finite);
    CHECK(q.dimension == 2);
    REQUIRE(q.monomials.size() == 2);
    CHECK(q.monomials[0] == MultiIndex({0, 0}));
    CHECK(q.monomials[1] == MultiIndex({1, 0}));

    CHECK(local_dimension(IdealGens::unit(2)).dimension == 0);
    CHECK(!local_dimension(I2({"x1"})).finite);
}

TEST_CASE("local membership through Mora normal form") {
    OrderedIdeal milnor = OrderedIdeal::standard(I2({"3*x1^2", "-2*x2"}));
    CHECK(milnor.contains(P("x1^3 - x2^2", 2)));
    CHECK(!milnor.contains(P("x1", 2)));
    // equality of the cusp Milnor ideal and the plain monomial form, locally
    CHECK(ideal_equal(I2({"3*x1^2", "-2*x2", "x1^3 - x2^2"}), I2({"x1^2", "x2"}),
                      MonomialOrder{OrderKind::LocalGraded}));
}

TEST_CASE("global and local quotient dimensions agree for origin-supported ideals") {
    Rng rng(61);
    for (int it = 0; it < 6; ++it) {
        // monomial ideals plus a deformation keeping support at the origin
        int a = rng.range(2, 4), b = rng.range(2, 4);
        IdealGens I = I2({("x1^" + std::to_string(a)).c_str(),
                          ("x2^" + std::to_string(b)).c_str(), "x1*x2 - x1^3*x2^2"});
        auto g = global_dimension(I, kGrlex);
        auto l = local_dimension(I);
        REQUIRE(g.finite);
        REQUIRE(l.finite);
        CHECK(g.dimension == l.dimension);
    }
}

TEST_CASE("Mora terminates on inputs that need the extended reducer set") {
    OrderedIdeal s = OrderedIdeal::standard(I2({"x1 - x1^2", "x2 + x1^3"}));
    CHECK(s.contains(P("x1", 2)));
    CHECK(s.contains(P("x2", 2)));
    auto q = local_dimension(I2({"x1 - x1^2", "x2 + x1^3"}));
    REQUIRE(q.finite);
    CHECK(q.dimension == 1);
}
