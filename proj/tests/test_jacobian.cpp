#include "doctest.h"

#include "hijac/jacobian.hpp"
#include "hijac/parse.hpp"
#include "test_util.hpp"

using namespace hijac;
using testutil::Rng;
using testutil::random_poly;

namespace {
Polynomial P(const std::string& s, int d) { return parse_poly(s, d); }
const char* kCusp = "x1^3 - x2^2";
}

TEST_CASE("second-order matrix of the cusp matches the worked example") {
    JacobianMatrix M = jac_matrix(P(kCusp, 2), 2);
    REQUIRE(M.row_count() == 3);
    REQUIRE(M.col_count() == 5);
    const char* expect[3][5] = {
        {"3*x1^2", "-2*x2", "3*x1", "0", "-1"},
        {"0", "0", "3*x1^2", "-2*x2", "0"},
        {"0", "0", "0", "3*x1^2", "-2*x2"},
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j) CHECK(M.entry(i, j) == P(expect[i][j], 2));
}

TEST_CASE("order one is the gradient row") {
    Polynomial f = P("x1^2*x2 + x3", 3);
    JacobianMatrix M = jac_matrix(f, 1);
    REQUIRE(M.row_count() == 1);
    REQUIRE(M.col_count() == 3);
    for (int j = 0; j < 3; ++j) CHECK(M.entry(0, j) == f.derivative(j));
}

TEST_CASE("matrix versions") {
    Polynomial f = P(kCusp, 2);
    JacobianMatrix Z = jac_matrix(f, 2, JacVersion::ZeroDiagonal);
    JacobianMatrix F = jac_matrix(f, 2, JacVersion::FDiagonal);
    JacobianMatrix T = jac_matrix(f, 2, JacVersion::JacobiTaylor);
    CHECK(F.col_count() == Z.col_count());
    CHECK(T.col_count() == Z.col_count() + 1);
    // FDiagonal replaces the alpha == beta entries by f
    for (int i = 0; i < Z.row_count(); ++i)
        for (int j = 0; j < Z.col_count(); ++j) {
            if (Z.row_indices()[static_cast<std::size_t>(i)] ==
                Z.col_indices()[static_cast<std::size_t>(j)]) {
                CHECK(Z.entry(i, j).is_zero());
                CHECK(F.entry(i, j) == f);
            } else {
                CHECK(Z.entry(i, j) == F.entry(i, j));
            }
            CHECK(T.entry(i, j + 1) == F.entry(i, j));
        }
    // extra Jacobi-Taylor column is (f, 0, ..., 0)
    CHECK(T.entry(0, 0) == f);
    for (int i = 1; i < T.row_count(); ++i) CHECK(T.entry(i, 0).is_zero());
}

TEST_CASE("matrix shape invariant") {
    Rng rng(31);
    for (int d = 1; d <= 4; ++d)
        for (int n = 1; n <= 4; ++n) {
            Polynomial f = random_poly(rng, d, 4, 5, true);
            JacobianMatrix M = jac_matrix(f, n);
            CHECK(Int(M.row_count()) == binomial(d - 1 + n, d));
            CHECK(Int(M.col_count()) == binomial(d + n, d) - 1);
        }
}

TEST_CASE("maximal minors of the cusp matrix") {
    JacobianMatrix M = jac_matrix(P(kCusp, 2), 2);
    auto minors = maximal_minors(M);
    REQUIRE(minors.size() == 10);
    // columns {3,4,5} in 1-based labels, last subset in lex order
    CHECK(minors[9] == P("12*x1*x2^2 - 9*x1^4", 2));
    // the shared-subset path and the per-minor path agree
    auto direct = maximal_minors(M.grid(), true);
    CHECK(minors == direct);
}

TEST_CASE("minors of a single row are the entries themselves") {
    Polynomial f = P("x1^3 - x2^2", 2);
    auto minors = maximal_minors(jac_matrix(f, 1));
    REQUIRE(minors.size() == 2);
    CHECK(minors[0] == P("3*x1^2", 2));
    CHECK(minors[1] == P("-2*x2", 2));
}

TEST_CASE("minors of the zero matrix vanish") {
    auto minors = maximal_minors(jac_matrix(Polynomial::constant(2, 5), 2));
    for (const auto& m : minors) CHECK(m.is_zero());
}

TEST_CASE("minors are multilinear in rows") {
    Rng rng(37);
    Polynomial f = random_poly(rng, 2, 3, 4, true);
    JacobianMatrix M = jac_matrix(f, 2);
    auto base = maximal_minors(M);
    auto grid = M.grid();
    Rat c = make_rat(7, 3);
    for (auto& e : grid[1]) e = e.scaled(c);
    auto scaled = maximal_minors(grid);
    for (std::size_t k = 0; k < base.size(); ++k) CHECK(scaled[k] == base[k].scaled(c));
}

TEST_CASE("jacobian ideal generators of the cusp") {
    IdealGens J2 = jacobian_ideal(P(kCusp, 2), 2);
    std::vector<Polynomial> expect = {
        P("x1^6", 2), P("x1^4*x2", 2), P("3*x1^4 - 4*x1*x2^2", 2),
        P("x1^2*x2^2", 2), P("x2^3", 2)};
    CHECK(J2.gens() == expect);

    IdealGens J1 = jacobian_ideal(P(kCusp, 2), 1);
    std::vector<Polynomial> e1 = {P("x1^2", 2), P("x2", 2)};
    CHECK(J1.gens() == e1);

    IdealGens Jq = jacobian_ideal(P("x1^2 + x2^2 + x3^2", 3), 1);
    std::vector<Polynomial> eq = {P("x1", 3), P("x2", 3), P("x3", 3)};
    CHECK(Jq.gens() == eq);
}

TEST_CASE("fitting ideals") {
    Polynomial f = P(kCusp, 2);
    // transpose of Jac_n(f) at i = C(d-1+n, d-1) - 1 recovers the Jacobian ideal
    for (int n = 1; n <= 2; ++n) {
        JacobianMatrix M = jac_matrix(f, n);
        std::vector<std::vector<Polynomial>> At(
            static_cast<std::size_t>(M.col_count()),
            std::vector<Polynomial>(static_cast<std::size_t>(M.row_count()), Polynomial::zero(2)));
        for (int i = 0; i < M.row_count(); ++i)
            for (int j = 0; j < M.col_count(); ++j) At[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = M.entry(i, j);
        int i_idx = static_cast<int>(binomial(2 - 1 + n, 2 - 1).get_si()) - 1;
        CHECK(fitting_ideal(At, i_idx) == jacobian_ideal(f, n));
    }
    // i = N gives the unit ideal
    std::vector<std::vector<Polynomial>> diag = {
        {P("x1", 2), P("0", 2)}, {P("0", 2), P("x2", 2)}};
    CHECK(fitting_ideal(diag, 2) == IdealGens::unit(2));
    CHECK(fitting_ideal(diag, 0) == IdealGens(2, {P("x1*x2", 2)}));
}

TEST_CASE("kernel identity certifies the matrix rows as relations") {
    CHECK(verify_kernel_identity(P(kCusp, 2), 2));
    CHECK(verify_kernel_identity(Polynomial::constant(2, 4), 3));
    CHECK(verify_kernel_identity(P("x1*x2", 2), 1));
    Rng rng(41);
    for (int it = 0; it < 12; ++it) {
        int d = rng.range(1, 3);
        int n = rng.range(1, 3);
        CHECK(verify_kernel_identity(random_poly(rng, d, 4, 4), n));
    }
}

TEST_CASE("generic rank") {
    JacobianMatrix M = jac_matrix(P(kCusp, 2), 2);
    CHECK(generic_rank(M) == 3);
    CHECK(generic_rank(jac_matrix(Polynomial::constant(2, 3), 2)) == 0);
    CHECK(generic_rank(jac_matrix(P("x1*x2 + x3", 3), 1)) == 1);
    Rng rng(43);
    for (int it = 0; it < 10; ++it) {
        int d = rng.range(1, 3);
        int n = rng.range(1, 3);
        Polynomial f = random_poly(rng, d, 4, 5, true);
        CHECK(Int(generic_rank(jac_matrix(f, n))) == binomial(d - 1 + n, d));
    }
}

TEST_CASE("symbolic fallback rank agrees on degenerate matrices") {
    // duplicated rows force a symbolic answer below full rank
    Polynomial f = P("x1^2 + x2^3", 2);
    std::vector<std::vector<Polynomial>> g = {
        {f.derivative(0), f.derivative(1)},
        {f.derivative(0), f.derivative(1)},
    };
    CHECK(generic_rank(g) == 1);
    std::vector<std::vector<Polynomial>> z(2, std::vector<Polynomial>(3, Polynomial::zero(2)));
    CHECK(generic_rank(z) == 0);
}
