#include "doctest.h"

#include <algorithm>

#include "hijac/multiindex.hpp"

using namespace hijac;

namespace {
MultiIndex mi(std::vector<int> e) { return MultiIndex(std::move(e)); }
}

TEST_CASE("multiindices listing order matches the second-order column layout") {
    auto v = multiindices(2, 1, 2);
    std::vector<MultiIndex> expect = {mi({1, 0}), mi({0, 1}), mi({2, 0}), mi({1, 1}), mi({0, 2})};
    CHECK(v == expect);
}

TEST_CASE("multiindices degenerate slices") {
    CHECK(multiindices(3, 0, 0) == std::vector<MultiIndex>{mi({0, 0, 0})});
    auto v = multiindices(3, 1, 1);
    std::vector<MultiIndex> expect = {mi({1, 0, 0}), mi({0, 1, 0}), mi({0, 0, 1})};
    CHECK(v == expect);
}

TEST_CASE("multiindices count") {
    for (int d = 1; d <= 4; ++d) {
        for (int hi = 0; hi <= 5; ++hi) {
            auto v = multiindices(d, 0, hi);
            Int expect = 0;
            for (int k = 0; k <= hi; ++k) expect += binomial(d - 1 + k, d - 1);
            CHECK(Int(static_cast<long>(v.size())) == expect);
        }
    }
}

TEST_CASE("factorial and total") {
    CHECK(mi({3, 2, 0}).total() == 5);
    CHECK(mi({3, 2, 0}).factorial() == 12);
    CHECK(mi({0, 0}).factorial() == 1);
}

TEST_CASE("graded-lex is a total order and multiplicative") {
    auto all = multiindices(3, 0, 4);
    // listing order is strict and consistent with grlex_cmp
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
        CHECK(listing_before(all[i], all[i + 1]));
        CHECK(!listing_before(all[i + 1], all[i]));
    }
    // translation invariance: a < b  =>  a+c < b+c
    auto small = multiindices(3, 0, 3);
    for (std::size_t i = 0; i < small.size(); i += 3)
        for (std::size_t j = 0; j < small.size(); j += 5)
            for (std::size_t k = 0; k < small.size(); k += 7) {
                int c = grlex_cmp(small[i], small[j]);
                CHECK(grlex_cmp(small[i] + small[k], small[j] + small[k]) == c);
            }
}

TEST_CASE("componentwise order and difference") {
    CHECK(mi({1, 0}).leq(mi({2, 1})));
    CHECK(!mi({1, 2}).leq(mi({2, 1})));
    auto d = mi({2, 1}).minus(mi({1, 0}));
    REQUIRE(d.has_value());
    CHECK(*d == mi({1, 1}));
    CHECK(!mi({1, 0}).minus(mi({0, 2})).has_value());
}
