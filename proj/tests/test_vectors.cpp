#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lipeq/vectors.hpp"
#include "properties.hpp"

using namespace lipeq;

namespace {
PowerVector V(const char* s) { return PowerVector::parse(s); }
SparsePoly P(const char* s) { return parse_poly(s); }
}

TEST_CASE("char_poly collects duplicate exponents") {
    CHECK(char_poly(V("2,1")) == P("x^2+x-1"));
    CHECK(char_poly(V("1,2,2")) == P("2x^2+x-1"));
    CHECK(char_poly(V("1,1,1")) == P("3x-1"));
}

TEST_CASE("dimension isolates the unique root") {
    const Rat tol(Int(1), int_pow(10, 9));
    DimensionInfo d = dimension(V("2,1"), tol);
    CHECK(d.root_interval.width() <= tol);
    CHECK(d.approx > Rat(Int("618033988"), int_pow(10, 9)));
    CHECK(d.approx < Rat(Int("618033990"), int_pow(10, 9)));

    // 2x^2+x-1 = (2x-1)(x+1): the interval must straddle 1/2 exactly
    DimensionInfo h = dimension(V("1,2,2"), tol);
    CHECK(h.root_interval.lo < Rat(1, 2));
    CHECK(h.root_interval.hi > Rat(1, 2));

    DimensionInfo t = dimension(V("1,1"), Rat(Int(1), int_pow(10, 6)));
    CHECK(t.root_interval.lo < Rat(1, 2));
    CHECK(t.root_interval.hi > Rat(1, 2));
}

TEST_CASE("same_dimension is exact") {
    CHECK(same_dimension(V("2,1"), V("4,3,1")));
    CHECK_FALSE(same_dimension(V("1,1,1"), V("1,2")));
    PowerVector v = V("8,7,1");
    CHECK(same_dimension(v, v));
    CHECK(same_dimension(V("8,7,1"), V("3,2")));
    CHECK(same_dimension(V("8,4,2"), V("5,1")));
}

TEST_CASE("homogeneity detection") {
    auto h = is_homogeneous(V("3,3,3,3"));
    REQUIRE(h.has_value());
    CHECK(h->first == 3);
    CHECK(h->second == 4);
    CHECK_FALSE(is_homogeneous(V("1,2")).has_value());
    auto two = is_homogeneous(V("5,5"));
    REQUIRE(two.has_value());
    CHECK(two->first == 5);
    CHECK(two->second == 2);
}

TEST_CASE("perfect power exponents") {
    using PP = std::vector<std::pair<long long, long long>>;
    CHECK(perfect_power_exponents(8) == PP{{1, 8}, {3, 2}});
    CHECK(perfect_power_exponents(6) == PP{{1, 6}});
    CHECK(perfect_power_exponents(16) == PP{{1, 16}, {2, 4}, {4, 2}});
    CHECK(perfect_power_exponents(2) == PP{{1, 2}});
}

TEST_CASE("rank of rational ratio vectors") {
    CHECK(rank(RatioVector::parse("1/2,1/3")) == 2);
    CHECK(rank(RatioVector::parse("1/2,1/4,1/8")) == 1);
    CHECK(rank(RatioVector::parse("1/6,1/36")) == 1);
    CHECK(rank(RatioVector::parse("2/3,3/4,5/7")) == 3);
    CHECK(rank(RatioVector::parse("4/9,2/3")) == 1);
}

TEST_CASE("power vectors have rank 1 by construction") {
    CHECK(rank(V("2,1")) == 1);
    CHECK(rank(V("8,7,1")) == 1);
}

TEST_CASE("explicit gcd reduction") {
    long long g = 0;
    CHECK(reduce_by_gcd(V("4,2"), &g) == V("2,1"));
    CHECK(g == 2);
    CHECK(reduce_by_gcd(V("3,2")) == V("3,2"));
}

TEST_CASE("parsing and validation") {
    CHECK(V("8,7,1").str() == "1,7,8");
    CHECK_THROWS_AS(PowerVector::parse("3"), ParseError);
    CHECK_THROWS_AS(PowerVector::parse("0,1"), ParseError);
    CHECK_THROWS_AS(PowerVector::parse("a,b"), ParseError);
    CHECK(RatioVector::parse("1/3,1/2").str() == "1/3,1/2");
    CHECK_THROWS_AS(RatioVector::parse("1/2"), ParseError);
    CHECK_THROWS_AS(RatioVector::parse("3/2,1/2"), ParseError);
    CHECK(RatioVector::parse("1/2,2/3").sum_at_least_one());
}

TEST_CASE("properties: characteristic roots and dimension comparison") {
    auto check = [](const props::Result& r, int min_cases) {
        INFO(r.name);
        CHECK(r.cases >= min_cases);
        CHECK(r.failures == 0);
    };
    check(props::charpoly_root_unique(), 200);
    check(props::same_dimension_vs_intervals(), 100);
    check(props::perfect_power_property(), 200);
}
