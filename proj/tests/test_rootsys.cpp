#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pisys/rootsys.hpp"
#include "support/test_oracles.hpp"

using namespace pisys;
using pisys::testing::definition_roots;
using pisys::testing::vec;
using pisys::testing::halfvec;

namespace {

std::vector<TypeLabel> all_labels_to_8() { return admissible_labels(1, 8); }

}  // namespace

TEST_CASE("type labels") {
    CHECK(parse_type_label("B3") == TypeLabel{Family::B, 3});
    CHECK(parse_type_label("E8").str() == "E8");
    CHECK_THROWS_AS(parse_type_label("E9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type_label("D3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type_label("H4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type_label("B"), std::invalid_argument);
    CHECK(same_system({Family::B, 2}, {Family::C, 2}));
    CHECK_FALSE(same_system({Family::B, 3}, {Family::C, 3}));
    CHECK_THROWS_AS(RootSystem::build({Family::D, 3}), std::invalid_argument);
}

TEST_CASE("every built system matches the definition enumeration") {
    for (TypeLabel t : all_labels_to_8()) {
        CAPTURE(t.str());
        RootSystem rs = RootSystem::build(t);
        auto expected = definition_roots(t);
        REQUIRE(rs.roots().size() == expected.size());
        CHECK(rs.roots() == expected);  // both canonically sorted
        CHECK(rs.simple().size() == static_cast<std::size_t>(t.rank));
        for (const auto& s : rs.simple()) CHECK(rs.is_root(s));
    }
}

TEST_CASE("B3 explicit shape") {
    RootSystem b3 = RootSystem::build({Family::B, 3});
    CHECK(b3.roots().size() == 18);
    CHECK(b3.simple() == std::vector<RationalVector>{vec({1, -1, 0}), vec({0, 1, -1}), vec({0, 0, 1})});
}

TEST_CASE("E8 splits into integer and half-integer roots") {
    RootSystem e8 = RootSystem::build({Family::E, 8});
    REQUIRE(e8.roots().size() == 240);
    int integral = 0;
    for (const auto& r : e8.roots())
        if (std::all_of(r.coords.begin(), r.coords.end(),
                        [](const Rational& c) { return c.is_integer(); }))
            ++integral;
    CHECK(integral == 112);
    CHECK(240 - integral == 128);
    CHECK(RootSystem::build({Family::G, 2}).roots().size() == 12);
}

TEST_CASE("is_root examples") {
    RootSystem b4 = RootSystem::build({Family::B, 4});
    CHECK(b4.is_root(vec({0, 0, -1, 0})));
    CHECK_FALSE(b4.is_root(halfvec({1, 1, -1, -1})));
    RootSystem c3 = RootSystem::build({Family::C, 3});
    CHECK(c3.is_root(vec({2, 0, 0})));
    CHECK_FALSE(c3.is_root(vec({1, 0, 0})));
    CHECK_THROWS_AS(b4.is_root(vec({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("cartan_int examples") {
    CHECK(cartan_int(vec({1, -1, 0}), vec({0, 1, -1})) == -1);
    // the double bond of B3
    CHECK(cartan_int(vec({0, 1, -1}), vec({0, 0, 1})) == -2);
    CHECK(cartan_int(vec({0, 0, 1}), vec({0, 1, -1})) == -1);
    CHECK(cartan_int(vec({1, -1, 0}), vec({1, -1, 0})) == 2);
    CHECK_THROWS_AS(cartan_int(vec({1, 0}), vec({0, 0})), std::invalid_argument);
    // e1 against a G2 long root: 2*2/6 is not an integer
    CHECK_THROWS_AS(cartan_int(vec({1, 0, 0}), vec({2, -1, -1})), std::invalid_argument);
}

TEST_CASE("highest roots") {
    RootSystem b3 = RootSystem::build({Family::B, 3});
    CHECK(b3.highest_root() == vec({1, 1, 0}));
    auto coeffs = solve_coords(b3.simple(), b3.highest_root());
    REQUIRE(coeffs);
    CHECK(*coeffs == std::vector<Rational>{Rational(1), Rational(2), Rational(2)});

    RootSystem e7 = RootSystem::build({Family::E, 7});
    auto e7c = solve_coords(e7.simple(), e7.highest_root());
    REQUIRE(e7c);
    CHECK(*e7c == std::vector<Rational>{Rational(2), Rational(2), Rational(3), Rational(4),
                                        Rational(3), Rational(2), Rational(1)});

    RootSystem a2 = RootSystem::build({Family::A, 2});
    CHECK(a2.highest_root() == a2.simple()[0] + a2.simple()[1]);
}

TEST_CASE("highest root has strictly positive coefficients") {
    for (TypeLabel t : all_labels_to_8()) {
        CAPTURE(t.str());
        RootSystem rs = RootSystem::build(t);
        auto c = solve_coords(rs.simple(), rs.highest_root());
        REQUIRE(c);
        for (const auto& ci : *c) CHECK(Rational(0) < ci);
    }
}

TEST_CASE("reflect examples") {
    RationalVector a = vec({1, -1, 0});
    CHECK(reflect(a, a) == -a);
    CHECK(reflect(vec({0, 0, 1}), vec({0, 1, -1})) == vec({0, 1, 1}));
    // fixed hyperplane
    CHECK(reflect(vec({1, -1, 0}), vec({0, 0, 5})) == vec({0, 0, 5}));
    CHECK_THROWS_AS(reflect(vec({0, 0, 0}), vec({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("roots_by_length") {
    RootSystem b4 = RootSystem::build({Family::B, 4});
    auto long_b4 = b4.roots_by_length(LengthClass::Long);
    CHECK(long_b4.size() == 24);
    for (const auto& r : long_b4) CHECK(dot(r, r) == Rational(2));

    RootSystem c4 = RootSystem::build({Family::C, 4});
    auto short_c4 = c4.roots_by_length(LengthClass::Short);
    CHECK(short_c4 == long_b4);  // both are the +-e_i +- e_j set

    RootSystem a3 = RootSystem::build({Family::A, 3});
    CHECK(a3.roots_by_length(LengthClass::Short).empty());
    CHECK(a3.roots_by_length(LengthClass::Long).size() == a3.roots().size());
}

TEST_CASE("root sets closed under negation and reflection") {
    for (TypeLabel t : all_labels_to_8()) {
        CAPTURE(t.str());
        RootSystem rs = RootSystem::build(t);
        for (const auto& r : rs.roots()) CHECK(rs.is_root(-r));
        // reflections by every root keep the set fixed
        for (const auto& alpha : rs.roots())
            for (const auto& r : rs.roots())
                if (!rs.is_root(reflect(alpha, r))) {
                    CAPTURE(alpha.str());
                    CAPTURE(r.str());
                    REQUIRE(false);
                }
    }
}

TEST_CASE("basis property: integral uniformly-signed coordinates") {
    for (TypeLabel t : all_labels_to_8()) {
        CAPTURE(t.str());
        RootSystem rs = RootSystem::build(t);
        SpanSolver span(rs.simple());
        for (const auto& r : rs.roots()) {
            auto c = span.coords(r);
            REQUIRE(c);
            bool nonneg = true, nonpos = true;
            for (const auto& ci : *c) {
                CHECK(ci.is_integer());
                if (ci < Rational(0)) nonneg = false;
                if (Rational(0) < ci) nonpos = false;
            }
            CHECK((nonneg || nonpos));
        }
    }
}

TEST_CASE("at most two squared lengths, one for ADE") {
    for (TypeLabel t : all_labels_to_8()) {
        CAPTURE(t.str());
        RootSystem rs = RootSystem::build(t);
        std::set<std::pair<std::int64_t, std::int64_t>> lengths;
        for (const auto& r : rs.roots()) {
            Rational l = dot(r, r);
            lengths.insert({l.num, l.den});
        }
        bool simply_laced = t.family == Family::A || t.family == Family::D || t.family == Family::E;
        CHECK(lengths.size() == (simply_laced ? 1u : 2u));
        CHECK(rs.multiply_laced() == !simply_laced);
    }
}
