#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pisys/diagram.hpp"
#include "pisys/prng.hpp"
#include "support/test_oracles.hpp"

using namespace pisys;
using pisys::testing::vec;

TEST_CASE("diagram of the B3 basis") {
    RootSystem b3 = RootSystem::build({Family::B, 3});
    Diagram d = diagram_of(b3.simple());
    REQUIRE(d.nodes.size() == 3);
    CHECK(d.nodes[0].mark == LengthClass::Long);
    CHECK(d.nodes[1].mark == LengthClass::Long);
    CHECK(d.nodes[2].mark == LengthClass::Short);
    REQUIRE(d.bonds.size() == 2);
    CHECK(d.bond_multiplicity(0, 1) == 1);
    const DiagramBond* bd = d.bond_between(1, 2);
    REQUIRE(bd);
    CHECK(bd->multiplicity == 2);
    CHECK(bd->arrow_to == 2);
}

TEST_CASE("diagram of the extended-B3 A3 branch is a plain chain") {
    std::vector<RationalVector> roots{vec({1, -1, 0}), vec({0, 1, -1}), vec({-1, -1, 0})};
    Diagram d = diagram_of(roots);
    for (const auto& n : d.nodes) CHECK(n.mark == LengthClass::Long);
    REQUIRE(d.bonds.size() == 2);
    for (const auto& b : d.bonds) CHECK(b.multiplicity == 1);
    CHECK(classify(d).str() == "A3");
}

TEST_CASE("single root and empty input") {
    std::vector<RationalVector> one{vec({0, 0, 1})};
    Diagram d = diagram_of(one);
    CHECK(d.nodes.size() == 1);
    CHECK(d.bonds.empty());
    CHECK(d.nodes[0].mark == LengthClass::Long);  // relative marking
    CHECK(classify(d).str() == "A1");

    Diagram empty = diagram_of(std::span<const RationalVector>{});
    CHECK(components(empty).empty());
    CHECK(classify(empty).components.empty());
    CHECK(classify(empty).str() == "-");
}

TEST_CASE("ambient marks differ from relative marks for short roots") {
    RootSystem b3 = RootSystem::build({Family::B, 3});
    std::vector<RationalVector> shorts{vec({0, 0, 1})};
    CHECK(diagram_of(shorts).nodes[0].mark == LengthClass::Long);
    CHECK(diagram_of(shorts, b3).nodes[0].mark == LengthClass::Short);
}

TEST_CASE("positive Cartan integer is rejected") {
    std::vector<RationalVector> bad{vec({1, -1, 0}), vec({1, 0, -1})};
    CHECK_THROWS_AS(diagram_of(bad), std::invalid_argument);
}

TEST_CASE("components") {
    RootSystem b4 = RootSystem::build({Family::B, 4});
    std::vector<RationalVector> two{vec({1, -1, 0, 0}), vec({0, 0, 1, -1})};
    Diagram d = diagram_of(two, b4);
    CHECK(components(d).size() == 2);
    CHECK(classify(d).str() == "A1+A1");

    Diagram chain = diagram_of(RootSystem::build({Family::A, 3}).simple());
    CHECK(components(chain).size() == 1);
}

TEST_CASE("classify examples") {
    RootSystem b4 = RootSystem::build({Family::B, 4});
    CHECK(classify(diagram_of(b4.simple())).single({Family::B, 4}));

    RootSystem d4 = RootSystem::build({Family::D, 4});
    std::vector<RationalVector> pair{vec({1, -1, 0, 0}), vec({1, 1, 0, 0})};
    CHECK(classify(diagram_of(pair, d4)).str() == "A1+A1");
}

TEST_CASE("classify round-trips every simple basis") {
    for (TypeLabel t : admissible_labels(1, 8)) {
        CAPTURE(t.str());
        RootSystem rs = RootSystem::build(t);
        ClassifiedShape shape = classify(diagram_of(rs.simple()));
        REQUIRE(shape.components.size() == 1);
        CHECK(same_system(shape.components[0].type, t));
        // node_map must be a diagram isomorphism onto the Bourbaki diagram
        const Diagram& cat = catalogue_diagram(shape.components[0].type);
        Diagram d = diagram_of(rs.simple());
        const auto& nm = shape.components[0].node_map;
        for (std::size_t p = 0; p < nm.size(); ++p)
            for (std::size_t q = 0; q < nm.size(); ++q) {
                CHECK(cat.bond_multiplicity(static_cast<int>(p), static_cast<int>(q)) ==
                      d.bond_multiplicity(nm[p], nm[q]));
            }
    }
}

TEST_CASE("classify is permutation invariant") {
    SplitMix64 rng(5150);
    for (TypeLabel t : admissible_labels(2, 8)) {
        CAPTURE(t.str());
        RootSystem rs = RootSystem::build(t);
        std::vector<RationalVector> perm = rs.simple();
        for (int round = 0; round < 4; ++round) {
            for (std::size_t i = perm.size(); i > 1; --i)
                std::swap(perm[i - 1], perm[rng.next_below(i)]);
            CHECK(classify(diagram_of(perm)).single(t));
        }
    }
}

TEST_CASE("B2 and C2 classify to the same label") {
    RootSystem b2 = RootSystem::build({Family::B, 2});
    RootSystem c2 = RootSystem::build({Family::C, 2});
    CHECK(classify(diagram_of(b2.simple())).str() == "B2");
    CHECK(classify(diagram_of(c2.simple())).str() == "B2");
    CHECK(classify(diagram_of(c2.simple())).single({Family::C, 2}));
}

TEST_CASE("marked subdiagram examples") {
    CHECK(is_marked_subdiagram({Family::A, 3}, {Family::B, 5}));
    CHECK(is_marked_subdiagram({Family::A, 3}, {Family::B, 4}));
    CHECK_FALSE(is_marked_subdiagram({Family::A, 3}, {Family::B, 3}));
    CHECK_FALSE(is_marked_subdiagram({Family::D, 4}, {Family::B, 6}));
    CHECK(is_marked_subdiagram({Family::A, 7}, {Family::E, 8}));
    CHECK(is_marked_subdiagram({Family::D, 5}, {Family::E, 6}));
    CHECK_FALSE(is_marked_subdiagram({Family::B, 3}, {Family::C, 3}));
    // the A3 nodes of a C-system carry short marks, a plain A3 does not
    CHECK_FALSE(is_marked_subdiagram({Family::A, 3}, {Family::C, 5}));
    // B2 and C2 are interchangeable
    CHECK(is_marked_subdiagram({Family::C, 2}, {Family::B, 3}));
    CHECK(is_marked_subdiagram({Family::B, 2}, {Family::C, 3}));
}

TEST_CASE("identity and monotonicity of subdiagram containment") {
    SplitMix64 rng(77);
    for (TypeLabel t : admissible_labels(1, 8)) {
        CAPTURE(t.str());
        CHECK(is_marked_subdiagram(t, t));
    }
    // deleting nodes from a contained subdiagram keeps it contained
    for (TypeLabel amb : {TypeLabel{Family::B, 5}, TypeLabel{Family::E, 7}, TypeLabel{Family::F, 4}}) {
        for (TypeLabel sub : admissible_labels(1, amb.rank)) {
            if (!is_marked_subdiagram(sub, amb)) continue;
            const Diagram& cat = catalogue_diagram(sub);
            for (int trial = 0; trial < 8; ++trial) {
                std::uint64_t mask = rng.next_below(1ULL << cat.size());
                std::vector<RationalVector> kept;
                RootSystem sys = RootSystem::build(sub);
                for (std::size_t i = 0; i < cat.size(); ++i)
                    if (mask >> i & 1) kept.push_back(sys.simple()[i]);
                Diagram induced = diagram_of(kept, sys);
                CHECK(is_marked_subdiagram(induced, amb));
            }
        }
    }
}

TEST_CASE("two orthogonal short roots are not a subdiagram of B_n") {
    RootSystem b4 = RootSystem::build({Family::B, 4});
    std::vector<RationalVector> shorts{vec({1, 0, 0, 0}), vec({0, 1, 0, 0})};
    Diagram d = diagram_of(shorts, b4);
    CHECK(classify(d).str() == "A1+A1");
    CHECK(d.nodes[0].mark == LengthClass::Short);
    CHECK(d.nodes[1].mark == LengthClass::Short);
    for (int n = 2; n <= 8; ++n) CHECK_FALSE(is_marked_subdiagram(d, {Family::B, n}));

    // while two orthogonal long roots are, once the diagram has two
    // unbonded long nodes (rank 4 on; B3's two long nodes are adjacent)
    std::vector<RationalVector> longs{vec({1, -1, 0, 0}), vec({1, 1, 0, 0})};
    Diagram dl = diagram_of(longs, b4);
    CHECK_FALSE(is_marked_subdiagram(dl, {Family::B, 3}));
    for (int n = 4; n <= 8; ++n) CHECK(is_marked_subdiagram(dl, {Family::B, n}));
}

TEST_CASE("ascii rendering") {
    CHECK(render_ascii(diagram_of(RootSystem::build({Family::B, 3}).simple())) == "o---o=>=*");
    CHECK(render_ascii(diagram_of(RootSystem::build({Family::C, 3}).simple())) == "*---*=<=o");
    CHECK(render_ascii(diagram_of(RootSystem::build({Family::G, 2}).simple())) == "*#<#o");
    CHECK(render_ascii(diagram_of(RootSystem::build({Family::A, 1}).simple())) == "o");
    // branched diagrams fall back to an adjacency listing
    std::string d4 = render_ascii(diagram_of(RootSystem::build({Family::D, 4}).simple()));
    CHECK(d4.find('\n') != std::string::npos);
}
