#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "orbk/ade.hpp"
#include "orbk/character_table.hpp"
#include "orbk/finite_group.hpp"
#include "orbk/quaternion.hpp"

using orbk::AdeLabel;
using orbk::FiniteGroup;
using orbk::Quaternion;

TEST_CASE("quaternion algebra") {
    Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    CHECK(orbk::approx_equal(i * j, k));
    CHECK(orbk::approx_equal(j * i, Quaternion{0, 0, 0, -1}));
    CHECK(orbk::approx_equal(i * i, Quaternion{-1, 0, 0, 0}));
    CHECK(orbk::approx_equal(i * i.conjugate(), Quaternion::one()));
    CHECK(std::abs(orbk::su2_determinant(i) - 1.0) < 1e-12);
    CHECK(std::abs(orbk::su2_trace(Quaternion{0.5, 0.5, 0.5, 0.5}) - 1.0) < 1e-12);
}

TEST_CASE("ADE label parsing") {
    CHECK(orbk::parse_ade_label("A1") == AdeLabel::cyclic(2));
    CHECK(orbk::parse_ade_label("A4") == AdeLabel::cyclic(5));
    CHECK(orbk::parse_ade_label("D4") == AdeLabel::binary_dihedral(2));
    CHECK(orbk::parse_ade_label("D12") == AdeLabel::binary_dihedral(10));
    CHECK(orbk::parse_ade_label("E6") == AdeLabel::e6());
    CHECK(orbk::parse_ade_label("E8") == AdeLabel::e8());
    for (const char* bad : {"E9", "X3", "A0", "D3", "A", "", "A-1", "E65"})
        CHECK_THROWS_AS(orbk::parse_ade_label(bad), orbk::error);
    for (const AdeLabel& label : orbk::builtin_labels())
        CHECK(orbk::parse_ade_label(orbk::to_string(label)) == label);
}

TEST_CASE("generators") {
    auto c2 = orbk::generators(AdeLabel::cyclic(2));
    REQUIRE(c2.size() == 1);
    CHECK(orbk::approx_equal(c2[0], Quaternion{-1, 0, 0, 0}));
    CHECK_THROWS_AS(orbk::generators(AdeLabel::cyclic(1)), orbk::error);
    CHECK_THROWS_AS(orbk::generators(AdeLabel::binary_dihedral(1)), orbk::error);
    for (const AdeLabel& label : orbk::builtin_labels())
        for (const Quaternion& g : orbk::generators(label))
            CHECK(std::abs(g.norm() - 1.0) < 1e-12);
}

TEST_CASE("closure of the quaternion group") {
    FiniteGroup q8 = orbk::build_group(AdeLabel::binary_dihedral(2));
    REQUIRE(q8.order() == 8);
    REQUIRE(q8.num_classes() == 5);
    // {1}, {-1}, {+-i}, {+-j}, {+-k}
    auto sizes = q8.class_sizes();
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 2, 2});
    for (const Quaternion& q :
         {Quaternion{0, 1, 0, 0}, Quaternion{0, 0, -1, 0}, Quaternion{-1, 0, 0, 0}})
        CHECK(q8.table.find(q).has_value());
    CHECK_FALSE(q8.table.find(Quaternion{0.5, 0.5, 0.5, 0.5}).has_value());
}

TEST_CASE("closure cap") {
    CHECK_THROWS_AS(orbk::build_group(AdeLabel::e8(), 50), orbk::closure_error);
}

TEST_CASE("closure edge cases") {
    FiniteGroup trivial = orbk::closure({});
    CHECK(trivial.order() == 1);
    CHECK(trivial.num_classes() == 1);
    auto t = orbk::character_table(trivial);
    CHECK(orbk::k_pair_of_group_algebra(t) ==
          orbk::KPair{orbk::FgAbGroup::free(1), orbk::FgAbGroup::trivial()});

    FiniteGroup c2 = orbk::closure({Quaternion{-1, 0, 0, 0}});
    CHECK(c2.order() == 2);
    CHECK(c2.num_classes() == 2);

    CHECK_THROWS_AS(orbk::closure({Quaternion{0.5, 0.5, 0.5, 0.0}}), orbk::error);
}

TEST_CASE("group orders and class counts across the classification") {
    struct Expected {
        AdeLabel label;
        std::size_t order, classes;
    };
    std::vector<Expected> table = {
        {AdeLabel::cyclic(2), 2, 2},          {AdeLabel::cyclic(7), 7, 7},
        {AdeLabel::binary_dihedral(3), 12, 6}, {AdeLabel::binary_dihedral(5), 20, 8},
        {AdeLabel::e6(), 24, 7},              {AdeLabel::e7(), 48, 8},
        {AdeLabel::e8(), 120, 9},
    };
    for (const auto& e : table) {
        FiniteGroup g = orbk::build_group(e.label);
        INFO(orbk::to_string(e.label));
        CHECK(g.order() == e.order);
        CHECK(g.num_classes() == e.classes);
        CHECK(g.classes[0] == std::vector<std::size_t>{0});
        std::size_t total = 0;
        for (const auto& cls : g.classes) total += cls.size();
        CHECK(total == g.order());
        // every element is in SU(2) on the nose
        for (const Quaternion& q : g.elements)
            REQUIRE(std::abs(orbk::su2_determinant(q) - 1.0) < 1e-9);
    }
}

TEST_CASE("character table of Z/2") {
    auto t = orbk::character_table(orbk::build_group(AdeLabel::cyclic(2)));
    REQUIRE(t.num_classes == 2);
    CHECK(t.degrees == std::vector<int>{1, 1});
    CHECK(std::abs(t.characters[0][0] - 1.0) < 1e-9);
    CHECK(std::abs(t.characters[0][1] - 1.0) < 1e-9);
    CHECK(std::abs(t.characters[1][0] - 1.0) < 1e-9);
    CHECK(std::abs(t.characters[1][1] + 1.0) < 1e-9);
    CHECK(std::abs(t.defining_char[0] - 2.0) < 1e-9);
    CHECK(std::abs(t.defining_char[1] + 2.0) < 1e-9);
}

TEST_CASE("character degrees") {
    auto degrees = [](const AdeLabel& label) {
        return orbk::character_table(orbk::build_group(label)).degrees;
    };
    CHECK(degrees(AdeLabel::binary_dihedral(2)) == std::vector<int>{1, 1, 1, 1, 2});
    CHECK(degrees(AdeLabel::e6()) == std::vector<int>{1, 1, 1, 2, 2, 2, 3});
    CHECK(degrees(AdeLabel::e7()) == std::vector<int>{1, 1, 2, 2, 2, 3, 3, 4});
    CHECK(degrees(AdeLabel::e8()) == std::vector<int>{1, 2, 2, 3, 3, 4, 4, 5, 6});
}

TEST_CASE("character table invariants") {
    for (const AdeLabel& label :
         {AdeLabel::cyclic(5), AdeLabel::cyclic(12), AdeLabel::binary_dihedral(4),
          AdeLabel::binary_dihedral(7), AdeLabel::e6(), AdeLabel::e8()}) {
        INFO(orbk::to_string(label));
        FiniteGroup g = orbk::build_group(label);
        auto t = orbk::character_table(g);
        REQUIRE(t.num_classes == g.num_classes());
        CHECK(t.orthogonality_residual() < 1e-6);
        long long sum = 0;
        for (int d : t.degrees) sum += static_cast<long long>(d) * d;
        CHECK(sum == static_cast<long long>(g.order()));
        CHECK(t.degrees[0] == 1);
        // defining character: real, 2 at the identity, values in [-2, 2]
        for (const auto& v : t.defining_char) {
            CHECK(std::abs(v.imag()) < 1e-9);
            CHECK(v.real() > -2.0 - 1e-9);
            CHECK(v.real() < 2.0 + 1e-9);
        }
        CHECK(std::abs(t.defining_char[0] - 2.0) < 1e-9);
        // the central element -1 exists in every binary group; its class is
        // a singleton with defining character -2
        bool found_center = false;
        for (std::size_t k = 0; k < t.num_classes; ++k)
            if (std::abs(t.defining_char[k] + 2.0) < 1e-9) {
                found_center = true;
                CHECK(t.class_sizes[k] == 1);
            }
        if (label.family != orbk::AdeFamily::Cyclic || label.parameter % 2 == 0)
            CHECK(found_center);
    }
}

TEST_CASE("character tables are deterministic across seeds") {
    FiniteGroup g = orbk::build_group(AdeLabel::e7());
    auto a = orbk::character_table(g, 1);
    auto b = orbk::character_table(g, 2);
    REQUIRE(a.num_classes == b.num_classes);
    for (std::size_t i = 0; i < a.num_classes; ++i)
        for (std::size_t k = 0; k < a.num_classes; ++k)
            CHECK(std::abs(a.characters[i][k] - b.characters[i][k]) < 1e-7);
}

TEST_CASE("group algebra K-theory") {
    auto t = orbk::character_table(orbk::build_group(AdeLabel::e7()));
    auto p = orbk::k_pair_of_group_algebra(t);
    CHECK(p.k0 == orbk::FgAbGroup::free(8));
    CHECK(p.k1.is_trivial());
}
