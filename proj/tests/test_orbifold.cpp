#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "orbk/orbifold.hpp"
#include "orbk/selftest.hpp"

using orbk::FgAbGroup;
using orbk::KPair;
using orbk::OrbifoldSpec;

namespace {

std::string data_path(const std::string& name) { return std::string(ORBK_DATA_DIR) + "/" + name; }

std::string minimal_doc(const std::string& strata_json,
                        const std::string& extra_top_level = "") {
    return R"({"name": "t", "complex_dimension": 3, )" + extra_top_level +
           R"("strata": [)" + strata_json + "]}";
}

const char* kPointStratum =
    R"({"name": "s0", "group": "A1",
        "k0": {"free_rank": 1, "torsion": []},
        "k1": {"free_rank": 0, "torsion": []}})";

}  // namespace

TEST_CASE("kummer document parses") {
    OrbifoldSpec spec = orbk::parse_spec(orbk::kummer_document());
    CHECK(spec.name == "kummer");
    CHECK(spec.complex_dimension == 2);
    REQUIRE(spec.strata.size() == 16);
    CHECK(spec.strata[0].group == orbk::AdeLabel::cyclic(2));
    CHECK(spec.strata[0].base_k == orbk::catalog::point());
    REQUIRE(spec.regular_k);
    CHECK(orbk::rank_euler(*spec.regular_k) == -8);
    REQUIRE(spec.expected_resolution_k);
    CHECK(*spec.expected_resolution_k == KPair::free_pair(24, 0));
}

TEST_CASE("shipped kummer file matches the embedded document") {
    OrbifoldSpec from_file = orbk::parse_spec_file(data_path("kummer.spec"));
    OrbifoldSpec embedded = orbk::parse_spec(orbk::kummer_document());
    CHECK(from_file == embedded);
}

TEST_CASE("empty strata list is the manifold case") {
    OrbifoldSpec spec = orbk::parse_spec(
        R"({"name": "m", "complex_dimension": 4, "strata": []})");
    CHECK(spec.strata.empty());
    CHECK_FALSE(spec.regular_k);
}

TEST_CASE("parse rejections carry field paths") {
    auto path_of = [](const std::string& doc) {
        try {
            orbk::parse_spec(doc);
        } catch (const orbk::parse_error& e) {
            return e.path();
        }
        return std::string("(accepted)");
    };

    SECTION("unknown ADE label") {
        std::string doc = minimal_doc(
            R"({"name": "s", "group": "E9",
                "k0": {"free_rank": 1, "torsion": []},
                "k1": {"free_rank": 0, "torsion": []}})");
        CHECK(path_of(doc) == "strata[0].group");
    }
    SECTION("duplicate stratum names") {
        std::string doc = minimal_doc(std::string(kPointStratum) + "," + kPointStratum);
        CHECK(path_of(doc) == "strata[1].name");
    }
    SECTION("dimension 2 demands point strata") {
        std::string doc =
            R"({"name": "t", "complex_dimension": 2, "strata": [
                {"name": "s", "group": "A1",
                 "k0": {"free_rank": 2, "torsion": []},
                 "k1": {"free_rank": 0, "torsion": []}}]})";
        CHECK(path_of(doc) == "strata[0]");
    }
    SECTION("unknown fields are rejected") {
        CHECK(path_of(R"({"name": "t", "complex_dimension": 3, "strata": [], "extra": 1})") ==
              "extra");
        std::string doc = minimal_doc(
            R"({"name": "s", "group": "A1", "radius": 3,
                "k0": {"free_rank": 1, "torsion": []},
                "k1": {"free_rank": 0, "torsion": []}})");
        CHECK(path_of(doc) == "strata[0].radius");
    }
    SECTION("type errors") {
        CHECK(path_of(R"({"name": 7, "complex_dimension": 3, "strata": []})") == "name");
        CHECK(path_of(R"({"name": "t", "complex_dimension": 1, "strata": []})") ==
              "complex_dimension");
        CHECK(path_of(R"({"name": "t", "complex_dimension": 3})") == "strata");
    }
    SECTION("torsion entries below 2") {
        std::string doc = minimal_doc(
            R"({"name": "s", "group": "A1",
                "k0": {"free_rank": 1, "torsion": [1]},
                "k1": {"free_rank": 0, "torsion": []}})");
        CHECK(path_of(doc) == "strata[0].k0.torsion[0]");
    }
    SECTION("missing unit class") {
        std::string doc = minimal_doc(
            R"({"name": "s", "group": "A1",
                "k0": {"free_rank": 0, "torsion": [2]},
                "k1": {"free_rank": 0, "torsion": []}})");
        CHECK(path_of(doc) == "strata[0].k0");
    }
    SECTION("document that is not object notation") {
        CHECK(path_of("not json") == "");
    }
}

TEST_CASE("parsed torsion is canonicalized") {
    std::string doc = minimal_doc(
        R"({"name": "s", "group": "A1",
            "k0": {"free_rank": 1, "torsion": [3, 2]},
            "k1": {"free_rank": 0, "torsion": [2, 2, 3]}})");
    OrbifoldSpec spec = orbk::parse_spec(doc);
    CHECK(spec.strata[0].base_k.k0 == orbk::from_invariants(1, {orbk::Int(6)}));
    CHECK(spec.strata[0].base_k.k1 ==
          FgAbGroup{0, {orbk::Int(2), orbk::Int(6)}});
}

TEST_CASE("serialize and reparse is the identity") {
    for (const char* file : {"kummer.spec", "manifold.spec", "threefold.spec", "broken.spec"}) {
        OrbifoldSpec spec = orbk::parse_spec_file(data_path(file));
        INFO(file);
        CHECK(orbk::parse_spec(orbk::serialize(spec)) == spec);
    }
}

TEST_CASE("catalog values") {
    CHECK(orbk::catalog::point() == KPair::free_pair(1, 0));
    CHECK(orbk::catalog::sphere() == KPair::free_pair(2, 0));
    CHECK(orbk::catalog::torus() == KPair::free_pair(2, 2));
    CHECK(orbk::catalog::surface(2) == KPair::free_pair(2, 4));
    CHECK(orbk::catalog::surface(1) == orbk::catalog::torus());
    CHECK(orbk::catalog::torus4() == KPair::free_pair(8, 8));
    CHECK(orbk::rank_euler(orbk::catalog::torus4()) == 0);
    CHECK(orbk::rank_euler(orbk::catalog::kummer_regular_part()) == -8);
}

TEST_CASE("tubular models") {
    OrbifoldSpec kummer = orbk::parse_spec(orbk::kummer_document());
    auto models = orbk::tubular_models(kummer);
    REQUIRE(models.size() == 16);
    for (const auto& m : models) CHECK(m.fiber.sphere_count == 1);

    OrbifoldSpec threefold = orbk::parse_spec_file(data_path("threefold.spec"));
    auto tm = orbk::tubular_models(threefold);
    REQUIRE(tm.size() == 3);
    CHECK(tm[0].fiber.sphere_count == 4);  // D4 star
    CHECK(tm[1].fiber.sphere_count == 7);  // E7 tree
    CHECK(tm[2].fiber.sphere_count == 2);  // A2 chain

    OrbifoldSpec manifold = orbk::parse_spec_file(data_path("manifold.spec"));
    CHECK(orbk::tubular_models(manifold).empty());
}
