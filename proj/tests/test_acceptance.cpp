// Acceptance suite: runs the full battery and prints one line per criterion.
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>

#include "orbk/selftest.hpp"
#include "orbk/verifier.hpp"

TEST_CASE("acceptance battery") {
    std::vector<orbk::CheckResult> results = orbk::run_selftest();
    REQUIRE(results.size() == 6);
    for (const auto& r : results) {
        std::printf("%s %-26s %s (%.2fs)\n", r.pass ? "[PASS]" : "[FAIL]", r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        std::fflush(stdout);
    }
    for (const auto& r : results) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("shipped kummer file verifies end to end") {
    orbk::OrbifoldSpec spec =
        orbk::parse_spec_file(std::string(ORBK_DATA_DIR) + "/kummer.spec");
    orbk::VerificationReport report = orbk::verdict(spec);
    CHECK(report.overall_pass);
    REQUIRE(report.euler.computed);
    CHECK(report.euler.orbifold == 24);
    CHECK(report.euler.resolution == 24);
}
