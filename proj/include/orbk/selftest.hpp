#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orbk/ade.hpp"
#include "orbk/character_table.hpp"
#include "orbk/errors.hpp"
#include "orbk/fgab.hpp"
#include "orbk/finite_group.hpp"
#include "orbk/five_lemma.hpp"
#include "orbk/mckay.hpp"
#include "orbk/orbifold.hpp"
#include "orbk/smith.hpp"
#include "orbk/verifier.hpp"

namespace orbk {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

inline std::string kummer_document();

namespace selftest_detail {

using Clock = std::chrono::steady_clock;

inline double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Expected (order, class count) per the ADE classification.
inline std::pair<std::size_t, std::size_t> expected_counts(const AdeLabel& label) {
    switch (label.family) {
        case AdeFamily::Cyclic:
            return {static_cast<std::size_t>(label.parameter),
                    static_cast<std::size_t>(label.parameter)};
        case AdeFamily::BinaryDihedral:
            return {static_cast<std::size_t>(4 * label.parameter),
                    static_cast<std::size_t>(label.parameter + 3)};
        case AdeFamily::BinaryTetrahedral: return {24, 7};
        case AdeFamily::BinaryOctahedral: return {48, 8};
        case AdeFamily::BinaryIcosahedral: return {120, 9};
    }
    throw error("unreachable ADE family");
}

inline FgAbGroup random_fgab(std::mt19937_64& rng, std::size_t min_rank, std::size_t max_rank) {
    static const int kFactors[] = {2, 3, 4, 6, 8, 9};
    std::uniform_int_distribution<std::size_t> rank(min_rank, max_rank);
    std::uniform_int_distribution<int> torsion_count(0, 3);
    std::uniform_int_distribution<int> pick(0, 5);
    std::vector<Int> factors;
    int count = torsion_count(rng);
    for (int i = 0; i < count; ++i) factors.emplace_back(kFactors[pick(rng)]);
    return from_invariants(rank(rng), factors);
}

inline KPair random_base_kpair(std::mt19937_64& rng) {
    return {random_fgab(rng, 1, 6), random_fgab(rng, 0, 6)};
}

// Random finite group of order at most `bound`.
inline FgAbGroup random_finite_group(std::mt19937_64& rng, long long bound) {
    static const int kFactors[] = {2, 3, 4, 5, 6, 7, 8, 9, 12, 16};
    std::uniform_int_distribution<int> count(0, 3);
    std::uniform_int_distribution<int> pick(0, 9);
    std::vector<Int> factors;
    Int order = 1;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Int d = kFactors[pick(rng)];
        if (order * d > bound) break;
        order *= d;
        factors.push_back(d);
    }
    return from_invariants(0, factors);
}

// Prime-power decomposition of a finite group by trial division; the
// independent route to compare tensor/tor results against.
inline std::vector<std::pair<long long, int>> primary_decomposition(const FgAbGroup& g) {
    std::vector<std::pair<long long, int>> out;
    for (const Int& d : g.torsion) {
        long long v = d.convert_to<long long>();
        for (long long p = 2; p * p <= v; ++p) {
            int e = 0;
            while (v % p == 0) {
                v /= p;
                ++e;
            }
            if (e > 0) out.emplace_back(p, e);
        }
        if (v > 1) out.emplace_back(v, 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Tensor/Tor of finite groups on primary components: p^a with p^b gives
// p^min(a,b), distinct primes vanish. (For finite groups the two functors
// agree; they differ only through free parts.)
inline std::vector<std::pair<long long, int>> oracle_pairing(const FgAbGroup& a,
                                                             const FgAbGroup& b) {
    auto pa = primary_decomposition(a);
    auto pb = primary_decomposition(b);
    std::vector<std::pair<long long, int>> out;
    for (const auto& [p, e] : pa)
        for (const auto& [q, f] : pb)
            if (p == q) out.emplace_back(p, std::min(e, f));
    std::sort(out.begin(), out.end());
    return out;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, int bound) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-bound, bound);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
    return m;
}

inline bool divisibility_chain_ok(const IntMatrix& d) {
    std::size_t steps = std::min(d.rows(), d.cols());
    for (std::size_t t = 0; t < steps; ++t) {
        if (d.at(t, t) < 0) return false;
        if (t + 1 < steps) {
            const Int& a = d.at(t, t);
            const Int& b = d.at(t + 1, t + 1);
            if (a == 0 && b != 0) return false;
            if (a != 0 && b % a != 0) return false;
        }
    }
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
            if (r != c && d.at(r, c) != 0) return false;
    return true;
}

// Ladder row for the negative controls:
// 0 -> Z -(x2)-> Z -(mod 2)-> Z/2 -> 0.
inline void sample_ladder(ExactRow& row) {
    PresentedGroup zero = PresentedGroup::trivial();
    PresentedGroup z(1, IntMatrix(0, 1));
    PresentedGroup z2(1, IntMatrix{{2}});
    row.groups = {zero, z, z, z2, zero};
    row.maps = {GroupHom::zero(zero, z), GroupHom{z, z, IntMatrix{{2}}},
                GroupHom{z, z2, IntMatrix{{1}}}, GroupHom::zero(z2, zero)};
}

}  // namespace selftest_detail

// The acceptance battery: deterministic for a fixed seed, one result per
// criterion. Budgets are part of the criteria and checked against wall time.
inline std::vector<CheckResult> run_selftest(std::uint64_t seed = kDefaultCharacterSeed) {
    namespace sd = selftest_detail;
    std::vector<CheckResult> results;

    {  // ADE group battery: orders, class counts, orthogonality, degree sums.
        CheckResult r{"ade-group-battery", true, "", 0.0};
        auto start = sd::Clock::now();
        double worst_label_seconds = 0.0;
        std::ostringstream detail;
        for (const AdeLabel& label : builtin_labels()) {
            auto label_start = sd::Clock::now();
            auto [want_order, want_classes] = sd::expected_counts(label);
            FiniteGroup g = build_group(label);
            CharacterTable t = character_table(g, seed);
            long long degree_square_sum = 0;
            for (int d : t.degrees) degree_square_sum += static_cast<long long>(d) * d;
            bool ok = g.order() == want_order && g.num_classes() == want_classes &&
                      t.orthogonality_residual() < 1e-6 &&
                      degree_square_sum == static_cast<long long>(g.order());
            if (!ok) {
                r.pass = false;
                detail << to_string(label) << ": got order " << g.order() << ", classes "
                       << g.num_classes() << ", residual " << t.orthogonality_residual() << "; ";
            }
            worst_label_seconds = std::max(worst_label_seconds, sd::elapsed(label_start));
        }
        if (worst_label_seconds >= 1.0) {
            r.pass = false;
            detail << "slowest label took " << worst_label_seconds << "s (budget 1s); ";
        }
        r.seconds = sd::elapsed(start);
        if (r.pass)
            detail << builtin_labels().size()
                   << " labels: orders, classes, orthogonality, degree sums";
        r.detail = detail.str();
        results.push_back(std::move(r));
    }

    {  // McKay cross-path: R(G) rank vs fiber rank, both K1 vanishing.
        CheckResult r{"mckay-cross-path", true, "", 0.0};
        auto start = sd::Clock::now();
        double worst_label_seconds = 0.0;
        std::ostringstream detail;
        for (const AdeLabel& label : builtin_labels()) {
            auto label_start = sd::Clock::now();
            McKayVerdict v = verify_mckay_correspondence(label, seed);
            bool ok = v.pass && v.group_algebra_side.k1.is_trivial() &&
                      v.fiber_side.k1.is_trivial();
            if (!ok) {
                r.pass = false;
                detail << to_string(label) << ": " << v.group_algebra_side.to_string() << " vs "
                       << v.fiber_side.to_string() << " (detected " << to_string(v.detected)
                       << "); ";
            }
            worst_label_seconds = std::max(worst_label_seconds, sd::elapsed(label_start));
        }
        if (worst_label_seconds >= 1.0) {
            r.pass = false;
            detail << "slowest label took " << worst_label_seconds << "s (budget 1s); ";
        }
        r.seconds = sd::elapsed(start);
        if (r.pass) detail << builtin_labels().size() << " labels, both K1 groups zero everywhere";
        r.detail = detail.str();
        results.push_back(std::move(r));
    }

    {  // Level isomorphism suite: randomized strata, both degrees' ladders.
        CheckResult r{"level-isomorphism-suite", true, "", 0.0};
        auto start = sd::Clock::now();
        std::mt19937_64 rng(seed ^ 0xa5a5a5a5a5a5a5a5ull);
        std::vector<AdeLabel> labels = builtin_labels();
        std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
        std::ostringstream detail;
        for (int i = 0; i < 100 && r.pass; ++i) {
            Stratum s{"random" + std::to_string(i), labels[pick(rng)],
                      sd::random_base_kpair(rng)};
            KPair orb = orbifold_level(s, seed);
            KPair res = resolution_level(s, seed);
            if (!is_isomorphic(orb, res)) {
                r.pass = false;
                detail << s.name << " (" << to_string(s.group) << "): " << orb.to_string()
                       << " vs " << res.to_string();
                break;
            }
            detail::FiberSides sides = detail::fiber_sides(s.group, seed, kDefaultClosureCap);
            LadderVerdict k0 = detail::check_kunneth_ladder(s.base_k, sides.group_algebra,
                                                            sides.fiber, 0);
            LadderVerdict k1 = detail::check_kunneth_ladder(s.base_k, sides.group_algebra,
                                                            sides.fiber, 1);
            if (!k0.pass() || !k1.pass() || !k0.five_lemma_respected() ||
                !k1.five_lemma_respected()) {
                r.pass = false;
                detail << s.name << ": ladder failure: " << k0.summary() << " / " << k1.summary();
            }
        }
        r.seconds = sd::elapsed(start);
        if (r.seconds >= 5.0) {
            r.pass = false;
            detail << "; took " << r.seconds << "s (budget 5s)";
        }
        if (r.pass) detail << "100 randomized strata, levels isomorphic, ladders pass";
        r.detail = detail.str();
        results.push_back(std::move(r));
    }

    {  // Kummer surface end to end.
        CheckResult r{"kummer-end-to-end", true, "", 0.0};
        auto start = sd::Clock::now();
        std::ostringstream detail;
        OrbifoldSpec spec = parse_spec(kummer_document());
        VerifyOptions opts;
        opts.seed = seed;
        VerificationReport report = verdict(spec, opts);
        bool ok = report.overall_pass && report.levels.size() == 16 && report.euler.computed &&
                  report.euler.orbifold == 24 && report.euler.resolution == 24 &&
                  report.expected_euler_match && *report.expected_euler_match;
        if (!ok) {
            r.pass = false;
            detail << "levels " << report.levels.size() << ", euler " << report.euler.orbifold
                   << "/" << report.euler.resolution << ", overall "
                   << (report.overall_pass ? "pass" : "fail");
        }
        r.seconds = sd::elapsed(start);
        if (r.seconds >= 5.0) {
            r.pass = false;
            detail << "; took " << r.seconds << "s (budget 5s)";
        }
        if (r.pass) detail << "16 levels pass, euler 24 = 24";
        r.detail = detail.str();
        results.push_back(std::move(r));
    }

    {  // fgab property suite: Smith forms, tensor/tor oracle, kunneth laws.
        CheckResult r{"fgab-property-suite", true, "", 0.0};
        auto start = sd::Clock::now();
        std::mt19937_64 rng(seed ^ 0x5c5c5c5c5c5c5c5cull);
        std::ostringstream detail;
        for (int i = 0; i < 500 && r.pass; ++i) {
            IntMatrix m = sd::random_matrix(rng, 6, 20);
            SmithResult s = smith_normal_form(m);
            Int du = s.u.determinant(), dv = s.v.determinant();
            if (s.u * m * s.v != s.d || (du != 1 && du != -1) || (dv != 1 && dv != -1) ||
                !sd::divisibility_chain_ok(s.d)) {
                r.pass = false;
                detail << "SNF failure on " << m.to_string();
            }
        }
        for (int i = 0; i < 200 && r.pass; ++i) {
            FgAbGroup a = sd::random_finite_group(rng, 64);
            FgAbGroup b = sd::random_finite_group(rng, 64);
            auto want = sd::oracle_pairing(a, b);
            if (sd::primary_decomposition(tensor(a, b)) != want ||
                sd::primary_decomposition(tor(a, b)) != want) {
                r.pass = false;
                detail << "tensor/tor oracle mismatch on " << a.to_string() << " and "
                       << b.to_string();
            }
        }
        KPair unit{FgAbGroup::free(1), FgAbGroup::trivial()};
        for (int i = 0; i < 200 && r.pass; ++i) {
            KPair a{sd::random_fgab(rng, 0, 4), sd::random_fgab(rng, 0, 4)};
            KPair b{sd::random_fgab(rng, 0, 4), sd::random_fgab(rng, 0, 4)};
            KPair ab = kunneth(a, b);
            if (kunneth(unit, b) != b || !is_isomorphic(ab, kunneth(b, a)) ||
                rank_euler(ab) != rank_euler(a) * rank_euler(b)) {
                r.pass = false;
                detail << "kunneth law failure on " << a.to_string() << " and " << b.to_string();
            }
        }
        r.seconds = sd::elapsed(start);
        if (r.seconds >= 10.0) {
            r.pass = false;
            detail << "; took " << r.seconds << "s (budget 10s)";
        }
        if (r.pass) detail << "500 Smith forms, 200 tensor/tor pairs, 200 kunneth pairs";
        r.detail = detail.str();
        results.push_back(std::move(r));
    }

    {  // Negative controls: each bad input must be caught, not passed.
        CheckResult r{"negative-controls", true, "", 0.0};
        auto start = sd::Clock::now();
        std::ostringstream detail;

        OrbifoldSpec broken = parse_spec(kummer_document());
        broken.expected_resolution_k = KPair::free_pair(23, 0);
        VerifyOptions opts;
        opts.seed = seed;
        VerificationReport report = verdict(broken, opts);
        if (report.overall_pass) {
            r.pass = false;
            detail << "mismatched expected_resolution_k was not rejected; ";
        }

        ExactRow top, bottom;
        sd::sample_ladder(top);
        sd::sample_ladder(bottom);
        std::array<GroupHom, 5> verticals;
        for (std::size_t i = 0; i < 5; ++i) verticals[i] = GroupHom::identity(top.groups[i]);
        verticals[2].matrix.at(0, 0) = 2;  // break the middle square
        LadderVerdict v = check_ladder_five_lemma(top, bottom, verticals);
        bool square_reported = !v.squares_commute[1] || !v.squares_commute[2];
        if (!square_reported || v.pass() || !v.five_lemma_respected()) {
            r.pass = false;
            detail << "broken ladder square not reported (" << v.summary() << "); ";
        }

        bool rejected = false;
        try {
            parse_spec(R"({"name": "bad", "complex_dimension": 2,
                           "strata": [{"name": "s", "group": "E9",
                                       "k0": {"free_rank": 1, "torsion": []},
                                       "k1": {"free_rank": 0, "torsion": []}}]})");
        } catch (const parse_error& e) {
            rejected = e.path() == "strata[0].group";
        }
        if (!rejected) {
            r.pass = false;
            detail << "unknown ADE label not rejected at parse time; ";
        }

        r.seconds = sd::elapsed(start);
        if (r.pass) detail << "all three controls caught";
        r.detail = detail.str();
        results.push_back(std::move(r));
    }

    return results;
}

// The shipped Kummer document: the 2-dimensional quotient with sixteen
// isolated A1 points whose resolution is the K3 surface. The regular part's
// compactly supported K-theory carries alternating rank -8; sixteen levels
// of (Z^2, 0) bring both sides' bookkeeping to 24.
inline std::string kummer_document() {
    std::ostringstream out;
    out << "{\n";
    out << "  \"name\": \"kummer\",\n";
    out << "  \"complex_dimension\": 2,\n";
    out << "  \"regular_k\": {\n";
    out << "    \"k0\": {\"free_rank\": 7, \"torsion\": []},\n";
    out << "    \"k1\": {\"free_rank\": 15, \"torsion\": []}\n";
    out << "  },\n";
    out << "  \"strata\": [\n";
    for (int i = 0; i < 16; ++i) {
        out << "    {\"name\": \"p" << (i < 10 ? "0" : "") << i << "\", \"group\": \"A1\", "
            << "\"k0\": {\"free_rank\": 1, \"torsion\": []}, "
            << "\"k1\": {\"free_rank\": 0, \"torsion\": []}}" << (i + 1 < 16 ? "," : "") << "\n";
    }
    out << "  ],\n";
    out << "  \"expected_resolution_k\": {\n";
    out << "    \"k0\": {\"free_rank\": 24, \"torsion\": []},\n";
    out << "    \"k1\": {\"free_rank\": 0, \"torsion\": []}\n";
    out << "  }\n";
    out << "}\n";
    return out.str();
}

}  // namespace orbk
