#pragma once

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orbk/ade.hpp"
#include "orbk/errors.hpp"
#include "orbk/fgab.hpp"
#include "orbk/mckay.hpp"

namespace orbk {

// One connected component of the singular set: a closed complex
// (n-2)-manifold with constant ADE isotropy. Its K-theory is an input; this
// model starts where the local structure theory ends.
struct Stratum {
    std::string name;
    AdeLabel group;
    KPair base_k;

    bool operator==(const Stratum&) const = default;
};

// A closed complex orbifold with SU(2) singularities: regular part plus
// finitely many disjoint strata. Stratum order fixes the filtration order.
struct OrbifoldSpec {
    std::string name;
    int complex_dimension = 2;
    std::vector<Stratum> strata;
    std::optional<KPair> regular_k;              // compactly supported K-theory of the regular part
    std::optional<KPair> expected_resolution_k;  // independently known K*(Y), if any

    bool operator==(const OrbifoldSpec&) const = default;
};

// Product model of a tubular neighborhood: stratum times the resolved cone,
// with the exceptional fiber standing in for the resolution.
struct TubularModel {
    std::size_t stratum_index = 0;
    AdeLabel quotient_model;
    ExceptionalFiber fiber;
};

// Built-in K-pairs for common strata and regular parts.
namespace catalog {

inline KPair point() { return KPair::free_pair(1, 0); }
inline KPair sphere() { return KPair::free_pair(2, 0); }
inline KPair torus() { return KPair::free_pair(2, 2); }
// Closed orientable genus-g surface: even Betti numbers 1+1, odd 2g.
inline KPair surface(std::size_t genus) { return KPair::free_pair(2, 2 * genus); }
// 4-torus: even Betti numbers 1+6+1, odd 4+4.
inline KPair torus4() { return KPair::free_pair(8, 8); }
// Rational ranks of the 16-times-punctured 4-torus quotient (compact
// supports): even rank 7, odd rank 15, alternating rank -8.
inline KPair kummer_regular_part() { return KPair::free_pair(7, 15); }

}  // namespace catalog

namespace detail {

using json = nlohmann::ordered_json;

inline void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                                  const std::string& path) {
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key)) throw parse_error(path.empty() ? key : path + "." + key,
                                                   "unknown field");
}

inline const json& require_field(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw parse_error(path.empty() ? key : path + "." + key, "missing required field");
    return *it;
}

inline long long integer_field(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw parse_error(path, "expected an integer");
    return v.get<long long>();
}

inline FgAbGroup parse_group(const json& v, const std::string& path) {
    if (!v.is_object()) throw parse_error(path, "expected an object");
    reject_unknown_fields(v, {"free_rank", "torsion"}, path);
    long long rank = integer_field(require_field(v, "free_rank", path), path + ".free_rank");
    if (rank < 0) throw parse_error(path + ".free_rank", "must be nonnegative");
    const json& tj = require_field(v, "torsion", path);
    if (!tj.is_array()) throw parse_error(path + ".torsion", "expected an array of integers");
    std::vector<Int> factors;
    for (std::size_t i = 0; i < tj.size(); ++i) {
        std::string entry_path = path + ".torsion[" + std::to_string(i) + "]";
        long long d = integer_field(tj[i], entry_path);
        if (d < 2) throw parse_error(entry_path, "invariant factor must be at least 2");
        factors.emplace_back(d);
    }
    return from_invariants(static_cast<std::size_t>(rank), factors);
}

inline KPair parse_kpair(const json& v, const std::string& path) {
    if (!v.is_object()) throw parse_error(path, "expected an object");
    reject_unknown_fields(v, {"k0", "k1"}, path);
    return {parse_group(require_field(v, "k0", path), path + ".k0"),
            parse_group(require_field(v, "k1", path), path + ".k1")};
}

inline long long to_int64(const Int& v, const std::string& what) {
    if (v > Int(std::numeric_limits<long long>::max()))
        throw error(what + " exceeds the serializable integer range");
    return v.convert_to<long long>();
}

inline json group_to_json(const FgAbGroup& g) {
    json j;
    j["free_rank"] = static_cast<long long>(g.free_rank);
    json torsion = json::array();
    for (const Int& d : g.torsion) torsion.push_back(to_int64(d, "torsion factor"));
    j["torsion"] = std::move(torsion);
    return j;
}

inline json kpair_to_json(const KPair& p) {
    json j;
    j["k0"] = group_to_json(p.k0);
    j["k1"] = group_to_json(p.k1);
    return j;
}

}  // namespace detail

// Parse and validate an orbifold specification document. All K-pairs come
// out canonicalized. Every rejection is a parse_error carrying the path of
// the offending field.
inline OrbifoldSpec parse_spec(const std::string& text) {
    detail::json doc;
    try {
        doc = detail::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("", std::string("document is not valid object notation: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("", "top level must be an object");
    detail::reject_unknown_fields(
        doc, {"name", "complex_dimension", "regular_k", "strata", "expected_resolution_k"}, "");

    OrbifoldSpec spec;
    const detail::json& name = detail::require_field(doc, "name", "");
    if (!name.is_string()) throw parse_error("name", "expected a string");
    spec.name = name.get<std::string>();

    long long dim = detail::integer_field(detail::require_field(doc, "complex_dimension", ""),
                                          "complex_dimension");
    if (dim < 2) throw parse_error("complex_dimension", "must be at least 2");
    if (dim > std::numeric_limits<int>::max())
        throw parse_error("complex_dimension", "implausibly large");
    spec.complex_dimension = static_cast<int>(dim);

    if (doc.contains("regular_k")) spec.regular_k = detail::parse_kpair(doc["regular_k"], "regular_k");
    if (doc.contains("expected_resolution_k"))
        spec.expected_resolution_k =
            detail::parse_kpair(doc["expected_resolution_k"], "expected_resolution_k");

    const detail::json& strata = detail::require_field(doc, "strata", "");
    if (!strata.is_array()) throw parse_error("strata", "expected an array");
    std::set<std::string> names;
    for (std::size_t i = 0; i < strata.size(); ++i) {
        std::string path = "strata[" + std::to_string(i) + "]";
        const detail::json& sj = strata[i];
        if (!sj.is_object()) throw parse_error(path, "expected an object");
        detail::reject_unknown_fields(sj, {"name", "group", "k0", "k1"}, path);
        Stratum s;
        const detail::json& sname = detail::require_field(sj, "name", path);
        if (!sname.is_string()) throw parse_error(path + ".name", "expected a string");
        s.name = sname.get<std::string>();
        if (!names.insert(s.name).second) throw parse_error(path + ".name", "duplicate stratum name");
        const detail::json& group = detail::require_field(sj, "group", path);
        if (!group.is_string()) throw parse_error(path + ".group", "expected an ADE label string");
        try {
            s.group = parse_ade_label(group.get<std::string>());
        } catch (const error& e) {
            throw parse_error(path + ".group", e.what());
        }
        s.base_k.k0 = detail::parse_group(detail::require_field(sj, "k0", path), path + ".k0");
        s.base_k.k1 = detail::parse_group(detail::require_field(sj, "k1", path), path + ".k1");
        if (s.base_k.k0.free_rank < 1)
            throw parse_error(path + ".k0", "a nonempty closed manifold has a unit class; "
                                            "free rank must be at least 1");
        if (spec.complex_dimension == 2 && s.base_k != catalog::point())
            throw parse_error(path, "in complex dimension 2 the singular set is isolated points; "
                                    "stratum K-theory must be that of a point");
        spec.strata.push_back(std::move(s));
    }
    return spec;
}

inline OrbifoldSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("", "cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_spec(buffer.str());
}

inline std::string serialize(const OrbifoldSpec& spec) {
    detail::json j;
    j["name"] = spec.name;
    j["complex_dimension"] = spec.complex_dimension;
    if (spec.regular_k) j["regular_k"] = detail::kpair_to_json(*spec.regular_k);
    detail::json strata = detail::json::array();
    for (const Stratum& s : spec.strata) {
        detail::json sj;
        sj["name"] = s.name;
        sj["group"] = to_string(s.group);
        sj["k0"] = detail::group_to_json(s.base_k.k0);
        sj["k1"] = detail::group_to_json(s.base_k.k1);
        strata.push_back(std::move(sj));
    }
    j["strata"] = std::move(strata);
    if (spec.expected_resolution_k)
        j["expected_resolution_k"] = detail::kpair_to_json(*spec.expected_resolution_k);
    return j.dump(2) + "\n";
}

// One product model per stratum; the fiber comes out of the McKay machinery.
inline std::vector<TubularModel> tubular_models(const OrbifoldSpec& spec,
                                                std::uint64_t seed = kDefaultCharacterSeed,
                                                std::size_t cap = kDefaultClosureCap) {
    std::vector<TubularModel> models;
    models.reserve(spec.strata.size());
    for (std::size_t i = 0; i < spec.strata.size(); ++i) {
        const Stratum& s = spec.strata[i];
        CharacterTable t = character_table(build_group(s.group, cap), seed);
        models.push_back({i, s.group, exceptional_fiber(mckay_graph(t))});
    }
    return models;
}

}  // namespace orbk
