#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "orbk/ade.hpp"
#include "orbk/errors.hpp"
#include "orbk/quaternion.hpp"

namespace orbk {

inline constexpr std::size_t kDefaultClosureCap = 1000;

// Grid-hash index over unit quaternions. The cell size (1e-6) sits three
// orders of magnitude above the match tolerance (1e-9), so a lookup only has
// to probe the cells straddled by the tolerance box.
class ElementTable {
public:
    std::optional<std::size_t> find(const Quaternion& q) const {
        double lo[4] = {q.w - kQuaternionTolerance, q.x - kQuaternionTolerance,
                        q.y - kQuaternionTolerance, q.z - kQuaternionTolerance};
        double hi[4] = {q.w + kQuaternionTolerance, q.x + kQuaternionTolerance,
                        q.y + kQuaternionTolerance, q.z + kQuaternionTolerance};
        std::int64_t a[4], b[4];
        for (int i = 0; i < 4; ++i) {
            a[i] = cell(lo[i]);
            b[i] = cell(hi[i]);
        }
        for (std::int64_t cw = a[0]; cw <= b[0]; ++cw)
            for (std::int64_t cx = a[1]; cx <= b[1]; ++cx)
                for (std::int64_t cy = a[2]; cy <= b[2]; ++cy)
                    for (std::int64_t cz = a[3]; cz <= b[3]; ++cz) {
                        auto it = cells_.find(key(cw, cx, cy, cz));
                        if (it == cells_.end()) continue;
                        for (std::size_t idx : it->second)
                            if (approx_equal(elements_[idx], q)) return idx;
                    }
        return std::nullopt;
    }

    std::size_t insert(const Quaternion& q) {
        std::size_t idx = elements_.size();
        elements_.push_back(q);
        cells_[key(cell(q.w), cell(q.x), cell(q.y), cell(q.z))].push_back(idx);
        return idx;
    }

    const std::vector<Quaternion>& elements() const { return elements_; }

private:
    static std::int64_t cell(double v) { return std::llround(v * 1e6); }

    static std::uint64_t key(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t v : {a, b, c, d}) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }

    std::vector<Quaternion> elements_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

// A finite subgroup of SU(2) as an explicit element list with its conjugacy
// partition. Index 0 is the identity; class 0 is the identity's singleton.
struct FiniteGroup {
    std::vector<Quaternion> elements;
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> class_of;  // element index -> class index
    std::size_t identity_index = 0;
    ElementTable table;

    std::size_t order() const { return elements.size(); }
    std::size_t num_classes() const { return classes.size(); }

    std::vector<std::size_t> class_sizes() const {
        std::vector<std::size_t> sizes;
        sizes.reserve(classes.size());
        for (const auto& c : classes) sizes.push_back(c.size());
        return sizes;
    }

    std::size_t element_index(const Quaternion& q) const {
        auto idx = table.find(q);
        if (!idx) throw error("element lookup failed: set is not closed at tolerance");
        return *idx;
    }

    std::size_t product(std::size_t i, std::size_t j) const {
        return element_index(elements[i] * elements[j]);
    }

    std::size_t inverse(std::size_t i) const { return element_index(elements[i].conjugate()); }
};

// Breadth-first multiplicative closure of the generators, then conjugacy
// classes as conjugation orbits. Deterministic: elements are numbered in
// BFS discovery order, classes by their least element index.
inline FiniteGroup closure(const std::vector<Quaternion>& gens,
                           std::size_t cap = kDefaultClosureCap) {
    FiniteGroup g;
    g.table.insert(Quaternion::one());
    for (const Quaternion& q : gens) {
        if (std::abs(q.norm() - 1.0) > kQuaternionTolerance)
            throw error("generator is not a unit quaternion");
        if (!g.table.find(q)) {
            if (g.table.elements().size() >= cap)
                throw closure_error("not closed under cap", cap);
            g.table.insert(q);
        }
    }
    for (std::size_t head = 0; head < g.table.elements().size(); ++head) {
        for (const Quaternion& gen : gens) {
            Quaternion p = g.table.elements()[head] * gen;
            if (!g.table.find(p)) {
                if (g.table.elements().size() >= cap)
                    throw closure_error("not closed under cap", cap);
                g.table.insert(p);
            }
        }
    }
    g.elements = g.table.elements();
    g.identity_index = 0;

    // Spot-check the group axioms: every element's inverse (= conjugate, on
    // the unit sphere) must be present.
    for (const Quaternion& q : g.elements)
        if (!g.table.find(q.conjugate())) throw error("element set is not inverse-closed");

    // Conjugation by the generators already reaches the full conjugation
    // orbit, so each class is a BFS over generator conjugation.
    g.class_of.assign(g.elements.size(), static_cast<std::size_t>(-1));
    for (std::size_t e = 0; e < g.elements.size(); ++e) {
        if (g.class_of[e] != static_cast<std::size_t>(-1)) continue;
        std::size_t cls = g.classes.size();
        std::vector<std::size_t> orbit{e};
        g.class_of[e] = cls;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            for (const Quaternion& gen : gens) {
                Quaternion conj = gen * g.elements[orbit[head]] * gen.conjugate();
                std::size_t idx = g.element_index(conj);
                if (g.class_of[idx] == static_cast<std::size_t>(-1)) {
                    g.class_of[idx] = cls;
                    orbit.push_back(idx);
                }
            }
        }
        g.classes.push_back(std::move(orbit));
    }
    return g;
}

inline FiniteGroup build_group(const AdeLabel& label, std::size_t cap = kDefaultClosureCap) {
    return closure(generators(label), cap);
}

}  // namespace orbk
