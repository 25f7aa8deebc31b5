#pragma once

#include <array>
#include <cstddef>
#include <sstream>
#include <string>

#include "orbk/errors.hpp"
#include "orbk/presented.hpp"

namespace orbk {

// Five-term row A1 -> A2 -> A3 -> A4 -> A5 with its four connecting maps.
struct ExactRow {
    std::array<PresentedGroup, 5> groups;
    std::array<GroupHom, 4> maps;
};

struct LadderVerdict {
    std::array<bool, 4> squares_commute{};
    std::array<bool, 3> top_exact{};     // interior positions 2, 3, 4
    std::array<bool, 3> bottom_exact{};  // interior positions 2, 3, 4
    std::array<bool, 4> outer_isomorphisms{};  // verticals 1, 2, 4, 5
    bool middle_isomorphism = false;

    bool premises_hold() const {
        for (bool b : squares_commute)
            if (!b) return false;
        for (bool b : top_exact)
            if (!b) return false;
        for (bool b : bottom_exact)
            if (!b) return false;
        for (bool b : outer_isomorphisms)
            if (!b) return false;
        return true;
    }

    // The five lemma itself: commuting squares + exact rows + outer
    // isomorphisms force the middle map to be one. A false return here means
    // the checker found a counterexample to an actual theorem, i.e. a bug.
    bool five_lemma_respected() const { return !premises_hold() || middle_isomorphism; }

    bool pass() const { return premises_hold() && middle_isomorphism; }

    std::string summary() const {
        std::ostringstream out;
        out << "squares:";
        for (std::size_t i = 0; i < 4; ++i) out << (squares_commute[i] ? " ok" : " FAIL");
        out << "; top exact:";
        for (std::size_t i = 0; i < 3; ++i) out << (top_exact[i] ? " ok" : " FAIL");
        out << "; bottom exact:";
        for (std::size_t i = 0; i < 3; ++i) out << (bottom_exact[i] ? " ok" : " FAIL");
        out << "; outer isos:";
        for (std::size_t i = 0; i < 4; ++i) out << (outer_isomorphisms[i] ? " ok" : " FAIL");
        out << "; middle iso: " << (middle_isomorphism ? "ok" : "FAIL");
        return out.str();
    }
};

namespace detail {

inline void require_arrow(const GroupHom& f, const PresentedGroup& src, const PresentedGroup& tgt,
                          const std::string& arrow) {
    if (f.source.generator_count != src.generator_count ||
        f.target.generator_count != tgt.generator_count)
        throw ladder_error(arrow, "endpoints disagree with the row groups");
    if (!f.dimensions_ok()) throw ladder_error(arrow, "matrix shape disagrees with endpoints");
    if (!f.well_defined()) throw ladder_error(arrow, "matrix does not respect the relations");
}

inline void validate_row(const ExactRow& row, const std::string& which) {
    for (std::size_t i = 0; i < 4; ++i)
        require_arrow(row.maps[i], row.groups[i], row.groups[i + 1],
                      which + " map " + std::to_string(i + 1));
}

// Exactness at the shared middle group: image lattice of `in` equals kernel
// lattice of `out`, both as sublattices of the generator space. Decided via
// Hermite bases, no element enumeration.
inline bool exact_at(const GroupHom& in, const GroupHom& out) {
    return lattice_equal(image_lattice_rows(in), kernel_lattice_rows(out));
}

}  // namespace detail

// Commutative-ladder five lemma checker. Reports commutativity per square,
// exactness of each row at its three interior groups, and which verticals
// are isomorphisms. Throws ladder_error when an arrow does not fit the rows.
inline LadderVerdict check_ladder_five_lemma(const ExactRow& top, const ExactRow& bottom,
                                             const std::array<GroupHom, 5>& verticals) {
    detail::validate_row(top, "top");
    detail::validate_row(bottom, "bottom");
    for (std::size_t i = 0; i < 5; ++i)
        detail::require_arrow(verticals[i], top.groups[i], bottom.groups[i],
                              "vertical " + std::to_string(i + 1));

    LadderVerdict v;
    for (std::size_t i = 0; i < 4; ++i)
        v.squares_commute[i] =
            homs_equal(compose(verticals[i + 1], top.maps[i]), compose(bottom.maps[i], verticals[i]));
    for (std::size_t i = 0; i < 3; ++i) {
        v.top_exact[i] = detail::exact_at(top.maps[i], top.maps[i + 1]);
        v.bottom_exact[i] = detail::exact_at(bottom.maps[i], bottom.maps[i + 1]);
    }
    v.outer_isomorphisms = {is_isomorphism(verticals[0]), is_isomorphism(verticals[1]),
                            is_isomorphism(verticals[3]), is_isomorphism(verticals[4])};
    v.middle_isomorphism = is_isomorphism(verticals[2]);
    if (!v.five_lemma_respected())
        throw error("five lemma violated: premises hold but the middle map is not an "
                    "isomorphism; the lattice engine is inconsistent");
    return v;
}

}  // namespace orbk
