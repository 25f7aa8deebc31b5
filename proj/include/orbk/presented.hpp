#pragma once

#include <cstddef>
#include <string>

#include "orbk/errors.hpp"
#include "orbk/fgab.hpp"
#include "orbk/int_matrix.hpp"
#include "orbk/smith.hpp"

namespace orbk {

// A group presentation Z^g / L where L is the lattice spanned by the rows of
// `relations` (one relation per row, one column per generator). Elements are
// integer column vectors in generator coordinates.
struct PresentedGroup {
    std::size_t generator_count = 0;
    IntMatrix relations;  // cols == generator_count

    PresentedGroup() : relations(0, 0) {}
    PresentedGroup(std::size_t gens, IntMatrix rels)
        : generator_count(gens), relations(std::move(rels)) {
        if (relations.cols() != generator_count)
            throw error("relation matrix width disagrees with generator count");
    }

    FgAbGroup canonical() const { return from_presentation(relations); }

    static PresentedGroup trivial() { return {}; }

    // Standard presentation of a canonical form: one free generator per unit
    // of rank, one torsion generator per invariant factor.
    static PresentedGroup of_canonical(const FgAbGroup& g) {
        const std::size_t gens = g.free_rank + g.torsion.size();
        IntMatrix rels(g.torsion.size(), gens);
        for (std::size_t i = 0; i < g.torsion.size(); ++i)
            rels.at(i, g.free_rank + i) = g.torsion[i];
        return {gens, std::move(rels)};
    }

    static PresentedGroup direct_sum(const PresentedGroup& a, const PresentedGroup& b) {
        const std::size_t gens = a.generator_count + b.generator_count;
        IntMatrix rels(a.relations.rows() + b.relations.rows(), gens);
        for (std::size_t r = 0; r < a.relations.rows(); ++r)
            for (std::size_t c = 0; c < a.generator_count; ++c)
                rels.at(r, c) = a.relations.at(r, c);
        for (std::size_t r = 0; r < b.relations.rows(); ++r)
            for (std::size_t c = 0; c < b.generator_count; ++c)
                rels.at(a.relations.rows() + r, a.generator_count + c) = b.relations.at(r, c);
        return {gens, std::move(rels)};
    }
};

// Homomorphism between presented groups. `matrix` has one column per source
// generator holding the image in target generator coordinates; it must carry
// the source relation lattice into the target one to be well defined.
struct GroupHom {
    PresentedGroup source, target;
    IntMatrix matrix;  // target.generator_count x source.generator_count

    bool dimensions_ok() const {
        return matrix.rows() == target.generator_count && matrix.cols() == source.generator_count;
    }

    bool well_defined() const {
        if (!dimensions_ok()) return false;
        // Rows of (source.relations * matrix^T) are the images of the source
        // relations; all must lie in the target lattice.
        IntMatrix images = source.relations * matrix.transposed();
        return lattice_subset(images, target.relations);
    }

    static GroupHom zero(PresentedGroup src, PresentedGroup tgt) {
        IntMatrix m(tgt.generator_count, src.generator_count);
        return {std::move(src), std::move(tgt), std::move(m)};
    }

    static GroupHom identity(const PresentedGroup& g) {
        return {g, g, IntMatrix::identity(g.generator_count)};
    }
};

inline GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
    if (outer.source.generator_count != inner.target.generator_count)
        throw error("hom composition shape mismatch");
    return {inner.source, outer.target, outer.matrix * inner.matrix};
}

// Rows spanning the preimage in Z^{g_target} of the image subgroup: the
// column lattice of the matrix together with the target relations.
inline IntMatrix image_lattice_rows(const GroupHom& f) {
    return IntMatrix::vstack(f.matrix.transposed(), f.target.relations);
}

// Rows spanning {x : f(x) = 0 in the target}, i.e. {x : matrix*x in L_target}.
// Solved as the integer kernel of [matrix | -relations^T] projected onto the
// x block; contains the source relations whenever f is well defined.
inline IntMatrix kernel_lattice_rows(const GroupHom& f) {
    const std::size_t gs = f.source.generator_count;
    const std::size_t gt = f.target.generator_count;
    const std::size_t rt = f.target.relations.rows();
    IntMatrix stacked(gt, gs + rt);
    for (std::size_t i = 0; i < gt; ++i) {
        for (std::size_t j = 0; j < gs; ++j) stacked.at(i, j) = f.matrix.at(i, j);
        for (std::size_t j = 0; j < rt; ++j) stacked.at(i, gs + j) = -f.target.relations.at(j, i);
    }
    IntMatrix null_rows = integer_kernel_rows(stacked);
    IntMatrix projected(null_rows.rows(), gs);
    for (std::size_t i = 0; i < null_rows.rows(); ++i)
        for (std::size_t j = 0; j < gs; ++j) projected.at(i, j) = null_rows.at(i, j);
    return projected;
}

// Equality as maps of quotient groups: the difference sends every generator
// into the target relation lattice.
inline bool homs_equal(const GroupHom& f, const GroupHom& g) {
    if (!f.dimensions_ok() || !g.dimensions_ok()) return false;
    if (f.matrix.rows() != g.matrix.rows() || f.matrix.cols() != g.matrix.cols()) return false;
    IntMatrix diff = (f.matrix - g.matrix).transposed();
    return lattice_subset(diff, f.target.relations);
}

inline bool is_surjective(const GroupHom& f) {
    // Image plus target relations must fill Z^{g_target}.
    return hermite_row_basis(image_lattice_rows(f)) ==
           IntMatrix::identity(f.target.generator_count);
}

inline bool is_injective(const GroupHom& f) {
    // The kernel lattice always contains the source relations when f is well
    // defined; injectivity is the reverse inclusion.
    return lattice_subset(kernel_lattice_rows(f), f.source.relations);
}

inline bool is_isomorphism(const GroupHom& f) { return is_surjective(f) && is_injective(f); }

}  // namespace orbk
