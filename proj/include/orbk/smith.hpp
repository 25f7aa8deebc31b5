#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "orbk/int_matrix.hpp"

namespace orbk {

// u * m * v == d with u, v unimodular and d diagonal, nonnegative,
// d(0,0) | d(1,1) | ... (invariant-factor form).
struct SmithResult {
    IntMatrix u, d, v;
};

namespace detail {

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Diagonalization by unimodular row/column operations. u/v are optional
// accumulators; skipping them saves time when only the diagonal is needed.
inline void snf_inplace(IntMatrix& a, IntMatrix* u, IntMatrix* v) {
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t steps = m < n ? m : n;
    for (std::size_t t = 0; t < steps; ++t) {
        // Pivot: nonzero entry of least magnitude in the trailing block.
        // A unit entry is optimal, so stop scanning the moment one appears.
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best;
        for (std::size_t i = t; i < m && !(found && best == 1); ++i) {
            for (std::size_t j = t; j < n; ++j) {
                const Int& e = a.at(i, j);
                if (e == 0) continue;
                Int mag = abs_int(e);
                if (!found || mag < best) {
                    found = true;
                    best = std::move(mag);
                    pi = i;
                    pj = j;
                    if (best == 1) break;
                }
            }
        }
        if (!found) break;  // trailing block is zero
        a.swap_rows(t, pi);
        if (u) u->swap_rows(t, pi);
        a.swap_cols(t, pj);
        if (v) v->swap_cols(t, pj);

        for (;;) {
            // Clear below the pivot; a nonzero remainder becomes the new
            // (strictly smaller) pivot, so this terminates.
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (a.at(i, t) == 0) continue;
                    Int q = a.at(i, t) / a.at(t, t);
                    a.row_addmul(i, t, -q);
                    if (u) u->row_addmul(i, t, -q);
                    if (a.at(i, t) != 0) {
                        a.swap_rows(t, i);
                        if (u) u->swap_rows(t, i);
                        dirty = true;
                        break;
                    }
                }
            }
            // Clear to the right of the pivot; column swaps can re-dirty the
            // pivot column, hence the outer loop.
            dirty = true;
            while (dirty) {
                dirty = false;
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (a.at(t, j) == 0) continue;
                    Int q = a.at(t, j) / a.at(t, t);
                    a.col_addmul(j, t, -q);
                    if (v) v->col_addmul(j, t, -q);
                    if (a.at(t, j) != 0) {
                        a.swap_cols(t, j);
                        if (v) v->swap_cols(t, j);
                        dirty = true;
                        break;
                    }
                }
            }
            bool column_clean = true;
            for (std::size_t i = t + 1; i < m; ++i)
                if (a.at(i, t) != 0) {
                    column_clean = false;
                    break;
                }
            if (!column_clean) continue;

            // Divisibility sweep: the pivot must divide every entry of the
            // trailing block, or the chain property fails downstream.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < m && !bad_row; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row) break;
            a.row_addmul(t, *bad_row, 1);
            if (u) u->row_addmul(t, *bad_row, 1);
        }

        if (a.at(t, t) < 0) {
            a.negate_row(t);
            if (u) u->negate_row(t);
        }
    }
}

}  // namespace detail

inline SmithResult smith_normal_form(const IntMatrix& m) {
    SmithResult r{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    detail::snf_inplace(r.d, &r.u, &r.v);
    return r;
}

// Invariant factors only: the nonzero diagonal of the Smith form.
inline std::vector<Int> invariant_factors(const IntMatrix& m) {
    IntMatrix d = m;
    detail::snf_inplace(d, nullptr, nullptr);
    std::vector<Int> out;
    const std::size_t steps = d.rows() < d.cols() ? d.rows() : d.cols();
    for (std::size_t t = 0; t < steps; ++t) {
        if (d.at(t, t) == 0) break;
        out.push_back(d.at(t, t));
    }
    return out;
}

inline std::size_t lattice_rank(const IntMatrix& m) { return invariant_factors(m).size(); }

// Unique Hermite basis of the row lattice: row echelon, positive pivots,
// entries above each pivot reduced into [0, pivot), zero rows dropped.
// Two generating sets span the same lattice iff their bases are identical.
inline IntMatrix hermite_row_basis(const IntMatrix& rows_in) {
    IntMatrix a = rows_in;
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // Euclidean elimination within column c on rows r..m-1.
        for (;;) {
            std::size_t pivot = m;
            Int best;
            for (std::size_t i = r; i < m; ++i) {
                const Int& e = a.at(i, c);
                if (e == 0) continue;
                Int mag = detail::abs_int(e);
                if (pivot == m || mag < best) {
                    pivot = i;
                    best = std::move(mag);
                    if (best == 1) break;
                }
            }
            if (pivot == m) break;  // no pivot in this column
            a.swap_rows(r, pivot);
            bool reduced_all = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a.at(i, c) == 0) continue;
                Int q = a.at(i, c) / a.at(r, c);
                a.row_addmul(i, r, -q);
                if (a.at(i, c) != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (a.at(r, c) == 0) continue;
        if (a.at(r, c) < 0) a.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(a.at(i, c), a.at(r, c));
            a.row_addmul(i, r, -q);
        }
        ++r;
    }
    IntMatrix basis(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < n; ++c) basis.at(i, c) = a.at(i, c);
    return basis;
}

// rowspan(sub) ⊆ rowspan(sup)?
inline bool lattice_subset(const IntMatrix& sub, const IntMatrix& sup) {
    return hermite_row_basis(IntMatrix::vstack(sub, sup)) == hermite_row_basis(sup);
}

inline bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
    return hermite_row_basis(a) == hermite_row_basis(b);
}

// Basis of {x : m·x = 0}, returned as rows. The qualifying columns of the
// Smith V are a basis of the full (saturated) kernel since V is unimodular.
inline IntMatrix integer_kernel_rows(const IntMatrix& m) {
    IntMatrix d = m;
    IntMatrix v = IntMatrix::identity(m.cols());
    detail::snf_inplace(d, nullptr, &v);
    const std::size_t steps = d.rows() < d.cols() ? d.rows() : d.cols();
    std::size_t rank = 0;
    while (rank < steps && d.at(rank, rank) != 0) ++rank;
    const std::size_t n = m.cols();
    IntMatrix out(n - rank, n);
    for (std::size_t j = rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) out.at(j - rank, i) = v.at(i, j);
    return out;
}

}  // namespace orbk
