#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "orbk/errors.hpp"
#include "orbk/fgab.hpp"
#include "orbk/finite_group.hpp"

namespace orbk {

inline constexpr std::uint64_t kDefaultCharacterSeed = 0x0123456789abcdefull;
inline constexpr double kOrthogonalityTolerance = 1e-6;

// Complete complex character table. Row 0 is the trivial character; column
// order follows the group's class order (column 0 = identity class).
struct CharacterTable {
    std::size_t num_classes = 0;
    std::size_t group_order = 0;
    std::vector<std::size_t> class_sizes;
    std::vector<std::vector<std::complex<double>>> characters;  // rows = irreducibles
    std::vector<int> degrees;
    std::vector<std::complex<double>> defining_char;  // trace of the 2-dim representation

    // Max deviation of U U^H and U^H U from the identity, where
    // U(i,k) = chi_i(C_k) sqrt(|C_k| / |G|); covers rows and columns at once.
    double orthogonality_residual() const {
        const std::size_t r = num_classes;
        Eigen::MatrixXcd u(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < r; ++k)
                u(i, k) = characters[i][k] *
                          std::sqrt(static_cast<double>(class_sizes[k]) / group_order);
        double res = (u * u.adjoint() - Eigen::MatrixXcd::Identity(r, r)).cwiseAbs().maxCoeff();
        double res2 = (u.adjoint() * u - Eigen::MatrixXcd::Identity(r, r)).cwiseAbs().maxCoeff();
        return std::max(res, res2);
    }

    // Class-sum inner product <a, b> = (1/|G|) sum_k |C_k| a_k conj(b_k).
    std::complex<double> inner_product(const std::vector<std::complex<double>>& a,
                                       const std::vector<std::complex<double>>& b) const {
        std::complex<double> s = 0.0;
        for (std::size_t k = 0; k < num_classes; ++k)
            s += static_cast<double>(class_sizes[k]) * a[k] * std::conj(b[k]);
        return s / static_cast<double>(group_order);
    }
};

namespace detail {

struct RowSortKey {
    int degree;
    std::vector<std::pair<long long, long long>> rounded;  // (re, im) per class, 1e-4 grid

    bool operator<(const RowSortKey& o) const {
        if (degree != o.degree) return degree < o.degree;
        return rounded < o.rounded;
    }
};

inline RowSortKey row_sort_key(int degree, const std::vector<std::complex<double>>& row) {
    RowSortKey k{degree, {}};
    k.rounded.reserve(row.size());
    for (const auto& v : row)
        k.rounded.emplace_back(std::llround(v.real() * 1e4), std::llround(v.imag() * 1e4));
    return k;
}

// One diagonalization attempt. The central characters of the irreducibles
// are the common eigenvectors of the class-algebra multiplication matrices;
// a random real combination separates them generically.
inline bool try_character_table(const FiniteGroup& g, std::mt19937_64& rng, CharacterTable& out) {
    const std::size_t r = g.num_classes();
    const std::size_t order = g.order();

    std::uniform_real_distribution<double> coeff(0.25, 1.0);
    std::vector<double> t(r);
    for (double& v : t) v = coeff(rng);

    // T(j,k) = sum_i t_i n_{ijk}, accumulated directly from the structure
    // constants: for x in C_i and class representative z_k, the partner
    // y = x^{-1} z_k lands in class j.
    Eigen::MatrixXd big = Eigen::MatrixXd::Zero(r, r);
    for (std::size_t k = 0; k < r; ++k) {
        const std::size_t zk = g.classes[k].front();
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t xi : g.classes[i]) {
                std::size_t y = g.element_index(g.elements[xi].conjugate() * g.elements[zk]);
                big(static_cast<Eigen::Index>(g.class_of[y]), static_cast<Eigen::Index>(k)) += t[i];
            }
        }
    }

    Eigen::EigenSolver<Eigen::MatrixXd> solver(big);
    if (solver.info() != Eigen::Success) return false;
    Eigen::VectorXcd values = solver.eigenvalues();
    Eigen::MatrixXcd vectors = solver.eigenvectors();

    // Reject near-collisions; repeated eigenvalues make the eigenvectors
    // unreliable and a fresh combination is cheap.
    double scale = values.cwiseAbs().maxCoeff();
    if (!(scale > 0)) return false;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (std::abs(values(static_cast<Eigen::Index>(i)) - values(static_cast<Eigen::Index>(j))) <
                1e-7 * scale)
                return false;

    std::vector<std::pair<RowSortKey, std::size_t>> ordering;
    std::vector<std::vector<std::complex<double>>> rows(r);
    std::vector<int> degrees(r);
    for (std::size_t e = 0; e < r; ++e) {
        Eigen::VectorXcd v = vectors.col(static_cast<Eigen::Index>(e));
        std::complex<double> pivot = v(0);  // identity-class component; nonzero in theory
        if (std::abs(pivot) < 1e-12) return false;
        // omega_k = |C_k| chi(C_k) / chi(1); degree from <chi, chi> = 1.
        double s = 0.0;
        for (std::size_t k = 0; k < r; ++k)
            s += std::norm(v(static_cast<Eigen::Index>(k)) / pivot) / g.classes[k].size();
        double d = std::sqrt(static_cast<double>(order) / s);
        int degree = static_cast<int>(std::llround(d));
        if (degree < 1 || std::abs(d - degree) > 1e-3) return false;
        std::vector<std::complex<double>> chi(r);
        for (std::size_t k = 0; k < r; ++k)
            chi[k] = static_cast<double>(degree) * (v(static_cast<Eigen::Index>(k)) / pivot) /
                     static_cast<double>(g.classes[k].size());
        degrees[e] = degree;
        rows[e] = std::move(chi);
    }

    // Exactly one trivial row, pinned to index 0; the rest sort by degree
    // then rounded values, which is seed-independent.
    std::size_t trivial = r;
    for (std::size_t e = 0; e < r; ++e) {
        bool all_one = true;
        for (const auto& v : rows[e])
            if (std::abs(v - 1.0) > 1e-6) {
                all_one = false;
                break;
            }
        if (all_one) {
            if (trivial != r) return false;
            trivial = e;
        }
    }
    if (trivial == r) return false;
    for (std::size_t e = 0; e < r; ++e)
        if (e != trivial) ordering.emplace_back(row_sort_key(degrees[e], rows[e]), e);
    std::sort(ordering.begin(), ordering.end());

    out.num_classes = r;
    out.group_order = order;
    out.class_sizes = g.class_sizes();
    out.characters.clear();
    out.degrees.clear();
    out.characters.push_back(rows[trivial]);
    out.degrees.push_back(degrees[trivial]);
    for (const auto& [key, e] : ordering) {
        out.characters.push_back(rows[e]);
        out.degrees.push_back(degrees[e]);
    }
    out.defining_char.resize(r);
    for (std::size_t k = 0; k < r; ++k)
        out.defining_char[k] = su2_trace(g.elements[g.classes[k].front()]);

    long long degree_square_sum = 0;
    for (int d : out.degrees) degree_square_sum += static_cast<long long>(d) * d;
    if (degree_square_sum != static_cast<long long>(order)) return false;
    if (out.degrees[0] != 1) return false;
    if (out.orthogonality_residual() > kOrthogonalityTolerance) return false;
    return true;
}

}  // namespace detail

// Character table by simultaneous diagonalization of the class algebra.
// Retries with fresh randomness on eigenvalue collisions or failed
// orthogonality gates, then reports a structured failure.
inline CharacterTable character_table(const FiniteGroup& g,
                                      std::uint64_t seed = kDefaultCharacterSeed) {
    std::mt19937_64 rng(seed);
    CharacterTable t;
    constexpr int kAttempts = 24;
    for (int attempt = 0; attempt < kAttempts; ++attempt)
        if (detail::try_character_table(g, rng, t)) return t;
    throw error("character table diagonalization failed after retries");
}

// K-theory of the group algebra: a free summand per irreducible in degree
// zero, nothing in degree one.
inline KPair k_pair_of_group_algebra(const CharacterTable& t) {
    return {FgAbGroup::free(t.num_classes), FgAbGroup::trivial()};
}

}  // namespace orbk
