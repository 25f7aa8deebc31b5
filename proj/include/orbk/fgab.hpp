#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "orbk/errors.hpp"
#include "orbk/smith.hpp"

namespace orbk {

// Finitely generated abelian group in canonical form: Z^free_rank plus
// cyclic factors Z/d1 + ... + Z/dm with d1 | d2 | ... and every di >= 2.
// Two groups are isomorphic iff these fields are equal.
struct FgAbGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const FgAbGroup&) const = default;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_free() const { return torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }

    // Number of elements; 0 encodes "infinite".
    Int order() const {
        if (free_rank > 0) return 0;
        Int n = 1;
        for (const Int& d : torsion) n *= d;
        return n;
    }

    std::string to_string() const {
        if (is_trivial()) return "0";
        std::ostringstream out;
        bool first = true;
        if (free_rank == 1) {
            out << "Z";
            first = false;
        } else if (free_rank > 1) {
            out << "Z^" << free_rank;
            first = false;
        }
        for (const Int& d : torsion) {
            if (!first) out << " + ";
            out << "Z/" << d;
            first = false;
        }
        return out.str();
    }

    static FgAbGroup trivial() { return {}; }
    static FgAbGroup free(std::size_t rank) { return {rank, {}}; }
    static FgAbGroup cyclic(const Int& n) {
        if (n < 0) throw error("cyclic group order must be nonnegative");
        if (n == 0) return free(1);
        if (n == 1) return trivial();
        return {0, {n}};
    }
};

// Canonical form of Z^g / (row lattice of `relations`); g = column count.
inline FgAbGroup from_presentation(const IntMatrix& relations) {
    std::vector<Int> factors = invariant_factors(relations);
    FgAbGroup g;
    g.free_rank = relations.cols() - factors.size();
    for (Int& d : factors)
        if (d >= 2) g.torsion.push_back(std::move(d));
    return g;
}

// Canonicalize an arbitrary multiset of cyclic orders (each >= 2) into the
// divisibility chain; runs the Smith engine on the diagonal presentation.
inline FgAbGroup from_invariants(std::size_t free_rank, const std::vector<Int>& factors) {
    for (const Int& d : factors)
        if (d < 2) throw error("invariant factor below 2");
    IntMatrix diag(factors.size(), factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) diag.at(i, i) = factors[i];
    FgAbGroup g = from_presentation(diag);
    g.free_rank += free_rank;
    return g;
}

inline FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> factors = a.torsion;
    factors.insert(factors.end(), b.torsion.begin(), b.torsion.end());
    return from_invariants(a.free_rank + b.free_rank, factors);
}

// Z-tensor product: Z^p (x) Z^q = Z^{pq}, Z/d (x) Z = Z/d,
// Z/d (x) Z/e = Z/gcd(d,e), bilinear over direct sums.
inline FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> factors;
    for (const Int& d : a.torsion)
        for (std::size_t i = 0; i < b.free_rank; ++i) factors.push_back(d);
    for (const Int& e : b.torsion)
        for (std::size_t i = 0; i < a.free_rank; ++i) factors.push_back(e);
    for (const Int& d : a.torsion)
        for (const Int& e : b.torsion) {
            Int g = boost::multiprecision::gcd(d, e);
            if (g >= 2) factors.push_back(g);
        }
    return from_invariants(a.free_rank * b.free_rank, factors);
}

// Tor_1^Z: kills free parts, Tor(Z/d, Z/e) = Z/gcd(d,e), additive over sums.
inline FgAbGroup tor(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> factors;
    for (const Int& d : a.torsion)
        for (const Int& e : b.torsion) {
            Int g = boost::multiprecision::gcd(d, e);
            if (g >= 2) factors.push_back(g);
        }
    return from_invariants(0, factors);
}

inline bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b) { return a == b; }

// Z/2-graded pair (K0, K1); both components canonical by construction.
struct KPair {
    FgAbGroup k0, k1;

    bool operator==(const KPair&) const = default;

    std::string to_string() const {
        return "(K0 = " + k0.to_string() + ", K1 = " + k1.to_string() + ")";
    }

    static KPair free_pair(std::size_t rank0, std::size_t rank1) {
        return {FgAbGroup::free(rank0), FgAbGroup::free(rank1)};
    }
};

inline bool is_isomorphic(const KPair& a, const KPair& b) {
    return is_isomorphic(a.k0, b.k0) && is_isomorphic(a.k1, b.k1);
}

// Graded group of the split Kunneth sequence for tensor products. Tor terms
// sit one degree off from the tensor terms. The sequence itself is short
// exact with Tor on the right; over finitely generated coefficients it
// splits (unnaturally), and only the additive outcome is consumed here.
inline KPair kunneth(const KPair& a, const KPair& b) {
    KPair r;
    r.k0 = direct_sum(direct_sum(tensor(a.k0, b.k0), tensor(a.k1, b.k1)),
                      direct_sum(tor(a.k0, b.k1), tor(a.k1, b.k0)));
    r.k1 = direct_sum(direct_sum(tensor(a.k0, b.k1), tensor(a.k1, b.k0)),
                      direct_sum(tor(a.k0, b.k0), tor(a.k1, b.k1)));
    return r;
}

// Alternating rank; additive across six-term exact sequences and
// multiplicative under kunneth, which makes it the cross-side check that
// needs no boundary-map data.
inline long long rank_euler(const KPair& p) {
    return static_cast<long long>(p.k0.free_rank) - static_cast<long long>(p.k1.free_rank);
}

}  // namespace orbk
