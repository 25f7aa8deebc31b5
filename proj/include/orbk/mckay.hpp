#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "orbk/ade.hpp"
#include "orbk/character_table.hpp"
#include "orbk/errors.hpp"
#include "orbk/fgab.hpp"
#include "orbk/finite_group.hpp"

namespace orbk {

// Multiplicity graph of the defining representation: a(i,j) counts chi_j
// inside chi_V * chi_i. For a finite subgroup of SU(2) this is the affine
// ADE diagram; the trivial character is the affine vertex.
struct McKayGraph {
    std::size_t vertex_count = 0;
    std::vector<std::vector<int>> adjacency;
    std::size_t affine_vertex = 0;
    std::vector<int> degrees;  // character degrees, the affine Cartan kernel

    // max |(2I - a) . degrees|, exact in integers.
    long long cartan_kernel_residual() const {
        long long worst = 0;
        for (std::size_t i = 0; i < vertex_count; ++i) {
            long long s = 2ll * degrees[i];
            for (std::size_t j = 0; j < vertex_count; ++j)
                s -= static_cast<long long>(adjacency[i][j]) * degrees[j];
            worst = std::max(worst, s < 0 ? -s : s);
        }
        return worst;
    }
};

inline McKayGraph mckay_graph(const CharacterTable& t) {
    const std::size_t r = t.num_classes;
    McKayGraph g;
    g.vertex_count = r;
    g.degrees = t.degrees;
    g.adjacency.assign(r, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<std::complex<double>> product(r);
        for (std::size_t k = 0; k < r; ++k) product[k] = t.defining_char[k] * t.characters[i][k];
        for (std::size_t j = 0; j < r; ++j) {
            std::complex<double> m = t.inner_product(product, t.characters[j]);
            long long rounded = std::llround(m.real());
            if (std::abs(m.real() - rounded) > kOrthogonalityTolerance ||
                std::abs(m.imag()) > kOrthogonalityTolerance || rounded < 0)
                throw error("non-integral multiplicity in McKay graph; character table is broken");
            g.adjacency[i][j] = static_cast<int>(rounded);
        }
    }
    // The affine vertex is the trivial character's row; shape alone cannot
    // single it out on the rotationally symmetric affine A diagrams.
    g.affine_vertex = 0;
    for (std::size_t i = 0; i < r; ++i) {
        bool all_one = true;
        for (std::size_t k = 0; k < r; ++k)
            if (std::abs(t.characters[i][k] - 1.0) > 1e-6) {
                all_one = false;
                break;
            }
        if (all_one) {
            g.affine_vertex = i;
            break;
        }
    }
    return g;
}

namespace detail {

struct FiniteTree {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> neighbors;
};

// Delete the affine vertex and return the remaining graph if it is a tree
// of simple edges; otherwise report why not.
inline FiniteTree delete_affine_vertex(const McKayGraph& g) {
    if (g.vertex_count < 2) throw error("McKay graph has fewer than two vertices");
    FiniteTree t;
    t.n = g.vertex_count - 1;
    t.neighbors.assign(t.n, {});
    auto reindex = [&](std::size_t v) { return v < g.affine_vertex ? v : v - 1; };
    std::size_t edges = 0;
    for (std::size_t i = 0; i < g.vertex_count; ++i) {
        if (i == g.affine_vertex) continue;
        for (std::size_t j = 0; j < g.vertex_count; ++j) {
            if (j == g.affine_vertex || j <= i) continue;
            int m = g.adjacency[i][j];
            if (m == 0) continue;
            if (m != 1) throw error("multiple edge off the affine vertex; not an ADE shape");
            t.neighbors[reindex(i)].push_back(reindex(j));
            t.neighbors[reindex(j)].push_back(reindex(i));
            ++edges;
        }
    }
    if (edges + 1 != t.n) throw error("affine vertex deletion does not leave a tree");
    // Connectivity check; with edges == n-1 this settles acyclicity too.
    std::vector<char> seen(t.n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : t.neighbors[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    if (count != t.n) throw error("affine vertex deletion disconnects the graph");
    return t;
}

// Arm lengths of a star: the three path lengths hanging off the unique
// branch vertex.
inline std::vector<std::size_t> arm_lengths(const FiniteTree& t, std::size_t branch) {
    std::vector<std::size_t> arms;
    for (std::size_t start : t.neighbors[branch]) {
        std::size_t len = 1, prev = branch, cur = start;
        for (;;) {
            const auto& nb = t.neighbors[cur];
            if (nb.size() > 2) throw error("second branch vertex; not an ADE shape");
            std::size_t next = t.n;
            for (std::size_t w : nb)
                if (w != prev) next = w;
            if (next == t.n) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    return arms;
}

}  // namespace detail

// Classify the affine diagram back to its ADE label: drop the affine vertex,
// then a path is type A, one branch vertex with arms (1,1,k) is type D, and
// arms (1,2,2)/(1,2,3)/(1,2,4) are E6/E7/E8. The double edge (affine A1) is
// the one multigraph case.
inline AdeLabel dynkin_type(const McKayGraph& g) {
    if (g.vertex_count == 2) {
        std::size_t other = g.affine_vertex == 0 ? 1 : 0;
        if (g.adjacency[g.affine_vertex][other] == 2) return AdeLabel::cyclic(2);
        throw error("two-vertex McKay graph without a double edge; not an ADE shape");
    }
    detail::FiniteTree t = detail::delete_affine_vertex(g);
    std::size_t branch = t.n;
    for (std::size_t v = 0; v < t.n; ++v) {
        if (t.neighbors[v].size() > 3) throw error("vertex of degree above three; not an ADE shape");
        if (t.neighbors[v].size() == 3) {
            if (branch != t.n) throw error("two branch vertices; not an ADE shape");
            branch = v;
        }
    }
    if (branch == t.n) return AdeLabel::cyclic(static_cast<int>(t.n) + 1);  // path: finite A_n
    std::vector<std::size_t> arms = detail::arm_lengths(t, branch);
    if (arms[0] == 1 && arms[1] == 1) return AdeLabel::binary_dihedral(static_cast<int>(t.n) - 2);
    if (arms == std::vector<std::size_t>{1, 2, 2}) return AdeLabel::e6();
    if (arms == std::vector<std::size_t>{1, 2, 3}) return AdeLabel::e7();
    if (arms == std::vector<std::size_t>{1, 2, 4}) return AdeLabel::e8();
    throw error("unrecognized tree shape; not an ADE diagram");
}

// The exceptional fiber of the crepant resolution of C^2/G: a tree of
// 2-spheres meeting transversally in single points, one sphere per
// nontrivial irreducible, arranged as the finite Dynkin diagram.
struct ExceptionalFiber {
    std::size_t sphere_count = 0;
    std::vector<std::vector<int>> intersection_graph;  // 0/1 symmetric
};

inline ExceptionalFiber exceptional_fiber(const McKayGraph& g) {
    // The affine-A1 double edge needs no special casing here: both of its
    // edges meet the affine vertex, so deletion leaves the single sphere.
    detail::FiniteTree t = detail::delete_affine_vertex(g);
    ExceptionalFiber f;
    f.sphere_count = t.n;
    f.intersection_graph.assign(t.n, std::vector<int>(t.n, 0));
    for (std::size_t v = 0; v < t.n; ++v)
        for (std::size_t w : t.neighbors[v]) f.intersection_graph[v][w] = 1;
    return f;
}

// K-theory of the fiber from its cell structure, independently of character
// theory: m spheres glued along a tree contribute one point class and m
// sphere classes, and there are no odd cells.
inline KPair fiber_k_theory(const ExceptionalFiber& f) {
    return {FgAbGroup::free(f.sphere_count + 1), FgAbGroup::trivial()};
}

// End-to-end cross-path check: K-theory of the group algebra via character
// theory against K-theory of the exceptional fiber via cell topology.
struct McKayVerdict {
    AdeLabel label;
    AdeLabel detected;
    ExceptionalFiber fiber;
    KPair group_algebra_side;
    KPair fiber_side;
    bool pass = false;
};

inline McKayVerdict verify_mckay_correspondence(const AdeLabel& label,
                                                std::uint64_t seed = kDefaultCharacterSeed,
                                                std::size_t cap = kDefaultClosureCap) {
    FiniteGroup g = build_group(label, cap);
    CharacterTable t = character_table(g, seed);
    McKayGraph graph = mckay_graph(t);
    McKayVerdict v;
    v.label = label;
    v.detected = dynkin_type(graph);
    v.fiber = exceptional_fiber(graph);
    v.group_algebra_side = k_pair_of_group_algebra(t);
    v.fiber_side = fiber_k_theory(v.fiber);
    v.pass = is_isomorphic(v.group_algebra_side, v.fiber_side) && v.detected == label;
    return v;
}

// Plain adjacency-list text: one vertex per line, "v[deg]: neighbors".
inline std::string adjacency_text(const McKayGraph& g) {
    std::ostringstream out;
    for (std::size_t i = 0; i < g.vertex_count; ++i) {
        out << i << "[" << g.degrees[i] << "]" << (i == g.affine_vertex ? "*" : "") << ":";
        for (std::size_t j = 0; j < g.vertex_count; ++j)
            for (int m = 0; m < g.adjacency[i][j]; ++m) out << " " << j;
        out << "\n";
    }
    return out.str();
}

// Graphviz text, one edge per line; vertex labels carry character degrees.
inline std::string dot_text(const McKayGraph& g) {
    std::ostringstream out;
    out << "graph mckay {\n";
    for (std::size_t i = 0; i < g.vertex_count; ++i)
        out << "  v" << i << " [label=\"" << (i == g.affine_vertex ? "affine " : "") << "d="
            << g.degrees[i] << "\"];\n";
    for (std::size_t i = 0; i < g.vertex_count; ++i)
        for (std::size_t j = i + 1; j < g.vertex_count; ++j)
            for (int m = 0; m < g.adjacency[i][j]; ++m)
                out << "  v" << i << " -- v" << j << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace orbk
