/**
 * Combinatorial classification: join decomposition of lexsegment
 * complexes, S2 / one-dimensional-link connectivity, the pure-shellability
 * search, the decomposition-based fast classifier, and the literal pattern
 * matcher it is cross-checked against.
 *
 * Nothing in this header computes homology; the fast classifier is a pure
 * function of facet combinatorics (tests pin this down via the include
 * guard of the homology header).
 */

#ifndef LEXCM_CLASSIFY_HPP
#define LEXCM_CLASSIFY_HPP

#include <optional>
#include <string>
#include <unordered_set>

#include "lexcm/complex.hpp"
#include "lexcm/field.hpp"

namespace lexcm {

enum class ShellVerdict { not_shellable, shellable, budget_exceeded };
enum class Method { fast, oracle, pattern };

inline std::string to_string(ShellVerdict v) {
    switch (v) {
        case ShellVerdict::not_shellable: return "false";
        case ShellVerdict::shellable: return "true";
        default: return "search-budget-exceeded";
    }
}

inline std::string to_string(Method m) {
    switch (m) {
        case Method::fast: return "fast";
        case Method::oracle: return "oracle";
        default: return "pattern";
    }
}

/**
 * Per-instance verdicts. strict_cm_level empty means "not CM_t for any t"
 * (impure complexes); connected is empty when connectivity is undefined.
 */
struct ClassificationReport {
    bool pure = false;
    std::optional<bool> connected;
    bool flag = false;
    bool s2 = false;
    ShellVerdict shellable = ShellVerdict::not_shellable;
    bool cm = false;
    bool buchsbaum = false;
    std::optional<int> strict_cm_level;
    Method method = Method::fast;
    FieldSpec field = FieldSpec::f2();
};

/**
 * True iff the complex is pure and link(F) is connected for every face F
 * whose link has dimension >= 1 (the combinatorial S2 condition).
 */
inline bool is_s2(const SimplicialComplex& c) {
    if (c.is_void()) throw invalid_input("is_s2: void complex");
    if (c.is_irrelevant()) return true;
    if (!is_pure(c)) return false;
    for (const auto& level : c.faces_by_size())
        for (VertexMask f : level) {
            SimplicialComplex lk = link(c, Face{f});
            if (lk.is_proper() && lk.dim() >= 1 && !is_connected(lk)) return false;
        }
    return true;
}

/**
 * The weaker condition: pure, and links of dimension exactly 1 are
 * connected.
 */
inline bool has_connected_onedim_links(const SimplicialComplex& c) {
    if (c.is_void()) throw invalid_input("has_connected_onedim_links: void complex");
    if (c.is_irrelevant()) return true;
    if (!is_pure(c)) return false;
    for (const auto& level : c.faces_by_size())
        for (VertexMask f : level) {
            SimplicialComplex lk = link(c, Face{f});
            if (lk.is_proper() && lk.dim() == 1 && !is_connected(lk)) return false;
        }
    return true;
}

/** Default cap on shellability search nodes (distinct facet subsets). */
inline constexpr long kDefaultShellBudget = 10'000'000;

/**
 * Backtracking search for a shelling order of a pure complex: each facet
 * must meet the union of its predecessors in a pure subcomplex of
 * codimension one inside it. Whether an order can be extended depends
 * only on the set of facets used, so dead prefixes are memoized by
 * facet subset; `budget` caps the number of distinct subsets expanded.
 *
 * Appending F_j after the set U is legal iff some F_k (k in U) meets F_j
 * in exactly |F_j|-1 vertices and every intersection F_j n F_k is inside
 * one of those codimension-one intersections; both conditions reduce to
 * masked lookups in tables precomputed per facet pair.
 */
inline ShellVerdict is_shellable(const SimplicialComplex& c, long budget = kDefaultShellBudget) {
    if (!c.is_proper()) throw invalid_input("is_shellable: need a proper complex");
    if (!is_pure(c)) throw invalid_input("is_shellable: pure shellability needs a pure complex");
    const auto& facets = c.facets();
    const int m = static_cast<int>(facets.size());
    if (m > 64) throw invalid_input("is_shellable: more than 64 facets unsupported");
    if (m == 1) return ShellVerdict::shellable;
    const int fsize = popcount(facets[0]);
    if (fsize == 1) return ShellVerdict::shellable;  // points: predecessors meet in {}
    const std::uint64_t full = (m == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;

    // ridge_adj[j]: facets meeting F_j in a codimension-one face.
    // cover[j][k]: the l with |F_j n F_l| = |F_j|-1 and F_j n F_k inside F_l.
    std::vector<std::uint64_t> ridge_adj(static_cast<std::size_t>(m), 0);
    std::vector<std::vector<std::uint64_t>> cover(
        static_cast<std::size_t>(m), std::vector<std::uint64_t>(static_cast<std::size_t>(m), 0));
    for (int j = 0; j < m; ++j)
        for (int l = 0; l < m; ++l) {
            if (l == j || popcount(facets[j] & facets[l]) != fsize - 1) continue;
            ridge_adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << l;
            VertexMask big = facets[j] & facets[l];
            for (int k = 0; k < m; ++k)
                if ((facets[j] & facets[k] & ~big) == 0)
                    cover[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] |=
                        std::uint64_t{1} << l;
        }

    auto can_append = [&](int j, std::uint64_t used) {
        if (!(ridge_adj[static_cast<std::size_t>(j)] & used)) return false;
        std::uint64_t rest = used;
        while (rest) {
            int k = std::countr_zero(rest);
            if (!(cover[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] & used))
                return false;
            rest &= rest - 1;
        }
        return true;
    };

    // dead-state memo: flat bitmap for small facet counts, hash set beyond
    std::vector<bool> dead_flat;
    std::unordered_set<std::uint64_t> dead_sparse;
    const bool flat = m <= 26;
    if (flat) dead_flat.assign(std::size_t{1} << m, false);
    auto is_dead = [&](std::uint64_t u) {
        return flat ? static_cast<bool>(dead_flat[u]) : dead_sparse.count(u) != 0;
    };
    auto mark_dead = [&](std::uint64_t u) {
        if (flat)
            dead_flat[u] = true;
        else
            dead_sparse.insert(u);
    };

    long nodes = 0;
    auto rec = [&](auto&& self, std::uint64_t used) -> ShellVerdict {
        if (used == full) return ShellVerdict::shellable;
        if (is_dead(used)) return ShellVerdict::not_shellable;
        if (++nodes > budget) return ShellVerdict::budget_exceeded;
        for (int j = 0; j < m; ++j) {
            if (used >> j & 1) continue;
            if (used != 0 && !can_append(j, used)) continue;
            ShellVerdict r = self(self, used | (std::uint64_t{1} << j));
            if (r != ShellVerdict::not_shellable) return r;
        }
        mark_dead(used);
        return ShellVerdict::not_shellable;
    };
    return rec(rec, 0);
}

/**
 * Join decomposition of a lexsegment complex: with i the leading index
 * of u, Delta1 is the full simplex on [i-1] (the irrelevant complex when
 * i = 1) and Delta2 is the complex of (L(u, v)) as an ideal in the
 * variables x_i..x_n, relabeled onto a ground set of size n-i+1.
 * Joining Delta1 with Delta2 shifted back reconstructs the complex.
 */
struct JoinDecomposition {
    SimplicialComplex delta1;
    SimplicialComplex delta2;
    int leading_index = 1;
};

inline JoinDecomposition join_decompose_lexsegment(const LexsegmentInstance& inst) {
    const int i = inst.leading_index();
    const int m = inst.n - i + 1;
    std::vector<SqfMonomial> shifted;
    for (const SqfMonomial& w : lexsegment(inst)) {
        // every member of the segment lives in x_i..x_n
        VertexMask low = (VertexMask{1} << (i - 1)) - 1;
        if (w.support & low) throw invalid_input("join decomposition: segment escapes x_i..x_n");
        shifted.emplace_back(m, w.support >> (i - 1));
    }
    return JoinDecomposition{SimplicialComplex::full_simplex(i - 1), stanley_reisner(m, shifted),
                             i};
}

/**
 * Classifier without homology. After decomposing, purity and
 * connectivity of Delta2 decide everything:
 *
 *   d = 2: Delta2 CM iff pure and (connected or zero-dimensional); a pure
 *          disconnected Delta2 of positive dimension is Buchsbaum and not
 *          CM, so the instance is strictly CM_i.
 *   d >= 3: Delta2 CM iff pure with connected one-dimensional links;
 *          otherwise the strict level is exactly dim(Delta) (the only
 *          non-CM links sit at faces of codimension 2).
 *
 * Shellability and S2 coincide with CM on this instance class; a flag
 * instance is exactly a degree-2 instance.
 */
inline ClassificationReport classify_fast(const LexsegmentInstance& inst) {
    JoinDecomposition dec = join_decompose_lexsegment(inst);
    const SimplicialComplex& d2 = dec.delta2;
    const int i = dec.leading_index;
    const bool pure2 = is_pure(d2);
    const bool conn2 = is_connected(d2);
    const int dim2 = d2.dim();
    const int full_dim = (i - 1) + dim2;

    ClassificationReport r;
    r.method = Method::fast;
    r.pure = pure2;
    r.connected = (i >= 2) || conn2;
    r.flag = (inst.d == 2);
    if (pure2) {
        bool cm2;
        if (inst.d == 2)
            cm2 = (dim2 == 0) || conn2;
        else
            cm2 = has_connected_onedim_links(d2);
        r.strict_cm_level = cm2 ? 0 : (inst.d == 2 ? i : full_dim);
    }
    r.cm = r.strict_cm_level.has_value() && *r.strict_cm_level == 0;
    r.buchsbaum = r.strict_cm_level.has_value() && *r.strict_cm_level <= 1;
    r.s2 = r.cm;
    r.shellable = r.cm ? ShellVerdict::shellable : ShellVerdict::not_shellable;
    return r;
}

/**
 * Literal pattern matcher for strict CM_t levels of degree-2 instances,
 * with the bounds written as in the source characterization (n > 4 for
 * pattern (a), n > 3 for pattern (b), independent of t):
 *
 *   (a) u = x_t x_{n-2}, v = x_{n-2} x_{n-1}
 *   (b) u = x_t x_{n-1}, v = x_{n-2} x_n
 *
 * Returns the claimed level t >= 1, or nothing when no pattern applies.
 * For t >= 2 the unshifted bounds admit spurious matches; the sweep
 * cross-checks every match against the combinatorial/oracle level.
 */
inline std::optional<int> pattern_strict_level(const LexsegmentInstance& inst) {
    if (inst.d != 2) return std::nullopt;
    const int n = inst.n;
    std::vector<int> us = inst.u.support_vector();
    std::vector<int> vs = inst.v.support_vector();
    const int t = us[0];
    const bool pattern_a = us[1] == n - 2 && vs[0] == n - 2 && vs[1] == n - 1 && n > 4;
    const bool pattern_b = us[1] == n - 1 && vs[0] == n - 2 && vs[1] == n && n > 3;
    if (pattern_a || pattern_b) return t;
    return std::nullopt;
}

}  // namespace lexcm

#endif  // LEXCM_CLASSIFY_HPP
