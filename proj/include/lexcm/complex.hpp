/**
 * Facet-based simplicial complexes on [n]: Stanley-Reisner construction
 * from squarefree generators, links, joins, purity, connectivity,
 * f-vector, flagness, and the canonical facet serialization.
 *
 * A complex is one of:
 *   void       -- no faces at all (not even the empty face),
 *   irrelevant -- only the empty face {()},
 *   proper     -- at least one vertex.
 * Vertices of [n] appearing in no facet are genuine non-vertices. All
 * values are immutable after construction; operations are pure.
 */

#ifndef LEXCM_COMPLEX_HPP
#define LEXCM_COMPLEX_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "lexcm/monomial.hpp"

namespace lexcm {

/** A face: a vertex subset of [1, n], possibly empty. */
struct Face {
    VertexMask bits = 0;

    Face() = default;
    explicit Face(VertexMask m) : bits(m) {}

    static Face of(const std::vector<int>& vertices, int n) { return Face(mask_of(vertices, n)); }

    bool empty() const { return bits == 0; }
    int size() const { return popcount(bits); }
    std::vector<int> vertices() const { return vertices_of(bits); }

    bool operator==(const Face& o) const { return bits == o.bits; }
};

/** Subset-enumerating operations use 2^n scans; keep them desk-scale. */
inline constexpr int kMaxGroundSet = 20;

inline void require_enumerable(int n, const char* what) {
    if (n > kMaxGroundSet)
        throw invalid_input(std::string(what) + ": ground set capped at " +
                            std::to_string(kMaxGroundSet) + " vertices");
}

/** Ascending-sequence order on vertex sets: [1,2] < [1,3] < [2,3] < ... */
inline bool facet_less(VertexMask a, VertexMask b) {
    while (a && b) {
        int x = std::countr_zero(a), y = std::countr_zero(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

class SimplicialComplex {
public:
    enum class Kind { void_complex, irrelevant, proper };

    static SimplicialComplex void_complex(int n) {
        SimplicialComplex c;
        c.n_ = check_n(n);
        c.kind_ = Kind::void_complex;
        return c;
    }

    static SimplicialComplex irrelevant(int n) {
        SimplicialComplex c;
        c.n_ = check_n(n);
        c.kind_ = Kind::irrelevant;
        c.facets_ = {0};
        return c;
    }

    static SimplicialComplex full_simplex(int n) {
        if (n == 0) return irrelevant(0);
        std::vector<VertexMask> one = {n == kMaxVariables ? ~VertexMask{0}
                                                          : (VertexMask{1} << n) - 1};
        return from_facets(n, one);
    }

    /** Canonicalizes: drops dominated sets, dedups, sorts lexicographically. */
    static SimplicialComplex from_facets(int n, std::vector<VertexMask> facets) {
        SimplicialComplex c;
        c.n_ = check_n(n);
        if (facets.empty()) {
            c.kind_ = Kind::void_complex;
            return c;
        }
        for (VertexMask f : facets)
            if (n < kMaxVariables && (f >> n) != 0)
                throw invalid_input("facet vertex out of range [1, n]");
        std::sort(facets.begin(), facets.end());
        facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
        std::vector<VertexMask> maximal;
        for (VertexMask f : facets) {
            bool dominated = false;
            for (VertexMask g : facets)
                if (f != g && (f & g) == f) { dominated = true; break; }
            if (!dominated) maximal.push_back(f);
        }
        std::sort(maximal.begin(), maximal.end(), facet_less);
        c.facets_ = std::move(maximal);
        c.kind_ = (c.facets_.size() == 1 && c.facets_[0] == 0) ? Kind::irrelevant : Kind::proper;
        return c;
    }

    static SimplicialComplex from_facet_vertices(int n, const std::vector<std::vector<int>>& fs) {
        std::vector<VertexMask> masks;
        masks.reserve(fs.size());
        for (const auto& f : fs) masks.push_back(mask_of(f, n));
        return from_facets(n, masks);
    }

    int n() const { return n_; }
    Kind kind() const { return kind_; }
    bool is_void() const { return kind_ == Kind::void_complex; }
    bool is_irrelevant() const { return kind_ == Kind::irrelevant; }
    bool is_proper() const { return kind_ == Kind::proper; }
    const std::vector<VertexMask>& facets() const { return facets_; }

    /** dim = max facet size - 1; irrelevant has dim -1. Void is an error. */
    int dim() const {
        if (is_void()) throw invalid_input("dimension of the void complex is undefined");
        int best = 0;
        for (VertexMask f : facets_) best = std::max(best, popcount(f));
        return best - 1;
    }

    VertexMask used_vertices() const {
        VertexMask u = 0;
        for (VertexMask f : facets_) u |= f;
        return u;
    }

    bool has_face(Face f) const {
        for (VertexMask m : facets_)
            if ((f.bits & m) == f.bits) return true;
        return false;
    }

    /** All faces grouped by dimension; index k holds the (k-1)-faces. */
    std::vector<std::vector<VertexMask>> faces_by_size() const {
        if (is_void()) return {};
        std::unordered_set<VertexMask> seen;
        for (VertexMask f : facets_) {
            VertexMask s = f;
            while (true) {
                seen.insert(s);
                if (s == 0) break;
                s = (s - 1) & f;
            }
        }
        std::vector<std::vector<VertexMask>> by_size(static_cast<std::size_t>(dim()) + 2);
        for (VertexMask s : seen) by_size[static_cast<std::size_t>(popcount(s))].push_back(s);
        for (auto& level : by_size) std::sort(level.begin(), level.end());
        return by_size;
    }

    bool operator==(const SimplicialComplex& o) const {
        return n_ == o.n_ && kind_ == o.kind_ && facets_ == o.facets_;
    }

private:
    static int check_n(int n) {
        if (n < 0 || n > kMaxVariables) throw invalid_input("ground set size must be in [0, 64]");
        return n;
    }

    int n_ = 0;
    Kind kind_ = Kind::void_complex;
    std::vector<VertexMask> facets_;
};

/**
 * Stanley-Reisner complex of the squarefree ideal generated by `generators`
 * on [n]: F is a face iff no generator support is contained in F. The empty
 * generator list yields the full simplex.
 */
inline SimplicialComplex stanley_reisner(int n, const std::vector<SqfMonomial>& generators) {
    if (n < 1) throw invalid_input("stanley_reisner: need n >= 1");
    require_enumerable(n, "stanley_reisner");
    std::vector<VertexMask> gens;
    gens.reserve(generators.size());
    for (const SqfMonomial& g : generators) {
        if (g.n != n || (n < kMaxVariables && (g.support >> n) != 0))
            throw invalid_input("stanley_reisner: generator outside [1, n]");
        gens.push_back(g.support);
    }
    const VertexMask top = (n == kMaxVariables) ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
    const std::size_t count = std::size_t{1} << n;
    std::vector<char> face(count);
    for (std::size_t s = 0; s < count; ++s) {
        bool ok = true;
        for (VertexMask g : gens)
            if ((s & g) == g) { ok = false; break; }
        face[s] = ok;
    }
    std::vector<VertexMask> facets;
    for (std::size_t s = 0; s < count; ++s) {
        if (!face[s]) continue;
        bool maximal = true;
        VertexMask rest = top & ~s;
        while (rest) {
            VertexMask bit = rest & (~rest + 1);
            if (face[s | bit]) { maximal = false; break; }
            rest &= rest - 1;
        }
        if (maximal) facets.push_back(static_cast<VertexMask>(s));
    }
    return SimplicialComplex::from_facets(n, facets);
}

inline SimplicialComplex stanley_reisner(const LexsegmentInstance& inst) {
    return stanley_reisner(inst.n, lexsegment(inst));
}

/**
 * Link of a face F: all G disjoint from F with G u F a face. Facets are
 * exactly { M \ F : M facet of c, M contains F }, already inclusion-
 * incomparable by maximality of the M.
 */
inline SimplicialComplex link(const SimplicialComplex& c, Face f) {
    if (!c.has_face(f)) throw invalid_input("link: not a face of the complex");
    if (f.empty()) return c;
    std::vector<VertexMask> out;
    for (VertexMask m : c.facets())
        if ((m & f.bits) == f.bits) out.push_back(m & ~f.bits);
    return SimplicialComplex::from_facets(c.n(), out);
}

/**
 * Join of complexes on disjoint vertex label sets; facets are all unions
 * of one facet from each factor. The irrelevant complex is the identity,
 * the void complex is absorbing.
 */
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    int n = std::max(a.n(), b.n());
    if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(n);
    if (a.used_vertices() & b.used_vertices())
        throw invalid_input("join: factors share vertex labels");
    std::vector<VertexMask> out;
    out.reserve(a.facets().size() * b.facets().size());
    for (VertexMask fa : a.facets())
        for (VertexMask fb : b.facets()) out.push_back(fa | fb);
    return SimplicialComplex::from_facets(n, out);
}

/**
 * Relabels vertices through an injective map (1-based, indexed by old
 * vertex). Entries for unused vertices may be 0; used vertices must map
 * into [1, new_n].
 */
inline SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<int>& map,
                                 int new_n) {
    if (c.is_void()) return SimplicialComplex::void_complex(new_n);
    auto image_of = [&](int v) {
        if (v > static_cast<int>(map.size()) || map[static_cast<std::size_t>(v) - 1] < 1)
            throw invalid_input("relabel: no image for vertex " + std::to_string(v));
        return map[static_cast<std::size_t>(v) - 1];
    };
    std::vector<int> targets;
    for (int v : vertices_of(c.used_vertices())) targets.push_back(image_of(v));
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
        throw invalid_input("relabel: map is not injective on the vertices used");
    std::vector<VertexMask> out;
    for (VertexMask f : c.facets()) {
        std::vector<int> vs;
        for (int v : vertices_of(f)) vs.push_back(image_of(v));
        out.push_back(mask_of(vs, new_n));
    }
    return SimplicialComplex::from_facets(new_n, out);
}

/** Shift labels by a constant offset (used to move Delta2 in and out of [m]). */
inline SimplicialComplex shift_labels(const SimplicialComplex& c, int offset, int new_n) {
    std::vector<int> map(static_cast<std::size_t>(c.n()), 0);
    for (int v = 1; v <= c.n(); ++v) map[static_cast<std::size_t>(v) - 1] = v + offset;
    return relabel(c, map, new_n);
}

/** True iff all facets share one cardinality; the irrelevant complex is pure. */
inline bool is_pure(const SimplicialComplex& c) {
    if (c.is_void()) throw invalid_input("is_pure: undefined for the void complex");
    int size = popcount(c.facets().front());
    for (VertexMask f : c.facets())
        if (popcount(f) != size) return false;
    return true;
}

/**
 * Graph connectivity of the 1-skeleton on the vertices the complex
 * actually uses. A single vertex is connected; two or more isolated
 * components are not. Undefined (error) for void and irrelevant.
 */
inline bool is_connected(const SimplicialComplex& c) {
    if (!c.is_proper())
        throw invalid_input("is_connected: undefined without at least one vertex");
    std::vector<int> verts = vertices_of(c.used_vertices());
    std::map<int, int> comp;
    for (std::size_t k = 0; k < verts.size(); ++k) comp[verts[k]] = static_cast<int>(k);
    // union along each facet: all of a facet's vertices are pairwise joined
    std::vector<int> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (VertexMask f : c.facets()) {
        std::vector<int> vs = vertices_of(f);
        for (std::size_t k = 1; k < vs.size(); ++k) {
            int a = find(comp[vs[k - 1]]), b = find(comp[vs[k]]);
            if (a != b) parent[static_cast<std::size_t>(a)] = b;
        }
    }
    int root = find(0);
    for (std::size_t k = 1; k < verts.size(); ++k)
        if (find(static_cast<int>(k)) != root) return false;
    return true;
}

/** f-vector (f_{-1}, f_0, ..., f_dim); the void complex yields (). */
inline std::vector<long> f_vector(const SimplicialComplex& c) {
    if (c.is_void()) return {};
    std::vector<long> f;
    for (const auto& level : c.faces_by_size()) f.push_back(static_cast<long>(level.size()));
    return f;
}

/**
 * Inclusion-minimal non-faces over the full ground set [n] (vertices the
 * complex does not use appear as singleton non-faces).
 */
inline std::vector<VertexMask> minimal_non_faces(const SimplicialComplex& c) {
    if (c.is_void()) throw invalid_input("minimal_non_faces: undefined for the void complex");
    require_enumerable(c.n(), "minimal_non_faces");
    const std::size_t count = std::size_t{1} << c.n();
    std::vector<VertexMask> out;
    for (std::size_t s = 1; s < count; ++s) {
        Face f{static_cast<VertexMask>(s)};
        if (c.has_face(f)) continue;
        bool minimal = true;
        VertexMask rest = f.bits;
        while (rest) {
            VertexMask bit = rest & (~rest + 1);
            if (!c.has_face(Face{f.bits & ~bit})) { minimal = false; break; }
            rest &= rest - 1;
        }
        if (minimal) out.push_back(f.bits);
    }
    std::sort(out.begin(), out.end(), facet_less);
    return out;
}

/** True iff every minimal non-face has at most 2 vertices. */
inline bool is_flag(const SimplicialComplex& c) {
    if (c.is_void()) throw invalid_input("is_flag: undefined for the void complex");
    for (VertexMask m : minimal_non_faces(c))
        if (popcount(m) > 2) return false;
    return true;
}

}  // namespace lexcm

#endif  // LEXCM_COMPLEX_HPP
