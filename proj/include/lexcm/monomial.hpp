/**
 * Squarefree monomials of fixed degree under the lexicographic order
 * induced by x1 > x2 > ... > xn, and lexsegment set construction.
 */

#ifndef LEXCM_MONOMIAL_HPP
#define LEXCM_MONOMIAL_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lexcm {

/** Error type for precondition violations; the CLI maps it to exit code 2. */
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/** Vertex subsets of [n] as bitmasks, vertex i <-> bit (i-1). */
using VertexMask = std::uint64_t;

inline constexpr int kMaxVariables = 64;

inline int popcount(VertexMask m) { return std::popcount(m); }

inline VertexMask mask_of(const std::vector<int>& vertices, int n) {
    if (n < 0 || n > kMaxVariables)
        throw invalid_input("variable count must be in [0, 64], got " + std::to_string(n));
    VertexMask m = 0;
    for (int v : vertices) {
        if (v < 1 || v > n)
            throw invalid_input("vertex " + std::to_string(v) + " out of range [1, " +
                                std::to_string(n) + "]");
        VertexMask bit = VertexMask{1} << (v - 1);
        if (m & bit) throw invalid_input("duplicate vertex " + std::to_string(v));
        m |= bit;
    }
    return m;
}

inline std::vector<int> vertices_of(VertexMask m) {
    std::vector<int> out;
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

/**
 * A squarefree monomial in n variables, identified with its support:
 * a strictly increasing set of vertex indices in [1, n].
 */
struct SqfMonomial {
    int n = 0;
    VertexMask support = 0;

    SqfMonomial() = default;

    SqfMonomial(int n_, VertexMask support_) : n(n_), support(support_) {
        if (n < 1 || n > kMaxVariables)
            throw invalid_input("variable count must be in [1, 64]");
        if (support == 0) throw invalid_input("squarefree monomial must have degree >= 1");
        if (n < kMaxVariables && (support >> n) != 0)
            throw invalid_input("monomial support exceeds [1, n]");
    }

    static SqfMonomial from_support(int n, const std::vector<int>& vertices) {
        std::vector<int> sorted = vertices;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 1; k < sorted.size(); ++k)
            if (sorted[k] == sorted[k - 1])
                throw invalid_input("monomial support has a repeated index");
        return SqfMonomial(n, mask_of(sorted, n));
    }

    int degree() const { return popcount(support); }

    std::vector<int> support_vector() const { return vertices_of(support); }

    /** First (smallest) variable index of the support. */
    int leading_index() const { return std::countr_zero(support) + 1; }

    bool operator==(const SqfMonomial& o) const { return n == o.n && support == o.support; }
};

/**
 * Lexicographic comparison with x1 > x2 > ... > xn: comparing supports
 * elementwise ascending, the monomial whose first differing entry is
 * smaller is the greater one. Returns greater/equal/less in monomial order.
 */
inline std::strong_ordering lex_compare(const SqfMonomial& a, const SqfMonomial& b) {
    if (a.n != b.n) throw invalid_input("lex_compare: mismatched variable counts");
    if (a.degree() != b.degree()) throw invalid_input("lex_compare: mismatched degrees");
    VertexMask x = a.support, y = b.support;
    while (x && y) {
        int ax = std::countr_zero(x), by = std::countr_zero(y);
        if (ax != by) return ax < by ? std::strong_ordering::greater : std::strong_ordering::less;
        x &= x - 1;
        y &= y - 1;
    }
    return std::strong_ordering::equal;
}

inline bool lex_geq(const SqfMonomial& a, const SqfMonomial& b) {
    return lex_compare(a, b) != std::strong_ordering::less;
}

/**
 * All squarefree monomials of degree d in n variables, lex-descending.
 * Descending monomial order coincides with ascending order of the
 * support sequences.
 */
inline std::vector<SqfMonomial> enumerate_md(int n, int d) {
    if (n < 1 || n > kMaxVariables) throw invalid_input("enumerate_md: n must be in [1, 64]");
    if (d < 1 || d > n) throw invalid_input("enumerate_md: need 1 <= d <= n");
    std::vector<SqfMonomial> out;
    std::vector<int> comb(d);
    for (int k = 0; k < d; ++k) comb[k] = k + 1;
    while (true) {
        out.push_back(SqfMonomial::from_support(n, comb));
        int k = d - 1;
        while (k >= 0 && comb[k] == n - (d - 1 - k)) --k;
        if (k < 0) break;
        ++comb[k];
        for (int j = k + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

/**
 * A lexsegment instance (n, d, u, v) with u >= v in M_d, d >= 2.
 * The leading index i is the first variable of u; it drives the join
 * decomposition Delta = (simplex on [i-1]) * Delta2.
 */
struct LexsegmentInstance {
    int n = 0;
    int d = 0;
    SqfMonomial u, v;

    LexsegmentInstance(int n_, SqfMonomial u_, SqfMonomial v_)
        : n(n_), d(u_.degree()), u(u_), v(v_) {
        if (u.n != n || v.n != n) throw invalid_input("instance: monomial/n mismatch");
        if (u.degree() != v.degree()) throw invalid_input("instance: deg(u) != deg(v)");
        if (d < 2) throw invalid_input("instance: degree must be >= 2");
        if (!lex_geq(u, v)) throw invalid_input("instance: u < v in lex order");
    }

    int leading_index() const { return u.leading_index(); }
};

/** The segment L(u, v) = { w in M_d : u >= w >= v }, lex-descending. */
inline std::vector<SqfMonomial> lexsegment(const LexsegmentInstance& inst) {
    std::vector<SqfMonomial> out;
    for (const SqfMonomial& w : enumerate_md(inst.n, inst.d))
        if (lex_geq(inst.u, w) && lex_geq(w, inst.v)) out.push_back(w);
    return out;
}

/** Parses "1,3" style comma-separated ascending indices. */
inline SqfMonomial parse_monomial(const std::string& text, int n) {
    std::vector<int> idx;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw invalid_input("malformed monomial component '" + tok + "'");
        }
        if (pos != tok.size()) throw invalid_input("malformed monomial component '" + tok + "'");
        idx.push_back(value);
    }
    if (idx.empty()) throw invalid_input("empty monomial");
    for (std::size_t k = 1; k < idx.size(); ++k)
        if (idx[k] <= idx[k - 1]) throw invalid_input("monomial indices must be strictly ascending");
    return SqfMonomial::from_support(n, idx);
}

inline std::string format_monomial(const SqfMonomial& m) {
    std::string out;
    for (int v : m.support_vector()) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

}  // namespace lexcm

#endif  // LEXCM_MONOMIAL_HPP
