/**
 * Reduced simplicial homology ranks over a field, by exact boundary-matrix
 * ranks: ordinary elimination for prime fields, fraction-free (Bareiss)
 * elimination over arbitrary-precision integers for the rationals.
 *
 * The chain complex is augmented: d_0 maps vertices onto the empty face,
 * so betti(-1) = 1 exactly for the irrelevant complex.
 */

#ifndef LEXCM_HOMOLOGY_HPP
#define LEXCM_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "lexcm/complex.hpp"
#include "lexcm/field.hpp"

namespace lexcm {

/** Dense integer matrix; boundary entries are in {-1, 0, 1}. */
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::int8_t> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::int8_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::int8_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/**
 * Matrix of the boundary map from i-dimensional to (i-1)-dimensional
 * faces, alternating-sign incidence; i = 0 gives the augmentation row.
 */
inline IntMatrix boundary_matrix(const SimplicialComplex& c, int i) {
    if (c.is_void()) throw invalid_input("boundary_matrix: void complex");
    int d = c.dim();
    if (i < -1 || i > d) throw invalid_input("boundary_matrix: index out of [-1, dim]");
    auto by_size = c.faces_by_size();
    auto level = [&](int k) -> const std::vector<VertexMask>& {
        static const std::vector<VertexMask> none;
        return (k >= 0 && k < static_cast<int>(by_size.size())) ? by_size[static_cast<std::size_t>(k)]
                                                                : none;
    };
    const auto& cols = level(i + 1);
    const auto& rows = level(i);
    IntMatrix m(rows.size(), cols.size());
    std::unordered_map<VertexMask, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
    for (std::size_t col = 0; col < cols.size(); ++col) {
        VertexMask s = cols[col];
        int sign = 1;
        VertexMask rest = s;
        while (rest) {
            VertexMask bit = rest & (~rest + 1);
            m.at(row_index.at(s & ~bit), col) = static_cast<std::int8_t>(sign);
            sign = -sign;
            rest &= rest - 1;
        }
    }
    return m;
}

inline long rank_mod_p(const IntMatrix& m, int p) {
    std::vector<std::vector<int>> a(m.rows, std::vector<int>(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) a[r][c] = ((m.at(r, c) % p) + p) % p;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t piv = rank;
        while (piv < m.rows && a[piv][c] == 0) ++piv;
        if (piv == m.rows) continue;
        std::swap(a[rank], a[piv]);
        // normalize pivot to 1 via Fermat inverse
        long inv = 1, base = a[rank][c], e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (std::size_t j = c; j < m.cols; ++j)
            a[rank][j] = static_cast<int>(static_cast<long>(a[rank][j]) * inv % p);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            long f = a[r][c];
            for (std::size_t j = c; j < m.cols; ++j)
                a[r][j] = static_cast<int>(((a[r][j] - f * a[rank][j]) % p + p) % p);
        }
        ++rank;
    }
    return static_cast<long>(rank);
}

/** Rank over the rationals by Bareiss fraction-free elimination. */
inline long rank_rational(const IntMatrix& m) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> a(m.rows, std::vector<cpp_int>(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) a[r][c] = m.at(r, c);
    cpp_int prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t piv = rank;
        while (piv < m.rows && a[piv][c] == 0) ++piv;
        if (piv == m.rows) continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            for (std::size_t j = c + 1; j < m.cols; ++j)
                a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return static_cast<long>(rank);
}

inline long matrix_rank(const IntMatrix& m, const FieldSpec& field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return field.kind == FieldSpec::Kind::rationals ? rank_rational(m) : rank_mod_p(m, field.p);
}

/** Reduced homology ranks betti(i), i = -1, 0, ..., dim. */
struct BettiVector {
    FieldSpec field;
    int dim = -1;
    std::vector<long> ranks;  // index i+1 holds betti(i)

    long rank(int i) const {
        if (i < -1 || i > dim) return 0;
        return ranks[static_cast<std::size_t>(i) + 1];
    }

    bool vanishes_below(int top) const {
        for (int i = -1; i < top; ++i)
            if (rank(i) != 0) return false;
        return true;
    }

    bool operator==(const BettiVector& o) const { return dim == o.dim && ranks == o.ranks; }
};

inline BettiVector reduced_betti(const SimplicialComplex& c, const FieldSpec& field) {
    if (c.is_void()) throw invalid_input("reduced_betti: void complex");
    BettiVector out;
    out.field = field;
    out.dim = c.dim();
    if (c.is_irrelevant()) {
        out.ranks = {1};
        return out;
    }
    auto by_size = c.faces_by_size();
    std::vector<long> f(static_cast<std::size_t>(out.dim) + 2);
    for (int i = -1; i <= out.dim; ++i)
        f[static_cast<std::size_t>(i + 1)] =
            static_cast<long>(by_size[static_cast<std::size_t>(i + 1)].size());
    std::vector<long> rank(static_cast<std::size_t>(out.dim) + 3, 0);
    for (int i = 0; i <= out.dim; ++i)
        rank[static_cast<std::size_t>(i + 1)] = matrix_rank(boundary_matrix(c, i), field);
    out.ranks.resize(static_cast<std::size_t>(out.dim) + 2);
    for (int i = -1; i <= out.dim; ++i)
        out.ranks[static_cast<std::size_t>(i + 1)] = f[static_cast<std::size_t>(i + 1)] -
                                                     rank[static_cast<std::size_t>(i + 1)] -
                                                     rank[static_cast<std::size_t>(i + 2)];
    return out;
}

/**
 * Reduced Euler identity: the alternating sums of betti numbers and of
 * face counts (both from i = -1 up) agree.
 */
inline bool euler_characteristic_check(const SimplicialComplex& c, const FieldSpec& field) {
    if (c.is_void()) throw invalid_input("euler_characteristic_check: void complex");
    BettiVector b = reduced_betti(c, field);
    std::vector<long> f = f_vector(c);
    long lhs = 0, rhs = 0;
    for (int i = -1; i <= b.dim; ++i) {
        long sign = (i % 2 == 0) ? 1 : -1;
        lhs += sign * b.rank(i);
        rhs += sign * f[static_cast<std::size_t>(i + 1)];
    }
    return lhs == rhs;
}

/** Exact integer check that consecutive boundary maps compose to zero. */
inline bool boundary_composition_is_zero(const SimplicialComplex& c) {
    if (c.is_void() || c.is_irrelevant()) return true;
    for (int i = 1; i <= c.dim(); ++i) {
        IntMatrix lo = boundary_matrix(c, i - 1);
        IntMatrix hi = boundary_matrix(c, i);
        for (std::size_t r = 0; r < lo.rows; ++r)
            for (std::size_t ccol = 0; ccol < hi.cols; ++ccol) {
                long acc = 0;
                for (std::size_t k = 0; k < hi.rows; ++k)
                    acc += static_cast<long>(lo.at(r, k)) * hi.at(k, ccol);
                if (acc != 0) return false;
            }
    }
    return true;
}

}  // namespace lexcm

#endif  // LEXCM_HOMOLOGY_HPP
