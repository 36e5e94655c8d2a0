#pragma once

/* Dense bit-packed linear algebra over GF(2).
 *
 * Rows are flat arrays of 64-bit words. Pivoting is always "first nonzero
 * column, first row that has it", so every result is deterministic.
 * Elimination sweeps use 8-column lookup tables (method of four Russians);
 * a plain reference elimination is kept for cross-checking.
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coho {

inline size_t words_for(size_t bits) { return (bits + 63) >> 6; }

struct BitVec {
    size_t n = 0;
    std::vector<uint64_t> w;

    BitVec() = default;
    explicit BitVec(size_t n_) : n(n_), w(words_for(n_), 0) {}

    bool get(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    void flip(size_t i) { w[i >> 6] ^= uint64_t(1) << (i & 63); }

    bool zero() const {
        for (uint64_t x : w)
            if (x) return false;
        return true;
    }
    void operator^=(const BitVec& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
    }
    long first_set() const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k]) return long(k << 6) + std::countr_zero(w[k]);
        return -1;
    }
    size_t popcount() const {
        size_t c = 0;
        for (uint64_t x : w) c += size_t(std::popcount(x));
        return c;
    }
    bool operator==(const BitVec&) const = default;
};

struct BitMatrix {
    size_t rows = 0, cols = 0, wpr = 0;
    std::vector<uint64_t> w;

    BitMatrix() = default;
    BitMatrix(size_t r, size_t c) : rows(r), cols(c), wpr(words_for(c)), w(r * wpr, 0) {}

    static BitMatrix identity(size_t n) {
        BitMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }

    uint64_t* row(size_t i) { return w.data() + i * wpr; }
    const uint64_t* row(size_t i) const { return w.data() + i * wpr; }

    bool get(size_t i, size_t j) const { return (row(i)[j >> 6] >> (j & 63)) & 1; }
    void set(size_t i, size_t j) { row(i)[j >> 6] |= uint64_t(1) << (j & 63); }
    void flip(size_t i, size_t j) { row(i)[j >> 6] ^= uint64_t(1) << (j & 63); }

    // dst ^= src, starting at word `from` (everything левее is known zero)
    void xor_row(size_t dst, size_t src, size_t from = 0) {
        uint64_t* d = row(dst);
        const uint64_t* s = row(src);
        for (size_t k = from; k < wpr; ++k) d[k] ^= s[k];
    }
    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        uint64_t *a = row(i), *b = row(j);
        for (size_t k = 0; k < wpr; ++k) std::swap(a[k], b[k]);
    }
    bool row_zero(size_t i) const {
        const uint64_t* r = row(i);
        for (size_t k = 0; k < wpr; ++k)
            if (r[k]) return false;
        return true;
    }
    long row_first_set(size_t i) const {
        const uint64_t* r = row(i);
        for (size_t k = 0; k < wpr; ++k)
            if (r[k]) return long(k << 6) + std::countr_zero(r[k]);
        return -1;
    }
    BitVec row_vec(size_t i) const {
        BitVec v(cols);
        const uint64_t* r = row(i);
        for (size_t k = 0; k < wpr; ++k) v.w[k] = r[k];
        return v;
    }
    void set_row(size_t i, const BitVec& v) {
        uint64_t* r = row(i);
        for (size_t k = 0; k < wpr; ++k) r[k] = v.w[k];
    }

    bool operator==(const BitMatrix&) const = default;

    std::string dump() const {
        std::string s;
        s.reserve(rows * (cols + 1));
        for (size_t i = 0; i < rows; ++i) {
            for (size_t j = 0; j < cols; ++j) s += get(i, j) ? '1' : '0';
            s += '\n';
        }
        return s;
    }
};

inline BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols != b.cols) throw std::invalid_argument("vstack: column mismatch");
    BitMatrix m(a.rows + b.rows, a.cols);
    std::copy(a.w.begin(), a.w.end(), m.w.begin());
    std::copy(b.w.begin(), b.w.end(), m.w.begin() + a.rows * m.wpr);
    return m;
}

/******** transpose (64x64 block swap) ********/

namespace detail {
// in-place transpose of a 64x64 bit block held as 64 words
inline void transpose64(uint64_t a[64]) {
    uint64_t m = 0x00000000FFFFFFFFull;
    for (unsigned j = 32; j != 0; j >>= 1, m ^= m << j) {
        for (unsigned k = 0; k < 64; k = (k + j + 1) & ~j) {
            uint64_t t = ((a[k] >> j) ^ a[k + j]) & m;
            a[k + j] ^= t;
            a[k] ^= t << j;
        }
    }
}
}  // namespace detail

inline BitMatrix transpose(const BitMatrix& m) {
    BitMatrix t(m.cols, m.rows);
    size_t rb = (m.rows + 63) >> 6, cb = (m.cols + 63) >> 6;
    uint64_t blk[64];
    for (size_t bi = 0; bi < rb; ++bi) {
        size_t rlim = std::min<size_t>(64, m.rows - (bi << 6));
        for (size_t bj = 0; bj < cb; ++bj) {
            for (size_t r = 0; r < rlim; ++r) blk[r] = m.row((bi << 6) + r)[bj];
            for (size_t r = rlim; r < 64; ++r) blk[r] = 0;
            detail::transpose64(blk);
            size_t clim = std::min<size_t>(64, m.cols - (bj << 6));
            for (size_t c = 0; c < clim; ++c)
                if (blk[c]) t.row((bj << 6) + c)[bi] = blk[c];
        }
    }
    return t;
}

inline BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mul: inner dimension mismatch");
    BitMatrix c(a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i) {
        const uint64_t* ar = a.row(i);
        uint64_t* cr = c.row(i);
        for (size_t k = 0; k < a.wpr; ++k) {
            uint64_t word = ar[k];
            while (word) {
                size_t j = (k << 6) + size_t(std::countr_zero(word));
                word &= word - 1;
                const uint64_t* br = b.row(j);
                for (size_t q = 0; q < b.wpr; ++q) cr[q] ^= br[q];
            }
        }
    }
    return c;
}

/******** elimination ********/

// Reference row reduction (no tables). Returns pivot columns.
inline std::vector<size_t> rref_plain(BitMatrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t i = r;
        while (i < m.rows && !m.get(i, c)) ++i;
        if (i == m.rows) continue;
        m.swap_rows(r, i);
        for (size_t k = 0; k < m.rows; ++k)
            if (k != r && m.get(k, c)) m.xor_row(k, r, c >> 6);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Forward echelon with 8-column lookup tables. Rows [0, rank) end up as the
// pivot rows in pivot-column order; entries above pivots are NOT cleared.
// Returns pivot columns (ascending).
//
// Per column block: a row-major search reduces candidate rows against the
// block pivots found so far and promotes any row that keeps a bit inside the
// block. If all block columns acquire pivots early, the untouched rows are
// swept with one XOR each via a 2^np combination table; otherwise the search
// itself has already reduced every row.
inline std::vector<size_t> echelon_m4ri(BitMatrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    std::vector<uint64_t> table;
    for (size_t c0 = 0; c0 < m.cols && r < m.rows; c0 += 8) {
        size_t cb = std::min<size_t>(8, m.cols - c0);
        size_t from = c0 >> 6, width = m.wpr - from;
        std::vector<std::pair<size_t, size_t>> found;  // (pivot col, row)
        size_t scanned = r;
        for (size_t i = r; i < m.rows && found.size() < cb; ++i) {
            for (auto& [pc, pr] : found)
                if (m.get(i, pc)) m.xor_row(i, pr, from);
            for (size_t c = c0; c < c0 + cb; ++c)
                if (m.get(i, c)) {
                    found.push_back({c, i});
                    break;
                }
            scanned = i + 1;
        }
        size_t np = found.size();
        if (np == 0) continue;
        // order the block pivot rows by pivot column at positions r..r+np-1
        std::sort(found.begin(), found.end());
        for (size_t k = 0; k < np; ++k) {
            size_t dst = r + k, src = found[k].second;
            if (src != dst) {
                m.swap_rows(src, dst);
                for (size_t j = k + 1; j < np; ++j)
                    if (found[j].second == dst) found[j].second = src;
            }
            found[k].second = dst;
        }
        // mutual reduction: each pivot row becomes an indicator on the block
        // pivot columns, which the combination table relies on
        for (size_t k = 0; k < np; ++k)
            for (size_t j = 0; j < np; ++j)
                if (j != k && m.get(r + j, found[k].first)) m.xor_row(r + j, r + k, from);
        if (scanned < m.rows) {
            table.assign((size_t(1) << np) * width, 0);
            for (size_t g = 1; g < (size_t(1) << np); ++g) {
                size_t prev = g & (g - 1);
                size_t bit = size_t(std::countr_zero(g));
                uint64_t* dst = table.data() + g * width;
                const uint64_t* base = table.data() + prev * width;
                const uint64_t* pr = m.row(r + bit) + from;
                for (size_t k = 0; k < width; ++k) dst[k] = base[k] ^ pr[k];
            }
            for (size_t i = scanned; i < m.rows; ++i) {
                size_t idx = 0;
                for (size_t t = 0; t < np; ++t)
                    idx |= size_t(m.get(i, found[t].first)) << t;
                if (!idx) continue;
                uint64_t* d = m.row(i) + from;
                const uint64_t* s = table.data() + idx * width;
                for (size_t k = 0; k < width; ++k) d[k] ^= s[k];
            }
        }
        for (auto& [c, row] : found) pivots.push_back(c);
        r += np;
    }
    return pivots;
}

// Full reduced row-echelon form (tables for the forward phase). Returns pivots.
inline std::vector<size_t> rref_inplace(BitMatrix& m) {
    std::vector<size_t> pivots = echelon_m4ri(m);
    // back-substitution: the forward sweep already clears above inside each
    // block, so only entries above in earlier rows remain
    for (size_t p = pivots.size(); p-- > 0;) {
        size_t c = pivots[p];
        for (size_t i = 0; i < p; ++i)
            if (m.get(i, c)) m.xor_row(i, p, c >> 6);
    }
    return pivots;
}

inline size_t rank_destructive(BitMatrix& m) { return echelon_m4ri(m).size(); }

inline std::pair<size_t, BitMatrix> rref(BitMatrix m) {
    auto p = rref_inplace(m);
    return {p.size(), std::move(m)};
}

/******** subspaces ********/

// Row space with a canonical (RREF, no zero rows) basis.
struct Subspace {
    BitMatrix basis;             // RREF, dim() rows
    std::vector<size_t> pivots;  // strictly increasing, one per basis row

    Subspace() = default;
    explicit Subspace(size_t ambient) : basis(0, ambient) {}

    size_t dim() const { return basis.rows; }
    size_t ambient() const { return basis.cols; }

    static Subspace full(size_t n) { return from_rows(BitMatrix::identity(n)); }

    static Subspace from_rows(BitMatrix m) {
        auto piv = rref_inplace(m);
        Subspace s;
        s.basis = BitMatrix(piv.size(), m.cols);
        for (size_t i = 0; i < piv.size(); ++i)
            std::copy(m.row(i), m.row(i) + m.wpr, s.basis.row(i));
        s.pivots = std::move(piv);
        return s;
    }

    // reduce v against the basis; returns true if v was in the subspace
    // (v becomes the canonical residue). coords, if given, receives the
    // basis-row combination used.
    bool reduce(BitVec& v, BitVec* coords = nullptr) const {
        if (coords) *coords = BitVec(dim());
        for (size_t i = 0; i < dim(); ++i)
            if (v.get(pivots[i])) {
                const uint64_t* b = basis.row(i);
                for (size_t k = 0; k < basis.wpr; ++k) v.w[k] ^= b[k];
                if (coords) coords->set(i);
            }
        return v.zero();
    }
    bool contains(const BitVec& v) const {
        BitVec t = v;
        return reduce(t);
    }
    bool operator==(const Subspace& o) const { return basis == o.basis; }
};

inline Subspace kernel(const BitMatrix& m) {
    BitMatrix r = m;
    auto piv = rref_inplace(r);
    std::vector<char> is_pivot(m.cols, 0);
    for (size_t c : piv) is_pivot[c] = 1;
    size_t k = m.cols - piv.size();
    BitMatrix basis(k, m.cols);
    size_t out = 0;
    for (size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        basis.set(out, c);
        for (size_t i = 0; i < piv.size(); ++i)
            if (r.get(i, c)) basis.set(out, piv[i]);
        ++out;
    }
    return Subspace::from_rows(std::move(basis));
}

inline Subspace row_space(const BitMatrix& m) { return Subspace::from_rows(m); }

inline Subspace join(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("join: ambient mismatch");
    return Subspace::from_rows(vstack(a.basis, b.basis));
}

// Zassenhaus: RREF of [A|A] stacked on [B|0]; rows with zero left half carry
// an intersection basis in the right half.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
    size_t n = a.ambient();
    BitMatrix z(a.dim() + b.dim(), 2 * n);
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < n; ++j)
            if (a.basis.get(i, j)) {
                z.set(i, j);
                z.set(i, n + j);
            }
    for (size_t i = 0; i < b.dim(); ++i)
        for (size_t j = 0; j < n; ++j)
            if (b.basis.get(i, j)) z.set(a.dim() + i, j);
    auto piv = rref_inplace(z);
    std::vector<BitVec> keep;
    for (size_t i = 0; i < piv.size(); ++i)
        if (piv[i] >= n) {
            BitVec v(n);
            for (size_t j = 0; j < n; ++j)
                if (z.get(i, n + j)) v.set(j);
            keep.push_back(std::move(v));
        }
    BitMatrix basis(keep.size(), n);
    for (size_t i = 0; i < keep.size(); ++i) basis.set_row(i, keep[i]);
    return Subspace::from_rows(std::move(basis));
}

// dim ker(g) - rank(f), after checking g*f == 0 (column-vector convention:
// f then g). Throws with the offending column index of f otherwise.
inline size_t homology_dim(const BitMatrix& f, const BitMatrix& g) {
    if (g.cols != f.rows) throw std::invalid_argument("homology_dim: dimension mismatch");
    BitMatrix gf = mul(g, f);
    for (size_t j = 0; j < gf.cols; ++j)
        for (size_t i = 0; i < gf.rows; ++i)
            if (gf.get(i, j))
                throw std::invalid_argument("homology_dim: g*f != 0 at column " + std::to_string(j));
    BitMatrix fc = f;
    size_t rank_f = rank_destructive(fc);
    size_t k = kernel(g).dim();
    if (rank_f > k) throw std::logic_error("homology_dim: rank(f) exceeds dim ker(g)");
    return k - rank_f;
}

}  // namespace coho
