#pragma once

/* Invariant theory of matrix groups acting on F2[x1..xn].
 *
 * Small matrices over GF(2) are bit-packed (one byte per row, n <= 8).
 * The degree-d action is built by recurrence: the image row of x_j * m' is
 * assembled from the image row of m' through per-variable scatter tables,
 * so a scan over degrees never re-substitutes from scratch. Row convention:
 * coordinate row r maps to r * R_d(g); the column matrix A = R^T is
 * multiplicative in g and equals g itself at degree 1.
 */

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_set>

#include "coho/f2alg.hpp"
#include "coho/gf2la.hpp"

namespace coho {

// ---- packed matrices over GF(2), n <= 8 ----

struct GF2Matrix {
    int n = 0;
    std::array<uint8_t, 8> r{};  // bit j of r[i] = entry (i, j)

    GF2Matrix() = default;
    explicit GF2Matrix(int dim) : n(dim) {
        if (dim < 1 || dim > 8) throw std::invalid_argument("GF2Matrix: dimension out of range");
    }
    static GF2Matrix identity(int dim) {
        GF2Matrix m(dim);
        for (int i = 0; i < dim; ++i) m.r[size_t(i)] = uint8_t(1u << i);
        return m;
    }
    bool get(int i, int j) const { return (r[size_t(i)] >> j) & 1u; }
    void set(int i, int j, bool v) {
        if (v)
            r[size_t(i)] |= uint8_t(1u << j);
        else
            r[size_t(i)] &= uint8_t(~(1u << j));
    }
    // row-major bit string, row 0 column 0 most significant; sorting by key
    // is lexicographic order on bit patterns
    uint64_t key() const {
        uint64_t k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) k = (k << 1) | uint64_t(get(i, j));
        return k;
    }
    int rank() const {
        std::array<uint8_t, 8> a = r;
        int rk = 0;
        for (int j = 0; j < n; ++j) {
            int p = -1;
            for (int i = rk; i < n; ++i)
                if ((a[size_t(i)] >> j) & 1u) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            std::swap(a[size_t(p)], a[size_t(rk)]);
            for (int i = 0; i < n; ++i)
                if (i != rk && ((a[size_t(i)] >> j) & 1u)) a[size_t(i)] ^= a[size_t(rk)];
            ++rk;
        }
        return rk;
    }
    bool operator==(const GF2Matrix&) const = default;
};

inline GF2Matrix mul(const GF2Matrix& a, const GF2Matrix& b) {
    if (a.n != b.n) throw std::invalid_argument("GF2Matrix mul: dimension mismatch");
    GF2Matrix c(a.n);
    for (int i = 0; i < a.n; ++i) {
        uint8_t acc = 0;
        for (int j = 0; j < a.n; ++j)
            if (a.get(i, j)) acc ^= b.r[size_t(j)];
        c.r[size_t(i)] = acc;
    }
    return c;
}

inline GF2Matrix inverse(const GF2Matrix& m) {
    std::array<uint16_t, 8> a{};  // low n bits: matrix; high bits: identity
    for (int i = 0; i < m.n; ++i) a[size_t(i)] = uint16_t(m.r[size_t(i)] | (1u << (m.n + i)));
    int rk = 0;
    for (int j = 0; j < m.n; ++j) {
        int p = -1;
        for (int i = rk; i < m.n; ++i)
            if ((a[size_t(i)] >> j) & 1u) {
                p = i;
                break;
            }
        if (p < 0) throw std::invalid_argument("GF2Matrix inverse: singular");
        std::swap(a[size_t(p)], a[size_t(rk)]);
        for (int i = 0; i < m.n; ++i)
            if (i != rk && ((a[size_t(i)] >> j) & 1u)) a[size_t(i)] ^= a[size_t(rk)];
        ++rk;
    }
    GF2Matrix inv(m.n);
    for (int i = 0; i < m.n; ++i) inv.r[size_t(i)] = uint8_t(a[size_t(i)] >> m.n);
    return inv;
}

inline uint64_t gl_order(int n) {
    uint64_t o = 1;
    for (int i = 0; i < n; ++i) o *= (uint64_t(1) << n) - (uint64_t(1) << i);
    return o;
}

// cycle permutation plus one transvection; closure is all of GL_n(2)
inline std::vector<GF2Matrix> standard_gl_generators(int n) {
    if (n == 1) return {GF2Matrix::identity(1)};
    GF2Matrix cyc(n);
    for (int j = 0; j < n; ++j) cyc.set((j + 1) % n, j, true);  // x_j -> x_{j+1 mod n}
    GF2Matrix tv = GF2Matrix::identity(n);
    tv.set(1, 0, true);  // x_1 -> x_1 + x_2
    return {cyc, tv};
}

// ---- groups ----

struct MatrixGroup {
    int n = 0;
    std::vector<GF2Matrix> generators;
    std::vector<GF2Matrix> elements;  // canonical (key-sorted) closure; empty if not enumerated
    uint64_t order = 0;               // 0 when not enumerated
};

inline MatrixGroup closure(const std::vector<GF2Matrix>& gens, size_t limit = size_t(1) << 22) {
    if (gens.empty()) throw std::invalid_argument("closure: no generators");
    int n = gens.front().n;
    for (auto& g : gens) {
        if (g.n != n) throw std::invalid_argument("closure: mixed dimensions");
        if (g.rank() != n) throw std::invalid_argument("closure: singular generator");
    }
    std::unordered_set<uint64_t> seen;
    std::vector<GF2Matrix> elems;
    std::queue<GF2Matrix> work;
    GF2Matrix id = GF2Matrix::identity(n);
    seen.insert(id.key());
    elems.push_back(id);
    work.push(id);
    while (!work.empty()) {
        GF2Matrix e = work.front();
        work.pop();
        for (auto& g : gens) {
            GF2Matrix p = mul(e, g);
            if (seen.insert(p.key()).second) {
                if (elems.size() >= limit) throw std::runtime_error("closure: size limit exceeded");
                elems.push_back(p);
                work.push(p);
            }
        }
    }
    std::sort(elems.begin(), elems.end(),
              [](const GF2Matrix& a, const GF2Matrix& b) { return a.key() < b.key(); });
    uint64_t order = elems.size();
    if (gl_order(n) % order != 0) throw std::logic_error("closure: order does not divide |GL_n(2)|");
    return {n, gens, std::move(elems), order};
}

// normal closure of every nontrivial conjugacy class is the whole group
inline bool is_simple(const MatrixGroup& g) {
    if (g.elements.empty()) throw std::invalid_argument("is_simple: group not enumerated");
    if (g.order <= 1) return false;
    std::unordered_set<uint64_t> all;
    for (auto& e : g.elements) all.insert(e.key());
    std::vector<GF2Matrix> invs;
    invs.reserve(g.elements.size());
    for (auto& e : g.elements) invs.push_back(inverse(e));
    std::unordered_set<uint64_t> visited;
    GF2Matrix id = GF2Matrix::identity(g.n);
    visited.insert(id.key());
    for (auto& e : g.elements) {
        if (visited.count(e.key())) continue;
        std::vector<GF2Matrix> cls;
        std::unordered_set<uint64_t> in_cls;
        for (size_t h = 0; h < g.elements.size(); ++h) {
            GF2Matrix c = mul(mul(g.elements[h], e), invs[h]);
            if (in_cls.insert(c.key()).second) cls.push_back(c);
        }
        for (auto& c : cls) visited.insert(c.key());
        // subgroup generated by the class
        std::unordered_set<uint64_t> sub;
        std::vector<GF2Matrix> work{id};
        sub.insert(id.key());
        while (!work.empty() && sub.size() < g.order) {
            GF2Matrix cur = work.back();
            work.pop_back();
            for (auto& c : cls) {
                GF2Matrix p = mul(cur, c);
                if (sub.insert(p.key()).second) work.push_back(p);
            }
        }
        if (sub.size() != g.order) return false;
    }
    return true;
}

// ---- group fixture files: "n k" then k blocks of n lines of n chars ----

inline void save_group_fixture(const std::filesystem::path& path, const MatrixGroup& g,
                               const std::string& comment = "") {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    if (!comment.empty()) os << "# " << comment << "\n";
    os << g.n << ' ' << g.generators.size() << '\n';
    for (auto& m : g.generators) {
        for (int i = 0; i < g.n; ++i) {
            for (int j = 0; j < g.n; ++j) os << (m.get(i, j) ? '1' : '0');
            os << '\n';
        }
    }
}

inline std::vector<GF2Matrix> load_group_fixture(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t ws = line.find_first_not_of(" \t");
        if (ws == std::string::npos || line[ws] == '#') continue;
        lines.push_back(line.substr(ws));
    }
    if (lines.empty()) throw std::runtime_error(path.string() + ": empty fixture");
    std::istringstream head(lines[0]);
    int n = 0, k = 0;
    if (!(head >> n >> k) || n < 1 || n > 8 || k < 1)
        throw std::runtime_error(path.string() + ": bad header line");
    if (lines.size() != size_t(1 + n * k))
        throw std::runtime_error(path.string() + ": expected " + std::to_string(n * k) +
                                 " matrix lines");
    std::vector<GF2Matrix> gens;
    size_t at = 1;
    for (int b = 0; b < k; ++b) {
        GF2Matrix m(n);
        for (int i = 0; i < n; ++i, ++at) {
            if (lines[at].size() != size_t(n))
                throw std::runtime_error(path.string() + ": bad row length");
            for (int j = 0; j < n; ++j) {
                char c = lines[at][size_t(j)];
                if (c != '0' && c != '1') throw std::runtime_error(path.string() + ": bad digit");
                m.set(i, j, c == '1');
            }
        }
        gens.push_back(m);
    }
    return gens;
}

// ---- degree-d action ----

class ActionScan {
  public:
    // DegreeBasis points into the owned AlgebraSpec, so the scan must not move
    ActionScan(const ActionScan&) = delete;
    ActionScan& operator=(const ActionScan&) = delete;

    ActionScan(int nvars, std::vector<GF2Matrix> gens)
        : alg_(make_poly_spec(nvars)), gens_(std::move(gens)), basis_(alg_, 1) {
        for (auto& g : gens_)
            if (g.n != nvars) throw std::invalid_argument("ActionScan: dimension mismatch");
        for (auto& g : gens_) {
            BitMatrix m(static_cast<size_t>(nvars), static_cast<size_t>(nvars));
            for (int j = 0; j < nvars; ++j)
                for (int i = 0; i < nvars; ++i)
                    if (g.get(i, j)) m.set(size_t(j), size_t(i));  // row j = image of x_j
            rows_.push_back(std::move(m));
        }
    }

    const AlgebraSpec& algebra() const { return alg_; }
    int degree() const { return d_; }
    const DegreeBasis& basis() const { return basis_; }
    const BitMatrix& row_action(size_t k) const { return rows_.at(k); }
    size_t ngens() const { return gens_.size(); }

    void advance() {
        DegreeBasis next(alg_, d_ + 1);
        int nv = alg_.gens.empty() ? 0 : int(alg_.ngens());
        // scatter[i][k] = index in next of basis_[k] * x_i
        std::vector<std::vector<size_t>> scatter(static_cast<size_t>(nv));
        for (int i = 0; i < nv; ++i) {
            scatter[size_t(i)].resize(basis_.size());
            for (size_t k = 0; k < basis_.size(); ++k) {
                Monomial m = basis_.monos[k];
                ++m.e[size_t(i)];
                ++m.deg;
                scatter[size_t(i)][k] = next.index_of(m);
            }
        }
        std::vector<BitMatrix> nrows;
        for (size_t gi = 0; gi < gens_.size(); ++gi) {
            const BitMatrix& old = rows_[gi];
            BitMatrix nm(next.size(), next.size());
            for (size_t t = 0; t < next.size(); ++t) {
                const Monomial& m = next.monos[t];
                size_t j = 0;
                while (m.e[j] == 0) ++j;
                Monomial rest = m;
                --rest.e[j];
                --rest.deg;
                size_t src = basis_.index_of(rest);
                for (int i = 0; i < nv; ++i) {
                    if (!gens_[gi].get(i, int(j))) continue;
                    const uint64_t* srow = old.row(src);
                    for (size_t w = 0; w < old.wpr; ++w) {
                        uint64_t bits = srow[w];
                        while (bits) {
                            size_t b = (w << 6) + size_t(std::countr_zero(bits));
                            bits &= bits - 1;
                            nm.flip(t, scatter[size_t(i)][b]);
                        }
                    }
                }
            }
            nrows.push_back(std::move(nm));
        }
        rows_ = std::move(nrows);
        basis_ = std::move(next);
        ++d_;
    }

    void advance_to(int d) {
        while (d_ < d) advance();
    }

    static AlgebraSpec make_poly_spec(int nvars) {
        std::vector<std::string> names;
        for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
        return AlgebraSpec::polynomial(names);
    }

  private:
    AlgebraSpec alg_;
    std::vector<GF2Matrix> gens_;
    int d_ = 1;
    DegreeBasis basis_;
    std::vector<BitMatrix> rows_;  // R_d per generator
};

// column convention: A(g) applied to coordinate columns; A(gh) = A(g)A(h),
// and A(g) at degree 1 is g itself
inline BitMatrix action_on_degree(const GF2Matrix& g, int d) {
    if (d < 1) throw std::invalid_argument("action_on_degree: degree must be positive");
    ActionScan scan(g.n, {g});
    scan.advance_to(d);
    return transpose(scan.row_action(0));
}

namespace detail {

// stacked (R^T - I) blocks over all generators at the scan's current degree
inline BitMatrix invariance_blocks(const ActionScan& scan) {
    size_t n = scan.basis().size();
    BitMatrix stacked(scan.ngens() * n, n);
    for (size_t k = 0; k < scan.ngens(); ++k) {
        BitMatrix a = transpose(scan.row_action(k));
        for (size_t i = 0; i < n; ++i) a.flip(i, i);
        for (size_t i = 0; i < n; ++i)
            for (size_t w = 0; w < a.wpr; ++w) stacked.row(k * n + i)[w] = a.row(i)[w];
    }
    return stacked;
}

}  // namespace detail

inline Subspace invariant_basis(const MatrixGroup& g, int d) {
    if (d < 1) throw std::invalid_argument("invariant_basis: degree must be positive");
    ActionScan scan(g.n, g.generators);
    scan.advance_to(d);
    return kernel(detail::invariance_blocks(scan));
}

// dims[d] for 0 <= d <= dmax; dims[0] = 1
inline std::vector<long long> invariant_dimensions(const MatrixGroup& g, int dmax) {
    std::vector<long long> dims{1};
    if (dmax == 0) return dims;
    ActionScan scan(g.n, g.generators);
    for (int d = 1; d <= dmax; ++d) {
        scan.advance_to(d);
        BitMatrix stacked = detail::invariance_blocks(scan);
        dims.push_back((long long)scan.basis().size() - (long long)rank_destructive(stacked));
    }
    return dims;
}

// the substitution x_j -> sum_i g[i][j] x_i as an algebra map
inline AlgebraMap matrix_map(const AlgebraSpec& alg, const GF2Matrix& g) {
    if (int(alg.ngens()) != g.n) throw std::invalid_argument("matrix_map: dimension mismatch");
    std::map<std::string, Element> images;
    for (int j = 0; j < g.n; ++j) {
        Element im;
        for (int i = 0; i < g.n; ++i)
            if (g.get(i, j)) im = add(alg, im, generator_element(alg, alg.gens[size_t(i)].name));
        images[alg.gens[size_t(j)].name] = im;
    }
    return AlgebraMap(alg, alg, std::move(images));
}

// ---- Dickson invariants ----

// coefficients of X^{2^i}, i = n-1..0, in X * prod_{v != 0} (X + l_v);
// degrees 2^n - 2^{n-1}, ..., 2^n - 1
inline std::vector<Element> dickson(int n) {
    if (n < 1) throw std::invalid_argument("dickson: n must be positive");
    AlgebraSpec alg = ActionScan::make_poly_spec(n);
    size_t deg = size_t(1) << n;  // degree of f in X
    // poly[k] = coefficient of X^k, built one linear factor at a time
    std::vector<Element> poly{one_element(alg)};
    for (uint64_t v = 0; v < (uint64_t(1) << n); ++v) {
        Element lv;
        for (int i = 0; i < n; ++i)
            if ((v >> i) & 1u) lv = add(alg, lv, generator_element(alg, alg.gens[size_t(i)].name));
        std::vector<Element> next(poly.size() + 1);
        for (size_t k = 0; k < poly.size(); ++k) {
            next[k] = add(alg, next[k], mul(alg, poly[k], lv));
            next[k + 1] = add(alg, next[k + 1], poly[k]);
        }
        poly = std::move(next);
    }
    std::vector<Element> out;
    std::vector<int> degrees;
    for (size_t k = 0; k <= deg; ++k) {
        bool expected = (k == deg) || (k && (k & (k - 1)) == 0);  // powers of two and the top
        if (!expected && !poly[k].is_zero())
            throw std::logic_error("dickson: unexpected coefficient at X^" + std::to_string(k));
    }
    if (!(poly[deg] == one_element(alg))) throw std::logic_error("dickson: top coefficient is not 1");
    for (int i = n - 1; i >= 0; --i) {
        out.push_back(poly[size_t(1) << i]);
        degrees.push_back(int(deg) - (1 << i));
    }
    // verify invariance under the GL generators, in coordinate form
    ActionScan scan(n, standard_gl_generators(n));
    for (size_t t = 0; t < out.size(); ++t) {
        scan.advance_to(degrees[t]);
        DegreeBasis b(alg, degrees[t]);
        BitVec v = vectorize(b, out[t]);
        for (size_t k = 0; k < scan.ngens(); ++k) {
            BitVec w(b.size());
            const BitMatrix& R = scan.row_action(k);
            for (size_t i = 0; i < b.size(); ++i)
                if (v.get(i))
                    for (size_t word = 0; word < R.wpr; ++word) w.w[word] ^= R.row(i)[word];
            if (!(w == v)) throw std::logic_error("dickson: output not invariant");
        }
    }
    return out;
}

// ---- symmetric orbit sums and restriction ----

inline Element perm_orbit_sum(const AlgebraSpec& alg, const Monomial& m) {
    for (auto& g : alg.gens)
        if (g.kind != GenKind::polynomial || g.degree != alg.gens.front().degree)
            throw std::invalid_argument("perm_orbit_sum: ambient must be equigraded polynomial");
    std::vector<int> e = m.e;
    std::sort(e.begin(), e.end());
    std::vector<Monomial> terms;
    do terms.push_back(make_monomial(alg, e));
    while (std::next_permutation(e.begin(), e.end()));
    return element_from_terms(std::move(terms));
}

inline AlgebraSpec sub_algebra(const AlgebraSpec& alg, const std::vector<std::string>& keep) {
    std::vector<GeneratorSpec> gens;
    for (auto& g : alg.gens)
        if (std::find(keep.begin(), keep.end(), g.name) != keep.end()) gens.push_back(g);
    if (gens.size() != keep.size())
        throw std::invalid_argument("sub_algebra: unknown generator in keep list");
    return AlgebraSpec(std::move(gens));
}

// substitute 0 for every generator outside keep; result lives in sub_algebra
inline Element restrict_to(const AlgebraSpec& alg, const Element& a,
                           const std::vector<std::string>& keep) {
    AlgebraSpec sub = sub_algebra(alg, keep);
    std::vector<size_t> kept_idx;
    for (auto& g : sub.gens) kept_idx.push_back(alg.index_of(g.name));
    std::vector<Monomial> terms;
    for (auto& m : a.terms) {
        bool dies = false;
        for (size_t i = 0; i < alg.ngens(); ++i) {
            if (m.e[i] == 0) continue;
            if (std::find(kept_idx.begin(), kept_idx.end(), i) == kept_idx.end()) {
                dies = true;
                break;
            }
        }
        if (dies) continue;
        std::vector<int> e;
        for (size_t i : kept_idx) e.push_back(m.e[i]);
        terms.push_back(make_monomial(sub, e));
    }
    return element_from_terms(std::move(terms));
}

// ---- named-class extraction ----

enum class Profile { A6, A7 };

struct NamedClass {
    int degree = 0;
    Element element;
    bool operator==(const NamedClass&) const = default;
};

using NamedClassTable = std::map<std::string, NamedClass>;

namespace detail {

// true if u precedes v reading coordinates from index 0
inline bool lex_less(const BitVec& u, const BitVec& v) {
    for (size_t k = 0; k < u.w.size(); ++k) {
        uint64_t diff = u.w[k] ^ v.w[k];
        if (diff) {
            size_t b = size_t(std::countr_zero(diff));
            return !((u.w[k] >> b) & 1u);
        }
    }
    return false;
}

// span of all products of the named classes with total degree exactly d
inline Subspace decomposable_span(const AlgebraSpec& alg, const DegreeBasis& basis,
                                  const std::vector<NamedClass>& classes, int d) {
    std::vector<BitVec> rows;
    std::vector<int> expo(classes.size(), 0);
    auto rec = [&](auto&& self, size_t at, int left, const Element& prod) -> void {
        if (left == 0) {
            bool proper = false;  // at least two factors, or one factor of lower degree
            int nz = 0, top = 0;
            for (size_t i = 0; i < classes.size(); ++i)
                if (expo[i]) {
                    nz += expo[i];
                    top = std::max(top, classes[i].degree);
                }
            proper = nz >= 2 || (nz == 1 && top < d);
            if (proper) rows.push_back(vectorize(basis, prod));
            return;
        }
        if (at == classes.size()) return;
        self(self, at + 1, left, prod);
        if (classes[at].degree <= left) {
            ++expo[at];
            self(self, at, left - classes[at].degree, mul(alg, prod, classes[at].element));
            --expo[at];
        }
    };
    rec(rec, 0, d, one_element(alg));
    if (rows.empty()) return Subspace(basis.size());
    BitMatrix m(rows.size(), basis.size());
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return Subspace::from_rows(std::move(m));
}

// enumerate the 2^dim combinations of the subspace basis
inline std::vector<BitVec> all_vectors(const Subspace& s) {
    if (s.dim() > 20) throw std::logic_error("all_vectors: subspace too large to enumerate");
    std::vector<BitVec> out;
    size_t total = size_t(1) << s.dim();
    for (size_t mask = 1; mask < total; ++mask) {
        BitVec v(s.ambient());
        for (size_t b = 0; b < s.dim(); ++b)
            if ((mask >> b) & 1u) v ^= s.basis.row_vec(b);
        out.push_back(std::move(v));
    }
    return out;
}

struct Extraction {
    const AlgebraSpec& alg;
    ActionScan scan;
    NamedClassTable table;
    std::vector<NamedClass> named;  // in extraction order

    Extraction(const MatrixGroup& g)
        : alg(static_alg(g.n)), scan(g.n, g.generators) {}

    static const AlgebraSpec& static_alg(int n) {
        static std::map<int, AlgebraSpec> cache;
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, ActionScan::make_poly_spec(n)).first;
        return it->second;
    }

    Subspace invariants_at(int d) {
        scan.advance_to(d);
        return kernel(invariance_blocks(scan));
    }

    void add(const std::string& name, int degree, Element e) {
        table[name] = NamedClass{degree, e};
        named.push_back(NamedClass{degree, std::move(e)});
    }

    // least new invariant of degree d outside the decomposables, optionally
    // preferring candidates whose restriction to {x1, x2} vanishes
    Element pick_generator(const std::string& name, int d, bool prefer_restriction_zero) {
        DegreeBasis basis(alg, d);
        Subspace inv = invariants_at(d);
        Subspace dec = decomposable_span(alg, basis, named, d);
        if (inv.dim() <= dec.dim())
            throw std::runtime_error("extract: no new generator at degree " + std::to_string(d) +
                                     " (invariant dim " + std::to_string(inv.dim()) +
                                     ", decomposable dim " + std::to_string(dec.dim()) + ")");
        const BitVec* best = nullptr;
        bool best_vanishes = false;
        std::vector<BitVec> cands = all_vectors(inv);
        std::vector<std::string> keep{"x1", "x2"};
        for (auto& v : cands) {
            if (dec.contains(v)) continue;
            bool vanishes = prefer_restriction_zero &&
                            restrict_to(alg, devectorize(basis, v), keep).is_zero();
            if (!best || (vanishes && !best_vanishes) ||
                (vanishes == best_vanishes && lex_less(v, *best))) {
                best = &v;
                best_vanishes = vanishes;
            }
        }
        Element e = devectorize(basis, *best);
        add(name, d, e);
        return e;
    }
};

}  // namespace detail

inline NamedClassTable extract_named_classes(const MatrixGroup& g, Profile profile,
                                             int degree_cap = 1 << 20) {
    if (g.n != 4) throw std::invalid_argument("extract_named_classes: expected a 4-dimensional group");
    detail::Extraction ex(g);
    std::vector<Element> d4 = dickson(4);
    const int ddeg[4] = {8, 12, 14, 15};

    if (profile == Profile::A6) {
        for (int d : {3, 5}) {
            Subspace inv = ex.invariants_at(d);
            if (inv.dim() != 1)
                throw std::runtime_error("extract: expected a unique invariant at degree " +
                                         std::to_string(d) + ", dimension is " +
                                         std::to_string(inv.dim()));
            DegreeBasis basis(ex.alg, d);
            ex.add(d == 3 ? "w3" : "g5", d, devectorize(basis, inv.basis.row_vec(0)));
        }
        ex.add("d8", 8, d4[0]);
        ex.add("d12", 12, d4[1]);
        // g9 solves d14 = g5 g9 + w3^2 d8 + w3^3 g5
        Subspace inv9 = ex.invariants_at(9);
        if (inv9.dim() != 2)
            throw std::runtime_error("extract: expected a 2-dimensional degree-9 space, got " +
                                     std::to_string(inv9.dim()));
        const Element& w3 = ex.table.at("w3").element;
        const Element& g5 = ex.table.at("g5").element;
        Element rhs = add(ex.alg, d4[2],
                          add(ex.alg, mul(ex.alg, power(ex.alg, w3, 2), d4[0]),
                              mul(ex.alg, power(ex.alg, w3, 3), g5)));
        DegreeBasis basis9(ex.alg, 9);
        std::vector<Element> solutions;
        for (auto& v : detail::all_vectors(inv9)) {
            Element cand = devectorize(basis9, v);
            if (mul(ex.alg, g5, cand) == rhs) solutions.push_back(cand);
        }
        if (solutions.size() != 1)
            throw std::runtime_error("extract: degree-9 relation has " +
                                     std::to_string(solutions.size()) + " solutions, expected 1");
        ex.add("g9", 9, solutions[0]);
        if (degree_cap >= 15) ex.pick_generator("b15", 15, false);
    } else {
        const char* dn[4] = {"d8", "d12", "d14", "d15"};
        for (int i = 0; i < 4; ++i) ex.add(dn[i], ddeg[i], d4[size_t(i)]);
        for (int d : {18, 20, 21, 24, 25, 27, 45}) {
            if (d > degree_cap) break;
            ex.pick_generator("x" + std::to_string(d), d, true);
        }
    }
    return ex.table;
}

// ---- named-class fixture: one "name degree element-text" line per class ----

inline void save_named_classes(const std::filesystem::path& path, const AlgebraSpec& alg,
                               const NamedClassTable& table) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    for (auto& [name, cls] : table)
        os << name << ' ' << cls.degree << ' ' << render(alg, cls.element) << '\n';
}

inline NamedClassTable load_named_classes(const std::filesystem::path& path,
                                          const AlgebraSpec& alg) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read " + path.string());
    NamedClassTable table;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t ws = line.find_first_not_of(" \t");
        if (ws == std::string::npos || line[ws] == '#') continue;
        std::istringstream ls(line);
        std::string name;
        int degree = 0;
        if (!(ls >> name >> degree)) throw std::runtime_error(path.string() + ": bad class line");
        std::string rest;
        std::getline(ls, rest);
        Element e = parse_element(alg, rest);
        auto hd = homogeneous_degree(e);
        if (!hd || *hd != degree)
            throw std::runtime_error(path.string() + ": element degree mismatch for " + name);
        table[name] = NamedClass{degree, std::move(e)};
    }
    return table;
}

// ---- discovery of A7 > A6 inside GL4(2) ----

struct AltGroups {
    MatrixGroup a7, a6;
    bool from_fixture = false;
};

inline std::string fixture_dir_from_env() {
    const char* v = std::getenv("COHO_FIXTURE_DIR");
    return v ? v : "";
}

namespace detail {

inline void verify_alt_pair(const MatrixGroup& a7, const MatrixGroup& a6) {
    if (a7.order != 2520) throw std::runtime_error("alternating fixture: first group has order " +
                                                   std::to_string(a7.order) + ", expected 2520");
    if (a6.order != 360) throw std::runtime_error("alternating fixture: second group has order " +
                                                  std::to_string(a6.order) + ", expected 360");
    std::unordered_set<uint64_t> big;
    for (auto& e : a7.elements) big.insert(e.key());
    for (auto& e : a6.elements)
        if (!big.count(e.key()))
            throw std::runtime_error("alternating fixture: second group not inside the first");
    if (!is_simple(a7)) throw std::runtime_error("alternating fixture: order-2520 group not simple");
    if (!is_simple(a6)) throw std::runtime_error("alternating fixture: order-360 group not simple");
    std::vector<long long> d3 = invariant_dimensions(a6, 3);
    if (d3[3] != 1)
        throw std::runtime_error("alternating fixture: degree-3 fixed space has dimension " +
                                 std::to_string(d3[3]) + ", expected 1");
}

}  // namespace detail

inline AltGroups find_alternating_subgroups(uint64_t seed,
                                            const std::string& fixture_dir = fixture_dir_from_env()) {
    namespace fs = std::filesystem;
    if (!fixture_dir.empty()) {
        fs::path p7 = fs::path(fixture_dir) / "a7.grp";
        fs::path p6 = fs::path(fixture_dir) / "a6.grp";
        if (fs::exists(p7) && fs::exists(p6)) {
            MatrixGroup a7 = closure(load_group_fixture(p7));
            MatrixGroup a6 = closure(load_group_fixture(p6));
            detail::verify_alt_pair(a7, a6);
            return {std::move(a7), std::move(a6), true};
        }
    }

    MatrixGroup gl = closure(standard_gl_generators(4));
    std::mt19937_64 rng(seed);
    auto random_pair_subgroup = [&](const std::vector<GF2Matrix>& pool,
                                    uint64_t target) -> std::optional<MatrixGroup> {
        const int budget = 20000;
        for (int t = 0; t < budget; ++t) {
            const GF2Matrix& a = pool[rng() % pool.size()];
            const GF2Matrix& b = pool[rng() % pool.size()];
            if (a == b) continue;
            MatrixGroup sub = closure({a, b}, size_t(gl.order) + 1);
            if (sub.order == target && is_simple(sub)) return sub;
        }
        return std::nullopt;
    };
    auto a7 = random_pair_subgroup(gl.elements, 2520);
    if (!a7)
        throw std::runtime_error("subgroup search: no simple order-2520 subgroup in 20000 pairs "
                                 "from seed " + std::to_string(seed));
    auto a6 = random_pair_subgroup(a7->elements, 360);
    if (!a6)
        throw std::runtime_error("subgroup search: no simple order-360 subgroup in 20000 pairs "
                                 "from seed " + std::to_string(seed));
    detail::verify_alt_pair(*a7, *a6);
    if (!fixture_dir.empty()) {
        fs::create_directories(fixture_dir);
        save_group_fixture(fs::path(fixture_dir) / "a7.grp", *a7,
                           "simple subgroup of GL4(2), order 2520, seed " + std::to_string(seed));
        save_group_fixture(fs::path(fixture_dir) / "a6.grp", *a6,
                           "simple subgroup of order 360 inside a7.grp, seed " + std::to_string(seed));
    }
    return {std::move(*a7), std::move(*a6), false};
}

}  // namespace coho
