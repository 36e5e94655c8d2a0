#pragma once

/* Graded-commutative algebras over F2 with polynomial and exterior
 * (square-zero) generators.
 *
 * An Element is a canonically ordered set of monomials: every monomial
 * present has coefficient 1, absence means 0. Term order is graded-lex:
 * lower total degree first, then lexicographically larger exponent vector
 * first (so "x1^2*x2" prints before "x3^3"). The declared generator order
 * is the tie-break order and never changes after construction.
 */

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coho/gf2la.hpp"

namespace coho {

enum class GenKind { polynomial, exterior };

struct GeneratorSpec {
    std::string name;
    int degree = 1;
    GenKind kind = GenKind::polynomial;
};

struct AlgebraSpec {
    std::vector<GeneratorSpec> gens;

    AlgebraSpec() = default;
    explicit AlgebraSpec(std::vector<GeneratorSpec> g) : gens(std::move(g)) {
        for (size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].degree < 1) throw std::invalid_argument("generator degree must be >= 1");
            for (size_t j = i + 1; j < gens.size(); ++j)
                if (gens[i].name == gens[j].name)
                    throw std::invalid_argument("duplicate generator name: " + gens[i].name);
        }
    }

    size_t ngens() const { return gens.size(); }
    long index_of(const std::string& name) const {
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == name) return long(i);
        return -1;
    }
    bool operator==(const AlgebraSpec&) const = default;

    // F2[x1..xn], all generators of degree 1
    static AlgebraSpec polynomial(const std::vector<std::string>& names, int degree = 1) {
        std::vector<GeneratorSpec> g;
        for (auto& n : names) g.push_back({n, degree, GenKind::polynomial});
        return AlgebraSpec(std::move(g));
    }
};

struct Monomial {
    std::vector<int> e;  // one exponent per generator
    int deg = 0;         // cached total degree

    bool operator==(const Monomial&) const = default;
};

// graded-lex strict order: degree first, then larger exponent vector first
inline bool term_before(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.e > b.e;
}

inline Monomial make_monomial(const AlgebraSpec& alg, std::vector<int> exps) {
    if (exps.size() != alg.ngens()) throw std::invalid_argument("exponent count mismatch");
    Monomial m{std::move(exps), 0};
    for (size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] < 0) throw std::invalid_argument("negative exponent");
        if (alg.gens[i].kind == GenKind::exterior && m.e[i] > 1)
            throw std::invalid_argument("exterior exponent exceeds 1: " + alg.gens[i].name);
        m.deg += m.e[i] * alg.gens[i].degree;
    }
    return m;
}

inline Monomial unit_monomial(const AlgebraSpec& alg) {
    return Monomial{std::vector<int>(alg.ngens(), 0), 0};
}

struct Element {
    std::vector<Monomial> terms;  // sorted by term_before, no duplicates

    bool is_zero() const { return terms.empty(); }
    bool operator==(const Element&) const = default;
};

namespace detail {
// sort and cancel equal pairs (characteristic 2)
inline void canonicalize(std::vector<Monomial>& v) {
    std::sort(v.begin(), v.end(), term_before);
    std::vector<Monomial> out;
    out.reserve(v.size());
    for (size_t i = 0; i < v.size();) {
        size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if ((j - i) & 1) out.push_back(std::move(v[i]));
        i = j;
    }
    v = std::move(out);
}
}  // namespace detail

inline Element element_from_terms(std::vector<Monomial> terms) {
    detail::canonicalize(terms);
    return Element{std::move(terms)};
}

inline Element zero_element() { return Element{}; }

inline Element one_element(const AlgebraSpec& alg) { return Element{{unit_monomial(alg)}}; }

inline Element generator_element(const AlgebraSpec& alg, const std::string& name) {
    long i = alg.index_of(name);
    if (i < 0) throw std::invalid_argument("unknown generator: " + name);
    std::vector<int> e(alg.ngens(), 0);
    e[size_t(i)] = 1;
    return Element{{make_monomial(alg, std::move(e))}};
}

inline void check_over(const AlgebraSpec& alg, const Element& a) {
    for (auto& m : a.terms)
        if (m.e.size() != alg.ngens())
            throw std::invalid_argument("element does not belong to this algebra");
}

inline Element add(const AlgebraSpec& alg, const Element& a, const Element& b) {
    check_over(alg, a);
    check_over(alg, b);
    std::vector<Monomial> out;
    out.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;  // symmetric difference of two sorted term lists
    while (i < a.terms.size() && j < b.terms.size()) {
        if (a.terms[i] == b.terms[j]) {
            ++i;
            ++j;
        } else if (term_before(a.terms[i], b.terms[j]))
            out.push_back(a.terms[i++]);
        else
            out.push_back(b.terms[j++]);
    }
    out.insert(out.end(), a.terms.begin() + long(i), a.terms.end());
    out.insert(out.end(), b.terms.begin() + long(j), b.terms.end());
    return Element{std::move(out)};
}

// product of two monomials; nullopt when an exterior exponent would exceed 1
inline std::optional<Monomial> mono_mul(const AlgebraSpec& alg, const Monomial& a,
                                        const Monomial& b) {
    Monomial m{a.e, a.deg + b.deg};
    for (size_t k = 0; k < m.e.size(); ++k) {
        m.e[k] += b.e[k];
        if (m.e[k] > 1 && alg.gens[k].kind == GenKind::exterior) return std::nullopt;
    }
    return m;
}

// trunc >= 0 discards all product terms of degree > trunc
inline Element mul(const AlgebraSpec& alg, const Element& a, const Element& b, int trunc = -1) {
    check_over(alg, a);
    check_over(alg, b);
    std::vector<Monomial> out;
    out.reserve(a.terms.size() * b.terms.size());
    for (auto& ma : a.terms)
        for (auto& mb : b.terms) {
            if (trunc >= 0 && ma.deg + mb.deg > trunc) continue;
            if (auto m = mono_mul(alg, ma, mb)) out.push_back(std::move(*m));
        }
    detail::canonicalize(out);
    return Element{std::move(out)};
}

inline Element power(const AlgebraSpec& alg, const Element& a, int k, int trunc = -1) {
    Element r = one_element(alg);
    for (int i = 0; i < k; ++i) r = mul(alg, r, a, trunc);
    return r;
}

// total degree if homogeneous (0 element counts as homogeneous of any degree)
inline std::optional<int> homogeneous_degree(const Element& a) {
    if (a.terms.empty()) return std::nullopt;
    int d = a.terms.front().deg;
    for (auto& m : a.terms)
        if (m.deg != d) return std::nullopt;
    return d;
}

inline Element component(const Element& a, int d) {
    std::vector<Monomial> out;
    for (auto& m : a.terms)
        if (m.deg == d) out.push_back(m);
    return Element{std::move(out)};
}

/******** degree bases ********/

namespace detail {
inline void enumerate_degree(const AlgebraSpec& alg, size_t gi, int remaining,
                             std::vector<int>& cur, std::vector<Monomial>& out) {
    if (gi == alg.ngens()) {
        if (remaining == 0) {
            Monomial m{cur, 0};
            for (size_t k = 0; k < cur.size(); ++k) m.deg += cur[k] * alg.gens[k].degree;
            out.push_back(std::move(m));
        }
        return;
    }
    int gd = alg.gens[gi].degree;
    int maxe = remaining / gd;
    if (alg.gens[gi].kind == GenKind::exterior) maxe = std::min(maxe, 1);
    for (int e = maxe; e >= 0; --e) {  // descending: larger exponents first
        cur[gi] = e;
        enumerate_degree(alg, gi + 1, remaining - e * gd, cur, out);
    }
    cur[gi] = 0;
}
}  // namespace detail

// all monomials of total degree d in graded-lex order
inline std::vector<Monomial> monomial_basis(const AlgebraSpec& alg, int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    std::vector<Monomial> out;
    std::vector<int> cur(alg.ngens(), 0);
    detail::enumerate_degree(alg, 0, d, cur, out);
    return out;
}

// a degree slice with index lookups (binary search over the sorted basis)
struct DegreeBasis {
    const AlgebraSpec* alg = nullptr;
    int degree = 0;
    std::vector<Monomial> monos;

    DegreeBasis() = default;
    DegreeBasis(const AlgebraSpec& a, int d) : alg(&a), degree(d), monos(monomial_basis(a, d)) {}

    size_t size() const { return monos.size(); }

    long index_of(const Monomial& m) const {
        auto it = std::lower_bound(monos.begin(), monos.end(), m, term_before);
        if (it == monos.end() || !(*it == m)) return -1;
        return it - monos.begin();
    }
};

inline BitVec vectorize(const DegreeBasis& basis, const Element& a) {
    BitVec v(basis.size());
    for (auto& m : a.terms) {
        if (m.deg != basis.degree) throw std::invalid_argument("vectorize: inhomogeneous element");
        long i = basis.index_of(m);
        if (i < 0) throw std::invalid_argument("vectorize: monomial outside basis");
        v.set(size_t(i));
    }
    return v;
}

inline Element devectorize(const DegreeBasis& basis, const BitVec& v) {
    std::vector<Monomial> terms;
    for (size_t i = 0; i < basis.size(); ++i)
        if (v.get(i)) terms.push_back(basis.monos[i]);
    return Element{std::move(terms)};  // basis order is term order already
}

inline BitVec vectorize(const AlgebraSpec& alg, const Element& a, int d) {
    return vectorize(DegreeBasis(alg, d), a);
}

inline Element devectorize(const AlgebraSpec& alg, const BitVec& v, int d) {
    return devectorize(DegreeBasis(alg, d), v);
}

/******** homomorphisms ********/

struct AlgebraMap {
    AlgebraSpec source, target;
    std::map<std::string, Element> images;

    AlgebraMap(AlgebraSpec src, AlgebraSpec tgt, std::map<std::string, Element> img)
        : source(std::move(src)), target(std::move(tgt)), images(std::move(img)) {
        for (auto& g : source.gens) {
            auto it = images.find(g.name);
            if (it == images.end())
                throw std::invalid_argument("no image for generator " + g.name);
            const Element& im = it->second;
            check_over(target, im);
            if (!im.is_zero()) {
                auto d = homogeneous_degree(im);
                if (!d || *d != g.degree)
                    throw std::invalid_argument("image of " + g.name +
                                                " is not homogeneous of its degree");
            }
            if (g.kind == GenKind::exterior && !mul(target, im, im).is_zero())
                throw std::invalid_argument("image of exterior generator " + g.name +
                                            " does not square to zero");
        }
    }

    const Element& image(const std::string& name) const { return images.at(name); }
};

inline Element apply_map(const AlgebraMap& f, const Element& a) {
    check_over(f.source, a);
    Element out = zero_element();
    for (auto& m : a.terms) {
        Element t = one_element(f.target);
        for (size_t k = 0; k < m.e.size(); ++k)
            if (m.e[k]) t = mul(f.target, t, power(f.target, f.image(f.source.gens[k].name), m.e[k]));
        out = add(f.target, out, t);
    }
    return out;
}

inline AlgebraMap identity_map(const AlgebraSpec& alg) {
    std::map<std::string, Element> img;
    for (auto& g : alg.gens) img[g.name] = generator_element(alg, g.name);
    return AlgebraMap(alg, alg, std::move(img));
}

/******** text form ********/

inline std::string render(const AlgebraSpec& alg, const Monomial& m) {
    std::string s;
    for (size_t k = 0; k < m.e.size(); ++k) {
        if (!m.e[k]) continue;
        if (!s.empty()) s += "*";
        s += alg.gens[k].name;
        if (m.e[k] > 1) s += "^" + std::to_string(m.e[k]);
    }
    return s.empty() ? "1" : s;
}

inline std::string render(const AlgebraSpec& alg, const Element& a) {
    if (a.terms.empty()) return "0";
    std::string s;
    for (auto& m : a.terms) {
        if (!s.empty()) s += " + ";
        s += render(alg, m);
    }
    return s;
}

namespace detail {
inline void skip_ws(const std::string& s, size_t& p) {
    while (p < s.size() && (s[p] == ' ' || s[p] == '\t')) ++p;
}
}  // namespace detail

inline Element parse_element(const AlgebraSpec& alg, const std::string& text) {
    std::vector<Monomial> terms;
    size_t p = 0;
    detail::skip_ws(text, p);
    if (p < text.size() && text[p] == '0' &&
        (p + 1 == text.size() || text.find_first_not_of(" \t", p + 1) == std::string::npos))
        return zero_element();
    while (true) {
        std::vector<int> exps(alg.ngens(), 0);
        while (true) {  // factors of one term
            detail::skip_ws(text, p);
            if (p < text.size() && text[p] == '1') {
                ++p;  // the empty monomial
            } else {
                size_t start = p;
                while (p < text.size() && (std::isalnum((unsigned char)text[p]) || text[p] == '_'))
                    ++p;
                if (p == start) throw std::invalid_argument("parse error at '" + text.substr(p) + "'");
                std::string name = text.substr(start, p - start);
                long gi = alg.index_of(name);
                if (gi < 0) throw std::invalid_argument("unknown generator: " + name);
                int k = 1;
                detail::skip_ws(text, p);
                if (p < text.size() && text[p] == '^') {
                    ++p;
                    detail::skip_ws(text, p);
                    size_t ns = p;
                    while (p < text.size() && std::isdigit((unsigned char)text[p])) ++p;
                    if (p == ns) throw std::invalid_argument("missing exponent");
                    k = std::stoi(text.substr(ns, p - ns));
                }
                exps[size_t(gi)] += k;
            }
            detail::skip_ws(text, p);
            if (p < text.size() && text[p] == '*') {
                ++p;
                continue;
            }
            break;
        }
        terms.push_back(make_monomial(alg, std::move(exps)));
        detail::skip_ws(text, p);
        if (p < text.size() && text[p] == '+') {
            ++p;
            continue;
        }
        break;
    }
    detail::skip_ws(text, p);
    if (p != text.size()) throw std::invalid_argument("trailing input: '" + text.substr(p) + "'");
    return element_from_terms(std::move(terms));
}

}  // namespace coho
