#pragma once

/* Steenrod squares on algebras generated in degree 1.
 *
 * The total square is the multiplicative extension of x -> x + x^2 on
 * polynomial generators and e -> e on exterior ones. On a monomial
 * prod x_i^{a_i} it expands termwise as sum over submasks k_i of a_i of
 * prod x_i^{a_i + k_i} (Lucas: C(a,k) is odd iff k is a submask of a),
 * which avoids building the full product.
 */

#include "coho/f2alg.hpp"

namespace coho {

namespace detail {

inline void require_degree_one(const AlgebraSpec& alg) {
    for (auto& g : alg.gens)
        if (g.degree != 1)
            throw std::invalid_argument("Steenrod squares need a degree-1-generated algebra; '" +
                                        g.name + "' has degree " + std::to_string(g.degree));
}

// want < 0: all components; otherwise only total submask weight == want
inline void sq_term(const AlgebraSpec& alg, const Monomial& m, int want, size_t gi, int acc,
                    int remaining, std::vector<int>& chosen, std::vector<Monomial>& out) {
    if (want >= 0 && (acc > want || acc + remaining < want)) return;
    if (gi == alg.ngens()) {
        Monomial r{m.e, m.deg + acc};
        for (size_t i = 0; i < chosen.size(); ++i) r.e[i] += chosen[i];
        out.push_back(std::move(r));
        return;
    }
    int a = m.e[gi];
    if (alg.gens[gi].kind == GenKind::exterior || a == 0) {
        chosen[gi] = 0;
        sq_term(alg, m, want, gi + 1, acc, remaining, chosen, out);
        return;
    }
    int rem = remaining - a;
    for (int sub = a;; sub = (sub - 1) & a) {  // all submasks of a, including 0
        chosen[gi] = sub;
        sq_term(alg, m, want, gi + 1, acc + sub, rem, chosen, out);
        if (sub == 0) break;
    }
    chosen[gi] = 0;
}

inline int poly_weight(const AlgebraSpec& alg, const Monomial& m) {
    int w = 0;
    for (size_t i = 0; i < m.e.size(); ++i)
        if (alg.gens[i].kind == GenKind::polynomial) w += m.e[i];
    return w;
}

}  // namespace detail

inline Element total_sq(const AlgebraSpec& alg, const Element& a) {
    detail::require_degree_one(alg);
    check_over(alg, a);
    std::vector<Monomial> out;
    std::vector<int> chosen(alg.ngens(), 0);
    for (auto& m : a.terms)
        detail::sq_term(alg, m, -1, 0, 0, detail::poly_weight(alg, m), chosen, out);
    return element_from_terms(std::move(out));
}

// the degree-(d+k) component of total_sq on a homogeneous element
inline Element sq(const AlgebraSpec& alg, int k, const Element& a) {
    detail::require_degree_one(alg);
    check_over(alg, a);
    if (a.is_zero()) return a;
    if (!homogeneous_degree(a)) throw std::invalid_argument("sq: inhomogeneous element");
    if (k < 0) throw std::invalid_argument("sq: negative k");
    std::vector<Monomial> out;
    std::vector<int> chosen(alg.ngens(), 0);
    for (auto& m : a.terms)
        detail::sq_term(alg, m, k, 0, 0, detail::poly_weight(alg, m), chosen, out);
    return element_from_terms(std::move(out));
}

// matrix of Sq^1 on the given degree-d subspace, rows expressed over
// monomial_basis(d+1); row i is the image of basis row i
inline BitMatrix sq1_linear_map(const AlgebraSpec& alg, const Subspace& basis_in, int d) {
    DegreeBasis from(alg, d), to(alg, d + 1);
    if (basis_in.ambient() != from.size())
        throw std::invalid_argument("sq1_linear_map: ambient dimension is not the degree-d basis");
    BitMatrix m(basis_in.dim(), to.size());
    for (size_t i = 0; i < basis_in.dim(); ++i) {
        Element e = devectorize(from, basis_in.basis.row_vec(i));
        BitVec v = vectorize(to, sq(alg, 1, e));
        m.set_row(i, v);
    }
    return m;
}

}  // namespace coho
