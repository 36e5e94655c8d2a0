#include <catch2/catch_amalgamated.hpp>

#include <coho/homological.hpp>

using namespace coho;
using Catch::Matchers::ContainsSubstring;

namespace {

AltGroups& alt() {
    static AltGroups g = find_alternating_subgroups(2026);
    return g;
}

size_t lab(const KoszulModule& m, int t, std::vector<int> e) {
    const auto& ls = m.labels(t);
    for (size_t i = 0; i < ls.size(); ++i)
        if (ls[i].e == e) return i;
    FAIL("label not found at degree " << t);
    return 0;
}

// #{(i,j,k) : 2i + 3j + 5k = n}
long long poly_count(int n) {
    long long c = 0;
    for (int i = 0; 2 * i <= n; ++i)
        for (int j = 0; 2 * i + 3 * j <= n; ++j)
            if ((n - 2 * i - 3 * j) % 5 == 0) ++c;
    return c;
}

}  // namespace

TEST_CASE("koszul module stores the em actions") {
    KoszulModule m = build_em_module(14);
    REQUIRE(m.t_max() == 14);
    REQUIRE(m.lambda_gens().size() == 3);
    REQUIRE(m.lambda_gens()[0].fiber == 1);
    REQUIRE(m.lambda_gens()[1].fiber == 2);
    REQUIRE(m.lambda_gens()[2].fiber == 4);

    // exponent order: b4, b6, x3, x5, x7
    size_t b6 = lab(m, 6, {0, 1, 0, 0, 0});
    size_t x7 = lab(m, 7, {0, 0, 0, 0, 1});
    REQUIRE(m.action(0, 6, b6) == long(x7));
    REQUIRE(m.preimages(0, 7, x7) == std::vector<size_t>{b6});

    size_t x5 = lab(m, 5, {0, 0, 0, 1, 0});
    REQUIRE(m.action(1, 5, x5) == long(x7));

    size_t x3x5 = lab(m, 8, {0, 0, 1, 1, 0});
    size_t x5x7 = lab(m, 12, {0, 0, 0, 1, 1});
    REQUIRE(m.action(2, 8, x3x5) == long(x5x7));

    // e reads literally: pure b6-powers only
    size_t b4b6 = lab(m, 10, {1, 1, 0, 0, 0});
    REQUIRE(m.action(0, 10, b4b6) == -1);
    size_t b6b6 = lab(m, 12, {0, 2, 0, 0, 0});
    size_t b6x7 = lab(m, 13, {0, 1, 0, 0, 1});
    REQUIRE(m.action(0, 12, b6b6) == long(b6x7));

    // the extended fallback acts on mixed labels as well
    KoszulModule ext = build_em_module(14, true);
    size_t b4x7 = lab(ext, 11, {1, 0, 0, 0, 1});
    REQUIRE(ext.action(0, 10, b4b6) == long(b4x7));
    REQUIRE(ext.action(1, 5, x5) == long(x7));

    REQUIRE_THROWS_AS(m.labels(15), std::out_of_range);
    REQUIRE_THROWS_AS(m.labels(-1), std::out_of_range);
}

TEST_CASE("koszul module rejects invalid actions") {
    AlgebraSpec one({{"u", 1, GenKind::polynomial}});

    auto shift_by = [](int k) {
        return [k](std::size_t, const Monomial& m) -> std::optional<Monomial> {
            Monomial r = m;
            r.e[0] += k;
            r.deg += k;
            return r;
        };
    };
    // u^k -> u^{k+2} under a fiber-1 generator: wrong raise
    REQUIRE_THROWS_WITH(KoszulModule(one, {{"y", 1}}, 6, shift_by(2)),
                        ContainsSubstring("raises") && ContainsSubstring("fiber degree"));
    // u^k -> u^{k+1} always: y^2 != 0
    REQUIRE_THROWS_WITH(KoszulModule(one, {{"y", 1}}, 6, shift_by(1)),
                        ContainsSubstring("square to zero") && ContainsSubstring("'y'"));

    // parity-gated shifts fail to commute on u itself
    auto gated = [](std::size_t j, const Monomial& m) -> std::optional<Monomial> {
        if ((m.e[0] & 1) != int(j)) return std::nullopt;
        Monomial r = m;
        r.e[0] += 1;
        r.deg += 1;
        return r;
    };
    REQUIRE_THROWS_WITH(KoszulModule(one, {{"a", 1}, {"b", 1}}, 6, gated),
                        ContainsSubstring("fail to commute") && ContainsSubstring("u"));

    REQUIRE_THROWS_AS(KoszulModule(one, {{"y", 0}}, 6, shift_by(1)), std::invalid_argument);
    REQUIRE_THROWS_AS(KoszulModule(one, {{"y", 1}}, -1, shift_by(1)), std::invalid_argument);
}

TEST_CASE("koszul ext of the trivial module is polynomial on l2 l3 l5") {
    KoszulModule triv(AlgebraSpec{}, {{"e", 1}, {"d", 2}, {"d2", 4}}, 14,
                      [](std::size_t, const Monomial&) { return std::nullopt; });
    PageTable pt = koszul_ext(triv, 14, 14);
    for (int n = 0; n <= 14; ++n) REQUIRE(pt.total(n) == poly_count(n));
    REQUIRE(pt.totals(14) ==
            std::vector<long long>{1, 0, 1, 1, 1, 2, 2, 2, 3, 3, 4, 4, 5, 5, 6});
    REQUIRE(pt.cells.at({0, 0}).reps == std::vector<std::string>{"1"});
    REQUIRE(pt.cells.at({1, 2}).reps == std::vector<std::string>{"l2"});
    REQUIRE(pt.cells.at({1, 3}).reps == std::vector<std::string>{"l3"});
    REQUIRE(pt.cells.at({1, 5}).reps == std::vector<std::string>{"l5"});
    REQUIRE(pt.cells.at({2, 4}).reps == std::vector<std::string>{"l2^2"});

    REQUIRE_THROWS_AS(koszul_ext(triv, 14, 15), std::invalid_argument);
    REQUIRE_THROWS_AS(koszul_ext(triv, -1, 5), std::invalid_argument);
}

TEST_CASE("koszul ext of a free module concentrates at s=0") {
    AlgebraSpec lam({{"y", 3, GenKind::exterior}});
    KoszulModule free_mod(lam, {{"y", 3}}, 12,
                          [](std::size_t, const Monomial& m) -> std::optional<Monomial> {
                              if (m.e[0] != 0) return std::nullopt;
                              Monomial r = m;
                              r.e[0] = 1;
                              r.deg += 3;
                              return r;
                          });
    PageTable pt = koszul_ext(free_mod, 8, 8);
    REQUIRE(pt.cells.size() == 1);
    REQUIRE(pt.cells.at({0, 0}) == PageCell{1, {"1"}});
    REQUIRE(pt.totals(8) == std::vector<long long>{1, 0, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("em e2 cross-validation passes under the literal action") {
    E2CrossCheck c = em_e2_cross_check(14);
    REQUIRE(c.pass());
    REQUIRE(c.literal_ok);
    REQUIRE(c.extended_ok);
    REQUIRE_FALSE(c.used_extended);
    REQUIRE(c.algebra_dims ==
            std::vector<long long>{1, 0, 1, 2, 2, 4, 5, 6, 9, 12, 14, 18, 23, 26, 33});
    REQUIRE(c.literal_dims == c.algebra_dims);
    REQUIRE(c.extended_dims == c.algebra_dims);
    REQUIRE(c.ext_dims() == c.algebra_dims);
}

TEST_CASE("algebra basis slices the presentation degreewise") {
    PresentedAlgebra p = em_e2_presentation();
    std::vector<long long> dims;
    for (int n = 0; n <= 6; ++n) dims.push_back((long long)algebra_basis(p, n).dim());
    REQUIRE(dims == std::vector<long long>{1, 0, 1, 2, 2, 4, 5});

    QuotientSlice q8 = algebra_basis(p, 8);
    REQUIRE(q8.monos.size() == 10);
    REQUIRE(q8.ideal.dim() == 1);
    REQUIRE(q8.dim() == 9);
    REQUIRE(q8.reps.size() + q8.ideal.pivots.size() == q8.monos.size());

    // without relations the slice is the free monomial count
    PresentedAlgebra free_p{p.free, {}};
    for (int n = 0; n <= 10; ++n)
        REQUIRE(algebra_basis(free_p, n).dim() == monomial_basis(p.free, n).size());

    REQUIRE_THROWS_AS(algebra_basis(p, -1), std::invalid_argument);
    PresentedAlgebra bad{p.free, {parse_element(p.free, "l2 + l3")}};
    REQUIRE_THROWS_AS(algebra_basis(bad, 4), std::invalid_argument);
    PresentedAlgebra zero_rel{p.free, {zero_element()}};
    REQUIRE_THROWS_AS(algebra_basis(zero_rel, 4), std::invalid_argument);
}

TEST_CASE("leibniz differential on the presented algebra") {
    PresentedAlgebra p = em_e2_presentation();
    const AlgebraSpec& a = p.free;
    DifferentialSpec d2 = em_d2(a);
    validate(a, d2);

    REQUIRE(apply_differential(a, d2, parse_element(a, "x3")) == parse_element(a, "l2^2"));
    REQUIRE(apply_differential(a, d2, parse_element(a, "x3*b4")) ==
            parse_element(a, "l2^2*b4 + l2*l3*x3"));
    REQUIRE(apply_differential(a, d2, parse_element(a, "b4^2")).is_zero());
    REQUIRE(apply_differential(a, d2, parse_element(a, "b4^3")) ==
            parse_element(a, "l2*l3*b4^2"));
    REQUIRE(apply_differential(a, d2, parse_element(a, "l2^3 + l3*l5")).is_zero());

    // d2 kills the mixing relation exactly
    REQUIRE(apply_differential(a, d2, p.relations[0]).is_zero());

    DifferentialSpec unknown;
    unknown.images["zz"] = parse_element(a, "l2");
    REQUIRE_THROWS_WITH(validate(a, unknown), ContainsSubstring("unknown generator"));
    DifferentialSpec skew;
    skew.images["x3"] = parse_element(a, "l2");  // degree 2, not 4
    REQUIRE_THROWS_WITH(validate(a, skew), ContainsSubstring("degree 4"));
}

TEST_CASE("page homology reproduces the e3 table") {
    PresentedAlgebra p = em_e2_presentation();
    PageTable e3 = page_homology(p, em_d2(p.free), 14);
    REQUIRE(e3.totals(8) == std::vector<long long>{1, 0, 1, 1, 0, 2, 2, 1, 3});
    REQUIRE(e3.totals(14) ==
            std::vector<long long>{1, 0, 1, 1, 0, 2, 2, 1, 3, 4, 3, 4, 5, 4, 8});
    REQUIRE(e3.total(4) == 0);
    REQUIRE(e3.total(5) == 2);
    REQUIRE(e3.cells.at({-1, 2}).reps == std::vector<std::string>{"l2"});

    // degreewise bounded by the e2 dimensions
    E2CrossCheck c = em_e2_cross_check(14);
    auto e3d = e3.totals(14);
    for (int n = 0; n <= 14; ++n) REQUIRE(e3d[size_t(n)] <= c.algebra_dims[size_t(n)]);

    // deterministic, including representatives
    REQUIRE(e3 == page_homology(p, em_d2(p.free), 14));
}

TEST_CASE("ill-defined differentials are reported with relation and degree") {
    AlgebraSpec a({{"u", 1, GenKind::polynomial}, {"w", 2, GenKind::polynomial}});
    DifferentialSpec d;
    d.images["u"] = parse_element(a, "w");

    PresentedAlgebra bad{a, {parse_element(a, "u^3")}};
    REQUIRE_THROWS_AS(page_homology(bad, d, 6), IllDefinedDifferential);
    try {
        page_homology(bad, d, 6);
        FAIL("expected IllDefinedDifferential");
    } catch (const IllDefinedDifferential& ex) {
        REQUIRE(ex.relation == "u^3");
        REQUIRE(ex.degree == 3);
        REQUIRE_THAT(ex.what(), ContainsSubstring("outside the ideal"));
    }

    // d(u^2) = 0, so the square relation is fine; homology collapses to F2
    PresentedAlgebra ok{a, {parse_element(a, "u^2")}};
    PageTable pt = page_homology(ok, d, 6);
    REQUIRE(pt.totals(6) == std::vector<long long>{1, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("page table exports and chart rendering") {
    PageTable demo;
    demo.name = "demo";
    demo.cells[{0, 0}] = PageCell{1, {"1"}};
    demo.cells[{2, 5}] = PageCell{2, {"a", "b"}};
    REQUIRE(demo.dim(0, 0) == 1);
    REQUIRE(demo.dim(1, 0) == 0);
    REQUIRE(demo.total(5) == 2);
    REQUIRE(demo.totals(5) == std::vector<long long>{1, 0, 0, 0, 0, 2});

    std::string chart =
        "demo\n"
        "      n |   0   1   2   3   4   5\n"
        "  s = 2 |   .   .   .   .   .   2\n"
        "  s = 0 |   1   .   .   .   .   .\n"
        "  total |   1   0   0   0   0   2\n";
    REQUIRE(render_chart(demo, 5) == chart);

    REQUIRE(to_csv(demo, 5) == "degree,dim\n0,1\n1,0\n2,0\n3,0\n4,0\n5,2\n");
    REQUIRE(to_json(demo, 5) ==
            "{\"name\":\"demo\",\"degrees\":[0,1,2,3,4,5],\"dims\":[1,0,0,0,0,2]}");

    PresentedAlgebra p = em_e2_presentation();
    PageTable e3 = page_homology(p, em_d2(p.free), 8);
    std::string e3_chart =
        "e3\n"
        "      n |   0   1   2   3   4   5   6   7   8\n"
        "  total |   1   0   1   1   0   2   2   1   3\n";
    REQUIRE(render_chart(e3, 8) == e3_chart);
}

TEST_CASE("sq1 homology of the a6 invariants matches the double-cover series") {
    DimTable tab = sq1_homology(alt().a6, 30);
    REQUIRE(tab.lo == 0);
    REQUIRE(tab.at(0) == 1);
    REQUIRE(tab.at(3) == 1);
    REQUIRE(tab.at(5) == 0);
    REQUIRE(tab.dims == expand(named_series("psu-double"), 30));

    auto bound = invariant_dimensions(alt().a6, 30);
    for (int d = 0; d <= 30; ++d) REQUIRE(tab.at(d) <= bound[size_t(d)]);

    REQUIRE_THROWS_AS(sq1_homology(alt().a6, -1), std::invalid_argument);
}

TEST_CASE("torus identities of the central extension") {
    TorusContext ctx = make_torus_context();
    const AlgebraSpec& T = ctx.torus;

    REQUIRE(ctx.x3 == parse_element(T, "e1*d2 + e1*d3 + e2*d1 + e2*d3 + e3*d1 + e3*d2"));
    REQUIRE(ctx.x5 ==
            parse_element(T, "e1*d2^2 + e1*d3^2 + e2*d1^2 + e2*d3^2 + e3*d1^2 + e3*d2^2"));
    REQUIRE(ctx.x7 == parse_element(T, "e1*d2^2*d3 + e1*d2*d3^2 + e2*d1^2*d3 + e2*d1*d3^2 + "
                                       "e3*d1^2*d2 + e3*d1*d2^2"));
    REQUIRE(ctx.b4 == parse_element(T, "d1^2 + d2^2 + d3^2 + d1*d2 + d1*d3 + d2*d3"));
    REQUIRE(ctx.b6 == parse_element(T, "d1^2*d2 + d1*d2^2 + d1^2*d3 + d1*d3^2 + d2^2*d3 + "
                                       "d2*d3^2"));
    REQUIRE(homogeneous_degree(ctx.b8) == std::optional<int>{8});
    REQUIRE(homogeneous_degree(ctx.x7) == std::optional<int>{7});

    Lemma31Report rep = verify_lemma31();
    REQUIRE(rep.pass);
    REQUIRE(rep.failures.empty());
}
