#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coho/f2alg.hpp"

using namespace coho;

namespace {

const AlgebraSpec& poly4() {
    static AlgebraSpec a = AlgebraSpec::polynomial({"x1", "x2", "x3", "x4"});
    return a;
}

// F2[d,d1,d2,d3] (degree 2) tensor E(e,e1,e2,e3) (degree 1)
const AlgebraSpec& torus() {
    static AlgebraSpec a({{"d", 2, GenKind::polynomial},
                          {"d1", 2, GenKind::polynomial},
                          {"d2", 2, GenKind::polynomial},
                          {"d3", 2, GenKind::polynomial},
                          {"e", 1, GenKind::exterior},
                          {"e1", 1, GenKind::exterior},
                          {"e2", 1, GenKind::exterior},
                          {"e3", 1, GenKind::exterior}});
    return a;
}

Element random_element(std::mt19937_64& rng, const AlgebraSpec& alg, int d, double density = 0.4) {
    auto basis = monomial_basis(alg, d);
    std::vector<Monomial> terms;
    std::bernoulli_distribution coin(density);
    for (auto& m : basis)
        if (coin(rng)) terms.push_back(m);
    return element_from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("monomial products") {
    auto& A = poly4();
    Element x1 = generator_element(A, "x1");
    CHECK(render(A, mul(A, x1, x1)) == "x1^2");

    auto& T = torus();
    Element e = generator_element(T, "e");
    CHECK(mul(T, e, e).is_zero());
}

TEST_CASE("torus product expands by distributivity") {
    auto& T = torus();
    Element lhs = mul(T, add(T, generator_element(T, "e1"), generator_element(T, "e")),
                      add(T, generator_element(T, "d2"), generator_element(T, "d")));
    Element expect = parse_element(T, "d*e + d*e1 + d2*e + d2*e1");
    CHECK(lhs == expect);
    CHECK(lhs.terms.size() == 4);
}

TEST_CASE("monomial_basis counts and order") {
    CHECK(monomial_basis(poly4(), 2).size() == 10);

    AlgebraSpec ext({{"e1", 1, GenKind::exterior},
                     {"e2", 1, GenKind::exterior},
                     {"e3", 1, GenKind::exterior}});
    CHECK(monomial_basis(ext, 2).size() == 3);
    CHECK(monomial_basis(ext, 4).empty());

    auto b1 = monomial_basis(torus(), 1);
    REQUIRE(b1.size() == 4);
    std::vector<std::string> names;
    for (auto& m : b1) names.push_back(render(torus(), m));
    CHECK(names == std::vector<std::string>{"e", "e1", "e2", "e3"});

    // graded-lex inside a degree: larger exponent vector first
    auto b3 = monomial_basis(poly4(), 3);
    CHECK(render(poly4(), b3.front()) == "x1^3");
    CHECK(render(poly4(), b3.back()) == "x4^3");
    for (size_t i = 0; i + 1 < b3.size(); ++i) CHECK(term_before(b3[i], b3[i + 1]));
}

TEST_CASE("ring laws on random triples") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 1000; ++trial) {
        const AlgebraSpec& A = (trial & 1) ? torus() : poly4();
        int da = 1 + int(rng() % 5), db = 1 + int(rng() % 5), dc = 1 + int(rng() % 5);
        Element a = random_element(rng, A, da), b = random_element(rng, A, db),
                c = random_element(rng, A, dc);
        REQUIRE(add(A, add(A, a, b), c) == add(A, a, add(A, b, c)));
        REQUIRE(add(A, a, a).is_zero());
        REQUIRE(mul(A, a, add(A, b, c)) == add(A, mul(A, a, b), mul(A, a, c)));
        REQUIRE(mul(A, a, b) == mul(A, b, a));
    }
}

TEST_CASE("degree additivity for homogeneous products") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 300; ++trial) {
        int da = 1 + int(rng() % 6), db = 1 + int(rng() % 6);
        Element a = random_element(rng, poly4(), da), b = random_element(rng, poly4(), db);
        Element p = mul(poly4(), a, b);
        if (a.is_zero() || b.is_zero()) {
            REQUIRE(p.is_zero());
        } else {
            auto d = homogeneous_degree(p);
            REQUIRE(d.has_value());
            REQUIRE(*d == da + db);
        }
    }
}

TEST_CASE("canonical form is insertion-order independent") {
    std::mt19937_64 rng(5);
    auto basis = monomial_basis(poly4(), 5);
    std::vector<Monomial> picked(basis.begin(), basis.begin() + 12);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Monomial> shuffled = picked;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(element_from_terms(shuffled) == element_from_terms(picked));
    }
}

TEST_CASE("exterior truncation in products") {
    auto& T = torus();
    Element s = parse_element(T, "e1*e2 + e1*e3");
    Element p = mul(T, s, generator_element(T, "e1"));
    CHECK(p.is_zero());
    Element q = mul(T, s, generator_element(T, "e3"));
    CHECK(q == parse_element(T, "e1*e2*e3"));
}

TEST_CASE("apply_map is a ring homomorphism") {
    auto& T = torus();
    // central multiplication: e_i -> e_i + e, d_i -> d_i + d
    std::map<std::string, Element> img;
    img["d"] = generator_element(T, "d");
    img["e"] = generator_element(T, "e");
    for (auto suffix : {"1", "2", "3"}) {
        img[std::string("d") + suffix] =
            add(T, generator_element(T, std::string("d") + suffix), generator_element(T, "d"));
        img[std::string("e") + suffix] =
            add(T, generator_element(T, std::string("e") + suffix), generator_element(T, "e"));
    }
    AlgebraMap psi(T, T, img);

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 250; ++trial) {
        Element a = random_element(rng, T, 1 + int(rng() % 4), 0.3);
        Element b = random_element(rng, T, 1 + int(rng() % 4), 0.3);
        REQUIRE(apply_map(psi, mul(T, a, b)) == mul(T, apply_map(psi, a), apply_map(psi, b)));
        REQUIRE(apply_map(psi, add(T, a, b)) == add(T, apply_map(psi, a), apply_map(psi, b)));
    }

    SECTION("identity map fixes random elements") {
        AlgebraMap id = identity_map(poly4());
        for (int trial = 0; trial < 50; ++trial) {
            Element a = random_element(rng, poly4(), 1 + int(rng() % 6));
            REQUIRE(apply_map(id, a) == a);
        }
    }

    SECTION("construction-time checks") {
        std::map<std::string, Element> bad = img;
        bad["e1"] = generator_element(T, "d");  // wrong degree
        CHECK_THROWS_AS(AlgebraMap(T, T, bad), std::invalid_argument);

        std::map<std::string, Element> bad2 = img;
        bad2.erase("e3");  // missing image
        CHECK_THROWS_AS(AlgebraMap(T, T, bad2), std::invalid_argument);
    }
}

TEST_CASE("vectorize") {
    auto& A = poly4();
    DegreeBasis basis(A, 6);

    SECTION("zero maps to the zero vector") {
        BitVec v = vectorize(basis, zero_element());
        CHECK(v.zero());
    }
    SECTION("a basis monomial maps to its unit vector") {
        for (size_t i : {size_t(0), basis.size() / 2, basis.size() - 1}) {
            Element m{{basis.monos[i]}};
            BitVec v = vectorize(basis, m);
            CHECK(v.popcount() == 1);
            CHECK(v.get(i));
        }
    }
    SECTION("round trip on random degree-6 elements") {
        std::mt19937_64 rng(123);
        for (int trial = 0; trial < 300; ++trial) {
            Element a = random_element(rng, A, 6);
            REQUIRE(devectorize(basis, vectorize(basis, a)) == a);
        }
    }
    SECTION("inhomogeneous input rejected") {
        Element a = add(A, generator_element(A, "x1"), one_element(A));
        CHECK_THROWS_AS(vectorize(A, a, 1), std::invalid_argument);
    }
}

TEST_CASE("render and parse") {
    auto& A = poly4();
    Element a = parse_element(A, "x1^2*x2 + x3^3");
    CHECK(render(A, a) == "x1^2*x2 + x3^3");
    CHECK(parse_element(A, render(A, a)) == a);
    CHECK(parse_element(A, "0").is_zero());
    CHECK(render(A, zero_element()) == "0");
    CHECK(render(A, one_element(A)) == "1");
    CHECK(parse_element(A, "1 + x1") == add(A, one_element(A), generator_element(A, "x1")));
    CHECK(parse_element(A, "x1*x1") == parse_element(A, "x1^2"));
    CHECK(parse_element(A, " x1 ^ 2 * x2+x3^3 ") == a);
    CHECK_THROWS_AS(parse_element(A, "y1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(A, "x1 +"), std::invalid_argument);

    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 200; ++trial) {
        Element e = random_element(rng, torus(), 1 + int(rng() % 6));
        REQUIRE(parse_element(torus(), render(torus(), e)) == e);
    }
}

TEST_CASE("mismatched algebras rejected") {
    Element a = generator_element(poly4(), "x1");
    CHECK_THROWS_AS(check_over(torus(), a), std::invalid_argument);
    CHECK_THROWS_AS(add(torus(), a, a), std::invalid_argument);
}

TEST_CASE("truncated multiplication") {
    auto& A = poly4();
    Element s = add(A, one_element(A), generator_element(A, "x1"));
    Element p = mul(A, s, s, 1);  // (1+x1)^2 truncated above degree 1
    CHECK(p == one_element(A));   // x1^2 dropped, cross terms cancel
}
