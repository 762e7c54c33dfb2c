#include <doctest.h>

#include "polyaut/cases.hpp"
#include "polyaut/pclass.hpp"
#include "polyaut/verify.hpp"

using namespace polyaut;

namespace {
using P = Polynomial<Rational>;

P mono6(int e1, int e2, int e3, int e4, int e5, int e6, Rational c = Rational(1)) {
    Exp e{e1, e2, e3, e4, e5, e6};
    return P::monomial(Ring::six, e, c);
}
}  // namespace

TEST_CASE("classification") {
    CHECK(classify(P::generator(Ring::six, TF)) == ClassIndex{0, 1});
    auto im2 = phi_prime<Rational>(Rational(2)).image(X2);
    CHECK(classify(im2) == ClassIndex{2, 3});
    CHECK(!classify(P::generator(Ring::six, X1)).has_value());
    CHECK_THROWS_AS(classify(P::zero(Ring::six)), ZeroPolynomial);
}

TEST_CASE("membership") {
    auto im3 = phi_prime<Rational>(Rational(2)).image(X3);
    CHECK(in_class(im3, {3, 4}));
    CHECK(!in_class(im3, {4, 4}));
    auto p = mono6(0, 0, 0, 0, 2, 2) + mono6(2, 0, 0, 0, 0, 0);
    CHECK(in_class(p, {2, 2}));
    CHECK(!in_class(P::zero(Ring::six), {1, 1}));
}

TEST_CASE("random class elements") {
    auto single = random_class_element({2, 3}, 9, 0);
    CHECK(single.term_count() == 1);
    CHECK(classify(single) == ClassIndex{2, 3});
    for (uint64_t seed = 0; seed < 50; ++seed) {
        ClassIndex idx{int(seed % 5) + 1, int(seed % 4) + 1};
        auto p = random_class_element(idx, seed, 8);
        CHECK(in_class(p, idx));
        CHECK(classify(p) == idx);
    }
    // at index (1,1) the admissible extra monomials stay below t_f t_g
    for (uint64_t seed = 0; seed < 20; ++seed) {
        auto p = random_class_element({1, 1}, seed, 8);
        CHECK(p.leading_term().exp == Exp{0, 0, 0, 0, 1, 1});
        CHECK(p.weighted_degree(kW1) <= 1);
        CHECK(p.weighted_degree(kW2) <= 1);
    }
}

TEST_CASE("growth condition witnesses") {
    {
        auto cs = case_spec("L2.A");
        auto ci = case_images(cs.alpha, cs.lift, verifydetail::usym(), cs.type);
        REQUIRE(ci.wit.has_value());
        CHECK(*ci.wit == CWitness{8, 6, 15, 11, 8, 20});
        CHECK(ci.wit->satisfies(cs.type));
    }
    {
        auto cs = case_spec("L6.iv");
        auto ci = case_images(cs.alpha, cs.lift, verifydetail::usym(), cs.type);
        REQUIRE(ci.wit.has_value());
        CHECK(*ci.wit == CWitness{5, 3, 7, 8, 4, 12});
        CHECK(cs.type == AffineType{3, 3, 3});
    }
    // a scaling map's lift never classifies on t_r: its image keeps lt = t_r
    AffineMap<Rational> b2 = AffineMap<Rational>::identity();
    b2.m[0][0] = Rational(8);
    b2.m[1][1] = Rational(4);
    b2.m[2][2] = Rational(2);
    CHECK(!condition_C(hat_lift(b2), Rational(0), affine_type(b2)).has_value());
}

TEST_CASE("composed class bound") {
    CWitness lemma2{8, 6, 15, 11, 8, 20};  // type (3,2,3)
    CHECK(compose_class_bound(lemma2, {3, 4}) == ClassIndex{6 * 4 + 15 * 3, 8 * 4 + 20 * 3});
    CWitness l6iv{5, 3, 7, 8, 4, 12};
    CHECK(compose_class_bound(l6iv, {3, 4}) == ClassIndex{33, 52});
    CHECK(compose_class_bound(l6iv, {0, 1}) == ClassIndex{3, 4});
}

TEST_CASE("classify and membership cohere") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 50; ++t) {
        ClassIndex idx{int(rng() % 4) + 1, int(rng() % 4) + 1};
        auto p = random_class_element(idx, rng(), 6);
        auto c = classify(p);
        REQUIRE(c.has_value());
        CHECK(in_class(p, *c));
        // membership at any other index fails
        CHECK(!in_class(p, {c->gamma + 1, c->delta}));
        CHECK(!in_class(p, {c->gamma, c->delta + 1}));
    }
}

TEST_CASE("witness forces growth") {
    for (const char* id : {"L2.A", "L2.B", "L3.32", "L4.ii", "L6.viii"}) {
        auto cs = case_spec(id);
        auto w = cs.witness;
        for (int g = 1; g <= 4; ++g)
            for (int d = 1; d <= 4; ++d) {
                auto b = compose_class_bound(w, {g, d});
                CHECK(b.gamma >= g);
                CHECK(b.delta >= d);
            }
    }
}
