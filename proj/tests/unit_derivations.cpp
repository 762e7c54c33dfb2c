#include <doctest.h>

#include "polyaut/objects.hpp"
#include "support.hpp"

using namespace polyaut;
using testsupport::random_poly;
using testsupport::random_rational;

namespace {
using P = Polynomial<Rational>;
using PF = ParamFraction;
}  // namespace

TEST_CASE("derive") {
    auto dp = delta_prime<Rational>();
    auto tf = P::generator(Ring::six, TF), tg = P::generator(Ring::six, TG);
    CHECK(dp.derive(P::generator(Ring::six, TR)) == -(tf * tg));
    auto d = delta<Rational>();
    auto f = base_f<Rational>(), r = base_r<Rational>(), g = base_g<Rational>();
    CHECK(d.derive(gen3<Rational>(X2)) ==
          (gen3<Rational>(X1) * r).times_rational(Rational(4)) - g);
    CHECK(d.derive(gen3<Rational>(X3)) ==
          (gen3<Rational>(X2) * r).times_rational(Rational(6)) +
              (f * f).times_rational(Rational(2)));
}

TEST_CASE("nilpotency index") {
    auto dp = delta_prime<Rational>();
    CHECK(dp.nilpotency_index(P::generator(Ring::six, TF), 64) == 1);
    CHECK(dp.nilpotency_index(P::generator(Ring::six, TR), 64) == 2);
    auto d = delta<Rational>();
    // regression constants for the Jacobian derivation on the generators
    CHECK(d.nilpotency_index(gen3<Rational>(X1), 64) == 3);
    CHECK(d.nilpotency_index(gen3<Rational>(X2), 64) == 5);
    CHECK(d.nilpotency_index(gen3<Rational>(X3), 64) == 7);
    // a non-nilpotent derivation trips the cap
    Derivation<Rational> e(Ring::three);
    e.set_image(X1, gen3<Rational>(X1));
    CHECK_THROWS_AS(e.nilpotency_index(gen3<Rational>(X1), 8), CapExceeded);
}

TEST_CASE("exponential application") {
    Derivation<Rational> z(Ring::six);
    std::mt19937_64 rng(21);
    auto p = random_poly(rng, Ring::six);
    CHECK(z.exp_apply(Rational(5), p, 64) == p);

    auto dp = delta_prime<Rational>();
    Rational u(3, 2);
    auto x1 = P::generator(Ring::six, X1), tr = P::generator(Ring::six, TR),
         tf = P::generator(Ring::six, TF), tg = P::generator(Ring::six, TG);
    auto want1 = x1 - (tr * tf).scale(u + u) + (tf * tf * tg).scale(u * u);
    CHECK(dp.exp_apply(u, x1, 64) == want1);
    auto x2 = P::generator(Ring::six, X2);
    auto u2 = u * u, u3 = u2 * u, u4 = u3 * u;
    auto want2 = x2 + (x1 * tr).scale(u * Rational(4)) - tg.scale(u) -
                 (tr * tr * tf).scale(u2 * Rational(4)) -
                 (x1 * tf * tg).scale(u2 * Rational(2)) +
                 (tr * tf * tf * tg).scale(u3 * Rational(4)) -
                 (tf.pow(3) * tg * tg).scale(u4);
    CHECK(dp.exp_apply(u, x2, 64) == want2);
    CHECK(want2.term_count() == 7);
}

TEST_CASE("exponential endomorphism") {
    auto uu = PF::sym(Sym::u);
    auto pp = delta_prime<PF>().exp_endomorphism(uu, 64);
    auto tr = Polynomial<PF>::generator(Ring::six, TR),
         tf = Polynomial<PF>::generator(Ring::six, TF),
         tg = Polynomial<PF>::generator(Ring::six, TG);
    CHECK(pp.image(TR) == tr - (tf * tg).scale(uu));
    CHECK(pp.image(TF) == tf);
    CHECK(pp.image(TG) == tg);
    auto id = Endomorphism<Rational>::identity(Ring::three);
    CHECK(endo_equal(phi<Rational>(Rational(0)), id));
    auto f = base_f<Rational>();
    CHECK(phi<Rational>(Rational(1)).apply(f) == f);
}

TEST_CASE("composition") {
    // group laws per generator through the derivation exponential; a full
    // endomorphism composition would raise degree-23 images to high powers
    Rational u(2, 3);
    auto d = delta<Rational>();
    for (int i = 0; i < 3; ++i)
        CHECK(d.exp_apply(-u, d.exp_apply(u, gen3<Rational>(i), 64), 64) ==
              gen3<Rational>(i));
    auto uu = PF::sym(Sym::u), vv = PF::sym(Sym::v);
    auto ds = delta<PF>();
    for (int i = 0; i < 3; ++i)
        CHECK(ds.exp_apply(uu, ds.exp_apply(vv, gen3<PF>(i), 64), 64) ==
              ds.exp_apply(uu + vv, gen3<PF>(i), 64));
    // the cheap triangular side composes fully
    CHECK(endo_equal(compose(phi_prime<PF>(uu), phi_prime<PF>(vv)),
                     phi_prime<PF>(uu + vv)));
    auto pp = phi_prime<PF>(uu);
    auto pi = pi_map<PF>();
    for (int v = 0; v < 6; ++v)
        CHECK(pi.apply(pp.image(v)) == ds.exp_apply(uu, pi.image(v), 64));
}

TEST_CASE("endomorphism equality") {
    auto uu = PF::sym(Sym::u), vv = PF::sym(Sym::v);
    auto lhs = compose(compose(beta<PF>(vv), phi<PF>(uu)), beta<PF>(vv.inv({Sym::v})));
    CHECK(endo_equal(lhs, phi<PF>(uu * vv.pow(7))));
    auto id = Endomorphism<Rational>::identity(Ring::three);
    CHECK(endo_equal(id, id));
    CHECK(!endo_equal(phi<Rational>(Rational(1)), phi<Rational>(Rational(2))));
}

TEST_CASE("conjugated derivation scales") {
    // beta_u . D . beta_u^{-1} = u^7 D, checked on generator images
    auto uu = PF::sym(Sym::u);
    auto d = delta<PF>();
    auto b = beta<PF>(uu), binv = beta<PF>(uu.inv({Sym::u}));
    for (int v = 0; v < 3; ++v) {
        auto conj = b.apply(d.derive(binv.image(v)));
        CHECK(conj == d.image(v).scale(uu.pow(7)));
    }
}
