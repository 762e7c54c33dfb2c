#include <doctest.h>

#include "polyaut/objects.hpp"
#include "support.hpp"

using namespace polyaut;
using testsupport::random_poly;
using testsupport::random_rational;

namespace {

using P = Polynomial<Rational>;

P mono3(int e1, int e2, int e3, Rational c = Rational(1)) {
    Exp e = exp_zero();
    e[X1] = e1;
    e[X2] = e2;
    e[X3] = e3;
    return P::monomial(Ring::three, e, c);
}

P mono6(int e1, int e2, int e3, int e4, int e5, int e6, Rational c = Rational(1)) {
    Exp e{e1, e2, e3, e4, e5, e6};
    return P::monomial(Ring::six, e, c);
}

std::array<P, 6> pi_images() {
    return {gen3<Rational>(X1), gen3<Rational>(X2), gen3<Rational>(X3),
            base_r<Rational>(), base_f<Rational>(), base_g<Rational>()};
}

}  // namespace

TEST_CASE("arithmetic basics") {
    auto f = base_f<Rational>();
    auto f2 = mono3(2, 0, 2) - mono3(1, 2, 1, Rational(2)) + mono3(0, 4, 0);
    CHECK(f * f == f2);
    auto tf = P::generator(Ring::six, TF);
    CHECK(tf.pow(0) == P::constant(Ring::six, Rational(1)));
    std::mt19937_64 rng(1);
    auto p = random_poly(rng, Ring::six);
    CHECK(p + p.scale(Rational(-1)) == P::zero(Ring::six));
    CHECK_THROWS_AS(f * tf, RingMismatch);
}

TEST_CASE("substitution") {
    auto tf = P::generator(Ring::six, TF);
    CHECK(substitute(tf, pi_images(), Ring::three) == base_f<Rational>());
    std::array<P, 6> id_images;
    for (int v = 0; v < 6; ++v) id_images[v] = P::generator(Ring::six, v);
    std::mt19937_64 rng(2);
    auto p = random_poly(rng, Ring::six);
    CHECK(substitute(p, id_images, Ring::six) == p);
    // t_r * t_f maps to r*f = x1^2*x2*x3^2 - 2 x1*x2^3*x3 + x2^5 + x1^3*x3 - x1^2*x2^2
    auto tr = P::generator(Ring::six, TR);
    auto rf = substitute(tr * tf, pi_images(), Ring::three);
    CHECK(rf == base_r<Rational>() * base_f<Rational>());
    CHECK(rf.total_degree() == 5);
    CHECK(rf.term_count() == 5);
}

TEST_CASE("partial derivatives") {
    auto f = base_f<Rational>();
    CHECK(f.partial(X2) == mono3(0, 1, 0, Rational(-2)));
    CHECK(P::constant(Ring::three, Rational(9)).partial(X1) == P::zero(Ring::three));
    auto g = base_g<Rational>();
    auto want = f * f + (gen3<Rational>(X3) * f.partial(X3) * f).times_rational(Rational(2)) +
                (gen3<Rational>(X1) * gen3<Rational>(X2) * f.partial(X3)).times_rational(Rational(2));
    CHECK(g.partial(X3) == want);
}

TEST_CASE("degrees") {
    CHECK(mono6(1, 2, 0, 0, 0, 1).weighted_degree(kW1) == 6);
    auto tf5 = mono6(0, 0, 0, 0, 5, 0);
    CHECK(tf5.weighted_degree(kW1) == 0);
    CHECK(tf5.weighted_degree(kW2) == 5);
    auto im3 = phi_prime<Rational>(Rational(1)).image(X3);
    CHECK(im3.weighted_degree(kW1) == 3);
    CHECK(im3.weighted_degree(kW2) == 4);
    CHECK(base_f<Rational>().total_degree() == 2);
    CHECK(base_r<Rational>().total_degree() == 3);
    CHECK(base_g<Rational>().total_degree() == 5);
    CHECK(P::constant(Ring::three, Rational(1)).total_degree() == 0);
    CHECK(P::zero(Ring::three).total_degree() == kNegInfinity);
    CHECK(P::zero(Ring::three).weighted_degree(kW1) == kNegInfinity);
}

TEST_CASE("leading term and order") {
    auto p = mono6(0, 0, 0, 0, 2, 1) + mono6(0, 0, 1, 0, 0, 1) + mono6(5, 0, 0, 0, 0, 0);
    auto lt = p.leading_term();
    CHECK(lt.exp == Exp{0, 0, 1, 0, 0, 1});
    auto im1 = phi_prime<Rational>(Rational(3)).image(X1);
    auto lt1 = im1.leading_term();
    CHECK(lt1.exp == Exp{0, 0, 0, 0, 2, 1});
    CHECK(lt1.coeff == Rational(9));
    auto lt2 = phi_prime<Rational>(Rational(3)).image(X2).leading_term();
    CHECK(lt2.exp == Exp{0, 0, 0, 0, 3, 2});
    CHECK(lt2.coeff == Rational(-81));
    CHECK_THROWS_AS(P::zero(Ring::six).leading_term(), ZeroPolynomial);
    // the order is total on distinct exponents
    CyclicLexLess less;
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> e(0, 4);
    for (int t = 0; t < 100; ++t) {
        Exp a{}, b{};
        for (int v = 0; v < 6; ++v) a[v] = e(rng), b[v] = e(rng);
        if (a == b) continue;
        CHECK(less(a, b) != less(b, a));
    }
}

TEST_CASE("support") {
    auto im1 = phi_prime<Rational>(Rational(2)).image(X1);
    auto sup = im1.support();
    CHECK(sup.size() == 3);
    std::vector<Exp> want{{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 2, 1}};
    for (const auto& w : want)
        CHECK(std::find(sup.begin(), sup.end(), w) != sup.end());
    CHECK(P::zero(Ring::six).support().empty());
    CHECK(phi_prime<Rational>(Rational(2)).image(X3).support().size() == 13);
}

TEST_CASE("jacobian determinant") {
    auto f = base_f<Rational>(), g = base_g<Rational>(), r = base_r<Rational>();
    CHECK(jacobian_det3(f, g, f) == P::zero(Ring::three));
    CHECK(jacobian_det3(f, g, gen3<Rational>(X1)) == (r * f).times_rational(Rational(-2)));
    CHECK(jacobian_det3(f, g, r) == -(f * g));
    CHECK_THROWS_AS(jacobian_det3(f, g, P::generator(Ring::six, TF)), RingMismatch);
}

TEST_CASE("ring and substitution laws on samples") {
    std::mt19937_64 rng(4);
    auto imgs = pi_images();
    for (int t = 0; t < 50; ++t) {
        auto p = random_poly(rng, Ring::three), q = random_poly(rng, Ring::three),
             s = random_poly(rng, Ring::three);
        CHECK((p + q) * s == p * s + q * s);
        auto p6 = random_poly(rng, Ring::six, 3, 2), q6 = random_poly(rng, Ring::six, 3, 2);
        CHECK(substitute(p6 * q6, imgs, Ring::three) ==
              substitute(p6, imgs, Ring::three) * substitute(q6, imgs, Ring::three));
    }
}

TEST_CASE("leading term multiplicativity and degree additivity") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        auto p = random_poly(rng, Ring::six, 4, 3), q = random_poly(rng, Ring::six, 4, 3);
        if (p.is_zero() || q.is_zero()) continue;
        auto pq = p * q;
        REQUIRE(!pq.is_zero());
        auto lp = p.leading_term(), lq = q.leading_term(), l = pq.leading_term();
        for (int v = 0; v < 6; ++v) CHECK(l.exp[v] == lp.exp[v] + lq.exp[v]);
        CHECK(l.coeff == lp.coeff * lq.coeff);
        for (const auto* w : {&kW1, &kW2})
            CHECK(pq.weighted_degree(*w) ==
                  p.weighted_degree(*w) + q.weighted_degree(*w));
    }
}

TEST_CASE("projection degree of a monomial") {
    std::mt19937_64 rng(6);
    auto imgs = pi_images();
    std::uniform_int_distribution<int> e(0, 3);
    for (int t = 0; t < 50; ++t) {
        Exp ex{};
        for (int v = 0; v < 6; ++v) ex[v] = e(rng);
        auto m = P::monomial(Ring::six, ex, Rational(1));
        int want = ex[X1] + ex[X2] + ex[X3] + 3 * ex[TR] + 2 * ex[TF] + 5 * ex[TG];
        CHECK(substitute(m, imgs, Ring::three).total_degree() == want);
    }
}

TEST_CASE("term budget") {
    std::mt19937_64 rng(7);
    auto p = random_poly(rng, Ring::six, 80, 6), q = random_poly(rng, Ring::six, 80, 6);
    TermBudgetGuard guard(4);
    CHECK_THROWS_AS(p * q, BudgetExceeded);
}
