#ifndef POLYAUT_TESTS_SUPPORT_HPP
#define POLYAUT_TESTS_SUPPORT_HPP

#include <random>

#include "polyaut/objects.hpp"

namespace testsupport {

using namespace polyaut;

inline Rational random_rational(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-7, 7), den(1, 7);
    int n = num(rng);
    while (nonzero && n == 0) n = num(rng);
    return Rational(n, den(rng));
}

/// Random sparse polynomial over Rational with small exponents.
inline Polynomial<Rational> random_poly(std::mt19937_64& rng, Ring ring,
                                        int max_terms = 5, int max_exp = 3) {
    std::uniform_int_distribution<int> terms(1, max_terms), e(0, max_exp);
    int nvars = ring == Ring::three ? 3 : 6;
    Polynomial<Rational> p(ring);
    int n = terms(rng);
    for (int t = 0; t < n; ++t) {
        Exp ex = exp_zero();
        for (int v = 0; v < nvars; ++v) ex[v] = e(rng);
        auto c = random_rational(rng);
        if (!c.is_zero())
            p = p + Polynomial<Rational>::monomial(ring, ex, c);
    }
    return p;
}

/// Random numeric affine map with nonzero determinant.
inline AffineMap<Rational> random_affine(std::mt19937_64& rng) {
    AffineMap<Rational> a;
    for (;;) {
        for (int i = 0; i < 3; ++i) {
            a.d[i] = random_rational(rng);
            for (int j = 0; j < 3; ++j) a.m[i][j] = random_rational(rng);
        }
        bool column_ok = true;
        for (int j = 0; j < 3; ++j) {
            bool nz = false;
            for (int i = 0; i < 3; ++i) nz = nz || !a.m[i][j].is_zero();
            column_ok = column_ok && nz;
        }
        if (column_ok && !a.det().is_zero()) return a;
    }
}

}  // namespace testsupport

#endif
