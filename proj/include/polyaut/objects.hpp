#ifndef POLYAUT_OBJECTS_HPP
#define POLYAUT_OBJECTS_HPP

#include <array>
#include <optional>

#include "polyaut/maps.hpp"
#include "polyaut/polynomial.hpp"

namespace polyaut {

// ---------------------------------------------------------------------------
// The named polynomials: f = x1x3 - x2^2, r = x2f + x1^2,
// g = x3f^2 + 2x1x2f + x1^3.
// ---------------------------------------------------------------------------

template <class K>
Polynomial<K> gen3(int v) {
    return Polynomial<K>::generator(Ring::three, v);
}

template <class K>
Polynomial<K> base_f() {
    return gen3<K>(X1) * gen3<K>(X3) - gen3<K>(X2) * gen3<K>(X2);
}

template <class K>
Polynomial<K> base_r() {
    return gen3<K>(X2) * base_f<K>() + gen3<K>(X1) * gen3<K>(X1);
}

template <class K>
Polynomial<K> base_g() {
    auto f = base_f<K>();
    return gen3<K>(X3) * f * f + (gen3<K>(X1) * gen3<K>(X2) * f).times_rational(Rational(2)) +
           gen3<K>(X1).pow(3);
}

/// x2*t_f + x1^2 in the six-variable ring (maps to r under pi).
template <class K>
Polynomial<K> tr_expression() {
    auto x1 = Polynomial<K>::generator(Ring::six, X1);
    auto x2 = Polynomial<K>::generator(Ring::six, X2);
    auto tf = Polynomial<K>::generator(Ring::six, TF);
    return x2 * tf + x1 * x1;
}

/// x3*t_f^2 + 2x1x2*t_f + x1^3 in the six-variable ring (maps to g under pi).
template <class K>
Polynomial<K> tg_expression() {
    auto x1 = Polynomial<K>::generator(Ring::six, X1);
    auto x2 = Polynomial<K>::generator(Ring::six, X2);
    auto x3 = Polynomial<K>::generator(Ring::six, X3);
    auto tf = Polynomial<K>::generator(Ring::six, TF);
    return x3 * tf * tf + (x1 * x2 * tf).times_rational(Rational(2)) + x1.pow(3);
}

// ---------------------------------------------------------------------------
// Derivations and exponential automorphisms.
// ---------------------------------------------------------------------------

/// The Jacobian derivation Delta = Delta_{(f,g)} on k[x1,x2,x3].
template <class K>
Derivation<K> delta() {
    Derivation<K> d(Ring::three);
    auto f = base_f<K>(), g = base_g<K>();
    for (int v = 0; v < 3; ++v)
        d.set_image(v, jacobian_det3(f, g, gen3<K>(v)));
    return d;
}

/// The triangular derivation Delta' on k[x, t_r, t_f, t_g]:
/// -2 t_r t_f d/dx1 + (4 x1 t_r - t_g) d/dx2 + (6 x2 t_r + 2 t_f^2) d/dx3
/// - t_f t_g d/dt_r.
template <class K>
Derivation<K> delta_prime() {
    Derivation<K> d(Ring::six);
    auto g6 = [](int v) { return Polynomial<K>::generator(Ring::six, v); };
    d.set_image(X1, (g6(TR) * g6(TF)).times_rational(Rational(-2)));
    d.set_image(X2, (g6(X1) * g6(TR)).times_rational(Rational(4)) - g6(TG));
    d.set_image(X3, (g6(X2) * g6(TR)).times_rational(Rational(6)) +
                        (g6(TF) * g6(TF)).times_rational(Rational(2)));
    d.set_image(TR, -(g6(TF) * g6(TG)));
    return d;
}

template <class K>
Endomorphism<K> phi(const K& u, int cap = kDefaultNilpotencyCap) {
    return delta<K>().exp_endomorphism(u, cap);
}

template <class K>
Endomorphism<K> phi_prime(const K& u, int cap = kDefaultNilpotencyCap) {
    return delta_prime<K>().exp_endomorphism(u, cap);
}

/// beta_u = (u^3 x1, u^2 x2, u x3).
template <class K>
Endomorphism<K> beta(const K& u) {
    if (u.is_zero()) throw NonInvertibleScale("beta(0)");
    Endomorphism<K> e(Ring::three, Ring::three);
    K u2 = u * u, u3 = u2 * u;
    e.set_image(X1, gen3<K>(X1).scale(u3));
    e.set_image(X2, gen3<K>(X2).scale(u2));
    e.set_image(X3, gen3<K>(X3).scale(u));
    return e;
}

/// Six-variable extension of beta_u with t-weights (6,4,9), the scalars
/// forced by beta_u(r) = u^6 r, beta_u(f) = u^4 f, beta_u(g) = u^9 g.
template <class K>
Endomorphism<K> beta_six(const K& u) {
    if (u.is_zero()) throw NonInvertibleScale("beta_six(0)");
    Endomorphism<K> e(Ring::six, Ring::six);
    auto g6 = [](int v) { return Polynomial<K>::generator(Ring::six, v); };
    e.set_image(X1, g6(X1).scale(u.pow(3)));
    e.set_image(X2, g6(X2).scale(u.pow(2)));
    e.set_image(X3, g6(X3).scale(u));
    e.set_image(TR, g6(TR).scale(u.pow(6)));
    e.set_image(TF, g6(TF).scale(u.pow(4)));
    e.set_image(TG, g6(TG).scale(u.pow(9)));
    return e;
}

/// The substitution map pi: t_r -> r, t_f -> f, t_g -> g.
template <class K>
Endomorphism<K> pi_map() {
    Endomorphism<K> e(Ring::six, Ring::three);
    e.set_image(X1, gen3<K>(X1));
    e.set_image(X2, gen3<K>(X2));
    e.set_image(X3, gen3<K>(X3));
    e.set_image(TR, base_r<K>());
    e.set_image(TF, base_f<K>());
    e.set_image(TG, base_g<K>());
    return e;
}

// ---------------------------------------------------------------------------
// Affine maps, types, and lifts.
// ---------------------------------------------------------------------------

struct AffineType {
    int g1 = 0, g2 = 0, g3 = 0;
    bool operator==(const AffineType&) const = default;
    int operator[](int j) const { return j == 0 ? g1 : j == 1 ? g2 : g3; }
};

/// alpha = (x1,x2,x3)A + d with A = (a_{i,j}) invertible.
/// matrix[i][j] = a_{i+1,j+1}; row 0 is the a-row, 1 the b-row, 2 the c-row.
template <class K>
struct AffineMap {
    std::array<std::array<K, 3>, 3> m;
    std::array<K, 3> d;

    static AffineMap identity() {
        AffineMap a;
        for (int i = 0; i < 3; ++i) {
            a.d[i] = K::zero();
            for (int j = 0; j < 3; ++j) a.m[i][j] = i == j ? K::one() : K::zero();
        }
        return a;
    }

    /// alpha(x_j) = sum_i a_{i,j} x_i + d_j.
    Polynomial<K> image(int j) const {
        Polynomial<K> p(Ring::three);
        for (int i = 0; i < 3; ++i) {
            Exp e = exp_zero();
            e[i] = 1;
            p.add_term(e, m[i][j]);
        }
        p.add_term(exp_zero(), d[j]);
        return p;
    }

    Endomorphism<K> as_endo() const {
        Endomorphism<K> e(Ring::three, Ring::three);
        for (int j = 0; j < 3; ++j) e.set_image(j, image(j));
        return e;
    }

    K det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
};

/// P = c1d3 - 2c2d2 + c3d1, Q and S likewise with the b- and a-rows,
/// T = P b1 - Q c1.
template <class K>
struct DerivedParams {
    K P, Q, S, T;

    static DerivedParams from(const AffineMap<K>& a) {
        auto comb = [&](int row) {
            return a.m[row][0] * a.d[2] - (a.m[row][1] * a.d[1]).times_rational(Rational(2)) +
                   a.m[row][2] * a.d[0];
        };
        DerivedParams p;
        p.P = comb(2);
        p.Q = comb(1);
        p.S = comb(0);
        p.T = p.P * a.m[1][0] - p.Q * a.m[2][0];
        return p;
    }
};

/// gamma_j = max{ i : a_{i,j} != 0 }, computed directly (numeric entries).
inline AffineType affine_type(const AffineMap<Rational>& a) {
    AffineType t;
    int g[3];
    for (int j = 0; j < 3; ++j) {
        g[j] = 0;
        for (int i = 0; i < 3; ++i)
            if (!a.m[i][j].is_zero()) g[j] = i + 1;
        if (g[j] == 0) throw TypeMismatch("zero column in an affine map");
    }
    t.g1 = g[0];
    t.g2 = g[1];
    t.g3 = g[2];
    return t;
}

/// Symbolic variant: entries below the claimed pivot must vanish identically
/// and the pivot must be a nonzero fraction (case genericity designates it
/// nonzero; numeric sampling independently confirms).
template <class K>
AffineType affine_type_symbolic(const AffineMap<K>& a, const AffineType& claimed) {
    for (int j = 0; j < 3; ++j) {
        int gj = claimed[j];
        if (gj < 1 || gj > 3) throw TypeMismatch("claimed type out of range");
        for (int i = gj; i < 3; ++i)
            if (!a.m[i][j].is_zero()) throw TypeMismatch("nonzero entry below the claimed pivot");
        if (a.m[gj - 1][j].is_zero()) throw TypeMismatch("claimed pivot is identically zero");
    }
    return claimed;
}

/// Membership in B = { beta_u = (u^3 x1, u^2 x2, u x3) }.
template <class K>
bool in_B(const AffineMap<K>& a) {
    for (int i = 0; i < 3; ++i) {
        if (!a.d[i].is_zero()) return false;
        for (int j = 0; j < 3; ++j)
            if (i != j && !a.m[i][j].is_zero()) return false;
    }
    const K& u = a.m[2][2];
    if (u.is_zero()) return false;
    return a.m[1][1] == u * u && a.m[0][0] == u * u * u;
}

/// The hat lift: x-images alpha(x_i),
/// t_f -> alpha(f) + (a1c3 - 2a2c2 + a3c1)(t_f - f),
/// t_r -> alpha_hat(x2 t_f + x1^2), t_g -> alpha_hat(x3 t_f^2 + 2x1x2 t_f + x1^3).
template <class K>
Endomorphism<K> hat_lift(const AffineMap<K>& a) {
    Endomorphism<K> e(Ring::six, Ring::six);
    auto endo3 = a.as_endo();
    Polynomial<K> ax[3];
    for (int j = 0; j < 3; ++j) {
        ax[j] = a.image(j).widened();
        e.set_image(j, ax[j]);
    }
    K lam = a.m[0][0] * a.m[2][2] - (a.m[0][1] * a.m[2][1]).times_rational(Rational(2)) +
            a.m[0][2] * a.m[2][0];
    auto f6 = base_f<K>().widened();
    auto alpha_f = endo3.apply(base_f<K>()).widened();
    auto tf = Polynomial<K>::generator(Ring::six, TF);
    auto tf_img = alpha_f + (tf - f6).scale(lam);
    e.set_image(TF, tf_img);
    e.set_image(TR, ax[1] * tf_img + ax[0] * ax[0]);
    e.set_image(TG, ax[2] * tf_img * tf_img +
                        (ax[0] * ax[1] * tf_img).times_rational(Rational(2)) + ax[0].pow(3));
    return e;
}

/// alpha'(x_i) = alpha(x_i) and pi o alpha' = alpha o pi.
template <class K>
bool is_lift(const Endomorphism<K>& lift, const AffineMap<K>& a) {
    if (lift.source() != Ring::six || lift.target() != Ring::six) return false;
    for (int j = 0; j < 3; ++j)
        if (lift.image(j) != a.image(j).widened()) return false;
    auto pi = pi_map<K>();
    return compose(pi, lift) == compose(a.as_endo(), pi);
}

enum class ModifiedLiftCase { L5_iii, L6_vi_viii };

/// The corrected lifts for the L5.iii and L6.vi-viii case shapes; corrections
/// lie in ker pi, so the result is still a lift.
template <class K>
Endomorphism<K> modified_lift(const AffineMap<K>& a, ModifiedLiftCase which) {
    auto e = hat_lift(a);
    auto tr6 = Polynomial<K>::generator(Ring::six, TR);
    auto tg6 = Polynomial<K>::generator(Ring::six, TG);
    auto tf6 = Polynomial<K>::generator(Ring::six, TF);
    if (which == ModifiedLiftCase::L5_iii) {
        const K& c3 = a.m[2][2];
        const K& b3 = a.m[1][2];
        const K& b2 = a.m[1][1];
        const K& a1 = a.m[0][0];
        const K& a2 = a.m[0][1];
        if (!(a1 == c3.pow(3)) || !(b2 == c3 * c3) ||
            !(a2.times_rational(Rational(2)) == b3 * c3))
            throw CaseConstraintViolated("L5(iii) shape equalities fail");
        auto tr_corr = tr6 - tr_expression<K>();
        auto tg_corr = tg6 - tg_expression<K>();
        e.set_image(TG, e.image(TG) + (tf6 * tr_corr).scale(b3 * c3.pow(8)) +
                            tg_corr.scale(c3.pow(9)));
        e.set_image(TR, e.image(TR) + tr_corr.scale(c3.pow(6)));
    } else {
        auto dp = DerivedParams<K>::from(a);
        if (dp.P.is_zero() || dp.T.is_zero())
            throw CaseConstraintViolated("L6(vi)+ requires P != 0 and T != 0");
        const K& c1 = a.m[2][0];
        const K& b2 = a.m[1][1];
        const K& b1 = a.m[1][0];
        K vanish = dp.P * dp.P * b2 + (dp.P * b1 * c1).times_rational(Rational(2)) -
                   dp.Q * c1 * c1;
        if (!vanish.is_zero())
            throw CaseConstraintViolated("L6(vi)+ requires P^2 b2 + 2P b1 c1 - Q c1^2 = 0");
        K t2p2 = (dp.T * dp.T).div_unit(dp.P * dp.P);
        auto f_corr = tf6 - base_f<K>().widened();
        auto x3 = Polynomial<K>::generator(Ring::six, X3);
        e.set_image(TG, e.image(TG) + (x3 * f_corr).scale(t2p2 * c1));
        e.set_image(TR, e.image(TR) - f_corr.scale(t2p2));
    }
    return e;
}

}  // namespace polyaut

#endif
