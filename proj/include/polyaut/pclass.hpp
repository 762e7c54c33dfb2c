#ifndef POLYAUT_PCLASS_HPP
#define POLYAUT_PCLASS_HPP

#include <cstdint>
#include <optional>
#include <random>

#include "polyaut/maps.hpp"
#include "polyaut/objects.hpp"
#include "polyaut/polynomial.hpp"

namespace polyaut {

/// Index of the class P_{gamma,delta}: nonzero six-variable polynomials with
/// deg_w1 <= gamma, deg_w2 <= delta and leading term in k* t_f^delta t_g^gamma.
struct ClassIndex {
    int gamma = 0;
    int delta = 1;
    bool operator==(const ClassIndex&) const = default;
};

/// The (gamma,delta) with p in P_{gamma,delta}, determined by the leading
/// term; none when lt is not a pure t_f/t_g monomial with positive t_f
/// exponent or a weighted-degree bound fails.
template <class K>
std::optional<ClassIndex> classify(const Polynomial<K>& p) {
    if (p.is_zero()) throw ZeroPolynomial("classify(0)");
    Exp lt = p.leading_term().exp;
    if (lt[X1] != 0 || lt[X2] != 0 || lt[X3] != 0 || lt[TR] != 0) return std::nullopt;
    int delta = lt[TF], gamma = lt[TG];
    if (delta < 1) return std::nullopt;
    if (p.weighted_degree(kW1) > gamma) return std::nullopt;
    if (p.weighted_degree(kW2) > delta) return std::nullopt;
    return ClassIndex{gamma, delta};
}

template <class K>
bool in_class(const Polynomial<K>& p, const ClassIndex& idx) {
    if (p.is_zero()) return false;
    if (idx.gamma < 0 || idx.delta < 1) return false;
    Exp lt = p.leading_term().exp;
    if (lt[X1] != 0 || lt[X2] != 0 || lt[X3] != 0 || lt[TR] != 0) return false;
    if (lt[TF] != idx.delta || lt[TG] != idx.gamma) return false;
    return p.weighted_degree(kW1) <= idx.gamma && p.weighted_degree(kW2) <= idx.delta;
}

/// Deterministic element of P_{gamma,delta}: leading term t_f^delta t_g^gamma
/// with a random nonzero coefficient, plus up to term_budget terms drawn from
/// the support shapes
///   (a) (0,0,0,0,i5,gamma) with 0 <= i5 < delta,
///   (b) i6 < gamma, i1 + 2i2 + 3i3 + i4 + i6 <= gamma, i5 <= delta.
inline Polynomial<Rational> random_class_element(const ClassIndex& idx, uint64_t seed,
                                                 int term_budget) {
    std::mt19937_64 rng(seed);
    auto small_nonzero = [&]() {
        std::uniform_int_distribution<int> num(-7, 7), den(1, 7);
        int n = 0;
        while (n == 0) n = num(rng);
        return Rational(n, den(rng));
    };
    Polynomial<Rational> p(Ring::six);
    Exp lead = exp_zero();
    lead[TF] = idx.delta;
    lead[TG] = idx.gamma;
    p.add_term(lead, small_nonzero());
    std::uniform_int_distribution<int> coin(0, 1);
    for (int t = 0; t < term_budget; ++t) {
        Exp e = exp_zero();
        if (idx.gamma == 0 || coin(rng)) {
            // shape (a)
            e[TG] = idx.gamma;
            e[TF] = std::uniform_int_distribution<int>(0, idx.delta - 1)(rng);
        } else {
            // shape (b)
            int i6 = std::uniform_int_distribution<int>(0, idx.gamma - 1)(rng);
            int room = idx.gamma - i6;
            int i1 = std::uniform_int_distribution<int>(0, room)(rng);
            int i2 = std::uniform_int_distribution<int>(0, (room - i1) / 2)(rng);
            int i3 = std::uniform_int_distribution<int>(0, (room - i1 - 2 * i2) / 3)(rng);
            int i4 = std::uniform_int_distribution<int>(0, room - i1 - 2 * i2 - 3 * i3)(rng);
            e[X1] = i1;
            e[X2] = i2;
            e[X3] = i3;
            e[TR] = i4;
            e[TF] = std::uniform_int_distribution<int>(0, idx.delta)(rng);
            e[TG] = i6;
            if (CyclicLexLess{}(lead, e) || e == lead) continue;
        }
        p.add_term(e, small_nonzero());
    }
    // additions may cancel; the leading term's coefficient never does, since
    // every sampled exponent is strictly below it
    return p;
}

/// Witness for condition (C): the classified indices of the t_r, t_f, t_g
/// images under phi'_u o lift.
struct CWitness {
    int m4 = 0, m5 = 0, m6 = 0;
    int n4 = 1, n5 = 1, n6 = 1;
    bool operator==(const CWitness&) const = default;

    /// (c2): m6 >= gamma1, 2m6 >= gamma2, 3m6 >= gamma3, m6 >= m4.
    /// (c3): n6-1 >= gamma1+1, 2(n6-1) >= gamma2+1, 3(n6-1) >= gamma3+1,
    ///       n6-1 >= n4.
    bool satisfies(const AffineType& type) const {
        if (!(m6 >= type.g1 && 2 * m6 >= type.g2 && 3 * m6 >= type.g3 && m6 >= m4)) return false;
        int k = n6 - 1;
        return k >= type.g1 + 1 && 2 * k >= type.g2 + 1 && 3 * k >= type.g3 + 1 && k >= n4;
    }
};

/// Classify the t_r, t_f, t_g images of phi'_u o lift and check (c2), (c3)
/// against the affine type. none when an image fails to classify or an
/// inequality fails.
template <class K>
std::optional<CWitness> condition_C(const Endomorphism<K>& lift, const K& u,
                                    const AffineType& type,
                                    int cap = kDefaultNilpotencyCap) {
    auto psi = compose(phi_prime<K>(u, cap), lift);
    auto cr = classify(psi.image(TR));
    auto cf = classify(psi.image(TF));
    auto cg = classify(psi.image(TG));
    if (!cr || !cf || !cg) return std::nullopt;
    CWitness w{cr->gamma, cf->gamma, cg->gamma, cr->delta, cf->delta, cg->delta};
    if (!w.satisfies(type)) return std::nullopt;
    return w;
}

/// (gamma', delta') = (m5 delta + m6 gamma, n5 delta + n6 gamma).
inline ClassIndex compose_class_bound(const CWitness& w, const ClassIndex& idx) {
    return ClassIndex{w.m5 * idx.delta + w.m6 * idx.gamma,
                      w.n5 * idx.delta + w.n6 * idx.gamma};
}

}  // namespace polyaut

#endif
