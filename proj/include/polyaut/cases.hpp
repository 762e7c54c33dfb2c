#ifndef POLYAUT_CASES_HPP
#define POLYAUT_CASES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polyaut/objects.hpp"
#include "polyaut/param.hpp"
#include "polyaut/pclass.hpp"

namespace polyaut {

enum class LiftKind { hat, five_iii, six_vi };

/// A fully specified verification case: the symbolic affine map built from the
/// case's substitution chain, the constraints it must annihilate, the
/// genericity hypotheses, and the expected classes, leading coefficients, and
/// witness.  L5.iv is degenerate: the map lies in B and carries no class data.
struct CaseSpec {
    std::string id;
    AffineType type;
    std::vector<Sym> free_syms;  // sampled in numeric mode; includes u
    std::set<Sym> invertible;    // symbols allowed in denominators; sampled nonzero
    AffineMap<ParamFraction> alpha;
    std::vector<ParamFraction> vanishing;   // must be identically zero
    std::vector<ParamFraction> genericity;  // designated nonzero; numeric rejection set
    LiftKind lift = LiftKind::hat;
    bool expects_in_B = false;

    ClassIndex cls_r, cls_f, cls_g;
    ParamFraction ltc_r, ltc_f, ltc_g;  // expected leading coefficients
    CWitness witness;
    // pairs checked with exact fraction equality (factorizations, closures)
    std::vector<std::pair<ParamFraction, ParamFraction>> identities;
};

namespace casedetail {

inline ParamFraction PS(Sym s, int e = 1) { return ParamFraction::sym(s, e); }
inline ParamFraction C(long n, long d = 1) { return ParamFraction::rat(Rational(n, d)); }

inline ParamFraction upow(int e) { return PS(Sym::u, e); }

/// alpha.m[i][j] is a_{i+1,j+1}; row 0 = a-row, 1 = b-row, 2 = c-row.
inline void zero_map(AffineMap<ParamFraction>& a) {
    for (int i = 0; i < 3; ++i) {
        a.d[i] = ParamFraction::zero();
        for (int j = 0; j < 3; ++j) a.m[i][j] = ParamFraction::zero();
    }
}

/// The x3^2, x2x3, x2^2, x1x2 coefficients of the lifted t_f image; their
/// simultaneous vanishing is the gate between the generic and special cases.
struct TfCoeffs {
    ParamFraction x3x3, x2x3, x2x2, x1x2, x1x1, lambda;
};

inline TfCoeffs tf_coeffs(const AffineMap<ParamFraction>& al) {
    auto a1 = al.m[0][0], a2 = al.m[0][1], a3 = al.m[0][2];
    auto b1 = al.m[1][0], b2 = al.m[1][1], b3 = al.m[1][2];
    auto c1 = al.m[2][0], c2 = al.m[2][1], c3 = al.m[2][2];
    TfCoeffs t;
    t.x3x3 = c1 * c3 - c2 * c2;
    t.x2x3 = b1 * c3 - (b2 * c2).times_rational(Rational(2)) + b3 * c1;
    t.lambda = a1 * c3 - (a2 * c2).times_rational(Rational(2)) + a3 * c1;
    t.x2x2 = t.lambda + b1 * b3 - b2 * b2;
    t.x1x2 = a1 * b3 - (a2 * b2).times_rational(Rational(2)) + a3 * b1;
    t.x1x1 = a1 * a3 - a2 * a2;
    return t;
}

inline CWitness wit(int m4, int m5, int m6, int n4, int n5, int n6) {
    return CWitness{m4, m5, m6, n4, n5, n6};
}

}  // namespace casedetail

/// The verification case roster.  "L6.i" and "L6.ii" are families; their
/// genericity branches are separate entries suffixed .a-.d.
inline std::vector<std::string> case_ids() {
    return {"L2.A",   "L2.B",   "L3.32",  "L3.23",  "L4.i",   "L4.ii",
            "L5.i",   "L5.ii",  "L5.iii", "L5.iv",  "L6.i.a", "L6.i.b",
            "L6.i.c", "L6.i.d", "L6.ii.a", "L6.ii.b", "L6.ii.c", "L6.ii.d",
            "L6.iii", "L6.iv",  "L6.v",   "L6.vi",  "L6.vii", "L6.viii"};
}

/// Branch ids making up a top-level case name ("L6.i" -> its four branches).
inline std::vector<std::string> expand_case_id(const std::string& id) {
    std::vector<std::string> out;
    for (const auto& c : case_ids())
        if (c == id || c.rfind(id + ".", 0) == 0) out.push_back(c);
    if (out.empty()) throw UnknownCase("unknown case id: " + id);
    return out;
}

inline CaseSpec case_spec(const std::string& id) {
    using namespace casedetail;
    using enum Sym;
    CaseSpec cs;
    cs.id = id;
    zero_map(cs.alpha);
    auto& A = cs.alpha;
    cs.invertible = {u};
    cs.free_syms = {u};
    auto set_rows = [&](std::initializer_list<ParamFraction> entries) {
        // entries in row-major order a1,a2,a3,b1,b2,b3,c1,c2,c3,d1,d2,d3
        int k = 0;
        for (const auto& e : entries) {
            if (k < 9)
                A.m[k / 3][k % 3] = e;
            else
                A.d[k - 9] = e;
            ++k;
        }
    };
    auto F = [&](std::initializer_list<Sym> syms) {
        for (Sym s : syms) cs.free_syms.push_back(s);
    };
    auto inv = [&](std::initializer_list<Sym> syms) {
        for (Sym s : syms) cs.invertible.insert(s);
    };

    if (id == "L2.A") {
        // type (3,2,3): c2 = 0; x3^2 coefficient c1c3 survives.
        cs.type = {3, 2, 3};
        F({a1, a2, a3, b1, b2, b3, c1, c3, d1, d2, d3});
        inv({c1, c3});
        set_rows({PS(a1), PS(a2), PS(a3), PS(b1), PS(b2), PS(b3), PS(c1),
                  ParamFraction::zero(), PS(c3), PS(d1), PS(d2), PS(d3)});
        cs.genericity = {PS(b2), PS(c1) * PS(c3)};
        cs.cls_f = {6, 8};
        cs.cls_r = {8, 11};
        cs.cls_g = {15, 20};
        cs.ltc_f = PS(c1) * PS(c3) * upow(12);
        cs.ltc_r = -PS(b2) * PS(c1) * PS(c3) * upow(16);
        cs.ltc_g = PS(c1, 2) * PS(c3, 3) * upow(30);
        cs.witness = wit(8, 6, 15, 11, 8, 20);
    } else if (id == "L2.B") {
        // type (3,3,2): c3 = 0; x3^2 coefficient -c2^2 survives.
        cs.type = {3, 3, 2};
        F({a1, a2, a3, b1, b2, b3, c1, c2, d1, d2, d3});
        inv({c1, c2});
        set_rows({PS(a1), PS(a2), PS(a3), PS(b1), PS(b2), PS(b3), PS(c1), PS(c2),
                  ParamFraction::zero(), PS(d1), PS(d2), PS(d3)});
        cs.genericity = {PS(b3), PS(c2)};
        cs.cls_f = {6, 8};
        cs.cls_r = {9, 12};
        cs.cls_g = {14, 19};
        cs.ltc_f = -PS(c2, 2) * upow(12);
        cs.ltc_r = -PS(c2, 3) * upow(18);
        cs.ltc_g = -PS(b3) * PS(c2, 4) * upow(28);
        cs.witness = wit(9, 6, 14, 12, 8, 19);
    } else if (id == "L3.32") {
        // type (3,2,2): c2 = c3 = 0; x2x3 coefficient b3c1 survives.
        cs.type = {3, 2, 2};
        F({a1, a2, a3, b1, b2, b3, c1, d1, d2, d3});
        inv({c1});
        set_rows({PS(a1), PS(a2), PS(a3), PS(b1), PS(b2), PS(b3), PS(c1),
                  ParamFraction::zero(), ParamFraction::zero(), PS(d1), PS(d2), PS(d3)});
        cs.genericity = {PS(b2), PS(b3)};
        cs.cls_f = {5, 7};
        cs.cls_r = {7, 10};
        cs.cls_g = {12, 17};
        cs.ltc_f = -PS(b3) * PS(c1) * upow(10);
        cs.ltc_r = PS(b2) * PS(b3) * PS(c1) * upow(14);
        cs.ltc_g = -PS(b3, 3) * PS(c1, 2) * upow(24);
        cs.witness = wit(7, 5, 12, 10, 7, 17);
    } else if (id == "L3.23") {
        // type (2,2,3): c1 = c2 = 0; x2x3 coefficient b1c3 survives.
        cs.type = {2, 2, 3};
        F({a1, a2, a3, b1, b2, b3, c3, d1, d2, d3});
        inv({c3});
        set_rows({PS(a1), PS(a2), PS(a3), PS(b1), PS(b2), PS(b3),
                  ParamFraction::zero(), ParamFraction::zero(), PS(c3), PS(d1), PS(d2),
                  PS(d3)});
        cs.genericity = {PS(b1), PS(b2)};
        cs.cls_f = {5, 7};
        cs.cls_r = {7, 10};
        cs.cls_g = {13, 18};
        cs.ltc_f = -PS(b1) * PS(c3) * upow(10);
        cs.ltc_r = PS(b1) * PS(b2) * PS(c3) * upow(14);
        cs.ltc_g = PS(b1, 2) * PS(c3, 3) * upow(26);
        cs.witness = wit(7, 5, 13, 10, 7, 18);
    } else if (id == "L4.i" || id == "L4.ii") {
        // type (3,2,1): c2 = c3 = b3 = 0.
        cs.type = {3, 2, 1};
        inv({c1});
        if (id == "L4.i") {
            F({a1, a2, a3, b1, b2, c1, d1, d2, d3});
            set_rows({PS(a1), PS(a2), PS(a3), PS(b1), PS(b2), ParamFraction::zero(),
                      PS(c1), ParamFraction::zero(), ParamFraction::zero(), PS(d1),
                      PS(d2), PS(d3)});
            auto disc = PS(a3) * PS(c1) - PS(b2, 2);
            cs.genericity = {PS(b2), PS(a3), disc};
            cs.cls_f = {4, 6};
            cs.cls_r = {6, 9};
            cs.cls_g = {9, 14};
            cs.ltc_f = disc * upow(8);
            cs.ltc_r = -PS(b2) * disc * upow(12);
            cs.ltc_g = PS(a3) * disc * disc * upow(18);
            cs.witness = wit(6, 4, 9, 9, 6, 14);
        } else {
            // a3 = b2^2/c1 kills the x2^2 coefficient; x1x2 leads.
            F({a1, a2, b1, b2, c1, d1, d2, d3});
            inv({b2});
            auto a3v = PS(b2, 2).div_unit(PS(c1));
            set_rows({PS(a1), PS(a2), a3v, PS(b1), PS(b2), ParamFraction::zero(), PS(c1),
                      ParamFraction::zero(), ParamFraction::zero(), PS(d1), PS(d2),
                      PS(d3)});
            auto g12 = PS(b1) * a3v - (PS(a2) * PS(b2)).times_rational(Rational(2));
            cs.vanishing = {casedetail::tf_coeffs(A).x2x2};
            cs.genericity = {PS(b2), g12};
            cs.cls_f = {3, 5};
            cs.cls_r = {6, 8};
            cs.cls_g = {9, 12};
            cs.ltc_f = -g12 * upow(6);
            cs.ltc_r = PS(c1, 2) * upow(12);
            cs.ltc_g = PS(c1, 3) * upow(18);
            cs.witness = wit(6, 3, 9, 8, 5, 12);
        }
    } else if (id == "L5.i") {
        // type (1,2,3): c1 = c2 = b1 = 0; x2^2 coefficient a1c3 - b2^2 survives.
        cs.type = {1, 2, 3};
        F({a1, a2, a3, b2, b3, c3, d1, d2, d3});
        inv({c3});
        set_rows({PS(a1), PS(a2), PS(a3), ParamFraction::zero(), PS(b2), PS(b3),
                  ParamFraction::zero(), ParamFraction::zero(), PS(c3), PS(d1), PS(d2),
                  PS(d3)});
        auto disc = PS(a1) * PS(c3) - PS(b2, 2);
        cs.genericity = {PS(a1), PS(b2), disc};
        cs.cls_f = {4, 6};
        cs.cls_r = {6, 9};
        cs.cls_g = {11, 16};
        cs.ltc_f = disc * upow(8);
        cs.ltc_r = -PS(b2) * disc * upow(12);
        cs.ltc_g = PS(c3) * disc * disc * upow(22);
        cs.witness = wit(6, 4, 11, 9, 6, 16);
    } else if (id == "L5.ii") {
        // a1 = b2^2/c3, b3 = 2a2c3/b2, a3 = a2^2 c3/b2^2, d = 0.
        cs.type = {1, 2, 3};
        F({a2, b2, c3});
        inv({b2, c3});
        auto a1v = PS(b2, 2).div_unit(PS(c3));
        auto b3v = (PS(a2) * PS(c3)).times_rational(Rational(2)).div_unit(PS(b2));
        auto a3v = (PS(a2, 2) * PS(c3)).div_unit(PS(b2, 2));
        set_rows({a1v, PS(a2), a3v, ParamFraction::zero(), PS(b2), b3v,
                  ParamFraction::zero(), ParamFraction::zero(), PS(c3),
                  ParamFraction::zero(), ParamFraction::zero(), ParamFraction::zero()});
        auto tc = casedetail::tf_coeffs(A);
        cs.vanishing = {tc.x2x2, tc.x1x2, tc.x1x1};
        auto gap = PS(b2) - PS(c3, 2);
        cs.genericity = {gap};
        cs.cls_f = {0, 1};
        cs.cls_r = {2, 4};
        cs.cls_g = {3, 6};
        auto tri = a1v - (PS(b2) * PS(c3)).times_rational(Rational(2)) + PS(c3, 3);
        auto duo = a1v - PS(b2) * PS(c3);
        cs.ltc_f = a1v * PS(c3);
        cs.ltc_r = a1v * duo * upow(4);
        cs.ltc_g = a1v * a1v * tri * upow(6);
        cs.identities = {
            {tri, (gap * gap).div_unit(PS(c3))},
            {duo, (PS(b2) * gap).div_unit(PS(c3))},
        };
        cs.witness = wit(2, 0, 3, 4, 1, 6);
    } else if (id == "L5.iii") {
        // a1 = c3^3, b2 = c3^2, b3 = 2a2/c3, a3 = a2^2/c3^3, d = 0.
        cs.type = {1, 2, 3};
        F({a2, c3});
        inv({c3});
        auto b3v = PS(a2).times_rational(Rational(2)).div_unit(PS(c3));
        auto a3v = PS(a2, 2).div_unit(PS(c3, 3));
        set_rows({PS(c3, 3), PS(a2), a3v, ParamFraction::zero(), PS(c3, 2), b3v,
                  ParamFraction::zero(), ParamFraction::zero(), PS(c3),
                  ParamFraction::zero(), ParamFraction::zero(), ParamFraction::zero()});
        auto tc = casedetail::tf_coeffs(A);
        cs.vanishing = {tc.x2x2, tc.x1x2, tc.x1x1};
        cs.genericity = {PS(a2)};
        cs.lift = LiftKind::five_iii;
        cs.cls_f = {0, 1};
        cs.cls_r = {1, 3};
        cs.cls_g = {1, 4};
        cs.ltc_f = PS(c3, 4);
        cs.ltc_r = PS(a2) * PS(c3, 4) * upow(2);
        cs.ltc_g = PS(a2, 2) * PS(c3, 5) * upow(2);
        cs.witness = wit(1, 0, 1, 3, 1, 4);
    } else if (id == "L5.iv") {
        // additionally a2 = 0: alpha = beta_{c3}.
        cs.type = {1, 2, 3};
        F({c3});
        inv({c3});
        set_rows({PS(c3, 3), ParamFraction::zero(), ParamFraction::zero(),
                  ParamFraction::zero(), PS(c3, 2), ParamFraction::zero(),
                  ParamFraction::zero(), ParamFraction::zero(), PS(c3),
                  ParamFraction::zero(), ParamFraction::zero(), ParamFraction::zero()});
        cs.expects_in_B = true;
    } else if (id.rfind("L6.", 0) == 0) {
        cs.type = {3, 3, 3};
        inv({c1});
        char branch = id.back();
        bool family_i = id.rfind("L6.i.", 0) == 0;
        bool family_ii = id.rfind("L6.ii.", 0) == 0;
        if (family_i) {
            // generic family: the four t_f-image coefficients vanish one by one
            F({a1, a2, b1, b2, c1, c2, d1, d2, d3});
            inv({c2});
            auto s = PS(c2).div_unit(PS(c1));
            auto c3v = (branch == 'a') ? PS(c3) : PS(c2, 2).div_unit(PS(c1));
            auto b3v = (branch == 'a' || branch == 'b')
                           ? PS(b3)
                           : (PS(b2) * s).times_rational(Rational(2)) - PS(b1) * s * s;
            set_rows({PS(a1), PS(a2), PS(a3), PS(b1), PS(b2), b3v, PS(c1), PS(c2), c3v,
                      PS(d1), PS(d2), PS(d3)});
            if (branch == 'a' || branch == 'b') cs.free_syms.push_back(b3);
            if (branch == 'a') {
                cs.free_syms.push_back(c3);
                cs.invertible.insert(c3);
            }
            ParamFraction a3v = PS(a3);
            if (branch == 'c' || branch == 'd') {
                // still free a3 in branch c; solved in branch d
                if (branch == 'd') {
                    // kill the x2^2 coefficient
                    auto lam_wo = PS(a1) * c3v - (PS(a2) * PS(c2)).times_rational(Rational(2));
                    a3v = (PS(b2, 2) - PS(b1) * b3v - lam_wo).div_unit(PS(c1));
                    A.m[0][2] = a3v;
                } else {
                    cs.free_syms.push_back(a3);
                }
            } else {
                cs.free_syms.push_back(a3);
            }
            auto tc = casedetail::tf_coeffs(A);
            if (branch == 'a') {
                cs.genericity = {tc.x3x3};
                cs.cls_f = {6, 8};
                cs.cls_r = {9, 12};
                cs.cls_g = {15, 20};
                cs.ltc_f = tc.x3x3 * upow(12);
                cs.ltc_r = PS(c2) * tc.x3x3 * upow(18);
                cs.ltc_g = PS(c3) * tc.x3x3 * tc.x3x3 * upow(30);
                cs.witness = wit(9, 6, 15, 12, 8, 20);
            } else if (branch == 'b') {
                cs.vanishing = {tc.x3x3};
                cs.genericity = {tc.x2x3};
                cs.cls_f = {5, 7};
                cs.cls_r = {8, 11};
                cs.cls_g = {13, 18};
                cs.ltc_f = -tc.x2x3 * upow(10);
                cs.ltc_r = -PS(c2) * tc.x2x3 * upow(16);
                cs.ltc_g = c3v * tc.x2x3 * tc.x2x3 * upow(26);
                cs.witness = wit(8, 5, 13, 11, 7, 18);
            } else if (branch == 'c') {
                cs.vanishing = {tc.x3x3, tc.x2x3};
                cs.genericity = {tc.x2x2};
                cs.cls_f = {4, 6};
                cs.cls_r = {7, 10};
                cs.cls_g = {11, 16};
                cs.ltc_f = tc.x2x2 * upow(8);
                cs.ltc_r = PS(c2) * tc.x2x2 * upow(14);
                cs.ltc_g = c3v * tc.x2x2 * tc.x2x2 * upow(22);
                cs.witness = wit(7, 4, 11, 10, 6, 16);
            } else {
                cs.vanishing = {tc.x3x3, tc.x2x3, tc.x2x2};
                cs.genericity = {tc.x1x2};
                cs.cls_f = {3, 5};
                cs.cls_r = {6, 9};
                cs.cls_g = {9, 14};
                cs.ltc_f = -tc.x1x2 * upow(6);
                cs.ltc_r = -PS(c2) * tc.x1x2 * upow(12);
                cs.ltc_g = c3v * tc.x1x2 * tc.x1x2 * upow(18);
                cs.witness = wit(6, 3, 9, 9, 5, 14);
            }
        } else {
            // all four coefficients vanish: parametrize with s = c2/c1 and
            // e = b2 - b1 s, which solves the chain identically.
            auto s = PS(c2).div_unit(PS(c1));
            auto e = PS(b2) - PS(b1) * s;
            auto c3v = PS(c2, 2).div_unit(PS(c1));
            auto b3v = (PS(b2) * s).times_rational(Rational(2)) - PS(b1) * s * s;
            auto half = Rational(1, 2);
            auto make_a_row = [&](const ParamFraction& a1v) {
                auto a2v = a1v * s + (PS(b1) * e).div_unit(PS(c1)).times_rational(half);
                auto a3v = (a2v * s).times_rational(Rational(2)) - a1v * s * s +
                           (e * e).div_unit(PS(c1));
                return std::pair{a2v, a3v};
            };
            inv({c2});
            if (family_ii) {
                // P = 0: d3 = 2 s d2 - s^2 d1.
                ParamFraction a1v = (branch == 'a')
                                        ? PS(a1)
                                        : PS(b1, 2).div_unit(PS(c1)).times_rational(Rational(1, 4));
                auto [a2v, a3v] = make_a_row(a1v);
                ParamFraction d1v = (branch == 'd') ? ParamFraction::zero() : PS(d1);
                ParamFraction d2v = (branch == 'c') ? s * d1v
                                    : (branch == 'd') ? ParamFraction::zero()
                                                      : PS(d2);
                auto d3v = (s * d2v).times_rational(Rational(2)) - s * s * d1v;
                set_rows({a1v, a2v, a3v, PS(b1), PS(b2), b3v, PS(c1), PS(c2), c3v, d1v,
                          d2v, d3v});
                F({b1, b2, c1, c2});
                if (branch == 'a') cs.free_syms.push_back(a1);
                if (branch != 'd') cs.free_syms.push_back(d1);
                if (branch == 'a' || branch == 'b') cs.free_syms.push_back(d2);
                auto tc = casedetail::tf_coeffs(A);
                auto Pv = DerivedParams<ParamFraction>::from(A).P;
                cs.vanishing = {tc.x3x3, tc.x2x3, tc.x2x2, tc.x1x2, Pv};
                cs.genericity = {e};
                cs.cls_r = {6, 8};
                cs.cls_g = {9, 12};
                cs.ltc_r = PS(c1, 2) * upow(12);
                cs.ltc_g = PS(c1, 3) * upow(18);
                auto Qv = DerivedParams<ParamFraction>::from(A).Q;
                auto Sv = DerivedParams<ParamFraction>::from(A).S;
                if (branch == 'a') {
                    auto x11 = tc.x1x1;
                    cs.genericity.push_back(PS(a1) * PS(c1).times_rational(Rational(4)) -
                                            PS(b1, 2));
                    cs.cls_f = {2, 4};
                    cs.ltc_f = x11 * upow(4);
                    cs.identities = {{x11,
                                      (e * e *
                                       (PS(a1) * PS(c1).times_rational(Rational(4)) - PS(b1, 2)))
                                          .div_unit(PS(c1, 2).times_rational(Rational(4)))}};
                    cs.witness = wit(6, 2, 9, 8, 4, 12);
                } else if (branch == 'b') {
                    auto q_closed = (e * (s * d1v - d2v)).times_rational(Rational(2));
                    cs.vanishing.push_back(tc.x1x1);
                    cs.genericity.push_back(s * PS(d1) - PS(d2));
                    cs.cls_f = {2, 3};
                    cs.ltc_f = -Qv * upow(4);
                    cs.identities = {{Qv, q_closed}};
                    cs.witness = wit(6, 2, 9, 8, 3, 12);
                } else if (branch == 'c') {
                    auto s_closed = (d1v * e * e).div_unit(PS(c1));
                    cs.vanishing.push_back(tc.x1x1);
                    cs.vanishing.push_back(Qv);
                    cs.genericity.push_back(PS(d1));
                    cs.cls_f = {1, 2};
                    cs.ltc_f = Sv * upow(2);
                    cs.identities = {{Sv, s_closed}};
                    cs.witness = wit(6, 1, 9, 8, 2, 12);
                } else {
                    cs.vanishing.push_back(tc.x1x1);
                    cs.vanishing.push_back(Qv);
                    cs.vanishing.push_back(Sv);
                    cs.cls_f = {0, 1};
                    cs.ltc_f = tc.lambda;
                    cs.identities = {{tc.lambda, e * e}};
                    cs.witness = wit(6, 0, 9, 8, 1, 12);
                }
            } else if (id == "L6.iii") {
                // P promoted to a free unit: d3 = (P + 2c2 d2 - c3 d1)/c1.
                auto [a2v, a3v] = make_a_row(PS(a1));
                auto d3v = (PS(P) + (PS(c2) * PS(d2)).times_rational(Rational(2)) -
                            c3v * PS(d1))
                               .div_unit(PS(c1));
                set_rows({PS(a1), a2v, a3v, PS(b1), PS(b2), b3v, PS(c1), PS(c2), c3v,
                          PS(d1), PS(d2), d3v});
                F({a1, b1, b2, c1, c2, d1, d2, P});
                inv({P});
                auto tc = casedetail::tf_coeffs(A);
                auto dp = DerivedParams<ParamFraction>::from(A);
                auto lin = PS(P) * PS(c2) + PS(c1, 2);
                auto cub = PS(P, 2) * c3v + (PS(P) * PS(c1) * PS(c2)).times_rational(Rational(2)) +
                           PS(c1, 3);
                cs.vanishing = {tc.x3x3, tc.x2x3, tc.x2x2, tc.x1x2, dp.P - PS(P)};
                cs.genericity = {e, lin};
                cs.cls_f = {3, 4};
                cs.cls_r = {6, 8};
                cs.cls_g = {9, 12};
                cs.ltc_f = PS(P) * upow(6);
                cs.ltc_r = lin * upow(12);
                cs.ltc_g = cub * upow(18);
                cs.identities = {{cub, (lin * lin).div_unit(PS(c1))}};
                cs.witness = wit(6, 3, 9, 8, 4, 12);
            } else {
                // L6.iv - L6.viii: additionally P c2 + c1^2 = 0, i.e. the c-row
                // is (c1, -c1^2/P, c1^3/P^2); s = -c1/P.
                inv({P});
                cs.invertible.erase(c2);
                auto sP = -PS(c1).div_unit(PS(P));
                auto c2v = -PS(c1, 2).div_unit(PS(P));
                auto c3P = PS(c1, 3).div_unit(PS(P, 2));
                auto eP = PS(b2) + (PS(b1) * PS(c1)).div_unit(PS(P));
                auto make_a_rowP = [&](const ParamFraction& a1v) {
                    auto a2v = a1v * sP +
                               (PS(b1) * eP).div_unit(PS(c1)).times_rational(half);
                    auto a3v = (a2v * sP).times_rational(Rational(2)) - a1v * sP * sP +
                               (eP * eP).div_unit(PS(c1));
                    return std::pair{a2v, a3v};
                };
                auto b3P = (PS(b2) * sP).times_rational(Rational(2)) - PS(b1) * sP * sP;
                auto d3_of = [&](const ParamFraction& d1v, const ParamFraction& d2v) {
                    return (PS(P) + (c2v * d2v).times_rational(Rational(2)) - c3P * d1v)
                        .div_unit(PS(c1));
                };
                if (id == "L6.iv") {
                    auto [a2v, a3v] = make_a_rowP(PS(a1));
                    set_rows({PS(a1), a2v, a3v, PS(b1), PS(b2), b3P, PS(c1), c2v, c3P,
                              PS(d1), PS(d2), d3_of(PS(d1), PS(d2))});
                    F({a1, b1, b2, c1, d1, d2, P});
                    auto tc = casedetail::tf_coeffs(A);
                    auto dp = DerivedParams<ParamFraction>::from(A);
                    cs.vanishing = {tc.x3x3, tc.x2x3, tc.x2x2, tc.x1x2, dp.P - PS(P)};
                    cs.genericity = {eP, PS(a1) * PS(c1).times_rational(Rational(4)) - PS(b1, 2)};
                    cs.cls_f = {3, 4};
                    cs.cls_r = {5, 8};
                    cs.cls_g = {7, 12};
                    cs.ltc_f = PS(P) * upow(6);
                    cs.ltc_r = -(PS(c1, 2) * tc.x1x1).div_unit(PS(P)) * upow(10);
                    cs.ltc_g = (PS(c1, 3) * tc.x1x1 * tc.x1x1).div_unit(PS(P, 2)) * upow(14);
                    cs.identities = {{tc.x1x1,
                                      (eP * eP *
                                       (PS(a1) * PS(c1).times_rational(Rational(4)) - PS(b1, 2)))
                                          .div_unit(PS(c1, 2).times_rational(Rational(4)))}};
                    cs.witness = wit(5, 3, 7, 8, 4, 12);
                } else if (id == "L6.v") {
                    auto a1v = PS(b1, 2).div_unit(PS(c1)).times_rational(Rational(1, 4));
                    auto [a2v, a3v] = make_a_rowP(a1v);
                    set_rows({a1v, a2v, a3v, PS(b1), PS(b2), b3P, PS(c1), c2v, c3P,
                              PS(d1), PS(d2), d3_of(PS(d1), PS(d2))});
                    F({b1, b2, c1, d1, d2, P});
                    auto tc = casedetail::tf_coeffs(A);
                    auto dp = DerivedParams<ParamFraction>::from(A);
                    auto V = PS(P, 2) * PS(b2) +
                             (PS(P) * PS(b1) * PS(c1)).times_rational(Rational(2)) -
                             dp.Q * PS(c1, 2);
                    cs.vanishing = {tc.x3x3, tc.x2x3, tc.x2x2, tc.x1x2, tc.x1x1,
                                    dp.P - PS(P)};
                    cs.genericity = {eP, V};
                    cs.cls_f = {3, 4};
                    cs.cls_r = {5, 7};
                    cs.cls_g = {7, 10};
                    cs.ltc_f = PS(P) * upow(6);
                    cs.ltc_r = -V.div_unit(PS(P)) * upow(10);
                    cs.ltc_g = (V * V).div_unit(PS(P, 2) * PS(c1)) * upow(14);
                    cs.witness = wit(5, 3, 7, 7, 4, 10);
                } else {
                    // L6.vi / L6.vii / L6.viii: T a free unit; the b-, a- and
                    // d-rows are fully determined (d1 stays free only in vi).
                    auto Tv = (id == "L6.viii") ? PS(c1, 5).div_unit(PS(P, 2)) : PS(T);
                    if (id != "L6.viii") inv({T});
                    auto b2v = -(Tv * PS(c1)).div_unit(PS(P, 2)) -
                               (PS(b1) * PS(c1)).div_unit(PS(P));
                    auto b3v2 = (Tv * PS(c1, 2)).div_unit(PS(P, 3)).times_rational(Rational(2)) +
                                (PS(b1) * PS(c1, 2)).div_unit(PS(P, 2));
                    auto a1v = PS(b1, 2).div_unit(PS(c1)).times_rational(Rational(1, 4));
                    auto a2v = -(Tv * PS(b1)).div_unit(PS(P, 2)).times_rational(half) -
                               PS(b1, 2).div_unit(PS(P)).times_rational(Rational(1, 4));
                    auto a3v = (Tv * Tv * PS(c1)).div_unit(PS(P, 4)) +
                               (Tv * PS(b1) * PS(c1)).div_unit(PS(P, 3)) +
                               (PS(b1, 2) * PS(c1)).div_unit(PS(P, 2)).times_rational(Rational(1, 4));
                    ParamFraction d1v, d2v, d3v;
                    if (id == "L6.vi") {
                        d1v = PS(d1);
                        d2v = -PS(P, 2).div_unit(PS(c1, 2)).times_rational(half) -
                              (PS(c1) * PS(d1)).div_unit(PS(P));
                        d3v = PS(P).div_unit(PS(c1)).times_rational(Rational(2)) +
                              (PS(c1, 2) * PS(d1)).div_unit(PS(P, 2));
                    } else {
                        d1v = PS(P, 3).div_unit(PS(c1, 3));
                        d2v = -PS(P, 2).div_unit(PS(c1, 2)).times_rational(Rational(3, 2));
                        d3v = PS(P).div_unit(PS(c1)).times_rational(Rational(3));
                    }
                    set_rows({a1v, a2v, a3v, PS(b1), b2v, b3v2, PS(c1), c2v, c3P, d1v,
                              d2v, d3v});
                    F({b1, c1, P});
                    if (id != "L6.viii") cs.free_syms.push_back(T);
                    if (id == "L6.vi") cs.free_syms.push_back(d1);
                    cs.lift = LiftKind::six_vi;
                    auto tc = casedetail::tf_coeffs(A);
                    auto dp = DerivedParams<ParamFraction>::from(A);
                    auto big = PS(P, 2) * b2v +
                               (PS(P) * PS(b1) * PS(c1)).times_rational(Rational(2)) -
                               dp.Q * PS(c1, 2);
                    cs.vanishing = {tc.x3x3, tc.x2x3, tc.x2x2, tc.x1x2, tc.x1x1,
                                    dp.P - PS(P), big,
                                    dp.Q - (PS(P) * PS(b1) - Tv).div_unit(PS(c1))};
                    auto gprime_coeff = PS(P, 2) * d3v +
                                        (PS(P) * PS(c1) * d2v).times_rational(Rational(2)) +
                                        PS(c1, 2) * d1v;
                    cs.cls_f = {3, 4};
                    cs.cls_g = {6, 8};
                    cs.ltc_f = PS(P) * upow(6);
                    cs.ltc_g = gprime_coeff * upow(12);
                    cs.identities = {{gprime_coeff, PS(P, 3).div_unit(PS(c1))}};
                    if (id == "L6.vi") {
                        auto W = PS(P, 2) * PS(b1, 2) -
                                 (PS(P) * dp.S * PS(c1, 2)).times_rational(Rational(4)) -
                                 (PS(P) * Tv * PS(b1)).times_rational(Rational(2)) +
                                 (Tv * Tv).times_rational(Rational(4));
                        cs.genericity = {W};
                        cs.cls_r = {4, 6};
                        cs.ltc_r = W.div_unit(PS(P, 2).times_rational(Rational(4))) * upow(8);
                        cs.identities.push_back(
                            {W, (Tv * Tv).times_rational(Rational(4)) *
                                    (ParamFraction::one() -
                                     (PS(c1, 3) * PS(d1)).div_unit(PS(P, 3)))});
                        cs.witness = wit(4, 3, 6, 6, 4, 8);
                    } else if (id == "L6.vii") {
                        auto gen = PS(P, 2) * Tv - PS(c1, 5);
                        cs.genericity = {gen};
                        cs.vanishing.push_back(
                            dp.S - (PS(P, 2) * PS(b1, 2) -
                                    (PS(P) * Tv * PS(b1)).times_rational(Rational(2)) +
                                    (Tv * Tv).times_rational(Rational(4)))
                                       .div_unit(PS(P) * PS(c1, 2).times_rational(Rational(4))));
                        cs.cls_r = {3, 5};
                        cs.ltc_r = (Tv * Tv * gen).div_unit(PS(P, 5) * PS(c1)) * upow(6);
                        cs.witness = wit(3, 3, 6, 5, 4, 8);
                    } else {
                        cs.vanishing.push_back(PS(P, 2) * Tv - PS(c1, 5));
                        cs.cls_r = {3, 4};
                        cs.ltc_r = -PS(P, 3).div_unit(PS(c1, 2).times_rational(Rational(4))) *
                                   upow(6);
                        cs.witness = wit(3, 3, 6, 4, 4, 8);
                    }
                }
            }
        }
    } else {
        throw UnknownCase("unknown case id: " + id);
    }
    return cs;
}

/// Numeric instantiation: evaluate every entry of the symbolic map.
inline AffineMap<Rational> instantiate(const CaseSpec& cs, const Assignment& asg) {
    AffineMap<Rational> a;
    for (int i = 0; i < 3; ++i) {
        a.d[i] = cs.alpha.d[i].evaluate(asg);
        for (int j = 0; j < 3; ++j) a.m[i][j] = cs.alpha.m[i][j].evaluate(asg);
    }
    return a;
}

/// Draw one assignment of the case's free symbols from small nonzero
/// rationals, rejecting samples that kill a genericity hypothesis, a type
/// pivot, or the determinant.
inline Assignment sample_case(const CaseSpec& cs, std::mt19937_64& rng) {
    // integer samples (a special case of the small-rational bound) keep the
    // cleared-denominator integer product path effective downstream
    std::uniform_int_distribution<int> num(-7, 7);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Assignment asg;
        for (Sym s : cs.free_syms) {
            int n = 0;
            while (n == 0) n = num(rng);
            asg[s] = Rational(n);
        }
        bool ok = true;
        for (const auto& g : cs.genericity)
            if (g.evaluate(asg).is_zero()) ok = false;
        if (!ok) continue;
        auto a = instantiate(cs, asg);
        if (a.det().is_zero()) continue;
        // type pivots must survive the sample
        bool pivots = true;
        for (int j = 0; j < 3 && pivots; ++j)
            if (a.m[cs.type[j] - 1][j].is_zero()) pivots = false;
        if (!pivots) continue;
        return asg;
    }
    throw CaseConstraintViolated("sample_case: rejection sampling exhausted for " + cs.id);
}

/// Build the case's lift over any coefficient field.
template <class K>
Endomorphism<K> case_lift(const AffineMap<K>& a, LiftKind kind) {
    switch (kind) {
        case LiftKind::five_iii:
            return modified_lift(a, ModifiedLiftCase::L5_iii);
        case LiftKind::six_vi:
            return modified_lift(a, ModifiedLiftCase::L6_vi_viii);
        default:
            return hat_lift(a);
    }
}

}  // namespace polyaut

#endif
