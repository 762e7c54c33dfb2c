#ifndef POLYAUT_VERIFY_HPP
#define POLYAUT_VERIFY_HPP

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "polyaut/cases.hpp"
#include "polyaut/objects.hpp"
#include "polyaut/pclass.hpp"

namespace polyaut {

/// One check result.  `millis` is populated only when timing is requested so
/// that default reports are byte-identical across runs.
struct Report {
    std::string id;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string expected;
    std::string computed;
    std::string cls;      // class indices, "(g,d)" style, when meaningful
    std::string witness;  // accepted witness tuple, when meaningful
    uint64_t seed = 0;
    bool has_seed = false;
    long long millis = -1;
};

inline std::string witness_str(const CWitness& w) {
    std::ostringstream os;
    os << "(" << w.m4 << "," << w.m5 << "," << w.m6 << ";" << w.n4 << "," << w.n5
       << "," << w.n6 << ")";
    return os.str();
}

inline std::string class_str(const ClassIndex& c) {
    return "(" + std::to_string(c.gamma) + "," + std::to_string(c.delta) + ")";
}

inline nlohmann::ordered_json report_json(const Report& r, bool with_millis = false) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["status"] = r.status;
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    j["class"] = r.cls;
    j["witness"] = r.witness;
    if (r.has_seed) j["seed"] = r.seed;
    if (with_millis && r.millis >= 0) j["millis"] = r.millis;
    return j;
}

inline std::string report_line(const Report& r) {
    std::string line = "[" + r.status + "] " + r.id;
    if (r.status == "fail") {
        if (!r.expected.empty()) line += "  expected: " + r.expected;
        if (!r.computed.empty()) line += "  computed: " + r.computed;
    }
    return line;
}

namespace verifydetail {

/// Accumulates sub-checks into one Report; the first failure pins the
/// expected/computed strings.
struct Probe {
    Report rep;
    explicit Probe(std::string id) { rep.id = std::move(id); }
    void check(const std::string& what, bool ok, const std::string& expected = "",
               const std::string& computed = "") {
        if (ok) return;
        if (rep.status != "fail") {
            rep.status = "fail";
            rep.expected = expected.empty() ? what : what + ": " + expected;
            rep.computed = computed;
        }
    }
    Report done() {
        if (rep.status.empty()) rep.status = "pass";
        return rep;
    }
};

inline ParamFraction usym() { return ParamFraction::sym(Sym::u); }
inline ParamFraction vsym() { return ParamFraction::sym(Sym::v); }

}  // namespace verifydetail

// ---------------------------------------------------------------------------
// Foundational identities.
// ---------------------------------------------------------------------------

inline std::vector<Report> verify_foundations() {
    using verifydetail::Probe;
    using PF = ParamFraction;
    std::vector<Report> out;
    auto single = [&](const std::string& id, bool ok, const std::string& exp,
                      const std::string& got) {
        Probe p(id);
        p.check(id, ok, exp, got);
        out.push_back(p.done());
    };

    {  // derivation images on the generators and on r
        auto d = delta<Rational>();
        auto f = base_f<Rational>(), r = base_r<Rational>(), g = base_g<Rational>();
        auto e1 = (r * f).times_rational(Rational(-2));
        auto e2 = (gen3<Rational>(X1) * r).times_rational(Rational(4)) - g;
        auto e3 = (gen3<Rational>(X2) * r).times_rational(Rational(6)) +
                  (f * f).times_rational(Rational(2));
        single("foundations/derivation-x1", d.image(X1) == e1, e1.str(), d.image(X1).str());
        single("foundations/derivation-x2", d.image(X2) == e2, e2.str(), d.image(X2).str());
        single("foundations/derivation-x3", d.image(X3) == e3, e3.str(), d.image(X3).str());
        auto dr = d.derive(r), er = -(f * g);
        single("foundations/derivation-r", dr == er, er.str(), dr.str());
    }
    {  // scaling identities for the weight automorphism, symbolic in u
        auto uu = verifydetail::usym();
        auto b = beta<PF>(uu);
        auto f = base_f<PF>(), r = base_r<PF>(), g = base_g<PF>();
        single("foundations/scaling-f", b.apply(f) == f.scale(uu.pow(4)), "u^4*f",
               b.apply(f).str());
        single("foundations/scaling-r", b.apply(r) == r.scale(uu.pow(6)), "u^6*r",
               b.apply(r).str());
        single("foundations/scaling-g", b.apply(g) == g.scale(uu.pow(9)), "u^9*g",
               b.apply(g).str());
    }
    {  // conjugation law, symbolic in u and v
        auto uu = verifydetail::usym(), vv = verifydetail::vsym();
        auto lhs = compose(compose(beta<PF>(vv), phi<PF>(uu)),
                           beta<PF>(vv.inv({Sym::v})));
        auto rhs = phi<PF>(uu * vv.pow(7));
        single("foundations/conjugation", lhs == rhs, "phi_{u*v^7}", "");
    }
    {  // explicit expansions of the triangular exponential
        auto uu = verifydetail::usym();
        auto pp = phi_prime<PF>(uu);
        int counts[3] = {3, 7, 13};
        for (int i = 0; i < 3; ++i) {
            auto& im = pp.image(i);
            Probe p("foundations/exp-expansion-x" + std::to_string(i + 1));
            p.check("term count", im.term_count() == counts[i],
                    std::to_string(counts[i]), std::to_string(im.term_count()));
            auto lt = im.leading_term();
            Exp e = exp_zero();
            e[TF] = i + 2;
            e[TG] = i + 1;
            PF want = uu.pow(2 * (i + 1)).times_rational(Rational(i % 2 == 0 ? 1 : -1));
            p.check("leading monomial", lt.exp == e);
            p.check("leading coefficient", lt.coeff == want, want.str(), lt.coeff.str());
            auto c = classify(im);
            p.check("class", c && c->gamma == i + 1 && c->delta == i + 2,
                    class_str({i + 1, i + 2}), c ? class_str(*c) : "none");
            out.push_back(p.done());
        }
        {
            Probe p("foundations/exp-expansion-t");
            auto tr = Polynomial<PF>::generator(Ring::six, TR);
            auto tf = Polynomial<PF>::generator(Ring::six, TF);
            auto tg = Polynomial<PF>::generator(Ring::six, TG);
            auto want = tr - (tf * tg).scale(uu);
            p.check("t_r image", pp.image(TR) == want, want.str(), pp.image(TR).str());
            p.check("t_f fixed", pp.image(TF) == tf);
            p.check("t_g fixed", pp.image(TG) == tg);
            out.push_back(p.done());
        }
    }
    {  // substitution square on every generator, symbolic in u
        auto uu = verifydetail::usym();
        auto pp = phi_prime<PF>(uu);
        auto pi = pi_map<PF>();
        auto d3 = delta<PF>();
        bool ok = true;
        for (int v = 0; v < 6; ++v)
            ok = ok && pi.apply(pp.image(v)) ==
                           d3.exp_apply(uu, pi.image(v), kDefaultNilpotencyCap);
        single("foundations/projection-commutes", ok,
               "pi after triangular exp = exp after pi on all generators", "");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Case drivers.
// ---------------------------------------------------------------------------

template <class K>
struct CaseImages {
    Endomorphism<K> psi;
    std::optional<ClassIndex> cr, cf, cg;
    std::optional<CWitness> wit;
};

template <class K>
CaseImages<K> case_images(const AffineMap<K>& a, LiftKind kind, const K& u,
                          const AffineType& type) {
    auto lift = case_lift(a, kind);
    CaseImages<K> ci{compose(phi_prime<K>(u), lift), {}, {}, {}, {}};
    ci.cr = classify(ci.psi.image(TR));
    ci.cf = classify(ci.psi.image(TF));
    ci.cg = classify(ci.psi.image(TG));
    if (ci.cr && ci.cf && ci.cg) {
        CWitness w{ci.cr->gamma, ci.cf->gamma, ci.cg->gamma,
                   ci.cr->delta, ci.cf->delta, ci.cg->delta};
        if (w.satisfies(type)) ci.wit = w;
    }
    return ci;
}

inline Report verify_case_symbolic(const std::string& id) {
    using verifydetail::Probe;
    Probe p(id + "/symbolic");
    CaseSpec cs = case_spec(id);
    try {
        affine_type_symbolic(cs.alpha, cs.type);
    } catch (const TypeMismatch& e) {
        p.check("affine type", false, "type matches case", e.what());
    }
    for (size_t i = 0; i < cs.vanishing.size(); ++i)
        p.check("constraint " + std::to_string(i) + " annihilated",
                cs.vanishing[i].is_zero(), "0", cs.vanishing[i].str());
    for (size_t i = 0; i < cs.genericity.size(); ++i)
        p.check("genericity " + std::to_string(i) + " nonzero",
                !cs.genericity[i].is_zero(), "nonzero fraction", "0");
    p.check("determinant nonzero", !cs.alpha.det().is_zero(), "nonzero fraction", "0");
    for (size_t i = 0; i < cs.identities.size(); ++i)
        p.check("identity " + std::to_string(i), cs.identities[i].first == cs.identities[i].second,
                cs.identities[i].second.str(), cs.identities[i].first.str());
    if (cs.expects_in_B) {
        p.check("map lies in B", in_B(cs.alpha), "true", "false");
        return p.done();
    }
    auto lift = case_lift(cs.alpha, cs.lift);
    p.check("lift", is_lift(lift, cs.alpha), "x-images match and pi commutes", "");
    auto ci = case_images(cs.alpha, cs.lift, verifydetail::usym(), cs.type);
    auto check_img = [&](const char* name, const std::optional<ClassIndex>& got,
                         const ClassIndex& want, const Polynomial<ParamFraction>& img,
                         const ParamFraction& ltc) {
        p.check(std::string(name) + " class", got && *got == want, class_str(want),
                got ? class_str(*got) : "unclassified");
        if (got && *got == want) {
            auto lt = img.leading_term();
            p.check(std::string(name) + " leading coefficient", lt.coeff == ltc,
                    ltc.str(), lt.coeff.str());
        }
    };
    check_img("t_r image", ci.cr, cs.cls_r, ci.psi.image(TR), cs.ltc_r);
    check_img("t_f image", ci.cf, cs.cls_f, ci.psi.image(TF), cs.ltc_f);
    check_img("t_g image", ci.cg, cs.cls_g, ci.psi.image(TG), cs.ltc_g);
    p.check("witness", ci.wit && *ci.wit == cs.witness, witness_str(cs.witness),
            ci.wit ? witness_str(*ci.wit) : "rejected");
    auto rep = p.done();
    if (rep.status == "pass") {
        rep.cls = class_str(cs.cls_r) + class_str(cs.cls_f) + class_str(cs.cls_g);
        rep.witness = witness_str(cs.witness);
    }
    return rep;
}

inline Report verify_case_numeric(const std::string& id, uint64_t seed, int trials) {
    using verifydetail::Probe;
    Probe p(id + "/numeric");
    p.rep.seed = seed;
    p.rep.has_seed = true;
    CaseSpec cs = case_spec(id);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials && p.rep.status.empty(); ++t) {
        auto tag = "trial " + std::to_string(t) + " ";
        Assignment asg = sample_case(cs, rng);
        auto a = instantiate(cs, asg);
        if (cs.expects_in_B) {
            p.check(tag + "map lies in B", in_B(a), "true", "false");
            continue;
        }
        p.check(tag + "affine type", affine_type(a) == cs.type);
        auto lift = case_lift(a, cs.lift);
        p.check(tag + "lift", is_lift(lift, a));
        auto ci = case_images(a, cs.lift, asg.at(Sym::u), cs.type);
        auto check_img = [&](const char* name, const std::optional<ClassIndex>& got,
                             const ClassIndex& want, const Polynomial<Rational>& img,
                             const ParamFraction& ltc) {
            p.check(tag + name + std::string(" class"), got && *got == want,
                    class_str(want), got ? class_str(*got) : "unclassified");
            if (got && *got == want) {
                auto lt = img.leading_term();
                auto want_c = ltc.evaluate(asg);
                p.check(tag + name + std::string(" leading coefficient"),
                        lt.coeff == want_c, want_c.str(), lt.coeff.str());
            }
        };
        check_img("t_r image", ci.cr, cs.cls_r, ci.psi.image(TR), cs.ltc_r);
        check_img("t_f image", ci.cf, cs.cls_f, ci.psi.image(TF), cs.ltc_f);
        check_img("t_g image", ci.cg, cs.cls_g, ci.psi.image(TG), cs.ltc_g);
        p.check(tag + "witness", ci.wit && *ci.wit == cs.witness,
                witness_str(cs.witness), ci.wit ? witness_str(*ci.wit) : "rejected");
    }
    auto rep = p.done();
    if (rep.status == "pass" && !cs.expects_in_B) {
        rep.cls = class_str(cs.cls_r) + class_str(cs.cls_f) + class_str(cs.cls_g);
        rep.witness = witness_str(cs.witness);
    }
    return rep;
}

struct NumericMode {
    uint64_t seed = 1;
    int trials = 20;
};

/// Run one named case (family names expand to their branches), symbolic mode
/// plus optional numeric mode.
inline std::vector<Report> verify_lemma(const std::string& id,
                                        std::optional<NumericMode> numeric = {}) {
    std::vector<Report> out;
    for (const auto& branch : expand_case_id(id)) {
        out.push_back(verify_case_symbolic(branch));
        if (numeric)
            out.push_back(verify_case_numeric(branch, numeric->seed, numeric->trials));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Expansion-free image certification.
//
// For a ring map e and polynomial p, the image e(p) = sum_m c_m prod_v
// e(x_v)^{m_v} satisfies, exactly and without expanding:
//   * deg_w(e(m)) = sum_v m_v deg_w(e(x_v)) per monomial (degrees are
//     additive under products over an integral coefficient domain), so
//     deg_w(e(p)) <= max_m of that sum;
//   * lt(e(m)) = c_m prod_v lt(e(x_v))^{m_v}, since the sixth cyclic
//     lexicographic order is translation-invariant, making lt multiplicative;
//   * every non-leading term of e(m) sits strictly below lt(e(m)), so the
//     only contributions to the maximal candidate monomial are the per-
//     monomial leading terms; their exact coefficient sum decides lt(e(p)).
// The certificate fails (nullopt) only if that sum cancels to zero, in which
// case the caller must fall back to expansion.
// ---------------------------------------------------------------------------

template <class K>
struct ImageCert {
    Exp lt_exp;
    K lt_coeff;
    int32_t w1, w2;  // exact upper bounds for the image's weighted degrees
};

template <class K>
std::optional<ImageCert<K>> certify_image(const Endomorphism<K>& e,
                                          const Polynomial<K>& p) {
    if (p.is_zero()) return std::nullopt;
    int32_t w1g[6], w2g[6];
    Term<K> ltg[6];
    bool zero_img[6];
    for (int v = 0; v < 6; ++v) {
        const auto& im = e.image(v);
        zero_img[v] = im.is_zero();
        if (zero_img[v]) continue;
        w1g[v] = im.weighted_degree(kW1);
        w2g[v] = im.weighted_degree(kW2);
        ltg[v] = im.leading_term();
    }
    bool have = false;
    Exp cand{};
    K coeff = K::zero();
    int32_t w1 = kNegInfinity, w2 = kNegInfinity;
    for (const auto& [m, c] : p.terms()) {
        bool vanishes = false;
        for (int v = 0; v < 6 && !vanishes; ++v)
            if (m[v] > 0 && zero_img[v]) vanishes = true;
        if (vanishes) continue;
        int32_t mw1 = 0, mw2 = 0;
        Exp lt = exp_zero();
        K lc = c;
        for (int v = 0; v < 6; ++v) {
            if (m[v] == 0) continue;
            mw1 += m[v] * w1g[v];
            mw2 += m[v] * w2g[v];
            for (int i = 0; i < 6; ++i) lt[i] += m[v] * ltg[v].exp[i];
            lc = lc * ltg[v].coeff.pow(static_cast<unsigned>(m[v]));
        }
        w1 = std::max(w1, mw1);
        w2 = std::max(w2, mw2);
        CyclicLexLess less;
        if (!have || less(cand, lt)) {
            have = true;
            cand = lt;
            coeff = lc;
        } else if (!less(lt, cand)) {
            coeff = coeff + lc;
        }
    }
    if (!have || coeff.is_zero()) return std::nullopt;
    return ImageCert<K>{cand, coeff, w1, w2};
}

template <class K>
bool cert_in_class(const ImageCert<K>& cert, const ClassIndex& idx) {
    if (idx.gamma < 0 || idx.delta < 1) return false;
    const Exp& e = cert.lt_exp;
    if (e[X1] != 0 || e[X2] != 0 || e[X3] != 0 || e[TR] != 0) return false;
    if (e[TF] != idx.delta || e[TG] != idx.gamma) return false;
    return cert.w1 <= idx.gamma && cert.w2 <= idx.delta;
}

// ---------------------------------------------------------------------------
// Random-element class properties.
// ---------------------------------------------------------------------------

/// Degree formula: pi maps an element of the (gamma, delta) class to a
/// polynomial of total degree exactly 5*gamma + 2*delta.
inline Report verify_degree_formula(uint64_t seed, int samples_per_class = 100,
                                    int max_index = 5) {
    using verifydetail::Probe;
    Probe p("degree-formula");
    p.rep.seed = seed;
    p.rep.has_seed = true;
    auto pi = pi_map<Rational>();
    for (int g = 1; g <= max_index; ++g)
        for (int d = 1; d <= max_index; ++d)
            for (int s = 0; s < samples_per_class && p.rep.status.empty(); ++s) {
                uint64_t sub = seed ^ (uint64_t(g) << 24) ^ (uint64_t(d) << 16) ^
                               uint64_t(s);
                auto poly = random_class_element({g, d}, sub, 8);
                int want = 5 * g + 2 * d;
                int got = pi.apply(poly).total_degree();
                p.check("class (" + std::to_string(g) + "," + std::to_string(d) +
                            ") sample " + std::to_string(s),
                        got == want, std::to_string(want), std::to_string(got));
            }
    return p.done();
}

/// Composed-class containment: images of random class elements under
/// phi'_u composed with a lift land inside the predicted class.  Every image
/// is certified exactly without expansion; small indices are additionally
/// expanded in full and cross-checked against the certificate.
inline Report verify_class_composition(uint64_t seed, int samples = 10,
                                       int max_index = 3,
                                       long long term_budget = 5000000) {
    using verifydetail::Probe;
    Probe p("class-composition");
    p.rep.seed = seed;
    p.rep.has_seed = true;
    TermBudgetGuard guard(static_cast<std::size_t>(term_budget));
    std::mt19937_64 rng(seed);
    for (const char* id : {"L2.A", "L6.iv"}) {
        CaseSpec cs = case_spec(id);
        Assignment asg = sample_case(cs, rng);
        auto a = instantiate(cs, asg);
        auto lift = case_lift(a, cs.lift);
        auto u = asg.at(Sym::u);
        auto w = condition_C(lift, u, cs.type);
        p.check(std::string(id) + " witness", w.has_value(), "accepted witness",
                "rejected");
        if (!w) continue;
        auto psi = compose(phi_prime<Rational>(u), lift);
        for (int g = 1; g <= max_index; ++g)
            for (int d = 1; d <= max_index; ++d)
                for (int s = 0; s < samples && p.rep.status.empty(); ++s) {
                    std::string tag = std::string(id) + " class (" + std::to_string(g) +
                                      "," + std::to_string(d) + ") sample " +
                                      std::to_string(s);
                    auto poly = random_class_element(
                        {g, d}, seed ^ (uint64_t(g) << 20) ^ (uint64_t(d) << 12) ^
                                    uint64_t(s) ^ (id[1] == '2' ? 0u : 1u << 30),
                        6);
                    auto bound = compose_class_bound(*w, {g, d});
                    auto cert = certify_image(psi, poly);
                    p.check(tag + " certificate", cert.has_value(),
                            "non-cancelling leading term", "cancelled");
                    if (!cert) continue;
                    p.check(tag + " image in class", cert_in_class(*cert, bound),
                            "member of " + class_str(bound), "not a member");
                    // full expansion on the cheapest indices, first sample
                    if (s == 0 && g == 1 && d <= 2) {
                        auto img = psi.apply(poly);
                        p.check(tag + " expanded membership", in_class(img, bound),
                                "member of " + class_str(bound), "not a member");
                        auto lt = img.leading_term();
                        p.check(tag + " expanded lt matches certificate",
                                lt.exp == cert->lt_exp && lt.coeff == cert->lt_coeff,
                                cert->lt_coeff.str(), lt.coeff.str());
                    }
                }
    }
    return p.done();
}

// ---------------------------------------------------------------------------
// Composed-word degree bounds.
// ---------------------------------------------------------------------------

/// Total degree of pi applied to one monomial: exponents weighted by the
/// degrees (1,1,1,3,2,5) of the substituted polynomials.
inline int pi_monomial_degree(const Exp& e) {
    return e[X1] + e[X2] + e[X3] + 3 * e[TR] + 2 * e[TF] + 5 * e[TG];
}

/// Exact total degree of pi(p) certified monomial-by-monomial: requires a
/// unique maximizer of the per-monomial degree, which makes cancellation at
/// the top impossible.  Returns nullopt when the maximizer is not unique.
template <class K>
std::optional<int> certified_pi_degree(const Polynomial<K>& p) {
    if (p.is_zero()) return std::nullopt;
    int best = -1, count = 0;
    for (const auto& [e, c] : p.terms()) {
        int d = pi_monomial_degree(e);
        if (d > best) {
            best = d;
            count = 1;
        } else if (d == best) {
            ++count;
        }
    }
    if (count != 1) return std::nullopt;
    return best;
}

/// Word length 1: total degrees of the exponential automorphism's images.
inline Report verify_theorem_s1(uint64_t seed, int trials = 10) {
    using verifydetail::Probe;
    Probe p("word-degree/s1");
    p.rep.seed = seed;
    p.rep.has_seed = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    int want[3] = {9, 16, 23};
    for (int t = 0; t < trials && p.rep.status.empty(); ++t) {
        int n = 0;
        while (n == 0) n = num(rng);
        Rational u(n, den(rng));
        auto ph = phi<Rational>(u);
        for (int i = 0; i < 3; ++i) {
            int got = ph.image(i).total_degree();
            p.check("trial " + std::to_string(t) + " degree x" + std::to_string(i + 1),
                    got == want[i], std::to_string(want[i]), std::to_string(got));
        }
    }
    return p.done();
}

/// Word length 2: theta = exp(u1 D) . alpha . exp(u2 D) with a generic-type
/// affine factor of the first case shape.  Via the lift, theta(x_i) is the
/// projection of the six-variable image of exp(u2 D')(x_i) under
/// exp(u1 D') . alpha'.  The image's class and leading term are certified
/// without expansion; inside the class the per-monomial projection degree
/// d = i1+i2+i3+3i4+2i5+5i6 obeys d <= 5 w1 + 2 w2 with equality only at
/// t_f^delta t_g^gamma (the slack is 4i1+9i2+14i3+2i4), so the certified
/// leading term alone fixes deg theta(x_i) = 5 gamma' + 2 delta'.  With
/// deep_check the x1 image is also fully expanded and compared.
inline Report verify_theorem_s2(uint64_t seed, long long term_budget = 5000000,
                                bool deep_check = false,
                                const std::string& case_id = "L2.A") {
    using verifydetail::Probe;
    Probe p("word-degree/s2");
    p.rep.seed = seed;
    p.rep.has_seed = true;
    TermBudgetGuard guard(static_cast<std::size_t>(term_budget));
    try {
        CaseSpec cs = case_spec(case_id);
        std::mt19937_64 rng(seed);
        Assignment asg = sample_case(cs, rng);
        auto a = instantiate(cs, asg);
        p.check("affine factor outside B", !in_B(a), "true", "false");
        std::uniform_int_distribution<int> num(-5, 5);
        auto draw = [&]() {
            int n = 0;
            while (n == 0) n = num(rng);
            return Rational(n);
        };
        Rational u1 = draw(), u2 = draw();
        auto lift = case_lift(a, cs.lift);
        auto w = condition_C(lift, u1, cs.type);
        p.check("witness", w.has_value(), "accepted witness", "rejected");
        if (!w) return p.done();
        auto psi = compose(phi_prime<Rational>(u1), lift);
        auto inner = phi_prime<Rational>(u2);
        for (int i = 0; i < 3; ++i) {
            std::string xi = "x" + std::to_string(i + 1);
            auto bound = compose_class_bound(*w, {i + 1, i + 2});
            auto cert = certify_image(psi, inner.image(i));
            p.check(xi + " certificate", cert.has_value(),
                    "non-cancelling leading term", "cancelled");
            if (!cert) continue;
            p.check(xi + " image in predicted class", cert_in_class(*cert, bound),
                    "member of " + class_str(bound), "not a member");
            int want = 5 * bound.gamma + 2 * bound.delta;
            p.check(xi + " degree prediction at least 9", want >= 9, ">= 9",
                    std::to_string(want));
            if (deep_check && i == 0) {
                auto img = psi.apply(inner.image(i));
                p.check("x1 expanded membership", in_class(img, bound),
                        "member of " + class_str(bound), "not a member");
                auto lt = img.leading_term();
                p.check("x1 expanded lt matches certificate",
                        lt.exp == cert->lt_exp && lt.coeff == cert->lt_coeff,
                        cert->lt_coeff.str(), lt.coeff.str());
                auto deg = certified_pi_degree(img);
                p.check("x1 expanded projection degree", deg && *deg == want,
                        std::to_string(want), deg ? std::to_string(*deg) : "uncertified");
            }
        }
        if (p.rep.status.empty()) p.rep.witness = witness_str(*w);
    } catch (const BudgetExceeded& e) {
        p.check("term budget", false, "within " + std::to_string(term_budget) + " terms",
                e.what());
    }
    return p.done();
}

// ---------------------------------------------------------------------------
// Centralizer computation.
// ---------------------------------------------------------------------------

inline std::vector<Report> verify_centralizer() {
    using verifydetail::Probe;
    using PF = ParamFraction;
    std::vector<Report> out;
    {
        Probe p("centralizer/conjugation-symbolic");
        auto uu = verifydetail::usym();
        auto lhs = compose(compose(beta<PF>(uu), phi<PF>(PF::one())),
                           beta<PF>(uu.inv({Sym::u})));
        p.check("conjugate equals reparametrized exp", lhs == phi<PF>(uu.pow(7)));
        out.push_back(p.done());
    }
    {
        // phi_w = phi_1 only at w = 1: the x1-image difference is
        // (w-1) D(x1) + (w^2-1)/2 D^2(x1); the coefficient polynomials w-1 and
        // w^2-1 vanish together only at w = 1.
        Probe p("centralizer/unique-parameter");
        auto ww = verifydetail::vsym();
        auto d = delta<PF>();
        auto x1 = gen3<PF>(X1);
        auto diff = phi<PF>(ww).apply(x1) - phi<PF>(PF::one()).apply(x1);
        auto d1 = d.image(X1), d2 = d.derive(d.image(X1));
        auto expect = d1.scale(ww - PF::one()) +
                      d2.scale((ww * ww - PF::one()).times_rational(Rational(1, 2)));
        p.check("difference decomposition", diff == expect, expect.str(), diff.str());
        // roots: w - 1 vanishes only at 1; w^2 - 1 at +-1; intersection {1}
        Assignment at_one{{Sym::v, Rational(1)}};
        Assignment at_minus{{Sym::v, Rational(-1)}};
        p.check("vanishes at w=1", (ww - PF::one()).evaluate(at_one).is_zero() &&
                                       (ww * ww - PF::one()).evaluate(at_one).is_zero());
        p.check("does not vanish at w=-1",
                !(ww - PF::one()).evaluate(at_minus).is_zero());
        p.check("first coefficient nonzero", !d1.is_zero());
        p.check("second coefficient nonzero", !d2.is_zero());
        out.push_back(p.done());
    }
    {
        Probe p("centralizer/numeric-conjugate-differs");
        Rational two(2);
        auto lhs = compose(compose(beta<Rational>(two), phi<Rational>(Rational(1))),
                           beta<Rational>(Rational(1, 2)));
        p.check("conjugate by a non-unit scale differs", lhs != phi<Rational>(Rational(1)));
        out.push_back(p.done());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Batch driver and serialization.
// ---------------------------------------------------------------------------

inline std::vector<Report> verify_all(uint64_t seed, int trials,
                                      long long term_budget) {
    std::vector<Report> out = verify_foundations();
    for (const auto& id : case_ids()) {
        out.push_back(verify_case_symbolic(id));
        out.push_back(verify_case_numeric(id, seed, trials));
    }
    out.push_back(verify_degree_formula(seed));
    out.push_back(verify_class_composition(seed));
    out.push_back(verify_theorem_s1(seed));
    out.push_back(verify_theorem_s2(seed, term_budget, /*deep_check=*/true));
    auto cz = verify_centralizer();
    out.insert(out.end(), cz.begin(), cz.end());
    return out;
}

inline nlohmann::ordered_json reports_json(const std::vector<Report>& reps,
                                           bool with_millis = false) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reps) arr.push_back(report_json(r, with_millis));
    return arr;
}

inline bool all_pass(const std::vector<Report>& reps) {
    for (const auto& r : reps)
        if (r.status == "fail") return false;
    return true;
}

}  // namespace polyaut

#endif
