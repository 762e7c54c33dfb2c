#ifndef POLYAUT_PARAM_HPP
#define POLYAUT_PARAM_HPP

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "polyaut/errors.hpp"
#include "polyaut/rational.hpp"

namespace polyaut {

/// Fixed roster of parameter symbols. Row shorthand: a_j = a_{1,j},
/// b_j = a_{2,j}, c_j = a_{3,j}; d_i is the translation; u, v are the
/// exponential parameters; P, Q, S, T are the derived combinations.
enum class Sym : int {
    a1, a2, a3, b1, b2, b3, c1, c2, c3, d1, d2, d3, u, v, P, Q, S, T
};

constexpr int kNumSyms = 18;

inline const char* sym_name(Sym s) {
    static const char* names[kNumSyms] = {"a1", "a2", "a3", "b1", "b2", "b3",
                                          "c1", "c2", "c3", "d1", "d2", "d3",
                                          "u",  "v",  "P",  "Q",  "S",  "T"};
    return names[static_cast<int>(s)];
}

using SymExp = std::array<int16_t, 18>;

inline SymExp sym_exp_zero() {
    SymExp e{};
    e.fill(0);
    return e;
}

/// Sparse polynomial in the parameter symbols over Rational.
/// Terms keyed exponent-lexicographically in roster order.
using ParamPoly = std::map<SymExp, Rational>;

using Assignment = std::map<Sym, Rational>;

/// Element of the localization of Q[params] at the monomials in a set of
/// invertible symbols: a ParamPoly numerator over a monomial denominator.
/// Normal form: no symbol with positive denominator exponent divides every
/// numerator term; zero has denominator 1 (all-zero exponents).
class ParamFraction {
public:
    ParamFraction() : den_(sym_exp_zero()) {}

    static ParamFraction rat(const Rational& q) {
        ParamFraction f;
        if (!q.is_zero()) f.num_[sym_exp_zero()] = q;
        return f;
    }
    static ParamFraction zero() { return ParamFraction(); }
    static ParamFraction one() { return rat(Rational(1)); }

    static ParamFraction sym(Sym s, int exp = 1) {
        ParamFraction f;
        SymExp e = sym_exp_zero();
        e[static_cast<int>(s)] = static_cast<int16_t>(exp);
        f.num_[e] = Rational(1);
        return f;
    }

    /// c * prod syms^exps / prod den_syms^den_exps
    static ParamFraction make(const Rational& c, const SymExp& num_exp, const SymExp& den_exp) {
        ParamFraction f;
        if (!c.is_zero()) f.num_[num_exp] = c;
        f.den_ = den_exp;
        f.normalize();
        return f;
    }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const {
        return num_.size() == 1 && num_.begin()->first == sym_exp_zero() &&
               num_.begin()->second.is_one() && den_ == sym_exp_zero();
    }

    const ParamPoly& numerator() const { return num_; }
    const SymExp& denominator() const { return den_; }

    ParamFraction operator+(const ParamFraction& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        // common denominator: pointwise max of the two monomials
        SymExp den;
        SymExp lift_a = sym_exp_zero(), lift_b = sym_exp_zero();
        for (int i = 0; i < kNumSyms; ++i) {
            den[i] = std::max(den_[i], o.den_[i]);
            lift_a[i] = static_cast<int16_t>(den[i] - den_[i]);
            lift_b[i] = static_cast<int16_t>(den[i] - o.den_[i]);
        }
        ParamFraction r;
        r.den_ = den;
        r.num_ = shifted(num_, lift_a);
        for (const auto& [e, c] : shifted(o.num_, lift_b)) add_term(r.num_, e, c);
        r.normalize();
        return r;
    }

    ParamFraction operator-() const {
        ParamFraction r = *this;
        for (auto& [e, c] : r.num_) c = -c;
        return r;
    }

    ParamFraction operator-(const ParamFraction& o) const { return *this + (-o); }

    ParamFraction operator*(const ParamFraction& o) const {
        if (is_zero() || o.is_zero()) return zero();
        ParamFraction r;
        for (int i = 0; i < kNumSyms; ++i) r.den_[i] = static_cast<int16_t>(den_[i] + o.den_[i]);
        for (const auto& [ea, ca] : num_)
            for (const auto& [eb, cb] : o.num_) {
                SymExp e;
                for (int i = 0; i < kNumSyms; ++i) e[i] = static_cast<int16_t>(ea[i] + eb[i]);
                add_term(r.num_, e, ca * cb);
            }
        r.normalize();
        return r;
    }

    /// In-place accumulation; mirrors Rational::add_assign for product loops.
    void add_assign(const ParamFraction& o) { *this = *this + o; }

    ParamFraction times_rational(const Rational& q) const {
        if (q.is_zero()) return zero();
        ParamFraction r = *this;
        for (auto& [e, c] : r.num_) c = c * q;
        return r;
    }

    ParamFraction pow(unsigned e) const {
        ParamFraction r = one(), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * b;
            if (e > 1) b = b * b;
        }
        return r;
    }

    /// 1/this for a single-term numerator. The invertible set guards which
    /// symbols may move into a denominator.
    ParamFraction inv(const std::set<Sym>& invertible) const {
        if (num_.size() != 1)
            throw NotAMonomialUnit("inv: numerator is not a single term");
        const auto& [e, c] = *num_.begin();
        for (int i = 0; i < kNumSyms; ++i)
            if (e[i] > 0 && !invertible.count(static_cast<Sym>(i)))
                throw NotAMonomialUnit(std::string("inv: non-invertible symbol ") +
                                       sym_name(static_cast<Sym>(i)));
        ParamFraction r;
        r.num_[den_] = c.inverse();
        r.den_ = e;
        r.normalize();
        return r;
    }

    /// Division by a monomial unit (single-term divisor over invertible symbols).
    ParamFraction div(const ParamFraction& o, const std::set<Sym>& invertible) const {
        return *this * o.inv(invertible);
    }

    /// Unguarded division by a single-term divisor. Callers must know the
    /// divisor's symbols are invertible in the ambient case.
    ParamFraction div_unit(const ParamFraction& o) const {
        if (o.num_.size() != 1) throw NotAMonomialUnit("div_unit: divisor is not a single term");
        ParamFraction i;
        i.num_[o.den_] = o.num_.begin()->second.inverse();
        i.den_ = o.num_.begin()->first;
        i.normalize();
        return *this * i;
    }

    bool operator==(const ParamFraction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const ParamFraction& o) const { return !(*this == o); }

    /// Exact value under an assignment of all appearing symbols.
    Rational evaluate(const Assignment& a) const {
        for (int i = 0; i < kNumSyms; ++i)
            if (den_[i] > 0) {
                auto it = a.find(static_cast<Sym>(i));
                if (it == a.end())
                    throw std::invalid_argument(std::string("evaluate: unassigned symbol ") +
                                                sym_name(static_cast<Sym>(i)));
                if (it->second.is_zero())
                    throw ZeroDenominator(std::string("evaluate: zero assigned to denominator symbol ") +
                                          sym_name(static_cast<Sym>(i)));
            }
        Rational total(0);
        for (const auto& [e, c] : num_) {
            Rational t = c;
            for (int i = 0; i < kNumSyms; ++i)
                if (e[i] != 0) {
                    auto it = a.find(static_cast<Sym>(i));
                    if (it == a.end())
                        throw std::invalid_argument(std::string("evaluate: unassigned symbol ") +
                                                    sym_name(static_cast<Sym>(i)));
                    t = t * it->second.pow(static_cast<unsigned>(e[i]));
                }
            total += t;
        }
        Rational den(1);
        for (int i = 0; i < kNumSyms; ++i)
            if (den_[i] != 0) den = den * a.at(static_cast<Sym>(i)).pow(static_cast<unsigned>(den_[i]));
        return total / den;
    }

    std::set<Sym> symbols() const {
        std::set<Sym> s;
        for (const auto& [e, c] : num_)
            for (int i = 0; i < kNumSyms; ++i)
                if (e[i] != 0) s.insert(static_cast<Sym>(i));
        for (int i = 0; i < kNumSyms; ++i)
            if (den_[i] != 0) s.insert(static_cast<Sym>(i));
        return s;
    }

    /// Canonical text form. Terms in descending exponent-lex roster order,
    /// monomial denominator appended as "/ c1^2*P^3" when nontrivial.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (auto it = num_.rbegin(); it != num_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational ac = c.sign() < 0 ? -c : c;
            if (first) {
                if (c.sign() < 0) out += "-";
                first = false;
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            std::string mono = monomial_str(e);
            if (mono.empty()) {
                out += ac.str();
            } else {
                if (!ac.is_one()) out += ac.str() + "*";
                out += mono;
            }
        }
        std::string d = monomial_str(den_);
        if (!d.empty()) {
            if (num_.size() > 1) out = "(" + out + ")";
            out += "/" + d;
        }
        return out;
    }

private:
    static std::string monomial_str(const SymExp& e) {
        std::string out;
        for (int i = 0; i < kNumSyms; ++i)
            if (e[i] != 0) {
                if (!out.empty()) out += "*";
                out += sym_name(static_cast<Sym>(i));
                if (e[i] != 1) out += "^" + std::to_string(e[i]);
            }
        return out;
    }

    static ParamPoly shifted(const ParamPoly& p, const SymExp& by) {
        bool trivial = true;
        for (int i = 0; i < kNumSyms; ++i)
            if (by[i] != 0) trivial = false;
        if (trivial) return p;
        ParamPoly r;
        for (const auto& [e, c] : p) {
            SymExp ne;
            for (int i = 0; i < kNumSyms; ++i) ne[i] = static_cast<int16_t>(e[i] + by[i]);
            r[ne] = c;
        }
        return r;
    }

    static void add_term(ParamPoly& p, const SymExp& e, const Rational& c) {
        auto it = p.find(e);
        if (it == p.end()) {
            if (!c.is_zero()) p.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) p.erase(it);
        }
    }

    /// Divide out the largest denominator-symbol monomial dividing every
    /// numerator term; reset the denominator of zero to 1.
    void normalize() {
        if (num_.empty()) {
            den_ = sym_exp_zero();
            return;
        }
        for (int i = 0; i < kNumSyms; ++i) {
            if (den_[i] <= 0) continue;
            int16_t m = den_[i];
            for (const auto& [e, c] : num_) m = std::min(m, e[i]);
            if (m > 0) {
                den_[i] = static_cast<int16_t>(den_[i] - m);
                ParamPoly shiftedp;
                for (const auto& [e, c] : num_) {
                    SymExp ne = e;
                    ne[i] = static_cast<int16_t>(ne[i] - m);
                    shiftedp[ne] = c;
                }
                num_ = std::move(shiftedp);
            }
        }
    }

    ParamPoly num_;
    SymExp den_;
};

/// Invert a monomial unit, checking the invertible set.
inline ParamFraction invert_monomial(const ParamFraction& a, const std::set<Sym>& invertible) {
    return a.inv(invertible);
}

}  // namespace polyaut

#endif
