#ifndef POLYAUT_POLYNOMIAL_HPP
#define POLYAUT_POLYNOMIAL_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "polyaut/errors.hpp"
#include "polyaut/param.hpp"
#include "polyaut/rational.hpp"

namespace polyaut {

enum class Ring { three, six };

enum Var : int { X1 = 0, X2 = 1, X3 = 2, TR = 3, TF = 4, TG = 5 };

inline const char* var_name(int v) {
    static const char* names[6] = {"x1", "x2", "x3", "tr", "tf", "tg"};
    return names[v];
}

/// Exponent tuple (i1,...,i6) for (x1,x2,x3,t_r,t_f,t_g).
using Exp = std::array<int32_t, 6>;

using Weights = std::array<int32_t, 6>;

inline constexpr Weights kW1 = {1, 2, 3, 1, 0, 1};
inline constexpr Weights kW2 = {0, 0, 0, 0, 1, 0};

constexpr int kNegInfinity = std::numeric_limits<int32_t>::min();

/// Sixth cyclic lexicographic order: compare the t_g exponent first, then
/// lexicographically on (x1,x2,x3,t_r,t_f).
struct CyclicLexLess {
    bool operator()(const Exp& a, const Exp& b) const {
        if (a[5] != b[5]) return a[5] < b[5];
        for (int i = 0; i < 5; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

inline Exp exp_zero() { return Exp{0, 0, 0, 0, 0, 0}; }

inline int32_t weight_of(const Exp& e, const Weights& w) {
    int64_t s = 0;
    for (int i = 0; i < 6; ++i) s += static_cast<int64_t>(e[i]) * w[i];
    return static_cast<int32_t>(s);
}

namespace detail {
// Optional cap on intermediate term counts; SIZE_MAX means unlimited.
inline thread_local std::size_t term_limit = std::numeric_limits<std::size_t>::max();
}  // namespace detail

/// RAII scope for a term-count budget on polynomial products.
class TermBudgetGuard {
public:
    explicit TermBudgetGuard(std::size_t limit) : saved_(detail::term_limit) {
        detail::term_limit = limit;
    }
    ~TermBudgetGuard() { detail::term_limit = saved_; }
    TermBudgetGuard(const TermBudgetGuard&) = delete;
    TermBudgetGuard& operator=(const TermBudgetGuard&) = delete;

private:
    std::size_t saved_;
};

template <class K>
struct Term {
    Exp exp;
    K coeff;
};

/// Sparse multivariate polynomial over an exact coefficient field K, in the
/// six generators (three-variable polynomials carry zero t-exponents).
template <class K>
class Polynomial {
public:
    using TermMap = std::map<Exp, K, CyclicLexLess>;

    explicit Polynomial(Ring ring = Ring::six) : ring_(ring) {}

    static Polynomial zero(Ring ring) { return Polynomial(ring); }

    static Polynomial constant(Ring ring, const K& c) {
        Polynomial p(ring);
        if (!c.is_zero()) p.terms_[exp_zero()] = c;
        return p;
    }

    static Polynomial monomial(Ring ring, const Exp& e, const K& c) {
        Polynomial p(ring);
        p.check_exp(ring, e);
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }

    static Polynomial generator(Ring ring, int var) {
        Exp e = exp_zero();
        e[var] = 1;
        return monomial(ring, e, K::one());
    }

    Ring ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool operator==(const Polynomial& o) const {
        return ring_ == o.ring_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator+(const Polynomial& o) const {
        require_same_ring(o);
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        require_same_ring(o);
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        require_same_ring(o);
        const Polynomial& big = term_count() >= o.term_count() ? *this : o;
        const Polynomial& small = term_count() >= o.term_count() ? o : *this;
        // fast path for large products: exponents packed into one 60-bit key,
        // hash accumulation; small products stay on the ordered-map path
        bool packable = big.term_count() * small.term_count() >= 4096;
        Exp cap{};
        for (int i = 0; i < 6 && packable; ++i) {
            int32_t ma = 0, mb = 0;
            for (const auto& [e, c] : big.terms_) ma = std::max(ma, e[i]);
            for (const auto& [e, c] : small.terms_) mb = std::max(mb, e[i]);
            cap[i] = ma + mb;
            if (cap[i] >= (1 << 10)) packable = false;
        }
        if (packable) return multiply_packed(big, small);
        Polynomial r(ring_);
        for (const auto& [eb, cb] : small.terms_) {
            for (const auto& [ea, ca] : big.terms_) {
                Exp e;
                for (int i = 0; i < 6; ++i) {
                    e[i] = ea[i] + eb[i];
                    if (e[i] > (1 << 20)) throw ExponentOverflow("polynomial product exponent overflow");
                }
                r.add_term(e, ca * cb);
            }
            if (r.terms_.size() > detail::term_limit)
                throw BudgetExceeded("polynomial product exceeded the term budget");
        }
        return r;
    }

    Polynomial scale(const K& c) const {
        if (c.is_zero()) return Polynomial(ring_);
        Polynomial r = *this;
        for (auto& [e, k] : r.terms_) k = k * c;
        r.strip_zeros();
        return r;
    }

    Polynomial times_rational(const Rational& q) const {
        if (q.is_zero()) return Polynomial(ring_);
        Polynomial r = *this;
        for (auto& [e, k] : r.terms_) k = k.times_rational(q);
        r.strip_zeros();
        return r;
    }

    Polynomial pow(unsigned n) const {
        Polynomial r = constant(ring_, K::one());
        Polynomial b = *this;
        for (; n; n >>= 1) {
            if (n & 1) r = r * b;
            if (n > 1) b = b * b;
        }
        return r;
    }

    /// Formal partial derivative with respect to generator `var`.
    Polynomial partial(int var) const {
        Polynomial r(ring_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exp ne = e;
            ne[var] -= 1;
            r.add_term(ne, c.times_rational(Rational(e[var])));
        }
        return r;
    }

    int32_t weighted_degree(const Weights& w) const {
        if (terms_.empty()) return kNegInfinity;
        int32_t best = std::numeric_limits<int32_t>::min();
        for (const auto& [e, c] : terms_) best = std::max(best, weight_of(e, w));
        return best;
    }

    int32_t total_degree() const {
        if (terms_.empty()) return kNegInfinity;
        int32_t best = std::numeric_limits<int32_t>::min();
        for (const auto& [e, c] : terms_) {
            int32_t s = 0;
            for (int i = 0; i < 6; ++i) s += e[i];
            best = std::max(best, s);
        }
        return best;
    }

    /// Maximal term under the sixth cyclic lexicographic order.
    Term<K> leading_term() const {
        if (terms_.empty()) throw ZeroPolynomial("leading_term of the zero polynomial");
        auto it = terms_.rbegin();
        return Term<K>{it->first, it->second};
    }

    std::vector<Exp> support() const {
        std::vector<Exp> s;
        s.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.push_back(e);
        return s;
    }

    void add_term(const Exp& e, const K& c) {
        if (c.is_zero()) return;
        check_exp(ring_, e);
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Reinterpret a three-variable polynomial inside the six-variable ring.
    Polynomial widened() const {
        if (ring_ == Ring::six) return *this;
        Polynomial r(Ring::six);
        r.terms_ = terms_;
        return r;
    }

    /// Canonical text form: terms descending under the order,
    /// "<coeff>*x1^e1*...*tg^e6" with zero exponents omitted.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            auto [sign, coeff] = coeff_str(it->second);
            if (first) {
                if (sign < 0) out += "-";
                first = false;
            } else {
                out += sign < 0 ? " - " : " + ";
            }
            std::string mono = monomial_str(it->first);
            if (mono.empty()) {
                out += coeff;
            } else {
                if (coeff != "1") out += coeff + "*";
                out += mono;
            }
        }
        return out;
    }

    static std::string monomial_str(const Exp& e) {
        std::string out;
        for (int i = 0; i < 6; ++i)
            if (e[i] != 0) {
                if (!out.empty()) out += "*";
                out += var_name(i);
                if (e[i] != 1) out += "^" + std::to_string(e[i]);
            }
        return out;
    }

private:
    static uint64_t pack_exp(const Exp& e) {
        uint64_t k = 0;
        for (int i = 0; i < 6; ++i) k = (k << 10) | static_cast<uint64_t>(e[i]);
        return k;
    }
    static Exp unpack_exp(uint64_t k) {
        Exp e;
        for (int i = 5; i >= 0; --i) {
            e[i] = static_cast<int32_t>(k & 0x3ff);
            k >>= 10;
        }
        return e;
    }

    static Polynomial multiply_packed(const Polynomial& big, const Polynomial& small) {
        if constexpr (std::is_same_v<K, Rational>) {
            return multiply_packed_rational(big, small);
        } else {
            std::vector<std::pair<uint64_t, const K*>> bt;
            bt.reserve(big.terms_.size());
            for (const auto& [e, c] : big.terms_) bt.emplace_back(pack_exp(e), &c);
            std::unordered_map<uint64_t, K> acc;
            acc.reserve(big.terms_.size() * 2);
            for (const auto& [eb, cb] : small.terms_) {
                uint64_t kb = pack_exp(eb);
                for (const auto& [ka, ca] : bt) {
                    K prod = *ca * cb;
                    auto [it, inserted] = acc.try_emplace(ka + kb, std::move(prod));
                    if (!inserted) it->second.add_assign(prod);
                }
                if (acc.size() > detail::term_limit)
                    throw BudgetExceeded("polynomial product exceeded the term budget");
            }
            Polynomial r(big.ring_);
            for (auto& [k, c] : acc)
                if (!c.is_zero()) r.terms_.emplace(unpack_exp(k), std::move(c));
            return r;
        }
    }

    /// Rational products run over integers: clear each factor's denominator
    /// lcm up front, accumulate with in-place integer multiply-add (no gcds in
    /// the hot loop), divide the lcm back out once per result term.
    static Polynomial multiply_packed_rational(const Polynomial& big, const Polynomial& small) {
        auto den_lcm = [](const Polynomial& p) {
            mpz_class l(1);
            for (const auto& [e, c] : p.terms_)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den().get_mpz_t());
            return l;
        };
        mpz_class db = den_lcm(big), ds = den_lcm(small);
        auto scaled = [](const Polynomial& p, const mpz_class& d) {
            std::vector<std::pair<uint64_t, mpz_class>> v;
            v.reserve(p.terms_.size());
            mpz_class t;
            for (const auto& [e, c] : p.terms_) {
                mpz_divexact(t.get_mpz_t(), d.get_mpz_t(), c.raw().get_den().get_mpz_t());
                t *= c.raw().get_num();
                v.emplace_back(pack_exp(e), t);
            }
            return v;
        };
        auto bt = scaled(big, db), st = scaled(small, ds);
        std::unordered_map<uint64_t, mpz_class> acc;
        acc.reserve(big.terms_.size() * 2);
        for (const auto& [kb, cb] : st) {
            for (const auto& [ka, ca] : bt) {
                auto [it, inserted] = acc.try_emplace(ka + kb);
                if (inserted)
                    mpz_mul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
                else
                    mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            }
            if (acc.size() > detail::term_limit)
                throw BudgetExceeded("polynomial product exceeded the term budget");
        }
        mpz_class den = db * ds;
        Polynomial r(big.ring_);
        for (auto& [k, c] : acc) {
            if (sgn(c) == 0) continue;
            mpq_class q(std::move(c), den);
            q.canonicalize();
            r.terms_.emplace(unpack_exp(k), Rational(std::move(q)));
        }
        return r;
    }

    static std::pair<int, std::string> coeff_str(const Rational& c) {
        return {c.sign(), (c.sign() < 0 ? -c : c).str()};
    }
    static std::pair<int, std::string> coeff_str(const ParamFraction& c) {
        if (c.numerator().size() == 1) {
            const Rational& lead = c.numerator().begin()->second;
            if (lead.sign() < 0) return {-1, (-c).str()};
            return {1, c.str()};
        }
        return {1, "(" + c.str() + ")"};
    }

    static void check_exp(Ring ring, const Exp& e) {
        for (int i = 0; i < 6; ++i)
            if (e[i] < 0) throw std::invalid_argument("negative exponent");
        if (ring == Ring::three && (e[3] != 0 || e[4] != 0 || e[5] != 0))
            throw RingMismatch("t-variable exponent in a three-variable polynomial");
    }

    void require_same_ring(const Polynomial& o) const {
        if (ring_ != o.ring_) throw RingMismatch("polynomial ring tags differ");
    }

    void strip_zeros() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }

    Ring ring_;
    TermMap terms_;
};

/// det of the 3x3 matrix of partials of (h1,h2,h3) w.r.t. (x1,x2,x3).
template <class K>
Polynomial<K> jacobian_det3(const Polynomial<K>& h1, const Polynomial<K>& h2,
                            const Polynomial<K>& h3) {
    if (h1.ring() != Ring::three || h2.ring() != Ring::three || h3.ring() != Ring::three)
        throw RingMismatch("jacobian_det3 expects three-variable polynomials");
    std::array<std::array<Polynomial<K>, 3>, 3> J;
    const Polynomial<K>* hs[3] = {&h1, &h2, &h3};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) J[i][j] = hs[i]->partial(j);
    auto minor2 = [&](int r0, int r1, int c0, int c1) {
        return J[r0][c0] * J[r1][c1] - J[r0][c1] * J[r1][c0];
    };
    return J[0][0] * minor2(1, 2, 1, 2) - J[0][1] * minor2(1, 2, 0, 2) +
           J[0][2] * minor2(1, 2, 0, 1);
}

}  // namespace polyaut

#endif
