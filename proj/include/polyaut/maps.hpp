#ifndef POLYAUT_MAPS_HPP
#define POLYAUT_MAPS_HPP

#include <array>
#include <vector>

#include "polyaut/polynomial.hpp"

namespace polyaut {

inline int generator_count(Ring r) { return r == Ring::three ? 3 : 6; }

/// Ring map given by generator images; source and target rings may differ
/// (the substitution map pi has source six, target three).
template <class K>
class Endomorphism {
public:
    Endomorphism(Ring source, Ring target)
        : source_(source), target_(target) {
        for (auto& im : images_) im = Polynomial<K>(target);
    }

    static Endomorphism identity(Ring ring) {
        Endomorphism e(ring, ring);
        for (int v = 0; v < generator_count(ring); ++v)
            e.images_[v] = Polynomial<K>::generator(ring, v);
        return e;
    }

    Ring source() const { return source_; }
    Ring target() const { return target_; }

    const Polynomial<K>& image(int var) const { return images_[var]; }
    void set_image(int var, Polynomial<K> p) {
        if (p.ring() != target_) throw RingMismatch("image ring tag differs from target");
        images_[var] = std::move(p);
    }

    /// The unique ring-map extension applied to p.
    Polynomial<K> apply(const Polynomial<K>& p) const {
        if (p.ring() != source_) throw RingMismatch("apply: polynomial not in source ring");
        // power cache per generator, grown on demand
        std::array<std::vector<Polynomial<K>>, 6> powers;
        auto power = [&](int v, int e) -> const Polynomial<K>& {
            auto& cache = powers[v];
            if (cache.empty()) {
                cache.push_back(Polynomial<K>::constant(target_, K::one()));
                cache.push_back(images_[v]);
            }
            while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images_[v]);
            return cache[e];
        };
        Polynomial<K> out(target_);
        for (const auto& [e, c] : p.terms()) {
            Polynomial<K> prod = Polynomial<K>::constant(target_, c);
            for (int v = 0; v < 6; ++v)
                if (e[v] != 0) prod = prod * power(v, e[v]);
            out = out + prod;
        }
        return out;
    }

    bool operator==(const Endomorphism& o) const {
        if (source_ != o.source_ || target_ != o.target_)
            throw RingMismatch("endomorphism comparison across different rings");
        for (int v = 0; v < generator_count(source_); ++v)
            if (images_[v] != o.images_[v]) return false;
        return true;
    }
    bool operator!=(const Endomorphism& o) const { return !(*this == o); }

private:
    Ring source_, target_;
    std::array<Polynomial<K>, 6> images_;
};

/// phi o psi = (phi(psi(x_1)), ..., phi(psi(x_n))).
template <class K>
Endomorphism<K> compose(const Endomorphism<K>& outer, const Endomorphism<K>& inner) {
    if (outer.source() != inner.target())
        throw RingMismatch("compose: outer source ring differs from inner target ring");
    Endomorphism<K> r(inner.source(), outer.target());
    for (int v = 0; v < generator_count(inner.source()); ++v)
        r.set_image(v, outer.apply(inner.image(v)));
    return r;
}

template <class K>
bool endo_equal(const Endomorphism<K>& a, const Endomorphism<K>& b) {
    return a == b;
}

/// Free-standing substitution: the ring map sending generator v to images[v].
template <class K>
Polynomial<K> substitute(const Polynomial<K>& p, const std::array<Polynomial<K>, 6>& images,
                         Ring target) {
    Endomorphism<K> e(p.ring(), target);
    for (int v = 0; v < generator_count(p.ring()); ++v) e.set_image(v, images[v]);
    return e.apply(p);
}

/// A coefficient-linear Leibniz map given by its generator images.
template <class K>
class Derivation {
public:
    explicit Derivation(Ring ring) : ring_(ring) {
        for (auto& im : images_) im = Polynomial<K>(ring);
    }

    Ring ring() const { return ring_; }
    const Polynomial<K>& image(int var) const { return images_[var]; }
    void set_image(int var, Polynomial<K> p) {
        if (p.ring() != ring_) throw RingMismatch("derivation image ring tag differs");
        images_[var] = std::move(p);
    }

    /// D(p) = sum_v partial(p, v) * D(v).
    Polynomial<K> derive(const Polynomial<K>& p) const {
        if (p.ring() != ring_) throw RingMismatch("derive: ring tags differ");
        Polynomial<K> out(ring_);
        for (int v = 0; v < generator_count(ring_); ++v) {
            if (images_[v].is_zero()) continue;
            Polynomial<K> pv = p.partial(v);
            if (!pv.is_zero()) out = out + pv * images_[v];
        }
        return out;
    }

    /// Smallest l <= cap with D^l(p) = 0.
    int nilpotency_index(const Polynomial<K>& p, int cap) const {
        Polynomial<K> q = p;
        for (int l = 0; l <= cap; ++l) {
            if (q.is_zero()) return l;
            q = derive(q);
        }
        throw CapExceeded("nilpotency cap exceeded; non-nilpotent or undersized cap");
    }

    /// (exp uD)(p) = sum_i u^i D^i(p) / i!, terminating at the nilpotency index.
    Polynomial<K> exp_apply(const K& u, const Polynomial<K>& p, int cap) const {
        Polynomial<K> out(ring_);
        Polynomial<K> q = p;
        K upow = K::one();
        Rational fact(1);
        for (int i = 0; i <= cap; ++i) {
            if (q.is_zero()) return out;
            if (i > 0) {
                upow = upow * u;
                fact = fact * Rational(i);
            }
            out = out + q.scale(upow).times_rational(fact.inverse());
            q = derive(q);
        }
        if (q.is_zero()) return out;
        throw CapExceeded("exp cap exceeded; non-nilpotent or undersized cap");
    }

    Endomorphism<K> exp_endomorphism(const K& u, int cap) const {
        Endomorphism<K> e(ring_, ring_);
        for (int v = 0; v < generator_count(ring_); ++v)
            e.set_image(v, exp_apply(u, Polynomial<K>::generator(ring_, v), cap));
        return e;
    }

private:
    Ring ring_;
    std::array<Polynomial<K>, 6> images_;
};

constexpr int kDefaultNilpotencyCap = 64;

}  // namespace polyaut

#endif
