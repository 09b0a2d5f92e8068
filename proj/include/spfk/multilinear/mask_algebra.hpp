#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spfk/core/ring.hpp"

namespace spfk {

using Mask = std::uint64_t;

inline constexpr int kMaxGenerators = 64;

/// Thrown when a generator index does not fit the 64-bit mask.
class capacity_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

inline Mask generator_mask(int i) {
    if (i < 0 || i >= kMaxGenerators) {
        throw capacity_error("generator index " + std::to_string(i) + " exceeds capacity of 64");
    }
    return Mask{1} << static_cast<unsigned>(i);
}

/// Mask of the generators in `idx` (0-based, no repeats required).
inline Mask mask_of(std::span<const int> idx) {
    Mask m = 0;
    for (int i : idx) m |= generator_mask(i);
    return m;
}

/// Sign of eta_A * eta_B for disjoint A, B (each written in increasing order):
/// (-1)^{#{(a,b) in A x B : a > b}}.
inline int wedge_sign(Mask a, Mask b) {
    int inversions = 0;
    while (b != 0) {
        const int low = std::countr_zero(b);
        const Mask above = (low == 63) ? Mask{0} : (~Mask{0} << static_cast<unsigned>(low + 1));
        inversions += std::popcount(a & above);
        b &= b - 1;
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

/// Multilinear algebra on at most 64 generators, one term per subset mask.
/// Anticommuting = true gives the Grassmann algebra (eta_i eta_j = -eta_j eta_i),
/// false the commutative algebra of square-zero symbols xi_i.
template <Ring R, bool Anticommuting>
class MaskElement {
public:
    using Terms = std::map<Mask, R>;

    MaskElement() = default;

    static MaskElement zero() { return {}; }
    static MaskElement one() { return scalar(R::one()); }
    static MaskElement scalar(const R& c) {
        MaskElement e;
        e.add_term(0, c);
        return e;
    }
    static MaskElement generator(int i, const R& c = R::one()) {
        MaskElement e;
        e.add_term(generator_mask(i), c);
        return e;
    }
    /// c * g_{idx[0]} g_{idx[1]} ..., reordered with sign if anticommuting.
    static MaskElement monomial(std::span<const int> idx, const R& c = R::one()) {
        MaskElement e = scalar(c);
        for (int i : idx) e = e * generator(i);
        return e;
    }

    void add_term(Mask m, const R& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    R coefficient(Mask m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? R::zero() : it->second;
    }

    friend MaskElement operator+(MaskElement a, const MaskElement& b) {
        for (const auto& [m, c] : b.terms_) a.add_term(m, c);
        return a;
    }
    friend MaskElement operator-(MaskElement a, const MaskElement& b) {
        for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
        return a;
    }
    friend MaskElement operator-(const MaskElement& a) {
        MaskElement r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend MaskElement operator*(const MaskElement& a, const MaskElement& b) {
        MaskElement r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                if ((ma & mb) != 0) continue;
                R c = ca * cb;
                if constexpr (Anticommuting) {
                    if (wedge_sign(ma, mb) < 0) c = -c;
                }
                r.add_term(ma | mb, c);
            }
        return r;
    }
    friend MaskElement operator*(const MaskElement& a, const R& s) {
        MaskElement r;
        for (const auto& [m, c] : a.terms_) r.add_term(m, c * s);
        return r;
    }

    friend bool operator==(const MaskElement&, const MaskElement&) = default;

private:
    Terms terms_;
};

template <Ring R>
using GrassmannElement = MaskElement<R, true>;
template <Ring R>
using SquareZeroElement = MaskElement<R, false>;

template <Ring R>
GrassmannElement<R> wedge_mul(const GrassmannElement<R>& a, const GrassmannElement<R>& b) {
    return a * b;
}

template <Ring R>
SquareZeroElement<R> sz_mul(const SquareZeroElement<R>& a, const SquareZeroElement<R>& b) {
    return a * b;
}

/// Coefficient of g_{i1} g_{i2} ... g_{in} for strictly increasing I.
/// For Grassmann elements this equals the Berezin integral over d eta taken in
/// the reversed order of I.
template <Ring R, bool A>
R berezin_extract(const MaskElement<R, A>& t, std::span<const int> idx) {
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i - 1] >= idx[i]) throw std::invalid_argument("berezin_extract: index list must be strictly increasing");
    return t.coefficient(mask_of(idx));
}

/// Left derivation d/d eta_i: pushes eta_i to the front with a sign and erases it.
template <Ring R>
GrassmannElement<R> left_derivative(const GrassmannElement<R>& t, int i) {
    const Mask g = generator_mask(i);
    GrassmannElement<R> r;
    for (const auto& [m, c] : t.terms()) {
        if ((m & g) == 0) continue;
        const int below = std::popcount(m & (g - 1));
        r.add_term(m & ~g, below % 2 == 0 ? c : -c);
    }
    return r;
}

/// Iterated Berezin integral: applies d/d eta_{order[0]} first.
template <Ring R>
GrassmannElement<R> berezin_integral(GrassmannElement<R> t, std::span<const int> order) {
    for (int i : order) t = left_derivative(t, i);
    return t;
}

/// e * q for a rational scalar q, coefficientwise.
template <RationalAlgebra R, bool A>
MaskElement<R, A> scale_rational(const MaskElement<R, A>& e, const Rational& q) {
    MaskElement<R, A> r;
    for (const auto& [m, c] : e.terms()) r.add_term(m, c * q);
    return r;
}

/// exp(H) = sum H^n / n! for H with only even terms of degree >= 2, which
/// makes H central and nilpotent so the series terminates.
template <RationalAlgebra R, bool A>
MaskElement<R, A> exp_even(const MaskElement<R, A>& h) {
    for (const auto& [m, c] : h.terms()) {
        const int deg = std::popcount(m);
        if (deg == 0 || deg % 2 != 0) throw std::invalid_argument("non-central exponent");
    }
    MaskElement<R, A> result = MaskElement<R, A>::one();
    MaskElement<R, A> term = result;
    for (long k = 1; !term.is_zero(); ++k) {
        term = scale_rational(term * h, Rational(BigInt(1), BigInt(k)));
        result = result + term;
    }
    return result;
}

/// Left-to-right product f_1 f_2 ... f_m; the empty product is 1.
template <Ring R, bool A>
MaskElement<R, A> ordered_product(const std::vector<MaskElement<R, A>>& factors) {
    MaskElement<R, A> r = MaskElement<R, A>::one();
    for (const auto& f : factors) r = r * f;
    return r;
}

}  // namespace spfk
