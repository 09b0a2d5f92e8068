#pragma once

#include <cstdint>
#include <string>

#include "spfk/freealg/free_poly.hpp"

namespace spfk {

struct ConcatProduct {
    static constexpr const char* name = "concatenation";
    template <Ring C>
    static FreePoly<C> apply(const FreePoly<C>& a, const FreePoly<C>& b) { return concat(a, b); }
};

struct ShuffleProduct {
    static constexpr const char* name = "shuffle";
    template <Ring C>
    static FreePoly<C> apply(const FreePoly<C>& a, const FreePoly<C>& b) { return shuffle(a, b); }
};

/// q = -1 shuffle. Graded-commutative only: elements of even degree are
/// central, which is all the hafnian kernels rely on.
struct AntiShuffleProduct {
    static constexpr const char* name = "antishuffle";
    template <Ring C>
    static FreePoly<C> apply(const FreePoly<C>& a, const FreePoly<C>& b) {
        return q_shuffle(a, b, C::from_integer(-1));
    }
};

/// FreePoly viewed as a ring under a chosen product.
template <Ring C, class Product>
class Algebra {
public:
    Algebra() = default;
    explicit Algebra(FreePoly<C> p) : poly_(std::move(p)) {}

    static Algebra zero() { return {}; }
    static Algebra one() { return Algebra(FreePoly<C>::unit()); }
    static Algebra from_integer(std::int64_t k) { return Algebra(FreePoly<C>::word({}, C::from_integer(k))); }
    static Algebra letter(Letter l) { return Algebra(FreePoly<C>::letter(l)); }
    static Algebra word(Word w) { return Algebra(FreePoly<C>::word(std::move(w))); }

    const FreePoly<C>& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    std::size_t size() const { return poly_.size(); }
    std::string canonical() const { return poly_.canonical(); }

    friend Algebra operator+(const Algebra& a, const Algebra& b) { return Algebra(a.poly_ + b.poly_); }
    friend Algebra operator-(const Algebra& a, const Algebra& b) { return Algebra(a.poly_ - b.poly_); }
    friend Algebra operator-(const Algebra& a) { return Algebra(-a.poly_); }
    friend Algebra operator*(const Algebra& a, const Algebra& b) {
        return Algebra(Product::apply(a.poly_, b.poly_));
    }
    friend Algebra operator*(const Algebra& a, const C& s) { return Algebra(a.poly_.scaled(s)); }
    Algebra& operator+=(const Algebra& o) {
        poly_ += o.poly_;
        return *this;
    }

    friend bool operator==(const Algebra&, const Algebra&) = default;

private:
    FreePoly<C> poly_;
};

using ConcatPoly = Algebra<Rational, ConcatProduct>;
using ShufflePoly = Algebra<Rational, ShuffleProduct>;
using AntiShufflePoly = Algebra<Rational, AntiShuffleProduct>;

template <>
inline constexpr bool is_commutative_v<ConcatPoly> = false;
template <>
inline constexpr bool is_commutative_v<AntiShufflePoly> = false;

static_assert(RationalAlgebra<ShufflePoly>);
static_assert(RationalAlgebra<AntiShufflePoly>);

}  // namespace spfk
