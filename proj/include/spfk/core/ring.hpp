#pragma once

#include <concepts>
#include <cstdint>

#include "spfk/core/rational.hpp"

namespace spfk {

/// The ring contract every kernel is generic over. Commutativity is a
/// semantic property that the concept cannot express; see is_commutative_v.
template <class R>
concept Ring = std::regular<R> && requires(const R a, const R b, std::int64_t k) {
    { R::zero() } -> std::same_as<R>;
    { R::one() } -> std::same_as<R>;
    { R::from_integer(k) } -> std::same_as<R>;
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { a.is_zero() } -> std::same_as<bool>;
};

/// A ring that is also a Q-algebra, so division by n! is available.
template <class R>
concept RationalAlgebra = Ring<R> && requires(const R a, const Rational q) {
    { a * q } -> std::same_as<R>;
};

template <class R>
inline constexpr bool is_commutative_v = true;

/// k * a for an integer k.
template <Ring R>
R times(const R& a, std::int64_t k) {
    return a * R::from_integer(k);
}

/// a^e by repeated squaring.
template <Ring R>
R power(R a, unsigned e) {
    R result = R::one();
    while (e != 0) {
        if (e & 1U) result = result * a;
        e >>= 1U;
        if (e != 0) a = a * a;
    }
    return result;
}

static_assert(RationalAlgebra<Rational>);

}  // namespace spfk
