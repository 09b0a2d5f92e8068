#pragma once

#include "spfk/freealg/free_poly.hpp"

namespace spfk {

/// S(w) = (-1)^{|w|} mirror(w), the antipode of the shuffle Hopf algebra.
template <Ring C = Rational>
FreePoly<C> antipode(const Word& w) {
    return FreePoly<C>::word(mirror(w), C::from_integer(w.size() % 2 == 0 ? 1 : -1));
}

/// (S * id)(w) = sum over factorizations w = uv of (-1)^{|u|} mirror(u) sh v.
/// Zero for every non-empty word, the unit for the empty word.
template <Ring C = Rational>
FreePoly<C> antipode_convolution(const Word& w) {
    FreePoly<C> total;
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
        Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
        Word v(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
        total += shuffle(antipode<C>(u), FreePoly<C>::word(std::move(v)));
    }
    return total;
}

}  // namespace spfk
