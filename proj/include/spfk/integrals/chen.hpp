#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spfk/core/rational.hpp"
#include "spfk/core/sampler.hpp"
#include "spfk/freealg/free_poly.hpp"

namespace spfk {

/// R(z1,...,zr) = 1 / (z1 (z1+z2) ... (z1+...+zr)). R() = 1.
inline Rational r_value(std::span<const Rational> zs) {
    Rational partial, denom = Rational::one();
    for (const auto& z : zs) {
        partial += z;
        if (partial.is_zero()) throw std::domain_error("r_value: zero partial sum");
        denom *= partial;
    }
    return denom.inverse();
}

inline Rational r_value(std::initializer_list<Rational> zs) {
    return r_value(std::span<const Rational>(zs.begin(), zs.size()));
}

/// The family phi_i(t) = t^(x_i - 1) on (0,1), one exponent per letter id.
///
/// Iterated integrals put the first letter of a word at the smallest time:
///   <i1...ir> = integral over 0 < t1 < ... < tr < 1 of phi_i1(t1)...phi_ir(tr)
///             = R(x_i1, ..., x_ir).
class MonomialFamily {
public:
    MonomialFamily() = default;
    explicit MonomialFamily(std::vector<Rational> exponents) : exponents_(std::move(exponents)) {
        for (const auto& x : exponents_)
            if (x.sign() <= 0) throw std::invalid_argument("MonomialFamily: exponents must be positive");
    }

    /// Exponents 1 + p/q; keeping them >= 1 makes every product of members
    /// integrable again.
    static MonomialFamily sample(std::size_t size, SeededSampler& s, std::int64_t bound = 9) {
        std::vector<Rational> xs;
        for (std::size_t i = 0; i < size; ++i) xs.push_back(Rational::one() + s.positive_rational(bound));
        return MonomialFamily(std::move(xs));
    }

    std::size_t size() const { return exponents_.size(); }
    const std::vector<Rational>& exponents() const { return exponents_; }

    const Rational& exponent(Letter l) const {
        if (l.id >= exponents_.size()) throw std::out_of_range("letter " + std::to_string(l.id) + " outside the family");
        return exponents_[l.id];
    }

private:
    std::vector<Rational> exponents_;
};

/// Exponent of the pointwise product t^(x1-1) ... t^(xk-1).
inline Rational product_exponent(std::span<const Rational> xs) {
    Rational e = Rational::one();
    for (const auto& x : xs) e += x - Rational::one();
    return e;
}

inline Rational chen_form(const Word& w, const MonomialFamily& fam) {
    std::vector<Rational> zs;
    zs.reserve(w.size());
    for (Letter l : w) zs.push_back(fam.exponent(l));
    return r_value(zs);
}

inline Rational chen_form(const FreePoly<Rational>& p, const MonomialFamily& fam) {
    Rational total;
    for (const auto& [w, c] : p.terms()) total += c * chen_form(w, fam);
    return total;
}

/// Integrates c t^e inward-out: F0 = 1, F_j(t) = int_0^t F_{j-1}(s) s^(x_j - 1) ds,
/// returning F_r(1). Independent of r_value.
inline Rational iterated_integral_oracle(std::span<const Rational> xs) {
    Rational coeff = Rational::one(), power;
    for (const auto& x : xs) {
        const Rational integrand_power = power + x - Rational::one();
        if (integrand_power <= Rational(-1)) throw std::domain_error("iterated integral diverges at 0");
        coeff = coeff / (integrand_power + Rational::one());
        power = integrand_power + Rational::one();
    }
    return coeff;
}

inline Rational chen_form_oracle(const Word& w, const MonomialFamily& fam) {
    std::vector<Rational> xs;
    for (Letter l : w) xs.push_back(fam.exponent(l));
    return iterated_integral_oracle(xs);
}

}  // namespace spfk
