#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spfk {

using BigInt = mpz_class;

/// Exact rational number in canonical form: the denominator is positive,
/// gcd(|num|, den) = 1, and zero is stored as 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(static_cast<long>(value)) {}
    explicit Rational(const BigInt& value) : value_(value) {}

    /// Throws std::domain_error("zero denominator") when den == 0.
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    static Rational zero() { return {}; }
    static Rational one() { return Rational(1L); }
    static Rational from_integer(std::int64_t k) { return Rational(static_cast<long>(k)); }

    /// Parses "a/b" or "a" (decimal, optional leading '-').
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) {
                return Rational(BigInt(std::string(text), 10));
            }
            return Rational(BigInt(std::string(text.substr(0, slash)), 10),
                            BigInt(std::string(text.substr(slash + 1)), 10));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
    }

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        return from_mpq(1 / value_);
    }

    Rational pow(unsigned exponent) const {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
        mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
        return Rational(num, den);
    }

    /// Always "num/den", e.g. "3/1", "-1/2".
    std::string to_string() const {
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return from_mpq(-a.value_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

    const mpq_class& raw() const { return value_; }

private:
    static Rational from_mpq(mpq_class v) {
        Rational r;
        r.value_ = std::move(v);
        return r;
    }

    mpq_class value_;
};

/// Canonical rational num/den. Throws std::domain_error on den == 0.
inline Rational normalize(const BigInt& num, const BigInt& den) { return Rational(num, den); }

}  // namespace spfk

template <>
struct std::hash<spfk::Rational> {
    std::size_t operator()(const spfk::Rational& r) const {
        return std::hash<std::string>{}(r.to_string());
    }
};
