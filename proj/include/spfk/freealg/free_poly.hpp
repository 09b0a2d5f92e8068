#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "spfk/core/ring.hpp"
#include "spfk/freealg/alphabet.hpp"
#include "spfk/freealg/word.hpp"

namespace spfk {

/// Finite formal sum of words with coefficients in C. Canonical: no stored
/// zero coefficients, terms iterated in WordOrder.
template <Ring C>
class FreePoly {
public:
    using Terms = std::map<Word, C, WordOrder>;

    FreePoly() = default;

    static FreePoly unit() { return word({}); }
    static FreePoly word(Word w, C coeff = C::one()) {
        FreePoly p;
        p.add_term(std::move(w), coeff);
        return p;
    }
    static FreePoly letter(Letter l, C coeff = C::one()) { return word(Word{l}, std::move(coeff)); }

    void add_term(const Word& w, const C& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, coeff);
        if (!inserted) {
            it->second = it->second + coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    C coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? C::zero() : it->second;
    }

    FreePoly& operator+=(const FreePoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    FreePoly& operator-=(const FreePoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
    friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
    friend FreePoly operator-(const FreePoly& a) {
        FreePoly r;
        for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
        return r;
    }

    FreePoly scaled(const C& s) const {
        FreePoly r;
        if (s.is_zero()) return r;
        for (const auto& [w, c] : terms_) r.add_term(w, c * s);
        return r;
    }

    friend bool operator==(const FreePoly&, const FreePoly&) = default;

    /// Human-readable form using alphabet labels, e.g. "1/1*a[1]b[2] + -1/1*a[2]b[1]".
    std::string to_string(const Alphabet& alphabet) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += coefficient_string(c);
            s += '*';
            if (w.empty()) s += "e";
            for (Letter l : w) s += alphabet.label(l);
        }
        return s;
    }

    /// Label-free canonical text; the basis of report digests.
    std::string canonical() const {
        std::string s;
        for (const auto& [w, c] : terms_) {
            s += coefficient_string(c);
            s += ':';
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) s += '.';
                s += std::to_string(w[i].id);
            }
            s += ';';
        }
        return s;
    }

private:
    static std::string coefficient_string(const C& c) {
        if constexpr (requires { c.to_string(); }) {
            return c.to_string();
        } else {
            return c.canonical();
        }
    }

    Terms terms_;
};

namespace detail {

/// Enumerates every interleaving of u and v, calling f(word, inversions)
/// where inversions counts pairs (letter of u, letter of v) with the v-letter
/// placed first.
template <class F>
void for_each_interleaving(const Word& u, const Word& v, F&& f) {
    Word out(u.size() + v.size());
    auto rec = [&](auto&& self, std::size_t i, std::size_t j, std::size_t inv) -> void {
        const std::size_t pos = i + j;
        if (pos == out.size()) {
            f(static_cast<const Word&>(out), inv);
            return;
        }
        if (i < u.size()) {
            out[pos] = u[i];
            self(self, i + 1, j, inv);
        }
        if (j < v.size()) {
            out[pos] = v[j];
            self(self, i, j + 1, inv + (u.size() - i));
        }
    };
    rec(rec, 0, 0, 0);
}

}  // namespace detail

/// Bilinear extension of word concatenation.
template <Ring C>
FreePoly<C> concat(const FreePoly<C>& p, const FreePoly<C>& q) {
    FreePoly<C> r;
    for (const auto& [u, a] : p.terms())
        for (const auto& [v, b] : q.terms()) r.add_term(concat_words(u, v), a * b);
    return r;
}

/// Shuffle product: au sh bv = a(u sh bv) + b(au sh v), with e sh w = w sh e = w.
template <Ring C>
FreePoly<C> shuffle(const FreePoly<C>& p, const FreePoly<C>& q) {
    FreePoly<C> r;
    for (const auto& [u, a] : p.terms())
        for (const auto& [v, b] : q.terms()) {
            const C ab = a * b;
            detail::for_each_interleaving(u, v, [&](const Word& w, std::size_t) { r.add_term(w, ab); });
        }
    return r;
}

/// q-shuffle: au sh_q bv = a(u sh_q bv) + q^{|au|} b(au sh_q v). Each
/// interleaving carries q^(number of u/v crossings); q = -1 is the antishuffle.
template <Ring C>
FreePoly<C> q_shuffle(const FreePoly<C>& p, const FreePoly<C>& q, const C& qval) {
    FreePoly<C> r;
    for (const auto& [u, a] : p.terms())
        for (const auto& [v, b] : q.terms()) {
            std::vector<C> powers(u.size() * v.size() + 1, C::one());
            for (std::size_t e = 1; e < powers.size(); ++e) powers[e] = powers[e - 1] * qval;
            const C ab = a * b;
            detail::for_each_interleaving(u, v, [&](const Word& w, std::size_t inv) {
                r.add_term(w, ab * powers[inv]);
            });
        }
    return r;
}

}  // namespace spfk
