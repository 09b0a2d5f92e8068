#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "spfk/core/rational.hpp"

namespace spfk {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Child seed for a named check, so concurrent checks draw independent streams.
constexpr std::uint64_t mix_seed(std::uint64_t parent, std::string_view tag) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return mix64(parent ^ mix64(h));
}

/// Deterministic sampler. std::mt19937_64's output sequence is fixed by the
/// standard; bounded draws use rejection sampling, never std distributions
/// (whose output is implementation-defined).
class SeededSampler {
public:
    explicit SeededSampler(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t position() const { return position_; }

    std::uint64_t next_u64() {
        ++position_;
        return engine_();
    }

    /// Uniform in [0, bound).
    std::uint64_t uniform(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("uniform: empty range");
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        for (;;) {
            std::uint64_t v = next_u64();
            if (v < limit) return v % bound;
        }
    }

    /// Uniform in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
        return lo + static_cast<std::int64_t>(uniform(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// p/q with 1 <= p, q <= bound.
    Rational positive_rational(std::int64_t bound) {
        const long p = static_cast<long>(uniform_int(1, bound));
        const long q = static_cast<long>(uniform_int(1, bound));
        return Rational(BigInt(p), BigInt(q));
    }

    /// Nonzero +-p/q with 1 <= p, q <= bound.
    Rational signed_rational(std::int64_t bound) {
        Rational r = positive_rational(bound);
        return uniform(2) == 0 ? r : -r;
    }

    /// `count` pairwise-distinct positive rationals p/q, 1 <= p,q <= bound.
    std::vector<Rational> positive_distinct(std::size_t count, std::int64_t bound) {
        if (count < 1 || bound < static_cast<std::int64_t>(count)) {
            throw std::invalid_argument("sample_positive_distinct: infeasible count/bound");
        }
        std::vector<Rational> out;
        std::set<Rational> seen;
        while (out.size() < count) {
            Rational r = positive_rational(bound);
            if (seen.insert(r).second) out.push_back(r);
        }
        return out;
    }

    SeededSampler child(std::string_view tag) const { return SeededSampler(mix_seed(seed_, tag)); }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::uint64_t position_ = 0;
};

inline std::vector<Rational> sample_positive_distinct(std::uint64_t seed, std::size_t count,
                                                      std::int64_t bound) {
    SeededSampler s(seed);
    return s.positive_distinct(count, bound);
}

}  // namespace spfk
