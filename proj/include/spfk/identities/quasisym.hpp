#pragma once

#include <string>
#include <vector>

#include "spfk/identities/common.hpp"
#include "spfk/tensors/pfaffian.hpp"

namespace spfk {

inline constexpr int kMaxCompositionLength = 4;
inline constexpr int kMaxCompositionPart = 4;
inline constexpr int kMaxQuasisymVariables = 8;

/// M_J(x) = sum over j1 < ... < jr of x_j1^J1 ... x_jr^Jr.
inline Rational quasimonomial(std::span<const int> J, const std::vector<Rational>& x) {
    Rational total;
    for_each_subset(static_cast<int>(x.size()), static_cast<int>(J.size()), [&](std::span<const int> js) {
        Rational term = Rational::one();
        for (std::size_t s = 0; s < J.size(); ++s)
            term *= x[static_cast<std::size_t>(js[s])].pow(static_cast<unsigned>(J[s]));
        total += term;
    });
    return total;
}

inline Rational quasimonomial(std::initializer_list<int> J, const std::vector<Rational>& x) {
    return quasimonomial(std::span<const int>(J.begin(), J.size()), x);
}

namespace detail {

inline void check_composition(const std::vector<int>& parts, int N) {
    if (parts.empty()) throw std::invalid_argument("composition must be nonempty");
    require_cap(static_cast<int>(parts.size()) <= kMaxCompositionLength, "composition length <= 4");
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
        require_cap(p <= kMaxCompositionPart, "composition parts <= 4");
    }
    if (N < 1) throw std::invalid_argument("need at least one variable");
    require_cap(N <= kMaxQuasisymVariables, "at most 8 variables");
}

/// Both sides of the antisymmetrized quasimonomial identity at one point.
inline std::pair<Rational, Rational> vi_sides(const std::vector<int>& parts, const std::vector<Rational>& x) {
    const int r = static_cast<int>(parts.size());
    Rational lhs;
    std::vector<int> J(static_cast<std::size_t>(r));
    for_each_permutation(r, [&](std::span<const int> p, int sign) {
        for (int s = 0; s < r; ++s) J[static_cast<std::size_t>(s)] = parts[static_cast<std::size_t>(p[s])];
        const Rational v = quasimonomial(J, x);
        lhs = sign > 0 ? lhs + v : lhs - v;
    });
    auto Q = alt_tensor_from<Rational>(2, r, [&](std::span<const int> kl) {
        const int a = parts[static_cast<std::size_t>(kl[0])], b = parts[static_cast<std::size_t>(kl[1])];
        return quasimonomial({a, b}, x) - quasimonomial({b, a}, x);
    });
    Rational rhs;
    if (r % 2 == 0) {
        rhs = pfaffian(Q);
    } else {
        for (int k = 0; k < r; ++k) {
            const Rational term = quasimonomial({parts[static_cast<std::size_t>(k)]}, x) * pfaffian(restrict(Q, all_but(r, k)));
            rhs = (k % 2 == 0) ? rhs + term : rhs - term;
        }
    }
    return {lhs, rhs};
}

inline std::vector<Rational> quasisym_point(std::uint64_t seed, int N) {
    SeededSampler s(seed);
    std::vector<Rational> x;
    for (int i = 0; i < N; ++i) x.push_back(s.signed_rational(kSampleBound));
    return x;
}

}  // namespace detail

inline VerificationReport verify_VI(const std::vector<int>& parts, int N, std::uint64_t seed,
                                    int points = kDefaultPoints) {
    detail::check_composition(parts, N);
    Stopwatch watch;
    VerificationReport report;
    report.id = "vi";
    report.params = {{"N", N}, {"r", static_cast<std::int64_t>(parts.size())}};
    std::string tag = "VI";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        report.params["i" + std::to_string(i + 1)] = parts[i];
        tag += ":" + std::to_string(parts[i]);
    }
    report.seeds = point_seeds(seed, tag, points);
    std::vector<Rational> lhs, rhs;
    for (std::uint64_t ps : report.seeds) {
        auto [l, r] = detail::vi_sides(parts, detail::quasisym_point(ps, N));
        lhs.push_back(l);
        rhs.push_back(r);
    }
    report.lhs_terms = factorial(static_cast<int>(parts.size())).get_si();
    const int r = static_cast<int>(parts.size());
    report.rhs_terms = (r % 2 == 0) ? odd_double_factorial(r / 2).get_si() : r * odd_double_factorial((r - 1) / 2).get_si();
    record_sides(report, lhs, rhs);
    report.elapsed_ms = watch.elapsed_ms();
    return report;
}

/// Every composition of length r with parts in 1..max_part, in lexicographic order.
inline std::vector<std::vector<int>> compositions(int r, int max_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(static_cast<std::size_t>(r), 1);
    for (;;) {
        out.push_back(c);
        int i = r - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == max_part) c[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) return out;
        ++c[static_cast<std::size_t>(i)];
    }
}

/// All compositions of length r (parts <= max_part) at the same seeded points.
inline VerificationReport verify_VI_all(int r, int max_part, int N, std::uint64_t seed, int points = kDefaultPoints) {
    require_cap(r >= 1 && r <= kMaxCompositionLength, "composition length 1..4");
    require_cap(max_part >= 1 && max_part <= kMaxCompositionPart, "composition parts <= 4");
    require_cap(N >= 1 && N <= kMaxQuasisymVariables, "at most 8 variables");
    Stopwatch watch;
    VerificationReport report;
    report.id = "vi_all";
    report.params = {{"N", N}, {"max_part", max_part}, {"r", r}};
    report.seeds = point_seeds(seed, "VI_all:" + std::to_string(r), points);
    std::vector<std::vector<Rational>> xs;
    for (std::uint64_t ps : report.seeds) xs.push_back(detail::quasisym_point(ps, N));
    std::vector<Rational> lhs, rhs;
    for (const auto& c : compositions(r, max_part)) {
        for (const auto& x : xs) {
            auto [l, rr] = detail::vi_sides(c, x);
            lhs.push_back(l);
            rhs.push_back(rr);
        }
    }
    report.lhs_terms = static_cast<std::int64_t>(lhs.size());
    report.rhs_terms = static_cast<std::int64_t>(rhs.size());
    record_sides(report, lhs, rhs);
    report.elapsed_ms = watch.elapsed_ms();
    return report;
}

}  // namespace spfk
