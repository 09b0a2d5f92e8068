#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spfk/identities/common.hpp"
#include "spfk/tensors/pfaffian.hpp"

namespace spfk {

inline constexpr std::int64_t kMaxVandermondeTuples = 10000;

/// Integer power, negative exponents allowed.
inline Rational power_int(const Rational& y, int e) {
    return e >= 0 ? y.pow(static_cast<unsigned>(e)) : y.inverse().pow(static_cast<unsigned>(-e));
}

inline Rational power_sum(const std::vector<Rational>& y, int e) {
    Rational s;
    for (const auto& v : y) s += power_int(v, e);
    return s;
}

/// Average of Delta(x)^(2m) over all N^n tuples drawn from y.
inline Rational vandermonde_average_bruteforce(const std::vector<Rational>& y, int n, int m) {
    const int N = static_cast<int>(y.size());
    std::vector<int> tuple(static_cast<std::size_t>(n), 0);
    Rational total;
    std::int64_t count = 0;
    for (;;) {
        Rational delta = Rational::one();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                delta *= y[static_cast<std::size_t>(tuple[static_cast<std::size_t>(j)])] -
                         y[static_cast<std::size_t>(tuple[static_cast<std::size_t>(i)])];
        total += delta.pow(static_cast<unsigned>(2 * m));
        ++count;
        int i = n - 1;
        while (i >= 0 && tuple[static_cast<std::size_t>(i)] == N - 1) tuple[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++tuple[static_cast<std::size_t>(i)];
    }
    return total / Rational(BigInt(static_cast<long>(count)));
}

/// Order-2m tensor on dimension 2mn whose nonzero entries are power sums of y.
/// An increasing tuple i_1 < ... < i_2m (1-based) is supported when
/// (s-1)n < i_s <= sn for every s. The exponent is
///   corrected: sum_s (i_s - (s-1)n - 1)
///   paper:     sum_s i_s - m(2n(m-1)+2)
inline AltTensor<Rational> vandermonde_tensor(const std::vector<Rational>& y, int n, int m,
                                             CoefficientConvention c) {
    const int k = 2 * m;
    return alt_tensor_from<Rational>(k, k * n, [&](std::span<const int> idx) {
        int index_sum = 0, exponent = 0;
        for (int s = 0; s < k; ++s) {
            const int i = idx[static_cast<std::size_t>(s)] + 1;
            if (i <= s * n || i > (s + 1) * n) return Rational();
            index_sum += i;
            exponent += i - s * n - 1;
        }
        if (c == CoefficientConvention::Paper) exponent = index_sum - m * (2 * n * (m - 1) + 2);
        return power_sum(y, exponent);
    });
}

/// n!/N^n * Pf^[2m](M), with the overall sign (-1)^(m n(n-1)/2) under the
/// corrected convention. The sign comes from reordering the n x 2m grid of
/// columns (x_j^(s-1) blocks) into row-major order.
inline Rational vandermonde_average_hyperpf(const std::vector<Rational>& y, int n, int m, CoefficientConvention c) {
    const auto M = vandermonde_tensor(y, n, m, c);
    Rational v = hyperpfaffian(M) * Rational(factorial(n)) /
                 Rational(BigInt(static_cast<long>(y.size()))).pow(static_cast<unsigned>(n));
    if (c == CoefficientConvention::Corrected && (m * (n * (n - 1) / 2)) % 2 == 1) v = -v;
    return v;
}

/// m = 1 closed form n!/N^n det(sum_p y_p^(i+j-2)).
inline Rational vandermonde_average_det(const std::vector<Rational>& y, int n) {
    DenseMatrix<Rational> H(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) H(i, j) = power_sum(y, i + j);
    return determinant(H) * Rational(factorial(n)) / Rational(BigInt(static_cast<long>(y.size()))).pow(static_cast<unsigned>(n));
}

/// When y is empty, N positive distinct values are drawn from the seed.
inline VerificationReport verify_vandermonde_average(int N, int n, int m, std::vector<Rational> y, std::uint64_t seed,
                                                     CoefficientConvention convention = CoefficientConvention::Corrected) {
    if (N < 1 || n < 1 || m < 1) throw std::invalid_argument("vandermonde average: N, n, m must be >= 1");
    require_cap(2 * m * n <= 8, "vandermonde average needs 2mn <= 8");
    BigInt tuples = 1;
    for (int i = 0; i < n; ++i) tuples *= N;
    require_cap(tuples <= kMaxVandermondeTuples, "vandermonde average needs N^n <= 10^4");
    Stopwatch watch;
    VerificationReport report;
    report.id = "vandermonde";
    report.params = {{"N", N}, {"m", m}, {"n", n}};
    if (y.empty()) {
        report.seeds = {seed};
        SeededSampler s(seed);
        y = s.positive_distinct(static_cast<std::size_t>(N), kSampleBound);
    } else if (static_cast<int>(y.size()) != N) {
        throw std::invalid_argument("vandermonde average: expected " + std::to_string(N) + " values of y");
    }
    std::vector<Rational> lhs{vandermonde_average_bruteforce(y, n, m)};
    std::vector<Rational> rhs{vandermonde_average_hyperpf(y, n, m, convention)};
    if (m == 1) {
        lhs.push_back(lhs.front());
        rhs.push_back(vandermonde_average_det(y, n));
    }
    report.lhs_terms = tuples.get_si();
    report.rhs_terms = blocked_count(n, 2 * m).get_si();
    report.conventions["exponent"] = convention == CoefficientConvention::Corrected
                                         ? "sum_s (i_s - (s-1)n - 1), sign (-1)^(m n(n-1)/2)"
                                         : "sum i_s - m(2n(m-1)+2)";
    record_sides(report, lhs, rhs);
    report.elapsed_ms = watch.elapsed_ms();
    return report;
}

}  // namespace spfk
