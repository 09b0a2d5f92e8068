#pragma once

#include <string>
#include <vector>

#include "spfk/freealg/antipode.hpp"
#include "spfk/identities/common.hpp"
#include "spfk/tensors/pfaffian.hpp"

namespace spfk {

/// (S * id)(w) = 0 for every non-empty word of length <= max_len over `letters` letters.
inline VerificationReport verify_antipode(int max_len, int letters) {
    if (max_len < 1 || letters < 1) throw std::invalid_argument("antipode check: need max_len, letters >= 1");
    require_cap(max_len <= 6 && letters <= 6, "antipode check capped at length 6 over 6 letters");
    Stopwatch watch;
    VerificationReport report;
    report.id = "antipode";
    report.params = {{"letters", letters}, {"max_len", max_len}};
    std::vector<FreePoly<Rational>> lhs, rhs;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<int> digits(static_cast<std::size_t>(len), 0);
        for (;;) {
            Word w;
            for (int d : digits) w.push_back(Letter{static_cast<std::uint32_t>(d)});
            lhs.push_back(antipode_convolution<Rational>(w));
            rhs.emplace_back();
            int i = len - 1;
            while (i >= 0 && digits[static_cast<std::size_t>(i)] == letters - 1) digits[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
            ++digits[static_cast<std::size_t>(i)];
        }
    }
    report.lhs_terms = static_cast<std::int64_t>(lhs.size());
    report.rhs_terms = static_cast<std::int64_t>(rhs.size());
    record_sides(report, lhs, rhs);
    report.elapsed_ms = watch.elapsed_ms();
    return report;
}

/// Hyperpfaffian (resp. hyperhafnian) by blocked enumeration against the
/// Grassmann (resp. square-zero) power oracle on a seeded tensor.
inline VerificationReport verify_power_oracle(bool alternating, int k, int d, std::uint64_t seed) {
    if (k < 1 || d < 0 || d % k != 0) throw std::invalid_argument("power oracle check: d must be a multiple of k");
    require_cap(d <= 12, "power oracle check needs d <= 12");
    Stopwatch watch;
    VerificationReport report;
    report.id = alternating ? "kernel_hpf_oracle" : "kernel_hhf_oracle";
    report.params = {{"d", d}, {"k", k}};
    report.seeds = {seed};
    SeededSampler s(seed);
    Rational lhs, rhs;
    if (alternating) {
        const auto t = alt_tensor_from<Rational>(k, d, [&](std::span<const int>) { return s.signed_rational(9); });
        lhs = hyperpfaffian(t);
        rhs = grassmann_pf_oracle(t);
    } else {
        const auto t = sym_tensor_from<Rational>(k, d, [&](std::span<const int>) { return s.signed_rational(9); });
        lhs = hyperhafnian(t);
        rhs = sz_hf_oracle(t);
    }
    report.lhs_terms = blocked_count(d / k, k).get_si();
    report.rhs_terms = binomial(d, k).get_si();
    record_sides(report, lhs, rhs);
    report.elapsed_ms = watch.elapsed_ms();
    return report;
}

/// Pf(A)^2 = det(A) for a seeded skew matrix of even order d.
inline VerificationReport verify_pf_det(int d, std::uint64_t seed) {
    if (d < 0 || d % 2 != 0) throw std::invalid_argument("Pf^2 = det check needs even d");
    require_cap(d <= 8, "Pf^2 = det check needs d <= 8");
    Stopwatch watch;
    VerificationReport report;
    report.id = "kernel_pf_det";
    report.params = {{"d", d}};
    report.seeds = {seed};
    SeededSampler s(seed);
    const auto A = alt_tensor_from<Rational>(2, d, [&](std::span<const int>) { return s.signed_rational(9); });
    DenseMatrix<Rational> M(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) M(i, j) = A.at({i, j});
    const Rational pf = pfaffian(A);
    const Rational lhs = pf * pf;
    const Rational rhs = determinant(M);
    report.lhs_terms = odd_double_factorial(d / 2).get_si();
    report.rhs_terms = 1;
    record_sides(report, lhs, rhs);
    report.elapsed_ms = watch.elapsed_ms();
    return report;
}

/// Enumerated |E_{kn,k}| against (kn)! / ((k!)^n n!) for all kn <= max_size.
inline VerificationReport verify_blocked_count(int max_size) {
    require_cap(max_size >= 1 && max_size <= 12, "blocked count check needs 1 <= kn <= 12");
    Stopwatch watch;
    VerificationReport report;
    report.id = "kernel_blocked_count";
    report.params = {{"max_kn", max_size}};
    std::vector<Rational> lhs, rhs;
    for (int k = 1; k <= max_size; ++k) {
        for (int n = 0; k * n <= max_size; ++n) {
            std::int64_t count = 0;
            for_each_blocked(n, k, [&](const BlockedPermutation&) { ++count; });
            lhs.push_back(Rational(BigInt(static_cast<long>(count))));
            rhs.push_back(Rational(blocked_count(n, k)));
        }
    }
    report.lhs_terms = static_cast<std::int64_t>(lhs.size());
    report.rhs_terms = static_cast<std::int64_t>(rhs.size());
    record_sides(report, lhs, rhs);
    report.elapsed_ms = watch.elapsed_ms();
    return report;
}

}  // namespace spfk
