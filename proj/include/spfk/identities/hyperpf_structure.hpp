#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "spfk/identities/common.hpp"
#include "spfk/tensors/pfaffian.hpp"

namespace spfk {

/// Structural identities of the hyperpfaffian, checked on seeded random
/// signed rational tensors.
enum class HyperPfVariant { COMPOSITION, SUM, MINOR, DET_DECOMP };

inline const char* hyperpf_variant_name(HyperPfVariant v) {
    switch (v) {
        case HyperPfVariant::COMPOSITION: return "COMPOSITION";
        case HyperPfVariant::SUM: return "SUM";
        case HyperPfVariant::MINOR: return "MINOR";
        case HyperPfVariant::DET_DECOMP: return "DET_DECOMP";
    }
    return "?";
}

inline constexpr int kMaxHyperDim = 8;

/// Pf^[2m] of the tensor of 2m x 2m sub-Pfaffians equals
/// (mn)! / ((m!)^n n!) Pf(A). Under the Paper convention the coefficient is
/// read as m * n! / ((m!)^n n!).
inline Rational composition_coefficient(int m, int n, CoefficientConvention c) {
    BigInt mf = factorial(m), denom = factorial(n);
    for (int i = 0; i < n; ++i) denom *= mf;
    const BigInt num = (c == CoefficientConvention::Corrected) ? factorial(m * n) : BigInt(m) * factorial(n);
    return Rational(num, denom);
}

/// Minor-summation check. T is 2mt x 2mn, A has order 2m on dimension 2mn,
/// and Q (order 2m on dimension 2mt) has entries sum_K a_K det(T[I, K]).
inline VerificationReport verify_minor(int m, int t, int n, std::uint64_t seed) {
    if (m < 1 || n < 1 || t < 1) throw std::invalid_argument("MINOR: m, t, n must be >= 1");
    if (t > n) throw std::invalid_argument("MINOR: need t <= n");
    const int k = 2 * m, dim = k * n, rows = k * t;
    require_cap(dim <= kMaxHyperDim, "MINOR needs 2mn <= 8");
    Stopwatch watch;
    VerificationReport report;
    report.id = "minor";
    report.params = {{"m", m}, {"n", n}, {"t", t}};
    report.seeds = {seed};
    SeededSampler s(seed);
    const auto A = random_alt_tensor(k, dim, s);
    const auto T = random_matrix(rows, dim, s);
    const auto all_rows = iota_vector(rows);

    Rational lhs;
    std::int64_t lhs_terms = 0;
    for_each_subset(dim, rows, [&](std::span<const int> K) {
        const Rational d = determinant(T.submatrix(all_rows, K));
        lhs += hyperpfaffian(restrict(A, K)) * d;
        ++lhs_terms;
    });
    auto Q = alt_tensor_from<Rational>(k, rows, [&](std::span<const int> I) {
        Rational entry;
        for (const auto& [K, a] : A.entries()) entry += a * determinant(T.submatrix(I, K));
        return entry;
    });
    const Rational rhs = hyperpfaffian(Q);
    report.lhs_terms = lhs_terms;
    report.rhs_terms = blocked_count(t, k).get_si();
    record_sides(report, lhs, rhs);
    report.elapsed_ms = watch.elapsed_ms();
    return report;
}

/// n counts blocks: tensors live on dimension 2mn.
inline VerificationReport verify_hyperpf(HyperPfVariant variant, int m, int n, std::uint64_t seed,
                                         CoefficientConvention convention = CoefficientConvention::Corrected) {
    if (variant == HyperPfVariant::MINOR) return verify_minor(m, n, n, seed);
    if (m < 1 || n < 1) throw std::invalid_argument("hyperpfaffian check: m, n must be >= 1");
    const int k = 2 * m, dim = k * n;
    require_cap(dim <= kMaxHyperDim, std::string(hyperpf_variant_name(variant)) + " needs 2mn <= 8");
    Stopwatch watch;
    VerificationReport report;
    report.id = identity_id(hyperpf_variant_name(variant));
    report.params = {{"m", m}, {"n", n}};
    report.seeds = {seed};
    SeededSampler s(seed);
    Rational lhs, rhs;

    switch (variant) {
        case HyperPfVariant::COMPOSITION: {
            const auto A = random_alt_tensor(2, dim, s);
            auto composed = alt_tensor_from<Rational>(k, dim, [&](std::span<const int> K) {
                return pfaffian(restrict(A, K));
            });
            lhs = hyperpfaffian(composed);
            const Rational c = composition_coefficient(m, n, convention);
            rhs = c * pfaffian(A);
            report.lhs_terms = blocked_count(n, k).get_si();
            report.rhs_terms = blocked_count(m * n, 2).get_si();
            report.conventions["coefficient"] = std::string(convention_name(convention)) + " " + c.to_string();
            break;
        }
        case HyperPfVariant::SUM: {
            const auto A = random_alt_tensor(k, dim, s);
            const auto B = random_alt_tensor(k, dim, s);
            lhs = hyperpfaffian(A + B);
            std::int64_t terms = 0;
            for (int j = 0; j <= n; ++j) {
                for_each_subset(dim, j * k, [&](std::span<const int> I) {
                    std::vector<int> rest;
                    int index_sum = 0;
                    for (int i = 0, p = 0; i < dim; ++i) {
                        if (p < static_cast<int>(I.size()) && I[p] == i) {
                            index_sum += i + 1;
                            ++p;
                        } else {
                            rest.push_back(i);
                        }
                    }
                    const Rational term = hyperpfaffian(restrict(A, I)) * hyperpfaffian(restrict(B, rest));
                    rhs = ((index_sum - j * k * (j * k + 1) / 2) % 2 == 0) ? rhs + term : rhs - term;
                    ++terms;
                });
            }
            report.lhs_terms = blocked_count(n, k).get_si();
            report.rhs_terms = terms;
            break;
        }
        case HyperPfVariant::DET_DECOMP: {
            // Columns are a random increasing selection out of dim + 2.
            const auto T = random_matrix(dim, dim + 2, s);
            std::vector<int> cols = iota_vector(dim + 2);
            const auto drop_a = static_cast<int>(s.uniform(static_cast<std::uint64_t>(dim + 2)));
            cols.erase(cols.begin() + drop_a);
            const auto drop_b = static_cast<int>(s.uniform(static_cast<std::uint64_t>(dim + 1)));
            cols.erase(cols.begin() + drop_b);
            lhs = determinant(T.submatrix(iota_vector(dim), cols));
            // Corrected: every ordering of the row blocks of each blocked
            // permutation (the generalized Laplace expansion along the column
            // blocks). Paper: blocked permutations only.
            const bool all_orders = convention == CoefficientConvention::Corrected;
            std::int64_t terms = 0;
            std::vector<int> rows_in_order;
            for_each_blocked(n, k, [&](const BlockedPermutation& bp) {
                std::vector<int> block_order = iota_vector(n);
                do {
                    rows_in_order.clear();
                    for (int b : block_order)
                        for (int r : bp.block(b)) rows_in_order.push_back(r);
                    Rational term = Rational::one();
                    for (int b = 0; b < n; ++b) {
                        const auto at = static_cast<std::size_t>(b * k);
                        const auto len = static_cast<std::size_t>(k);
                        term = term * determinant(T.submatrix(std::span<const int>(rows_in_order).subspan(at, len),
                                                              std::span<const int>(cols).subspan(at, len)));
                    }
                    rhs = permutation_sign(rows_in_order) > 0 ? rhs + term : rhs - term;
                    ++terms;
                } while (all_orders && std::next_permutation(block_order.begin(), block_order.end()));
            });
            report.lhs_terms = 1;
            report.rhs_terms = terms;
            std::string chosen;
            for (int c : cols) chosen += (chosen.empty() ? "" : ",") + std::to_string(c + 1);
            report.conventions["columns"] = chosen;
            report.conventions["row_blocks"] = all_orders ? "all orderings" : "blocked permutations only";
            break;
        }
        case HyperPfVariant::MINOR:
            break;
    }
    record_sides(report, lhs, rhs);
    report.elapsed_ms = watch.elapsed_ms();
    return report;
}

}  // namespace spfk
