#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "spfk/identities/common.hpp"
#include "spfk/integrals/chen.hpp"
#include "spfk/tensors/pfaffian.hpp"

namespace spfk {

/// Rational-function identities checked by exact evaluation at seeded points.
enum class RationalVariant { SCHUR, SCHUR_HYPER, SUNDQUIST, MEHTA1, MEHTA2, SUM1, HAFSYM, WIGNER_RANK1, ARQ };

inline const char* rational_variant_name(RationalVariant v) {
    switch (v) {
        case RationalVariant::SCHUR: return "SCHUR";
        case RationalVariant::SCHUR_HYPER: return "SCHUR_HYPER";
        case RationalVariant::SUNDQUIST: return "SUNDQUIST";
        case RationalVariant::MEHTA1: return "MEHTA1";
        case RationalVariant::MEHTA2: return "MEHTA2";
        case RationalVariant::SUM1: return "SUM1";
        case RationalVariant::HAFSYM: return "HAFSYM";
        case RationalVariant::WIGNER_RANK1: return "WIGNER_RANK1";
        case RationalVariant::ARQ: return "ARQ";
    }
    return "?";
}

/// Name of the size parameter each variant takes ("n" or "m").
inline const char* rational_size_key(RationalVariant v) {
    switch (v) {
        case RationalVariant::SUNDQUIST:
        case RationalVariant::SUM1:
        case RationalVariant::ARQ: return "m";
        default: return "n";
    }
}

namespace detail {

struct PointValue {
    Rational lhs, rhs;
    std::int64_t lhs_terms = 0, rhs_terms = 0;
};

inline std::vector<Rational> permuted(const std::vector<Rational>& v, std::span<const int> p) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (int i : p) out.push_back(v[static_cast<std::size_t>(i)]);
    return out;
}

inline Rational product_over_pairs(const std::vector<Rational>& x,
                                   const std::function<Rational(const Rational&, const Rational&)>& f) {
    Rational prod = Rational::one();
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) prod *= f(x[i], x[j]);
    return prod;
}

inline Rational schur_factor(const Rational& a, const Rational& b) { return (a - b) / (a + b); }

inline std::vector<Rational> positives(SeededSampler& s, int count) {
    std::vector<Rational> out;
    for (int i = 0; i < count; ++i) out.push_back(s.positive_rational(kSampleBound));
    return out;
}

/// Signed sum over S_N of f(permutation) (the antisymmetrizer when signed).
template <class F>
Rational permutation_sum(int N, bool signed_sum, F&& f) {
    Rational total;
    for_each_permutation(N, [&](std::span<const int> p, int sign) {
        const Rational v = f(p);
        total = (signed_sum && sign < 0) ? total - v : total + v;
    });
    return total;
}

inline PointValue evaluate_rational(RationalVariant variant, int size, SeededSampler& s,
                                    CoefficientConvention convention) {
    PointValue pv;
    switch (variant) {
        case RationalVariant::SCHUR: {
            const int N = 2 * size;
            const auto x = s.positive_distinct(static_cast<std::size_t>(N), kSampleBound);
            pv.lhs = pfaffian(alt_tensor_from<Rational>(2, N, [&](std::span<const int> ij) {
                return schur_factor(x[static_cast<std::size_t>(ij[0])], x[static_cast<std::size_t>(ij[1])]);
            }));
            pv.rhs = product_over_pairs(x, schur_factor);
            pv.lhs_terms = odd_double_factorial(size).get_si();
            pv.rhs_terms = 1;
            break;
        }
        case RationalVariant::SCHUR_HYPER: {
            const int N = 4 * size;
            const auto x = s.positive_distinct(static_cast<std::size_t>(N), kSampleBound);
            auto M = alt_tensor_from<Rational>(4, N, [&](std::span<const int> idx) {
                std::vector<Rational> sub;
                for (int i : idx) sub.push_back(x[static_cast<std::size_t>(i)]);
                return product_over_pairs(sub, schur_factor);
            });
            pv.lhs = hyperpfaffian(M);
            const BigInt c = (convention == CoefficientConvention::Corrected) ? odd_double_factorial(size)
                                                                             : even_double_factorial(size);
            pv.rhs = Rational(c) * product_over_pairs(x, schur_factor);
            pv.lhs_terms = blocked_count(size, 4).get_si();
            pv.rhs_terms = 1;
            break;
        }
        case RationalVariant::SUNDQUIST: {
            const int N = 2 * size;
            const auto x = s.positive_distinct(static_cast<std::size_t>(N), kSampleBound);
            const auto u = positives(s, N), v = positives(s, N);
            DenseMatrix<Rational> D(N, N);
            for (int i = 0; i < N; ++i) {
                const auto ui = static_cast<std::size_t>(i);
                for (int j = 0; j < size; ++j) {
                    const Rational p = x[ui].pow(static_cast<unsigned>(2 * j));
                    D(i, 2 * j) = p * u[ui];
                    D(i, 2 * j + 1) = p * v[ui];
                }
            }
            pv.lhs = determinant_by_expansion(D);
            const Rational pf = pfaffian(alt_tensor_from<Rational>(2, N, [&](std::span<const int> ij) {
                const auto i = static_cast<std::size_t>(ij[0]), j = static_cast<std::size_t>(ij[1]);
                return (u[i] * v[j] - u[j] * v[i]) / (x[i] + x[j]);
            }));
            pv.rhs = product_over_pairs(x, [](const Rational& a, const Rational& b) { return a + b; }) * pf;
            pv.lhs_terms = factorial(N).get_si();
            pv.rhs_terms = odd_double_factorial(size).get_si();
            break;
        }
        case RationalVariant::MEHTA1: {
            const auto x = s.positive_distinct(static_cast<std::size_t>(size), kSampleBound);
            for (int k = 0; k <= size; ++k) {
                std::vector<Rational> head(x.begin(), x.begin() + k), tail(x.begin() + k, x.end());
                std::reverse(head.begin(), head.end());
                const Rational term = r_value(head) * r_value(tail);
                pv.lhs = (k % 2 == 0) ? pv.lhs + term : pv.lhs - term;
            }
            pv.lhs_terms = size + 1;
            pv.rhs_terms = 0;
            break;
        }
        case RationalVariant::MEHTA2: {
            const int N = 2 * size;
            const auto x = s.positive_distinct(static_cast<std::size_t>(N), kSampleBound);
            pv.lhs = permutation_sum(N, true, [&](std::span<const int> p) { return r_value(permuted(x, p)); });
            Rational prod = Rational::one();
            for (const auto& xi : x) prod /= xi;
            pv.rhs = prod * product_over_pairs(x, [](const Rational& a, const Rational& b) { return (b - a) / (b + a); });
            pv.lhs_terms = factorial(N).get_si();
            pv.rhs_terms = 1;
            break;
        }
        case RationalVariant::SUM1: {
            const auto x = s.positive_distinct(static_cast<std::size_t>(size), kSampleBound);
            pv.lhs = permutation_sum(size, false, [&](std::span<const int> p) { return r_value(permuted(x, p)); });
            pv.rhs = Rational::one();
            for (const auto& xi : x) pv.rhs /= xi;
            pv.lhs_terms = factorial(size).get_si();
            pv.rhs_terms = 1;
            break;
        }
        case RationalVariant::HAFSYM: {
            const int N = 2 * size;
            const auto x = s.positive_distinct(static_cast<std::size_t>(N), kSampleBound);
            const auto y = positives(s, N);
            pv.lhs = permutation_sum(N, false, [&](std::span<const int> p) {
                Rational num = Rational::one(), den = Rational::one(), partial;
                for (int i = 0; i < N; ++i) {
                    const auto pi = static_cast<std::size_t>(p[i]);
                    partial += x[pi];
                    if (i % 2 == 0) {
                        num *= y[pi];
                    } else {
                        den *= partial;
                    }
                }
                return num / den;
            });
            pv.rhs = hafnian(sym_tensor_from<Rational>(2, N, [&](std::span<const int> ij) {
                const auto i = static_cast<std::size_t>(ij[0]), j = static_cast<std::size_t>(ij[1]);
                return (y[i] + y[j]) / (x[i] + x[j]);
            }));
            pv.lhs_terms = factorial(N).get_si();
            pv.rhs_terms = odd_double_factorial(size).get_si();
            break;
        }
        case RationalVariant::WIGNER_RANK1: {
            const int N = 2 * size;
            const auto x = s.positive_distinct(static_cast<std::size_t>(N), kSampleBound);
            const auto a = positives(s, N), gap = positives(s, N);
            std::vector<Rational> lambda;
            for (int i = 0; i < N; ++i) {
                const auto ui = static_cast<std::size_t>(i);
                const Rational b = a[ui] + gap[ui];
                lambda.push_back((b - a[ui]) / x[ui]);
            }
            const BigInt c = (convention == CoefficientConvention::Corrected) ? odd_double_factorial(size)
                                                                             : even_double_factorial(size);
            pv.lhs = hafnian(sym_tensor_from<Rational>(2, N, [&](std::span<const int> ij) {
                         return lambda[static_cast<std::size_t>(ij[0])] * lambda[static_cast<std::size_t>(ij[1])];
                     })) /
                     Rational(c);
            pv.rhs = Rational::one();
            for (const auto& l : lambda) pv.rhs *= l;
            pv.lhs_terms = odd_double_factorial(size).get_si();
            pv.rhs_terms = 1;
            break;
        }
        case RationalVariant::ARQ: {
            const int N = 2 * size;
            const auto x = s.positive_distinct(static_cast<std::size_t>(N), kSampleBound);
            const auto a = positives(s, N), b = positives(s, N);
            // Functions of (x, a, b) with all three permuted together.
            auto R = [&](std::span<const int> p) { return r_value(permuted(x, p)); };
            auto Q = [&](std::span<const int> p) {
                Rational q = Rational::one();
                for (int i = 0; i < N; ++i) {
                    const auto pi = static_cast<std::size_t>(p[i]);
                    q *= (i % 2 == 1) ? b[pi] + a[pi] : b[pi] - a[pi];  // (-1)^i with 1-based i
                }
                return q;
            };
            auto rho = [&](std::span<const int> p) {
                Rational r = Rational::one();
                for (int i = 0; i < N; ++i) r *= x[static_cast<std::size_t>(p[i])].pow(static_cast<unsigned>(i));
                return r;
            };
            const Rational A_RQ = permutation_sum(N, true, [&](std::span<const int> p) { return R(p) * Q(p); });
            const Rational A_rho = permutation_sum(N, true, rho);
            const Rational A_R = permutation_sum(N, true, R);
            const Rational A_Qrho = permutation_sum(N, true, [&](std::span<const int> p) { return Q(p) * rho(p); });
            pv.lhs = A_RQ * A_rho;
            pv.rhs = A_R * A_Qrho;
            pv.lhs_terms = 2 * factorial(N).get_si();
            pv.rhs_terms = pv.lhs_terms;
            break;
        }
    }
    return pv;
}

inline void check_rational_cap(RationalVariant v, int size) {
    if (size < 1) throw std::invalid_argument(std::string(rational_variant_name(v)) + ": size must be >= 1");
    const std::string name = rational_variant_name(v);
    switch (v) {
        case RationalVariant::SCHUR:
        case RationalVariant::SUNDQUIST:
        case RationalVariant::HAFSYM:
        case RationalVariant::ARQ: require_cap(2 * size <= 6, name + " needs 2 * size <= 6"); break;
        case RationalVariant::SCHUR_HYPER: require_cap(4 * size <= 8, name + " needs 4n <= 8"); break;
        case RationalVariant::MEHTA2:
        case RationalVariant::WIGNER_RANK1: require_cap(2 * size <= 8, name + " needs 2n <= 8"); break;
        case RationalVariant::MEHTA1:
        case RationalVariant::SUM1: require_cap(size <= 6, name + " needs size <= 6"); break;
    }
}

}  // namespace detail

/// Evaluates both sides at `points` seeded points (3 by default, 10 when paranoid).
inline VerificationReport verify_rational_identity(RationalVariant variant, int size, std::uint64_t seed,
                                                   int points = kDefaultPoints,
                                                   CoefficientConvention convention = CoefficientConvention::Corrected) {
    detail::check_rational_cap(variant, size);
    Stopwatch watch;
    VerificationReport report;
    report.id = identity_id(rational_variant_name(variant));
    report.params = {{rational_size_key(variant), size}};
    report.seeds = point_seeds(seed, report.id + ":" + std::to_string(size), points);
    std::vector<Rational> lhs, rhs;
    for (std::uint64_t ps : report.seeds) {
        SeededSampler s(ps);
        const auto pv = detail::evaluate_rational(variant, size, s, convention);
        lhs.push_back(pv.lhs);
        rhs.push_back(pv.rhs);
        report.lhs_terms = pv.lhs_terms;
        report.rhs_terms = pv.rhs_terms;
    }
    if (variant == RationalVariant::SCHUR_HYPER || variant == RationalVariant::WIGNER_RANK1) {
        report.conventions["coefficient"] = convention_name(convention);
    }
    report.conventions["points"] = std::to_string(points);
    record_sides(report, lhs, rhs);
    report.elapsed_ms = watch.elapsed_ms();
    return report;
}

}  // namespace spfk
