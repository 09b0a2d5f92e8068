#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spfk/freealg/algebra.hpp"
#include "spfk/identities/common.hpp"
#include "spfk/tensors/pfaffian.hpp"

namespace spfk {

/// Permutation-sum identities in the free algebra whose right-hand sides are
/// Pfaffians / hafnians taken in the shuffle or q = -1 shuffle ring.
enum class WickVariant { PFAB, SDB2, FHAFF2, FHAFF1, ODD_EVEN, ANTISHUFFLE, XIPFASHU };

inline const char* wick_variant_name(WickVariant v) {
    switch (v) {
        case WickVariant::PFAB: return "PFAB";
        case WickVariant::SDB2: return "SDB2";
        case WickVariant::FHAFF2: return "FHAFF2";
        case WickVariant::FHAFF1: return "FHAFF1";
        case WickVariant::ODD_EVEN: return "ODD_EVEN";
        case WickVariant::ANTISHUFFLE: return "ANTISHUFFLE";
        case WickVariant::XIPFASHU: return "XIPFASHU";
    }
    return "?";
}

inline constexpr int kMaxWickLength = 8;
inline constexpr int kMaxOddEvenN = 6;

namespace detail {

using QPoly = FreePoly<Rational>;

/// Sum over sigma in S_N of (sign) * letters(sigma) where letters builds the word.
template <class WordOf>
QPoly permutation_word_sum(int n, bool signed_sum, WordOf&& word_of) {
    QPoly total;
    for_each_permutation(n, [&](std::span<const int> perm, int sign) {
        total.add_term(word_of(perm), Rational(signed_sum ? sign : 1));
    });
    return total;
}

/// Letters x[1..n] (1-based labels), interned in index order.
inline std::vector<Letter> indexed_letters(Alphabet& alpha, const char* symbol, int n) {
    std::vector<Letter> out;
    for (int i = 1; i <= n; ++i) out.push_back(alpha.indexed(symbol, {i}));
    return out;
}

/// Letters a[k,l] for ordered pairs k != l, as a dense n x n table.
inline std::vector<std::vector<Letter>> pair_letters(Alphabet& alpha, int n) {
    std::vector<std::vector<Letter>> out(static_cast<std::size_t>(n), std::vector<Letter>(static_cast<std::size_t>(n)));
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            if (k != l) out[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = alpha.indexed("a", {k + 1, l + 1});
    return out;
}

inline Rational matching_coefficient(int n, CoefficientConvention c) {
    const BigInt d = (c == CoefficientConvention::Corrected) ? odd_double_factorial(n) : even_double_factorial(n);
    return Rational(BigInt(1), d);
}

inline VerificationReport start_wick_report(WickVariant v, Params params) {
    VerificationReport r;
    r.id = identity_id(wick_variant_name(v));
    r.params = std::move(params);
    return r;
}

}  // namespace detail

/// Verifies one shuffle-Wick identity. For XIPFASHU the word length is 2kn,
/// otherwise n is the half-length (2n letters) except for ODD_EVEN and
/// ANTISHUFFLE where n is the number of letters.
inline VerificationReport verify_shuffle_wick(WickVariant variant, int n, int k = 1,
                                              CoefficientConvention convention = CoefficientConvention::Corrected) {
    using detail::QPoly;
    if (n < 1) throw std::invalid_argument("verify_shuffle_wick: n must be >= 1");
    Stopwatch watch;
    Alphabet alpha;
    VerificationReport report;
    QPoly lhs, rhs;

    switch (variant) {
        case WickVariant::PFAB: {
            const int N = 2 * n;
            require_cap(N <= kMaxWickLength, "PFAB needs 2n <= 8");
            report = detail::start_wick_report(variant, {{"n", n}});
            const auto a = detail::indexed_letters(alpha, "a", N);
            const auto b = detail::indexed_letters(alpha, "b", N);
            lhs = detail::permutation_word_sum(N, true, [&](std::span<const int> p) {
                Word w;
                for (int i = 0; i < N; ++i) w.push_back(i % 2 == 0 ? a[p[i]] : b[p[i]]);
                return w;
            });
            auto Q = alt_tensor_from<ShufflePoly>(2, N, [&](std::span<const int> ij) {
                const int i = ij[0], j = ij[1];
                return ShufflePoly::word({a[i], b[j]}) - ShufflePoly::word({a[j], b[i]});
            });
            rhs = pfaffian(Q).poly();
            report.conventions["product"] = "shuffle";
            break;
        }
        case WickVariant::SDB2:
        case WickVariant::FHAFF2: {
            const int N = 2 * n;
            const bool alternating = variant == WickVariant::SDB2;
            require_cap(N <= kMaxWickLength, std::string(wick_variant_name(variant)) + " needs 2n <= 8");
            report = detail::start_wick_report(variant, {{"n", n}});
            const auto a = detail::pair_letters(alpha, N);
            lhs = detail::permutation_word_sum(N, alternating, [&](std::span<const int> p) {
                Word w;
                for (int i = 0; i < N; i += 2) w.push_back(a[p[i]][p[i + 1]]);
                return w;
            });
            if (alternating) {
                auto Q = alt_tensor_from<ShufflePoly>(2, N, [&](std::span<const int> ij) {
                    return ShufflePoly::letter(a[ij[0]][ij[1]]) - ShufflePoly::letter(a[ij[1]][ij[0]]);
                });
                rhs = pfaffian(Q).poly();
            } else {
                auto Q = sym_tensor_from<ShufflePoly>(2, N, [&](std::span<const int> ij) {
                    return ShufflePoly::letter(a[ij[0]][ij[1]]) + ShufflePoly::letter(a[ij[1]][ij[0]]);
                });
                rhs = hafnian(Q).poly();
            }
            report.conventions["product"] = "shuffle";
            break;
        }
        case WickVariant::FHAFF1: {
            const int N = 2 * n;
            require_cap(N <= kMaxWickLength, "FHAFF1 needs 2n <= 8");
            report = detail::start_wick_report(variant, {{"n", n}});
            const auto a = detail::indexed_letters(alpha, "a", N);
            lhs = detail::permutation_word_sum(N, false, [&](std::span<const int> p) {
                Word w;
                for (int i = 0; i < N; ++i) w.push_back(a[p[i]]);
                return w;
            });
            auto Q = sym_tensor_from<ShufflePoly>(2, N, [&](std::span<const int> ij) {
                return ShufflePoly::word({a[ij[0]], a[ij[1]]}) + ShufflePoly::word({a[ij[1]], a[ij[0]]});
            });
            const Rational c = detail::matching_coefficient(n, convention);
            rhs = hafnian(Q).poly().scaled(c);
            report.conventions["product"] = "shuffle";
            report.conventions["coefficient"] = std::string(convention_name(convention)) + " 1/" +
                                                c.inverse().numerator().get_str();
            break;
        }
        case WickVariant::ODD_EVEN: {
            require_cap(n <= kMaxOddEvenN, "ODD_EVEN needs n <= 6");
            report = detail::start_wick_report(variant, {{"n", n}});
            const auto a = detail::indexed_letters(alpha, "a", n);
            lhs = detail::permutation_word_sum(n, false, [&](std::span<const int> p) {
                Word w;
                for (int i = 0; i < n; ++i) w.push_back(a[p[i]]);
                return w;
            });
            auto Q = alt_tensor_from<ShufflePoly>(2, n, [&](std::span<const int> ij) {
                return ShufflePoly::letter(a[ij[0]]) * ShufflePoly::letter(a[ij[1]]);
            });
            if (n % 2 == 0) {
                rhs = pfaffian(Q).poly();
            } else {
                ShufflePoly total;
                for (int p = 0; p < n; ++p) {
                    const auto rest = all_but(n, p);
                    ShufflePoly term = ShufflePoly::letter(a[p]) * pfaffian(restrict(Q, rest));
                    total = (p % 2 == 0) ? total + term : total - term;
                }
                rhs = total.poly();
            }
            report.conventions["product"] = "shuffle";
            break;
        }
        case WickVariant::ANTISHUFFLE: {
            require_cap(n <= kMaxOddEvenN, "ANTISHUFFLE needs n <= 6");
            report = detail::start_wick_report(variant, {{"n", n}});
            const auto a = detail::indexed_letters(alpha, "a", n);
            lhs = detail::permutation_word_sum(n, true, [&](std::span<const int> p) {
                Word w;
                for (int i = 0; i < n; ++i) w.push_back(a[p[i]]);
                return w;
            });
            auto Q = sym_tensor_from<AntiShufflePoly>(2, n, [&](std::span<const int> ij) {
                return AntiShufflePoly::word({a[ij[0]], a[ij[1]]}) - AntiShufflePoly::word({a[ij[1]], a[ij[0]]});
            });
            if (n % 2 == 0) {
                rhs = hafnian(Q).poly();
            } else {
                AntiShufflePoly total;
                for (int p = 0; p < n; ++p) {
                    const auto rest = all_but(n, p);
                    total += AntiShufflePoly::letter(a[p]) * hafnian(restrict(Q, rest));
                }
                rhs = total.poly();
            }
            report.conventions["product"] = "antishuffle";
            break;
        }
        case WickVariant::XIPFASHU: {
            if (k < 1) throw std::invalid_argument("XIPFASHU: k must be >= 1");
            const int block = 2 * k;
            const int N = block * n;
            require_cap(N <= kMaxWickLength, "XIPFASHU needs 2kn <= 8");
            report = detail::start_wick_report(variant, {{"k", k}, {"n", n}});
            // One letter per ordered tuple of distinct indices.
            auto letter_of = [&](std::span<const int> tuple) {
                std::vector<int> one_based(tuple.begin(), tuple.end());
                for (int& i : one_based) ++i;
                return alpha.indexed("a", one_based);
            };
            lhs = detail::permutation_word_sum(N, true, [&](std::span<const int> p) {
                Word w;
                for (int b = 0; b < n; ++b) w.push_back(letter_of(p.subspan(static_cast<std::size_t>(b * block),
                                                                             static_cast<std::size_t>(block))));
                return w;
            });
            auto M = alt_tensor_from<ShufflePoly>(block, N, [&](std::span<const int> sorted) {
                ShufflePoly entry;
                std::vector<int> tuple(static_cast<std::size_t>(block));
                for_each_permutation(block, [&](std::span<const int> tau, int sign) {
                    for (int s = 0; s < block; ++s) tuple[static_cast<std::size_t>(s)] = sorted[tau[s]];
                    ShufflePoly l = ShufflePoly::letter(letter_of(tuple));
                    entry = sign > 0 ? entry + l : entry - l;
                });
                return entry;
            });
            rhs = hyperpfaffian(M).poly();
            report.conventions["product"] = "shuffle";
            break;
        }
    }

    report.lhs_terms = static_cast<std::int64_t>(lhs.size());
    report.rhs_terms = static_cast<std::int64_t>(rhs.size());
    record_sides(report, lhs, rhs);
    report.elapsed_ms = watch.elapsed_ms();
    return report;
}

}  // namespace spfk
