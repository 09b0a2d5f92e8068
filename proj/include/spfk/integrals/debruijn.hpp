#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spfk/identities/common.hpp"
#include "spfk/integrals/chen.hpp"
#include "spfk/tensors/pfaffian.hpp"

namespace spfk {

/// Chen's lemma <u><v> = <u sh v> for one pair of words.
inline VerificationReport verify_chen(const Word& u, const Word& v, const MonomialFamily& fam) {
    require_cap(u.size() + v.size() <= 8, "chen check needs |u| + |v| <= 8");
    Stopwatch watch;
    VerificationReport report;
    report.id = "chen";
    report.params = {{"u_len", static_cast<std::int64_t>(u.size())}, {"v_len", static_cast<std::int64_t>(v.size())}};
    const auto shuffled = shuffle(FreePoly<Rational>::word(u), FreePoly<Rational>::word(v));
    const Rational lhs = chen_form(u, fam) * chen_form(v, fam);
    const Rational rhs = chen_form(shuffled, fam);
    report.lhs_terms = 1;
    report.rhs_terms = static_cast<std::int64_t>(shuffled.size());
    report.conventions["time_order"] = "first letter at smallest time";
    record_sides(report, lhs, rhs);
    report.elapsed_ms = watch.elapsed_ms();
    return report;
}

/// `pairs` seeded word pairs over a 4-letter family, total length <= max_total.
inline VerificationReport verify_chen_batch(int pairs, int max_total, std::uint64_t seed) {
    require_cap(max_total <= 8, "chen batch needs total length <= 8");
    Stopwatch watch;
    VerificationReport report;
    report.id = "chen_batch";
    report.params = {{"pairs", pairs}, {"max_total", max_total}};
    report.seeds = {seed};
    SeededSampler s(seed);
    const MonomialFamily fam = MonomialFamily::sample(4, s);
    std::vector<Rational> lhs, rhs;
    std::int64_t rhs_terms = 0;
    for (int p = 0; p < pairs; ++p) {
        const auto total = s.uniform_int(0, max_total);
        const auto split = s.uniform_int(0, total);
        Word u, v;
        for (std::int64_t i = 0; i < total; ++i) {
            const Letter l{static_cast<std::uint32_t>(s.uniform(fam.size()))};
            (i < split ? u : v).push_back(l);
        }
        const auto shuffled = shuffle(FreePoly<Rational>::word(u), FreePoly<Rational>::word(v));
        lhs.push_back(chen_form(u, fam) * chen_form(v, fam));
        rhs.push_back(chen_form(shuffled, fam));
        rhs_terms += static_cast<std::int64_t>(shuffled.size());
    }
    report.lhs_terms = pairs;
    report.rhs_terms = rhs_terms;
    record_sides(report, lhs, rhs);
    report.elapsed_ms = watch.elapsed_ms();
    return report;
}

/// De Bruijn-type formulas: ordered integrals over 0 < t1 < ... < tN < 1 of
/// determinants / permanents of monomials, against Pfaffians / hafnians of
/// pairwise (or 2k-wise) integrals.
enum class DeBruijnVariant { EVEN, ODD, INTERLEAVED, NEW_PAIRING, PERM_PRODUCT, PERM_INTERLEAVED, GENERAL_DET, GENERAL_PERM };

inline const char* debruijn_variant_name(DeBruijnVariant v) {
    switch (v) {
        case DeBruijnVariant::EVEN: return "EVEN";
        case DeBruijnVariant::ODD: return "ODD";
        case DeBruijnVariant::INTERLEAVED: return "INTERLEAVED";
        case DeBruijnVariant::NEW_PAIRING: return "NEW_PAIRING";
        case DeBruijnVariant::PERM_PRODUCT: return "PERM_PRODUCT";
        case DeBruijnVariant::PERM_INTERLEAVED: return "PERM_INTERLEAVED";
        case DeBruijnVariant::GENERAL_DET: return "GENERAL_DET";
        case DeBruijnVariant::GENERAL_PERM: return "GENERAL_PERM";
    }
    return "?";
}

inline constexpr int kMaxDeBruijnOrder = 8;

/// Exponent grid: rows of N exponents each (phi, psi, or the 2k rows of a
/// general grid). Every variant draws the same way so that GENERAL_DET at
/// k = 1 sees exactly the functions INTERLEAVED sees.
inline std::vector<std::vector<Rational>> sample_exponent_grid(int rows, int cols, std::uint64_t seed) {
    SeededSampler s(seed);
    std::vector<std::vector<Rational>> grid;
    for (int r = 0; r < rows; ++r) grid.push_back(MonomialFamily::sample(static_cast<std::size_t>(cols), s).exponents());
    return grid;
}

namespace detail {

/// Integral over the simplex of the ordered list of functions, each entry
/// the exponent of a (product) monomial.
inline Rational simplex_integral(const std::vector<Rational>& exponents) { return r_value(exponents); }

inline Rational single_integral(const Rational& x) { return r_value({x}); }

}  // namespace detail

/// n is the half-order: the matrix has order 2n (2n+1 for ODD, 2kn for the
/// general grids).
inline VerificationReport verify_debruijn(DeBruijnVariant variant, int n, int k, std::uint64_t seed,
                                          CoefficientConvention convention = CoefficientConvention::Corrected) {
    if (n < 1) throw std::invalid_argument("verify_debruijn: n must be >= 1");
    const bool general = variant == DeBruijnVariant::GENERAL_DET || variant == DeBruijnVariant::GENERAL_PERM;
    if (!general) k = 1;
    if (k < 1) throw std::invalid_argument("verify_debruijn: k must be >= 1");
    const int order = (variant == DeBruijnVariant::ODD) ? 2 * n + 1 : 2 * k * n;
    require_cap(order <= kMaxDeBruijnOrder, "de Bruijn checks need matrix order <= 8");

    Stopwatch watch;
    VerificationReport report;
    report.id = "debruijn_" + identity_id(debruijn_variant_name(variant));
    report.params = {{"n", n}};
    if (general) report.params["k"] = k;
    report.seeds = {seed};
    report.conventions["interval"] = "(0,1)";

    const bool two_rows = variant == DeBruijnVariant::INTERLEAVED || variant == DeBruijnVariant::NEW_PAIRING ||
                          variant == DeBruijnVariant::PERM_INTERLEAVED;
    const int rows = general ? 2 * k : (two_rows ? 2 : 1);
    const auto grid = sample_exponent_grid(rows, order, seed);
    const auto& phi = grid[0];
    const bool signed_sum = variant == DeBruijnVariant::EVEN || variant == DeBruijnVariant::ODD ||
                            variant == DeBruijnVariant::INTERLEAVED || variant == DeBruijnVariant::NEW_PAIRING ||
                            variant == DeBruijnVariant::GENERAL_DET;

    // LHS: the definition-level permutation expansion of the ordered integral.
    Rational lhs;
    std::int64_t lhs_terms = 0;
    for_each_permutation(order, [&](std::span<const int> p, int sign) {
        std::vector<Rational> word;
        switch (variant) {
            case DeBruijnVariant::EVEN:
            case DeBruijnVariant::ODD:
            case DeBruijnVariant::PERM_PRODUCT:
                for (int i = 0; i < order; ++i) word.push_back(phi[static_cast<std::size_t>(p[i])]);
                break;
            case DeBruijnVariant::NEW_PAIRING:
                for (int i = 0; i < order; ++i)
                    word.push_back(grid[static_cast<std::size_t>(i % 2)][static_cast<std::size_t>(p[i])]);
                break;
            default: {
                // Row products: the j-th time variable carries prod_s grid[s][p(rows*j + s)].
                std::vector<Rational> factors(static_cast<std::size_t>(rows));
                for (int j = 0; j < order / rows; ++j) {
                    for (int s = 0; s < rows; ++s)
                        factors[static_cast<std::size_t>(s)] = grid[static_cast<std::size_t>(s)][static_cast<std::size_t>(p[rows * j + s])];
                    word.push_back(product_exponent(factors));
                }
            }
        }
        const Rational v = detail::simplex_integral(word);
        lhs = (signed_sum && sign < 0) ? lhs - v : lhs + v;
        ++lhs_terms;
    });

    auto pair_integral = [&](int i, int j) {  // <phi_i phi_j>
        return detail::simplex_integral({phi[static_cast<std::size_t>(i)], phi[static_cast<std::size_t>(j)]});
    };
    auto mixed_single = [&](int i, int j) {  // int phi_i psi_j
        const Rational f[2] = {grid[0][static_cast<std::size_t>(i)], grid[1][static_cast<std::size_t>(j)]};
        return detail::single_integral(product_exponent(f));
    };

    Rational rhs;
    switch (variant) {
        case DeBruijnVariant::EVEN: {
            auto P = alt_tensor_from<Rational>(2, order, [&](std::span<const int> ij) {
                return pair_integral(ij[0], ij[1]) - pair_integral(ij[1], ij[0]);
            });
            rhs = pfaffian(P);
            break;
        }
        case DeBruijnVariant::ODD: {
            auto P = alt_tensor_from<Rational>(2, order, [&](std::span<const int> ij) {
                return pair_integral(ij[0], ij[1]) - pair_integral(ij[1], ij[0]);
            });
            for (int p = 0; p < order; ++p) {
                const Rational term = detail::single_integral(phi[static_cast<std::size_t>(p)]) * pfaffian(restrict(P, all_but(order, p)));
                rhs = (p % 2 == 0) ? rhs + term : rhs - term;
            }
            break;
        }
        case DeBruijnVariant::INTERLEAVED: {
            auto Q = alt_tensor_from<Rational>(2, order, [&](std::span<const int> ij) {
                return mixed_single(ij[0], ij[1]) - mixed_single(ij[1], ij[0]);
            });
            rhs = pfaffian(Q);
            break;
        }
        case DeBruijnVariant::NEW_PAIRING: {
            auto ordered = [&](int i, int j) {  // int_{x<y} phi_i(x) psi_j(y)
                return detail::simplex_integral({grid[0][static_cast<std::size_t>(i)], grid[1][static_cast<std::size_t>(j)]});
            };
            auto Q = alt_tensor_from<Rational>(2, order, [&](std::span<const int> ij) {
                return ordered(ij[0], ij[1]) - ordered(ij[1], ij[0]);
            });
            rhs = pfaffian(Q);
            break;
        }
        case DeBruijnVariant::PERM_PRODUCT: {
            auto H = sym_tensor_from<Rational>(2, order, [&](std::span<const int> ij) {
                return pair_integral(ij[0], ij[1]) + pair_integral(ij[1], ij[0]);
            });
            const BigInt d = (convention == CoefficientConvention::Corrected) ? odd_double_factorial(n)
                                                                             : even_double_factorial(n);
            rhs = hafnian(H) * Rational(BigInt(1), d);
            report.conventions["coefficient"] = std::string(convention_name(convention)) + " 1/" + d.get_str();
            break;
        }
        case DeBruijnVariant::PERM_INTERLEAVED: {
            auto H = sym_tensor_from<Rational>(2, order, [&](std::span<const int> ij) {
                return mixed_single(ij[0], ij[1]) + mixed_single(ij[1], ij[0]);
            });
            rhs = hafnian(H);
            break;
        }
        case DeBruijnVariant::GENERAL_DET:
        case DeBruijnVariant::GENERAL_PERM: {
            const int block = 2 * k;
            auto entry = [&](std::span<const int> sorted) {
                Rational e;
                std::vector<Rational> factors(static_cast<std::size_t>(block));
                for_each_permutation(block, [&](std::span<const int> tau, int sign) {
                    for (int s = 0; s < block; ++s)
                        factors[static_cast<std::size_t>(s)] = grid[static_cast<std::size_t>(s)][static_cast<std::size_t>(sorted[tau[s]])];
                    const Rational v = detail::single_integral(product_exponent(factors));
                    e = (variant == DeBruijnVariant::GENERAL_DET && sign < 0) ? e - v : e + v;
                });
                return e;
            };
            if (variant == DeBruijnVariant::GENERAL_DET) {
                rhs = hyperpfaffian(alt_tensor_from<Rational>(block, order, entry));
            } else {
                rhs = hyperhafnian(sym_tensor_from<Rational>(block, order, entry));
            }
            break;
        }
    }

    report.lhs_terms = lhs_terms;
    report.rhs_terms = (variant == DeBruijnVariant::ODD) ? order * blocked_count(n, 2).get_si()
                                                         : blocked_count(order / (2 * k), 2 * k).get_si();
    record_sides(report, lhs, rhs);
    report.elapsed_ms = watch.elapsed_ms();
    return report;
}

}  // namespace spfk
