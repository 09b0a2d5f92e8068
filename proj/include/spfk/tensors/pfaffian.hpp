#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spfk/multilinear/mask_algebra.hpp"
#include "spfk/tensors/blocked.hpp"
#include "spfk/tensors/tensor.hpp"

namespace spfk {

namespace detail {

template <Ring R, Symmetry S>
void require_blocks(const IndexTensor<R, S>& t, int k, const char* what) {
    if (t.order() != k) {
        throw std::invalid_argument(std::string(what) + ": expected a tensor of order " + std::to_string(k));
    }
    if (t.dim() % k != 0) {
        throw std::invalid_argument(std::string(what) + ": dimension " + std::to_string(t.dim()) +
                                    " is not a multiple of the order " + std::to_string(k));
    }
}

/// Sum over blocked permutations of (sign) * product of block entries,
/// multiplied left to right in block order.
template <Ring R, Symmetry S>
R blocked_sum(const IndexTensor<R, S>& t, bool use_sign) {
    const int k = t.order();
    const int n = t.dim() / k;
    R total = R::zero();
    for_each_blocked(n, k, [&](const BlockedPermutation& bp) {
        R term = R::one();
        for (int b = 0; b < n; ++b) {
            const R entry = t.at(bp.block(b));
            if (entry.is_zero()) return;
            term = term * entry;
        }
        total = (use_sign && bp.sign < 0) ? total - term : total + term;
    });
    return total;
}

template <Ring R>
R pfaffian_rec(const AltTensor<R>& m, std::vector<int>& rest) {
    if (rest.empty()) return R::one();
    const int first = rest.front();
    R total = R::zero();
    // Pf(M) = sum_{j>=2} (-1)^j M_{1j} Pf(M without 1, j), 1-based j.
    for (std::size_t j = 1; j < rest.size(); ++j) {
        const int partner = rest[j];
        const R entry = m.at({first, partner});
        if (entry.is_zero()) continue;
        std::vector<int> sub;
        sub.reserve(rest.size() - 2);
        for (std::size_t i = 1; i < rest.size(); ++i)
            if (i != j) sub.push_back(rest[i]);
        R term = entry * pfaffian_rec(m, sub);
        total = (j % 2 == 1) ? total + term : total - term;
    }
    return total;
}

}  // namespace detail

/// Pfaffian by recursive expansion along the first row.
template <Ring R>
R pfaffian_recursive(const AltTensor<R>& m) {
    detail::require_blocks(m, 2, "pfaffian");
    std::vector<int> all(static_cast<std::size_t>(m.dim()));
    for (int i = 0; i < m.dim(); ++i) all[static_cast<std::size_t>(i)] = i;
    return detail::pfaffian_rec(m, all);
}

/// Pfaffian as the signed sum over perfect matchings (blocked permutations, k = 2).
template <Ring R>
R pfaffian_blocked(const AltTensor<R>& m) {
    detail::require_blocks(m, 2, "pfaffian");
    return detail::blocked_sum(m, true);
}

/// Pfaffian of an even-order skew matrix. Both expansions are evaluated and
/// must agree; a mismatch throws std::logic_error.
template <Ring R>
R pfaffian(const AltTensor<R>& m) {
    R rec = pfaffian_recursive(m);
    R blk = pfaffian_blocked(m);
    if (!(rec == blk)) throw std::logic_error("pfaffian: recursive and matching expansions disagree");
    return rec;
}

template <Ring R>
R hafnian(const SymTensor<R>& s) {
    detail::require_blocks(s, 2, "hafnian");
    return detail::blocked_sum(s, false);
}

/// Pf^[k]: signed sum over partitions of {1..kn} into n increasing k-blocks.
template <Ring R>
R hyperpfaffian(const AltTensor<R>& m) {
    detail::require_blocks(m, m.order(), "hyperpfaffian");
    return detail::blocked_sum(m, true);
}

/// Hf^[k]: the unsigned analog of the hyperpfaffian.
template <Ring R>
R hyperhafnian(const SymTensor<R>& s) {
    detail::require_blocks(s, s.order(), "hyperhafnian");
    return detail::blocked_sum(s, false);
}

namespace detail {

template <RationalAlgebra R, Symmetry S, bool Anticommuting>
R power_oracle(const IndexTensor<R, S>& t, const char* what) {
    require_blocks(t, t.order(), what);
    const int n = t.dim() / t.order();
    MaskElement<R, Anticommuting> omega;
    for (const auto& [idx, v] : t.entries()) omega.add_term(mask_of(idx), v);
    MaskElement<R, Anticommuting> pw = MaskElement<R, Anticommuting>::one();
    for (int i = 0; i < n; ++i) pw = pw * omega;
    const Mask top = (t.dim() == 0) ? Mask{0} : (t.dim() == 64 ? ~Mask{0} : ((Mask{1} << static_cast<unsigned>(t.dim())) - 1));
    const BigInt nf = factorial(n);
    return pw.coefficient(top) * Rational(BigInt(1), nf);
}

}  // namespace detail

/// Omega_M^n = n! Pf^[k](M) eta_1...eta_kn, read off in the Grassmann algebra.
/// Needs even k: for odd k, Omega is odd and squares to zero.
template <RationalAlgebra R>
R grassmann_pf_oracle(const AltTensor<R>& m) {
    if (m.order() % 2 != 0) throw std::invalid_argument("grassmann_pf_oracle: tensor order must be even");
    return detail::power_oracle<R, Symmetry::Alternating, true>(m, "grassmann_pf_oracle");
}

/// G_M^n = n! Hf^[k](M) xi_1...xi_kn, read off in the square-zero algebra.
template <RationalAlgebra R>
R sz_hf_oracle(const SymTensor<R>& s) {
    return detail::power_oracle<R, Symmetry::Symmetric, false>(s, "sz_hf_oracle");
}

}  // namespace spfk
