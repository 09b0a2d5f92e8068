#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spfk/core/rational.hpp"

namespace spfk {

inline BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// 1 * 3 * 5 * ... * (2n-1) = (2n)! / (2^n n!), the number of perfect
/// matchings on 2n points.
inline BigInt odd_double_factorial(int n) {
    if (n < 0) throw std::invalid_argument("odd_double_factorial: negative argument");
    BigInt r = 1;
    for (int i = 1; i <= n; ++i) r *= 2 * i - 1;
    return r;
}

/// 2 * 4 * ... * 2n = 2^n n!.
inline BigInt even_double_factorial(int n) {
    if (n < 0) throw std::invalid_argument("even_double_factorial: negative argument");
    BigInt r = 1;
    for (int i = 1; i <= n; ++i) r *= 2 * i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// +1 for even, -1 for odd permutations of arbitrary distinct values.
inline int permutation_sign(std::span<const int> seq) {
    int inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

/// Calls f(perm, sign) for every permutation of {0..n-1} in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        f(std::span<const int>(perm), permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

/// Calls f(subset) for every strictly increasing `size`-subset of {0..n-1},
/// in lexicographic order.
template <class F>
void for_each_subset(int n, int size, F&& f) {
    if (size < 0 || size > n) return;
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        f(std::span<const int>(idx));
        int i = size - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// Sorts an index tuple and returns it with the sign of the sorting
/// permutation; the sign is 0 when an index repeats.
inline std::pair<std::vector<int>, int> canonical_tuple(std::span<const int> idx) {
    std::vector<int> sorted(idx.begin(), idx.end());
    int sign = permutation_sign(idx);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) sign = 0;
    return {std::move(sorted), sign};
}

}  // namespace spfk
