#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "spfk/core/combinatorics.hpp"

namespace spfk {

inline constexpr int kMaxBlockedSize = 20;

/// A permutation of {0..kn-1} laid out as n consecutive blocks of size k,
/// increasing inside each block, with increasing block heads.
struct BlockedPermutation {
    std::vector<int> sequence;
    int block_size = 0;
    int sign = 1;

    int blocks() const { return block_size == 0 ? 0 : static_cast<int>(sequence.size()) / block_size; }
    std::span<const int> block(int b) const {
        return std::span<const int>(sequence).subspan(static_cast<std::size_t>(b * block_size),
                                                      static_cast<std::size_t>(block_size));
    }
};

/// Calls f(const BlockedPermutation&) once for every set partition of
/// {0..kn-1} into n blocks of size k, in lexicographic order of the sequence.
template <class F>
void for_each_blocked(int n, int k, F&& f) {
    if (n < 0 || k < 1) throw std::invalid_argument("for_each_blocked: need n >= 0 and k >= 1");
    if (n * k > kMaxBlockedSize) {
        throw std::out_of_range("blocked enumeration capped at kn <= " + std::to_string(kMaxBlockedSize));
    }
    const int total = n * k;
    BlockedPermutation bp;
    bp.block_size = k;
    bp.sequence.reserve(static_cast<std::size_t>(total));
    std::uint32_t used = 0;
    int inversions = 0;

    // Appending x after the placed prefix adds one inversion per placed element above x.
    auto place = [&](int x) {
        inversions += std::popcount(used >> static_cast<unsigned>(x + 1));
        used |= 1U << static_cast<unsigned>(x);
        bp.sequence.push_back(x);
    };
    auto unplace = [&](int x) {
        bp.sequence.pop_back();
        used &= ~(1U << static_cast<unsigned>(x));
        inversions -= std::popcount(used >> static_cast<unsigned>(x + 1));
    };

    auto fill = [&](auto&& self, int remaining_in_block, int last) -> void {
        if (remaining_in_block == 0) {
            if (static_cast<int>(bp.sequence.size()) == total) {
                bp.sign = (inversions % 2 == 0) ? 1 : -1;
                f(static_cast<const BlockedPermutation&>(bp));
                return;
            }
            int head = 0;
            while (used & (1U << static_cast<unsigned>(head))) ++head;
            place(head);
            self(self, k - 1, head);
            unplace(head);
            return;
        }
        for (int x = last + 1; x < total; ++x) {
            if (used & (1U << static_cast<unsigned>(x))) continue;
            place(x);
            self(self, remaining_in_block - 1, x);
            unplace(x);
        }
    };
    fill(fill, 0, -1);
}

inline std::vector<BlockedPermutation> enumerate_blocked(int n, int k) {
    std::vector<BlockedPermutation> out;
    for_each_blocked(n, k, [&](const BlockedPermutation& bp) { out.push_back(bp); });
    return out;
}

/// (kn)! / ((k!)^n n!).
inline BigInt blocked_count(int n, int k) {
    BigInt kf = factorial(k), denom = 1;
    for (int i = 0; i < n; ++i) denom *= kf;
    denom *= factorial(n);
    return factorial(n * k) / denom;
}

}  // namespace spfk
