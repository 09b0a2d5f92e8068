#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spfk/core/combinatorics.hpp"
#include "spfk/core/ring.hpp"

namespace spfk {

enum class Symmetry { Alternating, Symmetric };

/// Order-k tensor on dimension d stored on strictly increasing index tuples
/// (0-based). Reads at an arbitrary tuple apply the symmetry: alternating
/// tensors pick up the sign of the sorting permutation, symmetric ones do not.
/// Tuples with a repeated index read as zero in both cases.
template <Ring R, Symmetry S>
class IndexTensor {
public:
    IndexTensor(int order, int dim) : order_(order), dim_(dim) {
        if (order < 1) throw std::invalid_argument("tensor order must be >= 1");
        if (dim < 0) throw std::invalid_argument("tensor dimension must be >= 0");
    }

    int order() const { return order_; }
    int dim() const { return dim_; }

    R at(std::span<const int> idx) const {
        check_arity(idx);
        auto [sorted, sign] = canonical_tuple(idx);
        if (sign == 0) return R::zero();
        auto it = entries_.find(sorted);
        if (it == entries_.end()) return R::zero();
        if constexpr (S == Symmetry::Alternating) {
            return sign > 0 ? it->second : -it->second;
        } else {
            return it->second;
        }
    }
    R at(std::initializer_list<int> idx) const { return at(std::span<const int>(idx.begin(), idx.size())); }

    /// Sets the entry at an arbitrary tuple (so that at(idx) == value afterwards).
    void set(std::span<const int> idx, const R& value) {
        check_arity(idx);
        auto [sorted, sign] = canonical_tuple(idx);
        if (sign == 0) {
            if (value.is_zero()) return;
            throw std::invalid_argument("tensor entry with a repeated index must be zero");
        }
        R stored = value;
        if constexpr (S == Symmetry::Alternating) {
            if (sign < 0) stored = -stored;
        }
        if (stored.is_zero()) {
            entries_.erase(sorted);
        } else {
            entries_[sorted] = std::move(stored);
        }
    }
    void set(std::initializer_list<int> idx, const R& value) {
        set(std::span<const int>(idx.begin(), idx.size()), value);
    }

    /// Nonzero entries keyed by sorted tuples.
    const std::map<std::vector<int>, R>& entries() const { return entries_; }

    friend bool operator==(const IndexTensor&, const IndexTensor&) = default;

private:
    void check_arity(std::span<const int> idx) const {
        if (static_cast<int>(idx.size()) != order_) {
            throw std::invalid_argument("tensor index arity " + std::to_string(idx.size()) +
                                        " does not match order " + std::to_string(order_));
        }
        for (int i : idx)
            if (i < 0 || i >= dim_) throw std::out_of_range("tensor index " + std::to_string(i) + " out of range");
    }

    int order_;
    int dim_;
    std::map<std::vector<int>, R> entries_;
};

template <Ring R>
using AltTensor = IndexTensor<R, Symmetry::Alternating>;
template <Ring R>
using SymTensor = IndexTensor<R, Symmetry::Symmetric>;

/// Tensor whose entry at each sorted tuple is f(tuple).
template <Ring R, Symmetry S, class F>
IndexTensor<R, S> tensor_from(int order, int dim, F&& f) {
    IndexTensor<R, S> t(order, dim);
    for_each_subset(dim, order, [&](std::span<const int> idx) { t.set(idx, f(idx)); });
    return t;
}

template <Ring R, class F>
AltTensor<R> alt_tensor_from(int order, int dim, F&& f) {
    return tensor_from<R, Symmetry::Alternating>(order, dim, std::forward<F>(f));
}

template <Ring R, class F>
SymTensor<R> sym_tensor_from(int order, int dim, F&& f) {
    return tensor_from<R, Symmetry::Symmetric>(order, dim, std::forward<F>(f));
}

/// Sub-tensor on the strictly increasing index list I, reindexed to 0..|I|-1.
template <Ring R, Symmetry S>
IndexTensor<R, S> restrict(const IndexTensor<R, S>& t, std::span<const int> subset) {
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 0 || subset[i] >= t.dim()) throw std::out_of_range("restrict: index out of range");
        if (i > 0 && subset[i - 1] >= subset[i]) throw std::invalid_argument("restrict: indices must be strictly increasing");
    }
    IndexTensor<R, S> r(t.order(), static_cast<int>(subset.size()));
    std::vector<int> outer(static_cast<std::size_t>(t.order()));
    for_each_subset(static_cast<int>(subset.size()), t.order(), [&](std::span<const int> inner) {
        for (std::size_t j = 0; j < inner.size(); ++j) outer[j] = subset[static_cast<std::size_t>(inner[j])];
        r.set(inner, t.at(outer));
    });
    return r;
}

template <Ring R, Symmetry S>
IndexTensor<R, S> operator+(const IndexTensor<R, S>& a, const IndexTensor<R, S>& b) {
    if (a.order() != b.order() || a.dim() != b.dim()) throw std::invalid_argument("tensor shape mismatch");
    IndexTensor<R, S> r = a;
    for (const auto& [idx, v] : b.entries()) r.set(idx, r.at(idx) + v);
    return r;
}

}  // namespace spfk
