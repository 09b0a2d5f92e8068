#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spfk/freealg/word.hpp"

namespace spfk {

/// Registry from structured labels to letter ids. Ids are dense and stable
/// for the lifetime of the registry; lookups may run concurrently, interning
/// is serialized.
class Alphabet {
public:
    Alphabet() = default;
    Alphabet(const Alphabet&) = delete;
    Alphabet& operator=(const Alphabet&) = delete;

    Letter intern(const std::string& label) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = ids_.find(label); it != ids_.end()) return Letter{it->second};
        }
        std::unique_lock lock(mutex_);
        auto [it, inserted] = ids_.try_emplace(label, static_cast<std::uint32_t>(labels_.size()));
        if (inserted) labels_.push_back(label);
        return Letter{it->second};
    }

    /// Label "sym[i1,i2,...]" for an indexed symbol, e.g. a[1] or a[1,2].
    Letter indexed(std::string_view symbol, std::span<const int> idx) {
        return intern(indexed_label(symbol, idx));
    }
    Letter indexed(std::string_view symbol, std::initializer_list<int> idx) {
        return indexed(symbol, std::span<const int>(idx.begin(), idx.size()));
    }

    /// Barred letter of the hyperoctahedral alphabet, e.g. ~3.
    Letter barred(int k) { return intern("~" + std::to_string(k)); }

    std::optional<Letter> find(const std::string& label) const {
        std::shared_lock lock(mutex_);
        if (auto it = ids_.find(label); it != ids_.end()) return Letter{it->second};
        return std::nullopt;
    }

    std::string label(Letter l) const {
        std::shared_lock lock(mutex_);
        if (l.id >= labels_.size()) throw std::out_of_range("unknown letter id " + std::to_string(l.id));
        return labels_[l.id];
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return labels_.size();
    }

    static std::string indexed_label(std::string_view symbol, std::span<const int> idx) {
        std::string s(symbol);
        s += '[';
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(idx[i]);
        }
        s += ']';
        return s;
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, std::uint32_t> ids_;
    std::vector<std::string> labels_;
};

}  // namespace spfk
