#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace spfk {

/// Opaque letter id; labels live in an Alphabet.
struct Letter {
    std::uint32_t id = 0;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word make_word(std::initializer_list<std::uint32_t> ids) {
    Word w;
    w.reserve(ids.size());
    for (auto id : ids) w.push_back(Letter{id});
    return w;
}

/// Total order on words: by length, then lexicographic on letter ids.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

inline Word mirror(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

inline Word concat_words(const Word& u, const Word& v) {
    Word w;
    w.reserve(u.size() + v.size());
    w.insert(w.end(), u.begin(), u.end());
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

}  // namespace spfk
