#pragma once

#include "s2cobar/core/errors.hpp"
#include "s2cobar/core/graded.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace s2cobar {

/// Bounds for enumerating tensor words: letters are drawn from the underlying
/// degrees [letter_lo, letter_hi] and words have at most max_length letters.
/// letter_lo..letter_hi must contain every degree where the underlying
/// structure has augmentation-ideal basis elements that a queried degree
/// could need; a query that would need more throws WindowExceeded.
struct WordWindow {
    int letter_lo = 1;
    int letter_hi = 8;
    int max_length = 16;
};

/// Words of letters (taken from s.basis over the window, units excluded) whose
/// shifted degrees (underlying degree + shift) sum to `total`.
template <class S>
std::vector<std::vector<typename S::key_type>> enumerate_words(const S& s, const WordWindow& w, int shift, int total)
{
    using K = typename S::key_type;
    std::vector<std::pair<K, int>> letters;
    for (int e = w.letter_lo; e <= w.letter_hi; ++e)
        for (auto& k : s.basis(e))
            if (!s.is_unit(k))
                letters.push_back({k, e + shift});
    std::vector<std::vector<K>> out;
    if (letters.empty()) {
        if (total == 0)
            out.push_back({});
        return out;
    }
    int lo = letters.front().second, hi = lo;
    for (auto& [k, d] : letters) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    // A single letter of degree `total` must lie inside the letter window.
    if ((lo > 0 && total > w.letter_hi + shift) || (hi < 0 && total < w.letter_lo + shift))
        throw WindowExceeded("degree " + std::to_string(total) + " needs letters outside [" +
                             std::to_string(w.letter_lo) + ", " + std::to_string(w.letter_hi) + "]");
    const bool bounded = lo > 0 || hi < 0;
    std::vector<K> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0)
            out.push_back(cur);
        if (static_cast<int>(cur.size()) == w.max_length) {
            bool could_grow = bounded ? (lo > 0 ? left >= lo : left <= hi) : true;
            if (could_grow)
                throw WindowExceeded("word length bound " + std::to_string(w.max_length) + " reached in degree " +
                                     std::to_string(total));
            return;
        }
        for (auto& [k, d] : letters) {
            if (lo > 0 && d > left)
                continue;
            if (hi < 0 && d < left)
                continue;
            cur.push_back(k);
            self(self, left - d);
            cur.pop_back();
        }
    };
    rec(rec, total);
    return out;
}

template <class S>
std::string word_label(const S& s, const std::vector<typename S::key_type>& w)
{
    if (w.empty())
        return "[]";
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i)
        out += (i ? "|" : "") + s.label(w[i]);
    return out + "]";
}

}  // namespace s2cobar
