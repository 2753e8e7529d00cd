#pragma once

#include <cstdint>
#include <vector>

#include "ncdisk/error.hpp"

namespace ncdisk {

// A word in the free monoid on generators x_1..x_n, stored as 1-based
// letters. The empty word is the unit.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

inline int word_degree(const Word& w) { return static_cast<int>(w.size()); }

// Graded order: degree first, then lexicographic on letters. Words of equal
// degree have equal length, so plain lexicographic comparison suffices.
struct GradedLexLess {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

inline Word word_concat(const Word& a, const Word& b)
{
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

inline void check_word(const Word& w, int n)
{
    for (Letter l : w)
        require(l >= 1 && static_cast<int>(l) <= n, errc::index_out_of_range,
                "letter index " + std::to_string(int(l)) + " outside [1," + std::to_string(n) + "]");
}

// n^d as a long long with an overflow guard; the per-degree caps keep this
// far from the edge in practice.
inline long long word_count(int n, int d)
{
    long long c = 1;
    for (int i = 0; i < d; ++i) {
        require(c <= (1LL << 56) / n, errc::cap_exceeded, "word count overflow");
        c *= n;
    }
    return c;
}

// Rank of a degree-d word within the lexicographic enumeration of all n^d
// words, i.e. its base-n digit value.
inline long long word_rank(const Word& w, int n)
{
    long long r = 0;
    for (Letter l : w)
        r = r * n + (l - 1);
    return r;
}

inline Word word_unrank(long long rank, int n, int d)
{
    Word w(static_cast<size_t>(d));
    for (int i = d - 1; i >= 0; --i) {
        w[static_cast<size_t>(i)] = static_cast<Letter>(rank % n + 1);
        rank /= n;
    }
    return w;
}

// All words of the given degree in graded-lex order.
inline std::vector<Word> words_of_degree(int n, int d)
{
    long long count = word_count(n, d);
    std::vector<Word> out;
    out.reserve(static_cast<size_t>(count));
    for (long long r = 0; r < count; ++r)
        out.push_back(word_unrank(r, n, d));
    return out;
}

} // namespace ncdisk
