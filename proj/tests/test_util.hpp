#pragma once

#include <random>

#include "ncdisk/autgrp.hpp"
#include "ncdisk/derlie.hpp"
#include "ncdisk/ncseries.hpp"

namespace ncdisk::testutil {

// All randomized tests are seeded; rerunning a binary reproduces the report.
inline constexpr std::uint64_t kDefaultSeed = 20240611ull;

using Rng = std::mt19937_64;

inline Rat random_rational(Rng& rng, int num_range = 9, int den_range = 4)
{
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rat(num(rng), den(rng));
}

inline Word random_word(Rng& rng, int n, int min_deg, int max_deg)
{
    std::uniform_int_distribution<int> deg(min_deg, max_deg);
    std::uniform_int_distribution<int> letter(1, n);
    Word w(static_cast<size_t>(deg(rng)));
    for (auto& l : w)
        l = static_cast<Letter>(letter(rng));
    return w;
}

inline NCSeries random_series(Rng& rng, int n, int trunc, int terms = 5, int min_deg = 0)
{
    NCSeries s(n, trunc);
    std::uniform_int_distribution<int> count(1, terms);
    int t = count(rng);
    for (int i = 0; i < t; ++i)
        s.add_term(random_word(rng, n, min_deg, trunc), random_rational(rng));
    return s;
}

// Augmented automorphism with a random invertible linear part and a short
// random tail of higher-degree terms.
inline NCAutomorphism random_automorphism(Rng& rng, int n, int trunc)
{
    while (true) {
        std::vector<NCSeries> images;
        for (int i = 1; i <= n; ++i) {
            NCSeries s(n, trunc);
            std::uniform_int_distribution<int> lin(-3, 3);
            for (int j = 1; j <= n; ++j)
                s.add_term(Word{static_cast<Letter>(j)}, Rat(lin(rng)));
            for (int t = 0; t < 2; ++t)
                s.add_term(random_word(rng, n, 2, trunc), random_rational(rng, 3, 2));
            images.push_back(std::move(s));
        }
        try {
            return aut_validate(images);
        } catch (const Error& e) {
            if (e.code() != errc::singular_linear_part)
                throw;
        }
    }
}

inline NCDerivation random_derivation(Rng& rng, int n, int trunc, bool augmented = false,
                                      bool strictly_raising = false)
{
    int min_deg = strictly_raising ? 2 : (augmented ? 1 : 0);
    std::vector<NCSeries> images;
    for (int i = 0; i < n; ++i)
        images.push_back(random_series(rng, n, trunc, 3, min_deg));
    return NCDerivation(std::move(images));
}

} // namespace ncdisk::testutil
