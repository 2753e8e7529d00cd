#include "ncdisk/derlie.hpp"

#include <algorithm>

namespace ncdisk {

NCDerivation::NCDerivation(int n, int trunc) : n_(n), trunc_(trunc)
{
    require(n >= 1, errc::dimension_mismatch, "need at least one generator");
    images_.assign(static_cast<std::size_t>(n), NCSeries(n, trunc));
}

NCDerivation::NCDerivation(std::vector<NCSeries> images)
{
    require(!images.empty(), errc::dimension_mismatch, "no generator images");
    n_ = static_cast<int>(images.size());
    trunc_ = images[0].trunc();
    for (const auto& im : images) {
        require(im.num_generators() == n_, errc::dimension_mismatch,
                "image arity differs from the number of images");
        require(im.trunc() == trunc_, errc::dimension_mismatch, "images disagree on truncation");
    }
    images_ = std::move(images);
}

bool NCDerivation::is_zero() const
{
    for (const auto& im : images_)
        if (!im.is_zero())
            return false;
    return true;
}

bool NCDerivation::is_augmented() const
{
    for (const auto& im : images_)
        if (!ncdisk::is_zero(im.constant_term()))
            return false;
    return true;
}

NCDerivation NCDerivation::weight_component(int m) const
{
    std::vector<NCSeries> images;
    images.reserve(images_.size());
    for (const auto& im : images_)
        images.push_back(im.degree_part(m + 1));
    return NCDerivation(std::move(images));
}

NCSeries der_apply(const NCDerivation& d, const NCSeries& a)
{
    require(d.num_generators() == a.num_generators() && d.trunc() == a.trunc(),
            errc::dimension_mismatch, "derivation and argument disagree on shape");
    int n = a.num_generators();
    int trunc = a.trunc();
    NCSeries out(n, trunc);
    for (const auto& [w, c] : a.terms()) {
        int len = word_degree(w);
        for (int p = 0; p < len; ++p) {
            const NCSeries& img = d.images()[static_cast<std::size_t>(w[static_cast<std::size_t>(p)] - 1)];
            for (const auto& [u, cu] : img.terms()) {
                if (len - 1 + word_degree(u) > trunc)
                    break; // image terms sorted by degree
                Word r;
                r.reserve(static_cast<std::size_t>(len - 1) + u.size());
                r.insert(r.end(), w.begin(), w.begin() + p);
                r.insert(r.end(), u.begin(), u.end());
                r.insert(r.end(), w.begin() + p + 1, w.end());
                out.add_term(r, c * cu);
            }
        }
    }
    return out;
}

NCDerivation der_add(const NCDerivation& a, const NCDerivation& b)
{
    require(a.num_generators() == b.num_generators() && a.trunc() == b.trunc(),
            errc::dimension_mismatch, "derivations disagree on shape");
    std::vector<NCSeries> images;
    for (std::size_t i = 0; i < a.images().size(); ++i)
        images.push_back(series_add(a.images()[i], b.images()[i]));
    return NCDerivation(std::move(images));
}

NCDerivation der_scale(const Rat& c, const NCDerivation& a)
{
    std::vector<NCSeries> images;
    for (const auto& im : a.images())
        images.push_back(series_scale(c, im));
    return NCDerivation(std::move(images));
}

NCDerivation der_bracket(const NCDerivation& a, const NCDerivation& b)
{
    require(a.num_generators() == b.num_generators() && a.trunc() == b.trunc(),
            errc::dimension_mismatch, "derivations disagree on shape");
    std::vector<NCSeries> images;
    for (std::size_t i = 0; i < a.images().size(); ++i)
        images.push_back(series_sub(der_apply(a, b.images()[i]), der_apply(b, a.images()[i])));
    return NCDerivation(std::move(images));
}

NCAutomorphism der_exp(const NCDerivation& d)
{
    int n = d.num_generators();
    int trunc = d.trunc();
    require(d.is_augmented(), errc::non_nilpotent_at_truncation,
            "constant-term directions have no flow at truncation");

    // weight-0 part must be nilpotent for the exponential to stay rational
    std::vector<RatVec> lin(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), Rat(0)));
    bool lin_zero = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat c = d.images()[static_cast<std::size_t>(i)].coeff(Word{static_cast<Letter>(j + 1)});
            if (!is_zero(c))
                lin_zero = false;
            lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
        }
    if (!lin_zero) {
        std::vector<RatVec> pw = lin;
        for (int k = 1; k < n; ++k) {
            std::vector<RatVec> nx(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), Rat(0)));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int l = 0; l < n; ++l)
                        nx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                            pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] *
                            lin[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
            pw = std::move(nx);
        }
        for (const auto& row : pw)
            for (const Rat& c : row)
                require(is_zero(c), errc::non_nilpotent_at_truncation,
                        "linear part is not nilpotent; exponential leaves Q");
    }

    // Interleavings of the nilpotent weight-0 part and degree-raising parts
    // all vanish after this many applications.
    int cap = (trunc + 1) * (trunc * std::max(n - 1, 1) + 1) + trunc + 2;

    std::vector<NCSeries> images;
    for (int i = 1; i <= n; ++i) {
        NCSeries term = NCSeries::generator(n, trunc, i);
        NCSeries sum = term;
        Rat factorial(1);
        for (int m = 1; m <= cap && !term.is_zero(); ++m) {
            term = der_apply(d, term);
            factorial *= m;
            sum = series_add(sum, series_scale(Rat(1) / factorial, term));
        }
        require(term.is_zero(), errc::non_nilpotent_at_truncation,
                "exponential did not terminate at truncation");
        images.push_back(std::move(sum));
    }
    return aut_validate(images);
}

long long der_graded_dim(int n, int m)
{
    require(n >= 1 && m >= 0, errc::dimension_mismatch, "der_graded_dim bounds");
    // basis: one derivation per generator slot and image word of degree m+1
    long long count = 0;
    long long words = word_count(n, m + 1);
    for (int slot = 0; slot < n; ++slot)
        count += words;
    return count;
}

} // namespace ncdisk
