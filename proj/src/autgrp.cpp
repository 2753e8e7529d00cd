#include "ncdisk/autgrp.hpp"

namespace ncdisk {

NCAutomorphism aut_validate(const std::vector<NCSeries>& images)
{
    require(!images.empty(), errc::dimension_mismatch, "no generator images");
    int n = static_cast<int>(images.size());
    int trunc = images[0].trunc();
    for (const auto& im : images) {
        require(im.num_generators() == n, errc::dimension_mismatch,
                "image arity differs from the number of images");
        require(im.trunc() == trunc, errc::dimension_mismatch, "images disagree on truncation");
        require(is_zero(im.constant_term()), errc::nonzero_constant_term,
                "augmented automorphisms fix the origin");
    }
    std::vector<RatVec> lin(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                images[static_cast<std::size_t>(i)].coeff(Word{static_cast<Letter>(j + 1)});
    require(invert_matrix(lin).has_value(), errc::singular_linear_part,
            "linear part is not invertible");

    NCAutomorphism g;
    g.n_ = n;
    g.trunc_ = trunc;
    g.images_ = images;
    g.linear_ = std::move(lin);
    return g;
}

NCAutomorphism NCAutomorphism::identity(int n, int trunc)
{
    std::vector<NCSeries> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        images.push_back(NCSeries::generator(n, trunc, i));
    return aut_validate(images);
}

NCAutomorphism aut_compose(const NCAutomorphism& g, const NCAutomorphism& h)
{
    require(g.num_generators() == h.num_generators() && g.trunc() == h.trunc(),
            errc::dimension_mismatch, "composition needs matching n and truncation");
    std::vector<NCSeries> images;
    images.reserve(h.images().size());
    for (const auto& hi : h.images())
        images.push_back(series_substitute(hi, g.images()));
    return aut_validate(images);
}

NCAutomorphism aut_invert(const NCAutomorphism& g)
{
    int n = g.num_generators();
    int trunc = g.trunc();
    auto inv = invert_matrix(g.linear_part());
    require(inv.has_value(), errc::singular_linear_part, "linear part is not invertible");

    // images of the inverse *linear* automorphism
    std::vector<NCSeries> lin_inv_images;
    lin_inv_images.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        NCSeries s(n, trunc);
        for (int j = 0; j < n; ++j)
            s.add_term(Word{static_cast<Letter>(j + 1)},
                       (*inv)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        lin_inv_images.push_back(std::move(s));
    }

    // Solve g(h_i) = x_i degree by degree. At degree d the unknown part h^(d)
    // enters through the linear part of g alone, so
    //   h^(d) = -(linear part)^{-1} [ g(h^(<d)) - x_i ]_d.
    std::vector<NCSeries> h;
    for (int i = 1; i <= n; ++i) {
        NCSeries hi = series_substitute(NCSeries::generator(n, trunc, i), lin_inv_images);
        for (int d = 2; d <= trunc; ++d) {
            NCSeries residue =
                series_sub(series_substitute(hi, g.images()), NCSeries::generator(n, trunc, i));
            NCSeries rd = residue.degree_part(d);
            if (rd.is_zero())
                continue;
            hi = series_sub(hi, series_substitute(rd, lin_inv_images));
        }
        h.push_back(std::move(hi));
    }
    return aut_validate(h);
}

CommAutomorphism comm_aut_validate(const std::vector<CommSeries>& images)
{
    require(!images.empty(), errc::dimension_mismatch, "no generator images");
    int n = static_cast<int>(images.size());
    int trunc = images[0].trunc();
    std::vector<RatVec> lin(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i) {
        const auto& im = images[static_cast<std::size_t>(i)];
        require(im.num_generators() == n && im.trunc() == trunc, errc::dimension_mismatch,
                "images disagree on shape");
        require(is_zero(im.constant_term()), errc::nonzero_constant_term,
                "augmented automorphisms fix the origin");
        for (int j = 0; j < n; ++j) {
            ExpVec e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(j)] = 1;
            lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = im.coeff(e);
        }
    }
    require(invert_matrix(lin).has_value(), errc::singular_linear_part,
            "linear part is not invertible");
    CommAutomorphism g;
    g.n_ = n;
    g.trunc_ = trunc;
    g.images_ = images;
    return g;
}

CommAutomorphism CommAutomorphism::identity(int n, int trunc)
{
    std::vector<CommSeries> images;
    for (int i = 1; i <= n; ++i)
        images.push_back(CommSeries::generator(n, trunc, i));
    return comm_aut_validate(images);
}

CommAutomorphism comm_aut_compose(const CommAutomorphism& g, const CommAutomorphism& h)
{
    require(g.num_generators() == h.num_generators() && g.trunc() == h.trunc(),
            errc::dimension_mismatch, "composition needs matching n and truncation");
    std::vector<CommSeries> images;
    for (const auto& hi : h.images())
        images.push_back(comm_substitute(hi, g.images()));
    return comm_aut_validate(images);
}

CommAutomorphism aut_abelianize(const NCAutomorphism& g)
{
    std::vector<CommSeries> images;
    for (const auto& im : g.images())
        images.push_back(series_abelianize(im));
    return comm_aut_validate(images);
}

} // namespace ncdisk
