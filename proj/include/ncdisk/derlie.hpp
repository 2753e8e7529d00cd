#pragma once

#include <vector>

#include "ncdisk/autgrp.hpp"
#include "ncdisk/ncseries.hpp"

namespace ncdisk {

// A derivation of the truncated free algebra, determined by its generator
// images through the Leibniz rule. Constant terms are allowed: those are the
// directions that move the base point and generate no automorphism at
// truncation.
class NCDerivation {
  public:
    NCDerivation(int n, int trunc);
    explicit NCDerivation(std::vector<NCSeries> images);

    static NCDerivation zero(int n, int trunc) { return NCDerivation(n, trunc); }

    int num_generators() const { return n_; }
    int trunc() const { return trunc_; }
    const std::vector<NCSeries>& images() const { return images_; }

    bool is_zero() const;
    bool is_augmented() const; // all constant terms vanish

    // Homogeneous weight-m component: the derivation whose images are the
    // degree-(m+1) parts, sending degree-d elements to degree d+m.
    NCDerivation weight_component(int m) const;

    friend bool operator==(const NCDerivation& a, const NCDerivation& b)
    {
        return a.images_ == b.images_;
    }

  private:
    int n_ = 0;
    int trunc_ = 0;
    std::vector<NCSeries> images_;
};

// Leibniz extension: on a word x_{i1}..x_{id} the derivation acts position by
// position, truncated at the series order.
NCSeries der_apply(const NCDerivation& d, const NCSeries& a);

NCDerivation der_add(const NCDerivation& a, const NCDerivation& b);
NCDerivation der_scale(const Rat& c, const NCDerivation& a);
NCDerivation der_bracket(const NCDerivation& a, const NCDerivation& b);

// exp(d) as an automorphism, defined when the exponential terminates exactly
// at the truncation order: images must have zero constant term and a
// nilpotent linear part (strictly degree-raising derivations are the common
// case). Otherwise non_nilpotent_at_truncation.
NCAutomorphism der_exp(const NCDerivation& d);

// Dimension of the weight-m slice of the derivation algebra, by enumerating
// the single-word basis (n generator slots times n^(m+1) image words).
long long der_graded_dim(int n, int m);

} // namespace ncdisk
