#pragma once

#include <vector>

#include "ncdisk/linalg.hpp"
#include "ncdisk/ncseries.hpp"

namespace ncdisk {

// An augmented automorphism of the truncated noncommutative disk: generator
// images with zero constant term and invertible linear part. Identities hold
// exactly modulo degree > trunc.
class NCAutomorphism {
  public:
    static NCAutomorphism identity(int n, int trunc);

    int num_generators() const { return n_; }
    int trunc() const { return trunc_; }
    const std::vector<NCSeries>& images() const { return images_; }
    const std::vector<RatVec>& linear_part() const { return linear_; }

    friend bool operator==(const NCAutomorphism& a, const NCAutomorphism& b)
    {
        return a.images_ == b.images_;
    }

  private:
    friend NCAutomorphism aut_validate(const std::vector<NCSeries>& images);
    NCAutomorphism() = default;

    int n_ = 0;
    int trunc_ = 0;
    std::vector<NCSeries> images_;
    std::vector<RatVec> linear_; // linear_[i][j] = coefficient of x_{j+1} in images[i]
};

// The only construction path: checks vanishing constant terms and an
// invertible linear part.
NCAutomorphism aut_validate(const std::vector<NCSeries>& images);

// (g . h)(x_i) = g(h(x_i)).
NCAutomorphism aut_compose(const NCAutomorphism& g, const NCAutomorphism& h);

// Degree-by-degree solve for the two-sided inverse modulo the truncation.
NCAutomorphism aut_invert(const NCAutomorphism& g);

class CommAutomorphism {
  public:
    static CommAutomorphism identity(int n, int trunc);

    int num_generators() const { return n_; }
    int trunc() const { return trunc_; }
    const std::vector<CommSeries>& images() const { return images_; }

    friend bool operator==(const CommAutomorphism& a, const CommAutomorphism& b)
    {
        return a.images_ == b.images_;
    }

  private:
    friend CommAutomorphism comm_aut_validate(const std::vector<CommSeries>& images);
    CommAutomorphism() = default;

    int n_ = 0;
    int trunc_ = 0;
    std::vector<CommSeries> images_;
};

CommAutomorphism comm_aut_validate(const std::vector<CommSeries>& images);
CommAutomorphism comm_aut_compose(const CommAutomorphism& g, const CommAutomorphism& h);

// Componentwise abelianization; a group homomorphism onto the commutative
// disk's automorphisms.
CommAutomorphism aut_abelianize(const NCAutomorphism& g);

} // namespace ncdisk
