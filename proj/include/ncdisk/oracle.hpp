#pragma once

#include <map>
#include <vector>

#include "ncdisk/ncseries.hpp"

namespace ncdisk {

// Brute-force reference implementations used by the test suite to validate
// the optimized modules. Everything here is dense and deliberately naive:
// words are base-n integer ranks, subspaces are integer row sets reduced by
// fraction-free (division-less) elimination, and the lower central series
// ideals are closed under multiplication on BOTH sides to a fixed point.
// None of this shares code with linalg.hpp / lcs.hpp, which work with
// sparse rational rows in reduced echelon form and use the one-sided span.
// Keep it that way: the acceptance suite compares the two routes.
namespace oracle {

inline constexpr long long kOracleCap = 4096; // max n^d per degree

using ZVec = std::vector<mpz_class>;

// Integer row set kept in (non-reduced) echelon form via cross-multiplied
// elimination; rows are divided by their content to control growth.
class ZEchelon {
  public:
    explicit ZEchelon(std::size_t cols) : cols_(cols) {}
    std::size_t rank() const { return rows_.size(); }
    // Returns true when the row was independent.
    bool add(ZVec v);

  private:
    std::size_t cols_;
    std::vector<ZVec> rows_;
    std::vector<std::size_t> lead_;
};

struct DenseTable {
    int n = 0;
    // dims[k][d] for k = 1..kmax, d = 1..dmax (0-filled placeholders at index 0)
    std::vector<std::vector<long long>> dims;
};

// Dimension table of the graded quotients M_k/M_{k+1} of the lower central
// series ideals of the free algebra on n generators, computed by dense
// two-sided closure.
DenseTable oracle_lcs_dims(int n, int kmax, int dmax);

// Same computation but returning dim of the M_k slices themselves.
DenseTable oracle_lcs_ideal_dims(int n, int kmax, int dmax);

// Reference Leibniz action of the derivation given by generator images on a
// single word, as dense per-degree coefficient vectors (degree -> vector over
// the n^degree words of that degree, truncated at `trunc`).
std::map<int, std::vector<Rat>> oracle_leibniz_apply(const std::vector<NCSeries>& images,
                                                     const Word& w, int trunc);

// Dense concatenation-product expansion of two single words (no truncation).
// Returns the rank of the product word; trivial but kept here so tests can
// cross-check commutator expansions against an independent index route.
long long oracle_word_product_rank(const Word& a, const Word& b, int n);

// Per-degree dimensions of Q[x_1..x_n]/(ideal generated by the given
// commutative series), computed by dense closure over the commutative
// monomial basis and fraction-free rank differences. Degrees 0..dmax.
std::vector<long long> oracle_comm_quotient_dims(const std::vector<CommSeries>& gens, int dmax);

} // namespace oracle
} // namespace ncdisk
