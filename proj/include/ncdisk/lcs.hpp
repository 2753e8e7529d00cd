#pragma once

#include <string>
#include <vector>

#include "ncdisk/linalg.hpp"
#include "ncdisk/ncseries.hpp"

namespace ncdisk {

// Per-degree enumeration cap (number of words n^d allowed per degree).
// Overridable through the NCDISK_CAP environment variable.
long long degree_cap();

// A subspace of the degree-d slice of the free algebra, canonicalized as the
// reduced row echelon form over the graded-lex word basis. Equality of
// subspaces is equality of the echelon matrices.
struct GradedSubspace {
    int n = 0;
    int degree = 0;
    RowSpace basis;

    GradedSubspace(int n_, int degree_);
    long long dim() const { return static_cast<long long>(basis.dim()); }
    bool contains(const NCSeries& homogeneous) const;
    // Coefficient vector of a degree-d homogeneous series over the word basis.
    RatVec vectorize(const NCSeries& homogeneous) const;
    NCSeries row_series(std::size_t i, int trunc) const;
};

struct DimensionTable {
    struct Row {
        int k = 0;
        std::vector<long long> dims; // indexed by degree, starting at d_min
    };
    int n = 0;
    int d_min = 1; // first degree column (1 for LCS tables, 0 for quotient-algebra tables)
    std::vector<Row> rows;

    std::string to_json() const;
    std::string to_text() const;
};

// Degree-d slice of L_k: L_1 = A, L_k = [A, L_{k-1}].
GradedSubspace lcs_component(int k, int d, int n);

// Degree-d slice of the two-sided ideal M_k = A L_k A, computed with the
// one-sided span A L_k (the oracle recomputes the two-sided closure).
GradedSubspace lcs_ideal_component(int k, int d, int n);

// dims of the M_k slices for k = 1..kmax, d = 1..dmax.
DimensionTable lcs_ideal_dim_table(int kmax, int dmax, int n);

// entry (k, d) = dim M_k slice - dim M_{k+1} slice.
DimensionTable lcs_quotient_table(int kmax, int dmax, int n);

// Degree-d slice of the two-sided ideal generated by homogeneous elements of
// the truncated free algebra, via fixed-point iteration of left/right
// multiplication spans.
GradedSubspace ideal_closure(const std::vector<NCSeries>& generators, int d);

// Per-degree dimensions, 0..dmax, of the quotient of the truncated free
// algebra by the two-sided ideal generated by f_tilde (row k = 0), and of
// its abelianization (row k = 1). Generators must vanish at the origin; the
// inputs are treated as exact noncommutative polynomials and may mix
// degrees. Slices are with respect to the order filtration, counted by the
// echelon staircase of the ideal. num_generators must be passed when the
// relation list is empty.
DimensionTable ci_thickening_dims(const std::vector<NCSeries>& f_tilde, int dmax,
                                  int num_generators = 0);

} // namespace ncdisk
