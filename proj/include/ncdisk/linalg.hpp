#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncdisk/rational.hpp"

namespace ncdisk {

using RatVec = std::vector<Rat>;

// A subspace of Q^cols kept permanently in reduced row echelon form. The
// RREF is the unique canonical representative of the subspace, so equality
// of subspaces is equality of the stored matrices.
class RowSpace {
  public:
    explicit RowSpace(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<RatVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Reduces v against the current rows; the remainder is untouched at all
    // pivot columns.
    RatVec reduce(RatVec v) const
    {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rat& c = v[pivots_[i]];
            if (is_zero(c))
                continue;
            Rat f = c; // pivot entries are 1
            for (std::size_t j = pivots_[i]; j < cols_; ++j)
                if (!is_zero(rows_[i][j]))
                    v[j] -= f * rows_[i][j];
        }
        return v;
    }

    bool contains(const RatVec& v) const
    {
        RatVec r = reduce(v);
        for (const Rat& c : r)
            if (!is_zero(c))
                return false;
        return true;
    }

    // Inserts v if independent; returns true when the dimension grew.
    bool add(RatVec v)
    {
        v = reduce(std::move(v));
        std::size_t p = cols_;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!is_zero(v[j])) {
                p = j;
                break;
            }
        if (p == cols_)
            return false;
        Rat inv = 1 / v[p];
        for (std::size_t j = p; j < cols_; ++j)
            if (!is_zero(v[j]))
                v[j] *= inv;
        // back-eliminate the new pivot column from existing rows
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rat& c = rows_[i][p];
            if (is_zero(c))
                continue;
            Rat f = c;
            for (std::size_t j = p; j < cols_; ++j)
                if (!is_zero(v[j]))
                    rows_[i][j] -= f * v[j];
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p)
            ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
        return true;
    }

    bool contains_subspace(const RowSpace& other) const
    {
        for (const auto& r : other.rows_)
            if (!contains(r))
                return false;
        return true;
    }

    friend bool operator==(const RowSpace& a, const RowSpace& b)
    {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

  private:
    std::size_t cols_;
    std::vector<RatVec> rows_;    // in RREF, pivots strictly increasing
    std::vector<std::size_t> pivots_;
};

// Kernel of the linear map given by applying `image` to each standard basis
// vector of Q^domain_dim; the basis of the kernel is returned in RREF over
// the domain coordinates.
//
// `image` is presented as a dense matrix with domain_dim columns.
inline RowSpace kernel_of(const std::vector<RatVec>& matrix_rows, std::size_t domain_dim)
{
    // RREF of the matrix, remembering the column operations implicitly via
    // pivot bookkeeping; free columns parametrize the kernel.
    std::vector<RatVec> m = matrix_rows;
    std::vector<std::size_t> pivot_of_row;
    std::size_t r = 0;
    for (std::size_t c = 0; c < domain_dim && r < m.size(); ++c) {
        std::size_t sel = m.size();
        for (std::size_t i = r; i < m.size(); ++i)
            if (!is_zero(m[i][c])) {
                sel = i;
                break;
            }
        if (sel == m.size())
            continue;
        std::swap(m[r], m[sel]);
        Rat inv = 1 / m[r][c];
        for (std::size_t j = c; j < domain_dim; ++j)
            m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || is_zero(m[i][c]))
                continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < domain_dim; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivot_of_row.push_back(c);
        ++r;
    }
    m.resize(r);

    std::vector<bool> is_pivot(domain_dim, false);
    for (std::size_t p : pivot_of_row)
        is_pivot[p] = true;

    RowSpace ker(domain_dim);
    for (std::size_t f = 0; f < domain_dim; ++f) {
        if (is_pivot[f])
            continue;
        RatVec v(domain_dim, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r; ++i)
            v[pivot_of_row[i]] = -m[i][f];
        ker.add(std::move(v));
    }
    return ker;
}

// Inverse of a square rational matrix, or nullopt when singular.
inline std::optional<std::vector<RatVec>> invert_matrix(std::vector<RatVec> a)
{
    std::size_t n = a.size();
    std::vector<RatVec> inv(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = n;
        for (std::size_t i = c; i < n; ++i)
            if (!is_zero(a[i][c])) {
                sel = i;
                break;
            }
        if (sel == n)
            return std::nullopt;
        std::swap(a[c], a[sel]);
        std::swap(inv[c], inv[sel]);
        Rat f = 1 / a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] *= f;
            inv[c][j] *= f;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || is_zero(a[i][c]))
                continue;
            Rat g = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= g * a[c][j];
                inv[i][j] -= g * inv[c][j];
            }
        }
    }
    return inv;
}

} // namespace ncdisk
