#include "ncdisk/lcs.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

namespace ncdisk {

long long degree_cap()
{
    static long long cap = [] {
        if (const char* env = std::getenv("NCDISK_CAP")) {
            long long v = std::atoll(env);
            if (v > 0)
                return v;
        }
        return 65536LL;
    }();
    return cap;
}

namespace {

void check_degree_cap(int n, int d)
{
    long long c = word_count(n, d);
    require(c <= degree_cap(), errc::cap_exceeded,
            "n^d = " + std::to_string(c) + " exceeds cap " + std::to_string(degree_cap()));
}

} // namespace

GradedSubspace::GradedSubspace(int n_, int degree_)
    : n(n_), degree(degree_), basis(static_cast<std::size_t>(word_count(n_, degree_)))
{
    check_degree_cap(n_, degree_);
}

RatVec GradedSubspace::vectorize(const NCSeries& h) const
{
    RatVec v(basis.cols(), Rat(0));
    for (const auto& [w, c] : h.terms()) {
        require(word_degree(w) == degree, errc::degree_out_of_range,
                "vectorize needs a homogeneous series of the slice degree");
        v[static_cast<std::size_t>(word_rank(w, n))] = c;
    }
    return v;
}

bool GradedSubspace::contains(const NCSeries& h) const
{
    return basis.contains(vectorize(h));
}

NCSeries GradedSubspace::row_series(std::size_t i, int trunc) const
{
    NCSeries s(n, trunc);
    const RatVec& row = basis.rows().at(i);
    for (std::size_t j = 0; j < row.size(); ++j)
        if (!is_zero(row[j]))
            s.add_term(word_unrank(static_cast<long long>(j), n, degree), row[j]);
    return s;
}

namespace {

// All L_j slices for j <= k, degrees 1..dmax. Slice vectors are dense rows
// over the degree word basis.
std::vector<std::vector<RowSpace>> lcs_slices_upto(int k, int dmax, int n)
{
    std::vector<std::vector<RowSpace>> L;
    L.reserve(static_cast<std::size_t>(k + 1));
    for (int j = 0; j <= k; ++j) {
        std::vector<RowSpace> per_degree;
        per_degree.reserve(static_cast<std::size_t>(dmax + 1));
        for (int d = 0; d <= dmax; ++d)
            per_degree.emplace_back(static_cast<std::size_t>(d >= 1 ? word_count(n, d) : 1));
        L.push_back(std::move(per_degree));
    }
    for (int d = 1; d <= dmax; ++d) {
        check_degree_cap(n, d);
        long long nd = word_count(n, d);
        for (long long r = 0; r < nd; ++r) {
            RatVec unit(static_cast<std::size_t>(nd), Rat(0));
            unit[static_cast<std::size_t>(r)] = 1;
            L[1][static_cast<std::size_t>(d)].add(std::move(unit));
        }
    }
    for (int j = 2; j <= k; ++j)
        for (int d = 1; d <= dmax; ++d) {
            RowSpace& target = L[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)];
            for (int e = 1; e <= d - 1; ++e) {
                int f = d - e;
                long long ne = word_count(n, e);
                long long nf = word_count(n, f);
                const RowSpace& lower = L[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(f)];
                for (long long rw = 0; rw < ne; ++rw)
                    for (const RatVec& v : lower.rows()) {
                        RatVec out(static_cast<std::size_t>(word_count(n, d)), Rat(0));
                        for (std::size_t jj = 0; jj < v.size(); ++jj) {
                            if (is_zero(v[jj]))
                                continue;
                            long long rv = static_cast<long long>(jj);
                            out[static_cast<std::size_t>(rw * nf + rv)] += v[jj];
                            out[static_cast<std::size_t>(rv * ne + rw)] -= v[jj];
                        }
                        target.add(std::move(out));
                    }
            }
        }
    return L;
}

// M_k slices from the L_k slices by the one-sided recursion
// M(d) = L_k(d) + sum_i x_i . M(d-1).
std::vector<RowSpace> ideal_slices_from(const std::vector<RowSpace>& Lk, int dmax, int n)
{
    std::vector<RowSpace> M;
    M.reserve(static_cast<std::size_t>(dmax + 1));
    for (int d = 0; d <= dmax; ++d)
        M.emplace_back(static_cast<std::size_t>(d >= 1 ? word_count(n, d) : 1));
    for (int d = 1; d <= dmax; ++d) {
        for (const RatVec& v : Lk[static_cast<std::size_t>(d)].rows())
            M[static_cast<std::size_t>(d)].add(RatVec(v));
        if (d >= 2) {
            long long lo = word_count(n, d - 1);
            for (const RatVec& v : M[static_cast<std::size_t>(d - 1)].rows())
                for (int i = 0; i < n; ++i) {
                    RatVec out(static_cast<std::size_t>(word_count(n, d)), Rat(0));
                    for (long long j = 0; j < lo; ++j)
                        if (!is_zero(v[static_cast<std::size_t>(j)]))
                            out[static_cast<std::size_t>(i * lo + j)] = v[static_cast<std::size_t>(j)];
                    M[static_cast<std::size_t>(d)].add(std::move(out));
                }
        }
    }
    return M;
}

} // namespace

GradedSubspace lcs_component(int k, int d, int n)
{
    require(k >= 1 && d >= 1 && n >= 1, errc::dimension_mismatch, "lcs_component bounds");
    GradedSubspace out(n, d);
    auto L = lcs_slices_upto(k, d, n);
    out.basis = L[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)];
    return out;
}

GradedSubspace lcs_ideal_component(int k, int d, int n)
{
    require(k >= 1 && d >= 1 && n >= 1, errc::dimension_mismatch, "lcs_ideal_component bounds");
    auto L = lcs_slices_upto(k, d, n);
    auto M = ideal_slices_from(L[static_cast<std::size_t>(k)], d, n);
    GradedSubspace out(n, d);
    out.basis = M[static_cast<std::size_t>(d)];
    return out;
}

DimensionTable lcs_ideal_dim_table(int kmax, int dmax, int n)
{
    require(kmax >= 1 && dmax >= 1 && n >= 1, errc::dimension_mismatch, "table bounds");
    check_degree_cap(n, dmax);
    DimensionTable t;
    t.n = n;
    t.d_min = 1;
    auto L = lcs_slices_upto(kmax, dmax, n);
    for (int k = 1; k <= kmax; ++k) {
        auto M = ideal_slices_from(L[static_cast<std::size_t>(k)], dmax, n);
        DimensionTable::Row row;
        row.k = k;
        for (int d = 1; d <= dmax; ++d)
            row.dims.push_back(static_cast<long long>(M[static_cast<std::size_t>(d)].dim()));
        t.rows.push_back(std::move(row));
    }
    return t;
}

DimensionTable lcs_quotient_table(int kmax, int dmax, int n)
{
    DimensionTable ideal = lcs_ideal_dim_table(kmax + 1, dmax, n);
    DimensionTable t;
    t.n = n;
    t.d_min = 1;
    for (int k = 1; k <= kmax; ++k) {
        DimensionTable::Row row;
        row.k = k;
        for (int d = 1; d <= dmax; ++d)
            row.dims.push_back(ideal.rows[static_cast<std::size_t>(k - 1)].dims[static_cast<std::size_t>(d - 1)] -
                               ideal.rows[static_cast<std::size_t>(k)].dims[static_cast<std::size_t>(d - 1)]);
        t.rows.push_back(std::move(row));
    }
    return t;
}

GradedSubspace ideal_closure(const std::vector<NCSeries>& generators, int d)
{
    require(d >= 0, errc::degree_out_of_range, "negative degree");
    require(!generators.empty() || d >= 0, errc::dimension_mismatch, "empty input");
    int n = generators.empty() ? 1 : generators[0].num_generators();
    GradedSubspace out(n, d);
    if (generators.empty())
        return out;

    int gmin = d + 1;
    for (const auto& g : generators) {
        require(g.num_generators() == n, errc::dimension_mismatch, "generator arity mismatch");
        if (g.is_zero())
            continue;
        require(g.min_degree() == g.max_degree(), errc::inhomogeneous_generator,
                "ideal_closure needs homogeneous generators");
        gmin = std::min(gmin, g.min_degree());
    }

    // I(e) = gens(e) + sum_i x_i I(e-1) + I(e-1) x_i, degrees ascending, to a
    // fixed point.
    std::vector<RowSpace> I;
    for (int e = 0; e <= d; ++e)
        I.emplace_back(static_cast<std::size_t>(e >= 1 ? word_count(n, e) : 1));
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e = 1; e <= d; ++e) {
            for (const auto& g : generators)
                if (!g.is_zero() && g.min_degree() == e) {
                    GradedSubspace tmp(n, e);
                    if (I[static_cast<std::size_t>(e)].add(tmp.vectorize(g)))
                        changed = true;
                }
            if (e >= 2) {
                long long lo = word_count(n, e - 1);
                std::vector<RatVec> rows = I[static_cast<std::size_t>(e - 1)].rows();
                for (const RatVec& v : rows)
                    for (int i = 0; i < n; ++i) {
                        RatVec left(static_cast<std::size_t>(word_count(n, e)), Rat(0));
                        RatVec right(static_cast<std::size_t>(word_count(n, e)), Rat(0));
                        for (long long j = 0; j < lo; ++j) {
                            const Rat& c = v[static_cast<std::size_t>(j)];
                            if (is_zero(c))
                                continue;
                            left[static_cast<std::size_t>(i * lo + j)] = c;
                            right[static_cast<std::size_t>(j * n + i)] = c;
                        }
                        if (I[static_cast<std::size_t>(e)].add(std::move(left)))
                            changed = true;
                        if (I[static_cast<std::size_t>(e)].add(std::move(right)))
                            changed = true;
                    }
            }
        }
    }
    out.basis = I[static_cast<std::size_t>(d)];
    return out;
}

namespace {

long long binom(long long a, long long b)
{
    if (b < 0 || b > a)
        return 0;
    long long r = 1;
    for (long long i = 0; i < b; ++i)
        r = r * (a - i) / (i + 1);
    return r;
}

} // namespace

DimensionTable ci_thickening_dims(const std::vector<NCSeries>& f_tilde, int dmax,
                                  int num_generators)
{
    require(dmax >= 0, errc::degree_out_of_range, "negative dmax");
    require(num_generators > 0 || !f_tilde.empty(), errc::dimension_mismatch,
            "pass num_generators when the relation list is empty");
    int n = num_generators > 0 ? num_generators : f_tilde[0].num_generators();
    for (const auto& f : f_tilde) {
        require(f.num_generators() == n, errc::dimension_mismatch, "generator arity mismatch");
        require(is_zero(f.constant_term()), errc::non_recentred,
                "relation does not vanish at the chosen point; recentre first");
    }
    check_degree_cap(n, dmax);

    // Column layout: all words of degree 0..dmax, degree-major. A row with
    // leading column in degree d contributes one leading term to the degree-d
    // staircase of the ideal.
    std::vector<long long> block_start(static_cast<std::size_t>(dmax + 2), 0);
    for (int d = 0; d <= dmax; ++d)
        block_start[static_cast<std::size_t>(d + 1)] =
            block_start[static_cast<std::size_t>(d)] + word_count(n, d);
    long long total = block_start[static_cast<std::size_t>(dmax + 1)];
    require(total <= degree_cap() * 4, errc::cap_exceeded, "truncated algebra too large");

    auto vectorize = [&](const NCSeries& s) {
        RatVec v(static_cast<std::size_t>(total), Rat(0));
        for (const auto& [w, c] : s.terms()) {
            int d = word_degree(w);
            if (d > dmax)
                continue;
            v[static_cast<std::size_t>(block_start[static_cast<std::size_t>(d)] + word_rank(w, n))] = c;
        }
        return v;
    };

    // Two-sided closure of the span of {w f v} in the truncated algebra:
    // seed with the generators and multiply by x_i on both sides until the
    // row space is stable.
    RowSpace ideal(static_cast<std::size_t>(total));
    std::vector<NCSeries> frontier;
    for (const auto& f : f_tilde) {
        NCSeries lifted = f.trunc() >= dmax ? f : f.lifted_to(dmax);
        // drop terms beyond the working truncation
        NCSeries cut(n, dmax);
        for (const auto& [w, c] : lifted.terms())
            if (word_degree(w) <= dmax)
                cut.add_term(w, c);
        if (cut.is_zero())
            continue;
        if (ideal.add(vectorize(cut)))
            frontier.push_back(cut);
    }
    while (!frontier.empty()) {
        std::vector<NCSeries> next;
        for (const auto& s : frontier)
            for (int i = 1; i <= n; ++i) {
                NCSeries xi = NCSeries::generator(n, dmax, i);
                for (const NCSeries& prod : {series_mul(xi, s), series_mul(s, xi)})
                    if (!prod.is_zero() && ideal.add(vectorize(prod)))
                        next.push_back(prod);
            }
        frontier = std::move(next);
    }

    // Staircase: pivots per degree block.
    std::vector<long long> pivots_nc(static_cast<std::size_t>(dmax + 1), 0);
    for (std::size_t p : ideal.pivots()) {
        int d = 0;
        while (static_cast<long long>(p) >= block_start[static_cast<std::size_t>(d + 1)])
            ++d;
        ++pivots_nc[static_cast<std::size_t>(d)];
    }

    // Abelianized row: image of the ideal under abelianization, staircase
    // over the commutative monomial basis.
    std::vector<ExpVec> monos;
    std::map<ExpVec, long long, ExpVecLess> mono_index;
    std::vector<long long> comm_block_start(static_cast<std::size_t>(dmax + 2), 0);
    {
        // ExpVecLess sorts by degree first, so filling degree by degree gives
        // a degree-major layout.
        std::vector<ExpVec> cur{ExpVec(static_cast<std::size_t>(n), 0)};
        for (int d = 0; d <= dmax; ++d) {
            std::sort(cur.begin(), cur.end(), [](const ExpVec& a, const ExpVec& b) { return a > b; });
            for (const auto& e : cur) {
                mono_index[e] = static_cast<long long>(monos.size());
                monos.push_back(e);
            }
            comm_block_start[static_cast<std::size_t>(d + 1)] = static_cast<long long>(monos.size());
            std::vector<ExpVec> nxt;
            for (const auto& e : cur)
                for (int i = 0; i < n; ++i) {
                    ExpVec f = e;
                    ++f[static_cast<std::size_t>(i)];
                    nxt.push_back(f);
                }
            std::sort(nxt.begin(), nxt.end());
            nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
            cur = std::move(nxt);
        }
    }
    RowSpace ab_ideal(monos.size());
    for (std::size_t r = 0; r < ideal.rows().size(); ++r) {
        const RatVec& row = ideal.rows()[r];
        RatVec v(monos.size(), Rat(0));
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (is_zero(row[j]))
                continue;
            int d = 0;
            while (static_cast<long long>(j) >= block_start[static_cast<std::size_t>(d + 1)])
                ++d;
            Word w = word_unrank(static_cast<long long>(j) - block_start[static_cast<std::size_t>(d)], n, d);
            ExpVec e(static_cast<std::size_t>(n), 0);
            for (Letter l : w)
                ++e[static_cast<std::size_t>(l - 1)];
            v[static_cast<std::size_t>(mono_index.at(e))] += row[j];
        }
        ab_ideal.add(std::move(v));
    }
    std::vector<long long> pivots_ab(static_cast<std::size_t>(dmax + 1), 0);
    for (std::size_t p : ab_ideal.pivots()) {
        int d = 0;
        while (static_cast<long long>(p) >= comm_block_start[static_cast<std::size_t>(d + 1)])
            ++d;
        ++pivots_ab[static_cast<std::size_t>(d)];
    }

    DimensionTable t;
    t.n = n;
    t.d_min = 0;
    DimensionTable::Row nc_row, ab_row;
    nc_row.k = 0;
    ab_row.k = 1;
    for (int d = 0; d <= dmax; ++d) {
        nc_row.dims.push_back(word_count(n, d) - pivots_nc[static_cast<std::size_t>(d)]);
        long long comm_count = binom(n + d - 1, d);
        ab_row.dims.push_back(comm_count - pivots_ab[static_cast<std::size_t>(d)]);
    }
    t.rows.push_back(std::move(nc_row));
    t.rows.push_back(std::move(ab_row));
    return t;
}

std::string DimensionTable::to_json() const
{
    std::ostringstream os;
    os << "{\"n\":" << n << ",\"d_min\":" << d_min << ",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i)
            os << ",";
        os << "{\"k\":" << rows[i].k << ",\"dims\":[";
        for (std::size_t j = 0; j < rows[i].dims.size(); ++j) {
            if (j)
                os << ",";
            os << rows[i].dims[j];
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

std::string DimensionTable::to_text() const
{
    std::ostringstream os;
    os << "k\\d";
    std::size_t width = 0;
    for (const auto& r : rows)
        width = std::max(width, r.dims.size());
    for (std::size_t j = 0; j < width; ++j)
        os << "\t" << (d_min + static_cast<int>(j));
    os << "\n";
    for (const auto& r : rows) {
        os << r.k;
        for (long long v : r.dims)
            os << "\t" << v;
        os << "\n";
    }
    return os.str();
}

} // namespace ncdisk
