#include "ncdisk/oracle.hpp"

#include <numeric>

namespace ncdisk {
namespace oracle {

namespace {

void check_cap(int n, int d)
{
    long long c = 1;
    for (int i = 0; i < d; ++i)
        c *= n;
    require(c <= kOracleCap, errc::cap_exceeded,
            "oracle cap: n^d = " + std::to_string(c) + " > " + std::to_string(kOracleCap));
}

long long ipow(int n, int d)
{
    long long c = 1;
    for (int i = 0; i < d; ++i)
        c *= n;
    return c;
}

mpz_class row_content(const ZVec& v)
{
    mpz_class g = 0;
    for (const auto& x : v)
        if (x != 0)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

} // namespace

bool ZEchelon::add(ZVec v)
{
    if (v.size() != cols_)
        fail(errc::dimension_mismatch, "oracle row width");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::size_t l = lead_[i];
        if (v[l] == 0)
            continue;
        // cross-multiplied elimination, no division
        mpz_class a = rows_[i][l], b = v[l];
        for (std::size_t j = 0; j < cols_; ++j)
            v[j] = a * v[j] - b * rows_[i][j];
    }
    std::size_t lead = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
        if (v[j] != 0) {
            lead = j;
            break;
        }
    if (lead == cols_)
        return false;
    mpz_class g = row_content(v);
    if (g > 1)
        for (auto& x : v)
            x /= g;
    if (v[lead] < 0)
        for (auto& x : v)
            x = -x;
    std::size_t pos = 0;
    while (pos < rows_.size() && lead_[pos] < lead)
        ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    lead_.insert(lead_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    return true;
}

namespace {

// Dense slice data: per degree, independent integer rows spanning the slice.
struct SliceRows {
    std::vector<ZVec> rows;
};

// rank(concat) = rank(a) * n^deg(b) + rank(b)
long long concat_rank(long long ra, long long rb, int n, int db)
{
    return ra * ipow(n, db) + rb;
}

// Span of [w, v] over all words w of degree e and rows v of degree f = d - e.
void add_brackets(ZEchelon& ech, std::vector<ZVec>& keep, int n, int d,
                  const std::vector<SliceRows>& lower, int dmax)
{
    (void)dmax;
    for (int e = 1; e <= d - 1; ++e) {
        int f = d - e;
        long long ne = ipow(n, e);
        for (long long rw = 0; rw < ne; ++rw) {
            for (const ZVec& v : lower[static_cast<std::size_t>(f)].rows) {
                ZVec out(static_cast<std::size_t>(ipow(n, d)), mpz_class(0));
                for (std::size_t j = 0; j < v.size(); ++j) {
                    if (v[j] == 0)
                        continue;
                    long long jj = static_cast<long long>(j);
                    out[static_cast<std::size_t>(concat_rank(rw, jj, n, f))] += v[j];
                    out[static_cast<std::size_t>(concat_rank(jj, rw, n, e))] -= v[j];
                }
                ZVec copy = out;
                if (ech.add(std::move(out)))
                    keep.push_back(std::move(copy));
            }
        }
    }
}

// All L_k slices for k = 1..kmax, degrees 1..dmax.
std::vector<std::vector<SliceRows>> lcs_slices(int n, int kmax, int dmax)
{
    std::vector<std::vector<SliceRows>> L(static_cast<std::size_t>(kmax + 1),
                                          std::vector<SliceRows>(static_cast<std::size_t>(dmax + 1)));
    for (int d = 1; d <= dmax; ++d) {
        check_cap(n, d);
        long long nd = ipow(n, d);
        for (long long r = 0; r < nd; ++r) {
            ZVec unit(static_cast<std::size_t>(nd), mpz_class(0));
            unit[static_cast<std::size_t>(r)] = 1;
            L[1][static_cast<std::size_t>(d)].rows.push_back(std::move(unit));
        }
    }
    for (int k = 2; k <= kmax; ++k)
        for (int d = 1; d <= dmax; ++d) {
            ZEchelon ech(static_cast<std::size_t>(ipow(n, d)));
            std::vector<ZVec> keep;
            add_brackets(ech, keep, n, d, L[static_cast<std::size_t>(k - 1)], dmax);
            L[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)].rows = std::move(keep);
        }
    return L;
}

// Two-sided multiplicative closure of the L_k slices, iterated to a fixed
// point. This is the definitional route M_k = A L_k A with no one-sided
// shortcut.
std::vector<SliceRows> two_sided_closure(int n, int dmax, const std::vector<SliceRows>& Lk)
{
    std::vector<SliceRows> M(static_cast<std::size_t>(dmax + 1));
    std::vector<ZEchelon> ech;
    ech.reserve(static_cast<std::size_t>(dmax + 1));
    for (int d = 0; d <= dmax; ++d)
        ech.emplace_back(static_cast<std::size_t>(d >= 1 ? ipow(n, d) : 1));
    for (int d = 1; d <= dmax; ++d)
        for (const ZVec& v : Lk[static_cast<std::size_t>(d)].rows)
            if (ech[static_cast<std::size_t>(d)].add(ZVec(v)))
                M[static_cast<std::size_t>(d)].rows.push_back(v);

    bool changed = true;
    while (changed) {
        changed = false;
        for (int d = 2; d <= dmax; ++d) {
            long long lo = ipow(n, d - 1);
            std::vector<ZVec> fresh;
            for (const ZVec& v : M[static_cast<std::size_t>(d - 1)].rows) {
                for (int i = 0; i < n; ++i) {
                    ZVec left(static_cast<std::size_t>(ipow(n, d)), mpz_class(0));
                    ZVec right(static_cast<std::size_t>(ipow(n, d)), mpz_class(0));
                    for (long long j = 0; j < lo; ++j) {
                        if (v[static_cast<std::size_t>(j)] == 0)
                            continue;
                        left[static_cast<std::size_t>(i * lo + j)] = v[static_cast<std::size_t>(j)];
                        right[static_cast<std::size_t>(j * n + i)] = v[static_cast<std::size_t>(j)];
                    }
                    ZVec lcopy = left, rcopy = right;
                    if (ech[static_cast<std::size_t>(d)].add(std::move(left))) {
                        fresh.push_back(std::move(lcopy));
                        changed = true;
                    }
                    if (ech[static_cast<std::size_t>(d)].add(std::move(right))) {
                        fresh.push_back(std::move(rcopy));
                        changed = true;
                    }
                }
            }
            auto& rows = M[static_cast<std::size_t>(d)].rows;
            rows.insert(rows.end(), std::make_move_iterator(fresh.begin()),
                        std::make_move_iterator(fresh.end()));
        }
    }
    return M;
}

long long slice_rank(int n, int d, const SliceRows& s)
{
    ZEchelon ech(static_cast<std::size_t>(ipow(n, d)));
    long long r = 0;
    for (const ZVec& v : s.rows)
        if (ech.add(ZVec(v)))
            ++r;
    return r;
}

} // namespace

DenseTable oracle_lcs_ideal_dims(int n, int kmax, int dmax)
{
    require(n >= 1 && kmax >= 1 && dmax >= 1, errc::dimension_mismatch, "oracle_lcs_ideal_dims bounds");
    check_cap(n, dmax);
    auto L = lcs_slices(n, kmax, dmax);
    DenseTable t;
    t.n = n;
    t.dims.assign(static_cast<std::size_t>(kmax + 1),
                  std::vector<long long>(static_cast<std::size_t>(dmax + 1), 0));
    for (int k = 1; k <= kmax; ++k) {
        auto M = two_sided_closure(n, dmax, L[static_cast<std::size_t>(k)]);
        for (int d = 1; d <= dmax; ++d)
            t.dims[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)] =
                slice_rank(n, d, M[static_cast<std::size_t>(d)]);
    }
    return t;
}

DenseTable oracle_lcs_dims(int n, int kmax, int dmax)
{
    DenseTable ideal = oracle_lcs_ideal_dims(n, kmax + 1, dmax);
    DenseTable t;
    t.n = n;
    t.dims.assign(static_cast<std::size_t>(kmax + 1),
                  std::vector<long long>(static_cast<std::size_t>(dmax + 1), 0));
    for (int k = 1; k <= kmax; ++k)
        for (int d = 1; d <= dmax; ++d)
            t.dims[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)] =
                ideal.dims[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)] -
                ideal.dims[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(d)];
    return t;
}

std::map<int, std::vector<Rat>> oracle_leibniz_apply(const std::vector<NCSeries>& images,
                                                     const Word& w, int trunc)
{
    require(!images.empty(), errc::dimension_mismatch, "no images");
    int n = images[0].num_generators();
    check_word(w, n);
    std::map<int, std::vector<Rat>> out;
    int d = word_degree(w);
    for (int p = 0; p < d; ++p) {
        const NCSeries& img = images[static_cast<std::size_t>(w[static_cast<std::size_t>(p)] - 1)];
        for (const auto& [u, c] : img.terms()) {
            int dd = d - 1 + word_degree(u);
            if (dd > trunc)
                continue;
            check_cap(n, dd);
            // rank of prefix + u + suffix, letter by letter
            long long r = 0;
            for (int q = 0; q < p; ++q)
                r = r * n + (w[static_cast<std::size_t>(q)] - 1);
            for (Letter l : u)
                r = r * n + (l - 1);
            for (int q = p + 1; q < d; ++q)
                r = r * n + (w[static_cast<std::size_t>(q)] - 1);
            auto [it, fresh] = out.try_emplace(dd);
            if (fresh)
                it->second.assign(static_cast<std::size_t>(ipow(n, dd)), Rat(0));
            it->second[static_cast<std::size_t>(r)] += c;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        bool all_zero = true;
        for (const Rat& q : it->second)
            if (!is_zero(q)) {
                all_zero = false;
                break;
            }
        it = all_zero ? out.erase(it) : std::next(it);
    }
    return out;
}

long long oracle_word_product_rank(const Word& a, const Word& b, int n)
{
    long long r = 0;
    for (Letter l : a)
        r = r * n + (l - 1);
    for (Letter l : b)
        r = r * n + (l - 1);
    return r;
}

std::vector<long long> oracle_comm_quotient_dims(const std::vector<CommSeries>& gens, int dmax)
{
    require(!gens.empty() || dmax >= 0, errc::dimension_mismatch, "bad input");
    int n = gens.empty() ? 1 : gens[0].num_generators();

    // enumerate commutative monomials of degree <= dmax, degree-major order
    std::vector<ExpVec> monos;
    std::map<ExpVec, std::size_t> index;
    std::vector<std::size_t> degree_end; // end column of each degree block
    {
        std::vector<ExpVec> cur{ExpVec(static_cast<std::size_t>(n), 0)};
        for (int d = 0; d <= dmax; ++d) {
            for (const auto& e : cur) {
                index[e] = monos.size();
                monos.push_back(e);
            }
            degree_end.push_back(monos.size());
            require(monos.size() <= static_cast<std::size_t>(kOracleCap), errc::cap_exceeded,
                    "oracle commutative monomial cap");
            std::vector<ExpVec> next;
            std::map<ExpVec, bool> seen;
            for (const auto& e : cur)
                for (int i = 0; i < n; ++i) {
                    ExpVec f = e;
                    ++f[static_cast<std::size_t>(i)];
                    if (!seen.count(f)) {
                        seen[f] = true;
                        next.push_back(f);
                    }
                }
            cur = std::move(next);
        }
    }

    auto to_dense = [&](const CommSeries& s) {
        ZVec v(monos.size(), mpz_class(0));
        mpz_class denom_lcm = 1;
        for (const auto& [e, c] : s.terms())
            if (expvec_degree(e) <= dmax)
                mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        for (const auto& [e, c] : s.terms()) {
            if (expvec_degree(e) > dmax)
                continue;
            Rat scaled = c * Rat(denom_lcm);
            v[index.at(e)] = scaled.get_num();
        }
        return v;
    };

    // closure of the ideal span under multiplication by each variable
    std::vector<ZVec> span;
    ZEchelon ech(monos.size());
    for (const auto& g : gens) {
        ZVec v = to_dense(g);
        ZVec copy = v;
        if (ech.add(std::move(v)))
            span.push_back(std::move(copy));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<ZVec> fresh;
        for (const ZVec& v : span)
            for (int i = 0; i < n; ++i) {
                ZVec w(monos.size(), mpz_class(0));
                bool any = false;
                for (std::size_t j = 0; j < v.size(); ++j) {
                    if (v[j] == 0)
                        continue;
                    ExpVec e = monos[j];
                    ++e[static_cast<std::size_t>(i)];
                    auto it = index.find(e);
                    if (it == index.end())
                        continue; // degree > dmax, dropped
                    w[it->second] = v[j];
                    any = true;
                }
                if (!any)
                    continue;
                ZVec copy = w;
                if (ech.add(std::move(w))) {
                    fresh.push_back(std::move(copy));
                    changed = true;
                }
            }
        span.insert(span.end(), std::make_move_iterator(fresh.begin()),
                    std::make_move_iterator(fresh.end()));
    }

    // staircase counts from ranks of projections onto the degree <= e blocks
    std::vector<long long> rank_upto(static_cast<std::size_t>(dmax + 1), 0);
    for (int e = 0; e <= dmax; ++e) {
        std::size_t cols = degree_end[static_cast<std::size_t>(e)];
        ZEchelon proj(cols);
        long long r = 0;
        for (const ZVec& v : span) {
            ZVec t(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(cols));
            if (proj.add(std::move(t)))
                ++r;
        }
        rank_upto[static_cast<std::size_t>(e)] = r;
    }
    std::vector<long long> dims(static_cast<std::size_t>(dmax + 1), 0);
    for (int e = 0; e <= dmax; ++e) {
        long long monomials_e =
            static_cast<long long>(degree_end[static_cast<std::size_t>(e)]) -
            (e == 0 ? 0 : static_cast<long long>(degree_end[static_cast<std::size_t>(e - 1)]));
        long long pivots_e = rank_upto[static_cast<std::size_t>(e)] -
                             (e == 0 ? 0 : rank_upto[static_cast<std::size_t>(e - 1)]);
        dims[static_cast<std::size_t>(e)] = monomials_e - pivots_e;
    }
    return dims;
}

} // namespace oracle
} // namespace ncdisk
