#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncdisk/lcs.hpp"
#include "ncdisk/oracle.hpp"
#include "test_util.hpp"

using namespace ncdisk;
using namespace ncdisk::testutil;

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

TEST_CASE("lower central series slices")
{
    CHECK(lcs_component(1, 2, 2).dim() == 4); // L_1 = A
    GradedSubspace L22 = lcs_component(2, 2, 2);
    CHECK(L22.dim() == 1);
    NCSeries c = series_commutator(NCSeries::generator(2, 2, 1), NCSeries::generator(2, 2, 2));
    CHECK(L22.contains(c.degree_part(2)));
    CHECK(lcs_component(3, 2, 2).dim() == 0); // brackets with L_2 start in degree 3
}

TEST_CASE("ideal slices")
{
    CHECK(lcs_ideal_component(2, 3, 2).dim() == 4); // 8 - C(4,3)
    CHECK(lcs_ideal_component(1, 3, 2).dim() == 8); // M_1 = A
    CHECK(lcs_ideal_component(2, 1, 2).dim() == 0); // no commutators in degree 1

    // M_2 = kernel of abelianization at every degree
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 4; ++d)
            CHECK(lcs_ideal_component(2, d, n).dim() == word_count(n, d) - binom(n + d - 1, d));
}

TEST_CASE("nesting of the filtration")
{
    for (int d = 1; d <= 5; ++d)
        for (int k = 1; k <= 3; ++k) {
            GradedSubspace mk = lcs_ideal_component(k, d, 2);
            GradedSubspace mk1 = lcs_ideal_component(k + 1, d, 2);
            GradedSubspace lk1 = lcs_component(k + 1, d, 2);
            CHECK(mk.basis.contains_subspace(mk1.basis));
            CHECK(mk.basis.contains_subspace(lk1.basis));
        }
}

TEST_CASE("quotient table basics")
{
    DimensionTable t = lcs_quotient_table(2, 3, 2);
    CHECK(t.rows[0].k == 1);
    CHECK(t.rows[0].dims[0] == 2); // generators
    CHECK(t.rows[0].dims[1] == 3); // commutative monomial count in degree 2

    DimensionTable ideal = lcs_ideal_dim_table(2, 3, 2);
    CHECK(ideal.rows[1].dims == std::vector<long long>{0, 1, 4});
    // M_1 row is the full algebra
    CHECK(ideal.rows[0].dims == std::vector<long long>{2, 4, 8});
}

TEST_CASE("tables match the dense two-sided oracle")
{
    for (int n : {1, 2}) {
        int kmax = 3, dmax = 4;
        DimensionTable t = lcs_quotient_table(kmax, dmax, n);
        oracle::DenseTable o = oracle::oracle_lcs_dims(n, kmax, dmax);
        for (int k = 1; k <= kmax; ++k)
            for (int d = 1; d <= dmax; ++d)
                CHECK(t.rows[static_cast<size_t>(k - 1)].dims[static_cast<size_t>(d - 1)] ==
                      o.dims[static_cast<size_t>(k)][static_cast<size_t>(d)]);
    }
}

TEST_CASE("one-sided span equals two-sided closure")
{
    for (int k = 1; k <= 3; ++k)
        for (int d = 1; d <= 4; ++d) {
            GradedSubspace m = lcs_ideal_component(k, d, 2);
            oracle::DenseTable o = oracle::oracle_lcs_ideal_dims(2, k, d);
            CHECK(m.dim() == o.dims[static_cast<size_t>(k)][static_cast<size_t>(d)]);
        }
}

TEST_CASE("filtration is preserved by substitutions")
{
    Rng rng(kDefaultSeed + 3);
    int n = 2, N = 4;
    for (int rep = 0; rep < 15; ++rep) {
        int k = 2 + static_cast<int>(rng() % 2);
        int d = k + static_cast<int>(rng() % (N - k + 1));
        GradedSubspace mk = lcs_ideal_component(k, d, n);
        if (mk.dim() == 0)
            continue;
        // random element of the slice
        NCSeries v(n, N);
        for (std::size_t i = 0; i < mk.basis.rows().size(); ++i)
            v = series_add(v, series_scale(random_rational(rng, 3, 2), mk.row_series(i, N)));
        NCAutomorphism g = random_automorphism(rng, n, N);
        NCSeries image = series_substitute(v, g.images());
        for (int e = 1; e <= N; ++e) {
            NCSeries part = image.degree_part(e);
            if (part.is_zero())
                continue;
            CHECK(lcs_ideal_component(k, e, n).contains(part));
        }
    }
}

TEST_CASE("ideal closure")
{
    NCSeries x1 = NCSeries::generator(2, 2, 1);
    GradedSubspace s = ideal_closure({x1}, 2);
    CHECK(s.dim() == 3); // words containing the letter x1

    CHECK(ideal_closure(std::vector<NCSeries>{}, 3).dim() == 0);

    NCSeries comm = series_commutator(NCSeries::generator(2, 3, 1), NCSeries::generator(2, 3, 2));
    GradedSubspace c3 = ideal_closure({comm}, 3);
    CHECK(c3.dim() == 4);
    CHECK(c3.basis == lcs_ideal_component(2, 3, 2).basis);

    NCSeries inhom(2, 3);
    inhom.add_term(Word{1}, Rat(1));
    inhom.add_term(Word{1, 2}, Rat(1));
    CHECK_THROWS_AS(ideal_closure({inhom}, 3), Error);
}

TEST_CASE("complete intersection dimension rows")
{
    // no relations: the free algebra itself
    DimensionTable free2 = ci_thickening_dims(std::vector<NCSeries>{}, 3, 2);
    CHECK(free2.rows[0].dims == std::vector<long long>{1, 2, 4, 8});
    CHECK(free2.rows[1].dims == std::vector<long long>{1, 2, 3, 4});

    // f = x1 inside the 2-generator algebra: the surviving words are powers of x2
    NCSeries x1 = NCSeries::generator(2, 5, 1);
    DimensionTable t = ci_thickening_dims({x1}, 5);
    CHECK(t.rows[0].dims == std::vector<long long>{1, 1, 1, 1, 1, 1});
    CHECK(t.rows[1].dims == std::vector<long long>{1, 1, 1, 1, 1, 1});

    // abelianized row against the independent commutative oracle
    NCSeries f(2, 5);
    f.add_term(Word{1}, Rat(1));
    f.add_term(Word{1, 2}, Rat(1));
    f.add_term(Word{2, 1}, Rat(-1));
    DimensionTable ci = ci_thickening_dims({f}, 5);
    auto comm_dims = oracle::oracle_comm_quotient_dims({series_abelianize(f)}, 5);
    CHECK(ci.rows[1].dims == comm_dims);

    // a relation with a constant term is rejected
    NCSeries bad = series_add(NCSeries::constant(2, 3, Rat(1)), NCSeries::generator(2, 3, 1));
    CHECK_THROWS_AS(ci_thickening_dims({bad}, 3), Error);
}

TEST_CASE("table serialization")
{
    DimensionTable t = lcs_ideal_dim_table(2, 3, 2);
    CHECK(t.to_json() ==
          "{\"n\":2,\"d_min\":1,\"rows\":[{\"k\":1,\"dims\":[2,4,8]},{\"k\":2,\"dims\":[0,1,4]}]}");
    CHECK(t.to_text().find("k\\d") == 0);
}
