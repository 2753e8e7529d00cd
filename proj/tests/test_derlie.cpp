#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncdisk/oracle.hpp"
#include "test_util.hpp"

using namespace ncdisk;
using namespace ncdisk::testutil;

TEST_CASE("leibniz action")
{
    // x1 -> 1, x2 -> 0 applied to x1 x2 leaves x2
    NCDerivation d({NCSeries::constant(2, 3, Rat(1)), NCSeries(2, 3)});
    NCSeries w = series_mul(NCSeries::generator(2, 3, 1), NCSeries::generator(2, 3, 2));
    CHECK(der_apply(d, w) == NCSeries::generator(2, 3, 2));

    // x -> x^2 applied to x^2 gives 2x^3
    NCDerivation e({series_parse("x1^2", 1, 4)});
    CHECK(der_apply(e, series_parse("x1^2", 1, 4)) == series_parse("2*x1^3", 1, 4));

    // two occurrences of x1, middle letter untouched
    NCDerivation f({NCSeries::generator(2, 3, 2), NCSeries(2, 3)});
    NCSeries aba = series_parse("x1*x2*x1", 2, 3);
    CHECK(der_apply(f, aba) == series_parse("x2*x2*x1 + x1*x2*x2", 2, 3));
}

TEST_CASE("leibniz product rule on random inputs")
{
    Rng rng(kDefaultSeed + 6);
    for (int rep = 0; rep < 25; ++rep) {
        int n = 1 + static_cast<int>(rng() % 2);
        int N = 3 + static_cast<int>(rng() % 2);
        NCDerivation d = random_derivation(rng, n, N);
        NCSeries a = random_series(rng, n, N), b = random_series(rng, n, N);
        CHECK(der_apply(d, series_mul(a, b)) ==
              series_add(series_mul(der_apply(d, a), b), series_mul(a, der_apply(d, b))));
    }
}

TEST_CASE("bracket")
{
    Rng rng(kDefaultSeed + 7);
    NCDerivation d = random_derivation(rng, 2, 4);
    CHECK(der_bracket(d, d).is_zero());

    // Weyl pair on one generator: [x -> 1, x -> x] = (x -> 1)
    NCDerivation p({NCSeries::constant(1, 3, Rat(1))});
    NCDerivation q({NCSeries::generator(1, 3, 1)});
    CHECK(der_bracket(p, q) == p);

    for (int rep = 0; rep < 20; ++rep) {
        int n = 1 + static_cast<int>(rng() % 2);
        NCDerivation a = random_derivation(rng, n, 4);
        NCDerivation b = random_derivation(rng, n, 4);
        NCDerivation c = random_derivation(rng, n, 4);
        NCDerivation jac = der_add(der_add(der_bracket(der_bracket(a, b), c),
                                           der_bracket(der_bracket(b, c), a)),
                                   der_bracket(der_bracket(c, a), b));
        CHECK(jac.is_zero());
        // bracket action matches the commutator of actions
        NCSeries s = random_series(rng, n, 4);
        CHECK(der_apply(der_bracket(a, b), s) ==
              series_sub(der_apply(a, der_apply(b, s)), der_apply(b, der_apply(a, s))));
        // augmented derivations form a subalgebra
        NCDerivation ap = random_derivation(rng, n, 4, true);
        NCDerivation bp = random_derivation(rng, n, 4, true);
        CHECK(der_bracket(ap, bp).is_augmented());
    }
}

TEST_CASE("exponential")
{
    CHECK(der_exp(NCDerivation::zero(2, 3)) == NCAutomorphism::identity(2, 3));

    // x -> x^2 exponentiates to x + x^2 + x^3 + x^4 at N = 4
    NCDerivation d({series_parse("x1^2", 1, 4)});
    CHECK(series_format(der_exp(d).images()[0]) == "x1 + x1^2 + x1^3 + x1^4");

    // constant terms have no flow
    NCDerivation c({NCSeries::constant(1, 3, Rat(1))});
    CHECK_THROWS_WITH_AS(der_exp(c), doctest::Contains("non_nilpotent"), Error);

    // nilpotent linear part is fine: x1 -> x2, x2 -> 0
    NCDerivation nil({NCSeries::generator(2, 3, 2), NCSeries(2, 3)});
    NCAutomorphism e = der_exp(nil);
    CHECK(e.images()[0] == series_parse("x1 + x2", 2, 3));

    // non-nilpotent linear part leaves the rationals
    NCDerivation lin({NCSeries::generator(1, 3, 1)});
    CHECK_THROWS_WITH_AS(der_exp(lin), doctest::Contains("non_nilpotent"), Error);

    // exp(d) . exp(-d) = id for strictly raising d
    Rng rng(kDefaultSeed + 8);
    for (int rep = 0; rep < 15; ++rep) {
        int n = 1 + static_cast<int>(rng() % 2);
        NCDerivation r = random_derivation(rng, n, 4, true, true);
        CHECK(aut_compose(der_exp(r), der_exp(der_scale(Rat(-1), r))) ==
              NCAutomorphism::identity(n, 4));
    }
}

TEST_CASE("graded dimension law")
{
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) {
            long long expect = 1;
            for (int i = 0; i < m + 2; ++i)
                expect *= n;
            CHECK(der_graded_dim(n, m) == expect);
        }
}

TEST_CASE("agreement with the dense oracle")
{
    Rng rng(kDefaultSeed + 9);
    for (int rep = 0; rep < 100; ++rep) {
        int n = 1 + static_cast<int>(rng() % 3);
        int N = 3 + static_cast<int>(rng() % 2);
        NCDerivation d = random_derivation(rng, n, N);
        Word w = random_word(rng, n, 1, N);
        NCSeries got = der_apply(d, NCSeries::monomial(n, N, w, Rat(1)));
        auto dense = oracle::oracle_leibniz_apply(d.images(), w, N);
        NCSeries expect(n, N);
        for (const auto& [deg, vec] : dense)
            for (std::size_t r = 0; r < vec.size(); ++r)
                if (!is_zero(vec[r]))
                    expect.add_term(word_unrank(static_cast<long long>(r), n, deg), vec[r]);
        CHECK(got == expect);
    }
}
