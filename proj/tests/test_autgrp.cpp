#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace ncdisk;
using namespace ncdisk::testutil;

TEST_CASE("validation")
{
    auto id = NCAutomorphism::identity(2, 3);
    CHECK(id.images()[0] == NCSeries::generator(2, 3, 1));

    std::vector<NCSeries> bad1{series_add(NCSeries::generator(2, 3, 1), NCSeries::constant(2, 3, Rat(1))),
                               NCSeries::generator(2, 3, 2)};
    CHECK_THROWS_WITH_AS(aut_validate(bad1), doctest::Contains("nonzero_constant_term"), Error);

    NCSeries s = series_add(NCSeries::generator(2, 3, 1), NCSeries::generator(2, 3, 2));
    CHECK_THROWS_WITH_AS(aut_validate({s, s}), doctest::Contains("singular_linear_part"), Error);
}

TEST_CASE("composition")
{
    auto id = NCAutomorphism::identity(1, 3);
    NCSeries x = NCSeries::generator(1, 3, 1);

    NCAutomorphism two = aut_validate({series_scale(Rat(2), x)});
    NCAutomorphism three = aut_validate({series_scale(Rat(3), x)});
    CHECK(aut_compose(id, three) == three);
    CHECK(aut_compose(two, three).images()[0] == series_scale(Rat(6), x));

    // g = h = (x -> x + x^2) composes to x + 2x^2 + 2x^3 at N = 3
    NCAutomorphism g = aut_validate({series_parse("x1 + x1^2", 1, 3)});
    CHECK(series_format(aut_compose(g, g).images()[0]) == "x1 + 2*x1^2 + 2*x1^3");
}

TEST_CASE("inversion")
{
    NCAutomorphism two = aut_validate({series_scale(Rat(2), NCSeries::generator(1, 3, 1))});
    CHECK(aut_invert(two).images()[0] == series_scale(Rat(1, 2), NCSeries::generator(1, 3, 1)));

    NCAutomorphism g = aut_validate({series_parse("x1 + x1^2", 1, 4)});
    CHECK(series_format(aut_invert(g).images()[0]) == "x1 - x1^2 + 2*x1^3 - 5*x1^4");

    // swap linear part with a quadratic tail: both round trips give the identity
    std::vector<NCSeries> images{series_parse("x2 + x1*x2", 2, 4), series_parse("x1 - x2^2", 2, 4)};
    NCAutomorphism s = aut_validate(images);
    NCAutomorphism si = aut_invert(s);
    auto id = NCAutomorphism::identity(2, 4);
    CHECK(aut_compose(s, si) == id);
    CHECK(aut_compose(si, s) == id);
}

TEST_CASE("group axioms on random elements")
{
    Rng rng(kDefaultSeed + 4);
    auto id = NCAutomorphism::identity(2, 4);
    for (int rep = 0; rep < 25; ++rep) {
        NCAutomorphism g = random_automorphism(rng, 2, 4);
        NCAutomorphism h = random_automorphism(rng, 2, 4);
        NCAutomorphism k = random_automorphism(rng, 2, 4);
        CHECK(aut_compose(aut_compose(g, h), k) == aut_compose(g, aut_compose(h, k)));
        CHECK(aut_compose(g, aut_invert(g)) == id);
        CHECK(aut_compose(aut_invert(g), g) == id);
        CHECK(aut_invert(aut_invert(g)) == g);
    }
}

TEST_CASE("abelianization")
{
    auto id = NCAutomorphism::identity(2, 3);
    CHECK(aut_abelianize(id) == CommAutomorphism::identity(2, 3));

    // commutator tails die
    NCSeries tail = series_commutator(NCSeries::generator(2, 3, 1), NCSeries::generator(2, 3, 2));
    NCAutomorphism g =
        aut_validate({series_add(NCSeries::generator(2, 3, 1), tail), NCSeries::generator(2, 3, 2)});
    CHECK(aut_abelianize(g) == CommAutomorphism::identity(2, 3));

    // group homomorphism
    Rng rng(kDefaultSeed + 5);
    for (int rep = 0; rep < 20; ++rep) {
        NCAutomorphism a = random_automorphism(rng, 2, 4);
        NCAutomorphism b = random_automorphism(rng, 2, 4);
        CHECK(aut_abelianize(aut_compose(a, b)) ==
              comm_aut_compose(aut_abelianize(a), aut_abelianize(b)));
    }
}
