#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncdisk/oracle.hpp"
#include "test_util.hpp"

using namespace ncdisk;
using namespace ncdisk::testutil;

TEST_CASE("dense lcs dims, one generator")
{
    // commutative case: every M_k with k >= 2 vanishes
    oracle::DenseTable t = oracle::oracle_lcs_ideal_dims(1, 3, 4);
    for (int d = 1; d <= 4; ++d) {
        CHECK(t.dims[1][static_cast<size_t>(d)] == 1);
        CHECK(t.dims[2][static_cast<size_t>(d)] == 0);
        CHECK(t.dims[3][static_cast<size_t>(d)] == 0);
    }
}

TEST_CASE("dense lcs dims, two generators")
{
    oracle::DenseTable t = oracle::oracle_lcs_ideal_dims(2, 2, 3);
    CHECK(t.dims[1] == std::vector<long long>{0, 2, 4, 8});
    CHECK(t.dims[2] == std::vector<long long>{0, 0, 1, 4});
}

TEST_CASE("dense leibniz")
{
    // x -> 1 applied to x
    std::vector<NCSeries> images{NCSeries::constant(1, 3, Rat(1))};
    auto r = oracle::oracle_leibniz_apply(images, Word{1}, 3);
    CHECK(r.at(0) == std::vector<Rat>{Rat(1)});

    // x1 -> x2 on x1 x1 gives x2 x1 + x1 x2
    std::vector<NCSeries> im2{NCSeries::generator(2, 3, 2), NCSeries(2, 3)};
    auto r2 = oracle::oracle_leibniz_apply(im2, Word{1, 1}, 3);
    std::vector<Rat> expect(4, Rat(0));
    expect[static_cast<size_t>(word_rank(Word{2, 1}, 2))] = 1;
    expect[static_cast<size_t>(word_rank(Word{1, 2}, 2))] = 1;
    CHECK(r2.at(2) == expect);
}

TEST_CASE("dense commutative quotient dims")
{
    // Q[x]/(x): 1, 0, 0, ...
    CommSeries x = CommSeries::generator(1, 4, 1);
    auto dims = oracle::oracle_comm_quotient_dims({x}, 4);
    CHECK(dims == std::vector<long long>{1, 0, 0, 0, 0});

    // Q[x1,x2]/(x1): the polynomial ring in one variable
    CommSeries y = CommSeries::generator(2, 5, 1);
    CHECK(oracle::oracle_comm_quotient_dims({y}, 5) ==
          std::vector<long long>{1, 1, 1, 1, 1, 1});

    // Q[x1,x2]/(x1^2 - x2): the lowest-degree form of the relation is -x2,
    // so the staircase matches the graded ring of Q[[x1]]
    CommSeries g(2, 4);
    g.add_term(ExpVec{2, 0}, Rat(1));
    g.add_term(ExpVec{0, 1}, Rat(-1));
    CHECK(oracle::oracle_comm_quotient_dims({g}, 4) ==
          std::vector<long long>{1, 1, 1, 1, 1});

    // no relations: the full polynomial ring in one variable
    CHECK(oracle::oracle_comm_quotient_dims(std::vector<CommSeries>{}, 2) ==
          std::vector<long long>{1, 1, 1});
}

TEST_CASE("cap")
{
    CHECK_THROWS_WITH_AS(oracle::oracle_lcs_ideal_dims(4, 2, 8), doctest::Contains("cap"), Error);
}
