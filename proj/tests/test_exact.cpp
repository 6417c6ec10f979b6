#include "invdeg/error.hpp"
#include "invdeg/exact.hpp"
#include "invdeg/random.hpp"

#include <doctest.h>

using namespace invdeg;

namespace {

SkewMatrix random_skew(std::size_t k, SeededRng& rng, long bound = 50)
{
    SkewMatrix a(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            a.set(i, j, rng.uniform(-bound, bound));
    return a;
}

RationalMatrix dense(const SkewMatrix& a)
{
    RationalMatrix m(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            m(i, j) = a.at(i, j);
    return m;
}

SkewMatrix psi_123()
{
    SkewMatrix a(4);
    a.set(0, 1, 1);
    a.set(0, 2, 2);
    a.set(0, 3, 4);
    a.set(1, 2, 1);
    a.set(1, 3, 3);
    a.set(2, 3, 3);
    return a;
}

} // namespace

TEST_CASE("binomial")
{
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(60, 30) == BigInteger("118264581564861424"));
    CHECK_THROWS_AS(binomial(-1, 0), ArgumentError);
}

TEST_CASE("pfaffian examples agree on both routes")
{
    SkewMatrix two(2);
    two.set(0, 1, 5);
    CHECK(pfaffian(two) == 5);
    CHECK(pfaffian_reference(two) == 5);

    CHECK(pfaffian(SkewMatrix(0)) == 1);
    CHECK(pfaffian_reference(SkewMatrix(0)) == 1);

    // a01 a23 - a02 a13 + a03 a12 = 1*3 - 2*3 + 4*1
    CHECK(pfaffian(psi_123()) == 1);
    CHECK(pfaffian_reference(psi_123()) == 1);
}

TEST_CASE("pfaffian rejects odd size and non-antisymmetric input")
{
    CHECK_THROWS_WITH_AS(pfaffian(SkewMatrix(3)), "pfaffian requires even dimension", ArgumentError);
    CHECK_THROWS_AS(pfaffian_reference(SkewMatrix(5)), ArgumentError);
    const std::vector<std::vector<BigInteger>> bad{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(SkewMatrix::from_rows(bad), ArgumentError);
    const std::vector<std::vector<BigInteger>> diag{{1, 1}, {-1, 0}};
    CHECK_THROWS_AS(SkewMatrix::from_rows(diag), ArgumentError);
}

TEST_CASE("pfaffian handles zero pivots")
{
    // Leading entry zero forces a pivot swap.
    SkewMatrix a(4);
    a.set(0, 2, 3);
    a.set(1, 3, 7);
    a.set(1, 2, 2);
    CHECK(pfaffian(a) == pfaffian_reference(a));
    CHECK(pfaffian(a) == -21);
    // A zero first row gives zero.
    SkewMatrix z(4);
    z.set(1, 2, 9);
    z.set(2, 3, 1);
    CHECK(pfaffian(z) == 0);
}

TEST_CASE("property: elimination Pfaffian matches expansion and squares to the determinant")
{
    SeededRng rng(20240601);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t k = 2 * static_cast<std::size_t>(rng.uniform(0, 5));
        const SkewMatrix a = random_skew(k, rng, trial % 3 == 0 ? 3 : 1000);
        const BigInteger pf = pfaffian(a);
        CHECK(pf == pfaffian_reference(a));
        CHECK(BigRational(pf * pf) == determinant(dense(a)));
    }
}

TEST_CASE("property: simultaneous row and column swap negates the Pfaffian")
{
    SeededRng rng(7);
    for (std::size_t k : {4u, 6u}) {
        for (int trial = 0; trial < 10; ++trial) {
            const SkewMatrix a = random_skew(k, rng);
            const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k) - 2));
            const auto j = static_cast<std::size_t>(rng.uniform(static_cast<long>(i) + 1, static_cast<long>(k) - 1));
            CHECK(pfaffian(a.swapped(i, j)) == -pfaffian(a));
        }
    }
}

TEST_CASE("rational matrices: determinant, rank, inverse, adjugate")
{
    RationalMatrix a(3, 3);
    const long v[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            a(i, j) = v[i][j];
    CHECK(determinant(a) == 4);
    CHECK(rank(a) == 3);
    CHECK(a * inverse(a) == RationalMatrix::identity(3));

    const RationalMatrix adj = adjugate(a);
    RationalMatrix scaled = RationalMatrix::identity(3);
    for (int i = 0; i < 3; ++i)
        scaled(i, i) = 4;
    CHECK(a * adj == scaled);
    CHECK(adj(0, 0) == 3);
    CHECK(adj(0, 2) == 1);

    RationalMatrix singular(2, 2);
    singular(0, 0) = 1;
    singular(0, 1) = 2;
    singular(1, 0) = 2;
    singular(1, 1) = 4;
    CHECK(determinant(singular) == 0);
    CHECK(rank(singular) == 1);
    CHECK_THROWS_AS(inverse(singular), ArgumentError);
}
