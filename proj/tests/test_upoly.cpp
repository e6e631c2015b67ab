#include "abelsign/upoly.hpp"

#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace abelsign;

namespace {
const UPoly X({QNum(0), QNum(1)});
UPoly lin(long long c) { return UPoly({QNum(-c), QNum(1)}); }  // x - c
}  // namespace

TEST_CASE("canonical form") {
    CHECK(UPoly().degree() == kZeroPolyDegree);
    CHECK(UPoly({QNum(0), QNum(0)}).is_zero());
    CHECK(UPoly({QNum(1), QNum(2), QNum(0)}).degree() == 1);
    CHECK((lin(1) - lin(1)).is_zero());
    CHECK(UPoly({QNum(2), QNum(0), QNum(4)}).lc() == QNum(4));
}

TEST_CASE("divrem") {
    const auto [q1, r1] = divrem(X * X - UPoly::constant(QNum(1)), lin(1));
    CHECK(q1 == X + UPoly::constant(QNum(1)));
    CHECK(r1.is_zero());

    const auto [q2, r2] = divrem(X * X * X, X * X);
    CHECK(q2 == X);
    CHECK(r2.is_zero());

    const auto [q3, r3] = divrem(X * X + UPoly::constant(QNum(1)), X * QNum(2));
    CHECK(q3 == X * QNum(Rational(1, 2)));
    CHECK(r3 == UPoly::constant(QNum(1)));

    CHECK_THROWS_AS(divrem(X, UPoly()), std::domain_error);
}

TEST_CASE("gcd") {
    CHECK(gcd(lin(1) * lin(-2), lin(1)) == lin(1));
    CHECK(gcd(X * X + UPoly::constant(QNum(1)), X * X + UPoly::constant(QNum(2))) ==
          UPoly::constant(QNum(1)));
    CHECK(gcd(lin(1) * lin(1) * lin(-3), lin(1) * lin(-3) * lin(-3)) == lin(1) * lin(-3));
    CHECK_THROWS_AS(gcd(UPoly(), UPoly()), std::domain_error);
}

TEST_CASE("square-free decomposition") {
    const auto d1 = squarefree_decomposition(lin(1) * lin(1) * lin(-2));
    REQUIRE(d1.size() == 2);
    CHECK(d1[0] == std::pair{lin(-2), 1});
    CHECK(d1[1] == std::pair{lin(1), 2});

    const auto d2 = squarefree_decomposition(X * X * X);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0] == std::pair{X, 3});

    const UPoly quad = X * X + UPoly::constant(QNum(1));
    const auto d3 = squarefree_decomposition(quad * lin(5) * lin(5) * lin(5));
    REQUIRE(d3.size() == 2);
    CHECK(d3[0] == std::pair{quad, 1});
    CHECK(d3[1] == std::pair{lin(5), 3});

    CHECK_THROWS_AS(squarefree_decomposition(UPoly()), std::domain_error);
}

TEST_CASE("odd part") {
    CHECK(odd_part(lin(1) * lin(1) * lin(-2)) == lin(-2));
    CHECK(odd_part(X * X * X) == X);
    const UPoly f = lin(2) * lin(-3) * QNum(7);
    CHECK(odd_part(f) == f.monic());
    CHECK_THROWS_AS(odd_part(UPoly()), std::domain_error);
}

TEST_CASE("randomized reproduct and odd-part invariants") {
    std::mt19937_64 rng(20260810);
    for (int i = 0; i < 400; ++i) {
        const auto planted = testsupport::planted_poly(rng);
        const UPoly& f = planted.poly;
        if (f.degree() < 1) continue;

        // constant * prod factor^mult == f (factors monic, so constant = lc)
        UPoly prod = UPoly::constant(f.lc());
        for (const auto& [factor, mult] : squarefree_decomposition(f)) {
            CHECK(gcd(factor, factor.derivative()).degree() == 0);  // square-free
            for (int k = 0; k < mult; ++k) prod = prod * factor;
        }
        CHECK(prod == f);

        // odd_part(f * g^2) == odd_part(f) for g coprime to the square-free f
        const UPoly g = testsupport::pos_quadratic(rng);
        const UPoly sf = odd_part(f);
        if (gcd(sf, g).degree() == 0) CHECK(odd_part(sf * g * g) == odd_part(sf));
    }
}
