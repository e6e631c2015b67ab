#include "abelsign/resultant.hpp"
#include "abelsign/sturm.hpp"

#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace abelsign;

namespace {
const UPoly X({QNum(0), QNum(1)});
UPoly lin(long long c) { return UPoly({QNum(-c), QNum(1)}); }
const UPoly one = UPoly::constant(QNum(1));
}  // namespace

TEST_CASE("resultant sign convention") {
    CHECK(resultant(lin(2), lin(3)) == QNum(-1));
    CHECK(resultant(X * X - one, lin(1)) == QNum(0));
    CHECK(resultant(X * X + one, X) == QNum(1));
    // degenerate conventions
    CHECK(resultant(UPoly::constant(QNum(3)), X * X + one) == QNum(9));
    CHECK(resultant(UPoly(), X) == QNum(0));
    CHECK(resultant(X, UPoly()) == QNum(0));
}

TEST_CASE("discriminant convention") {
    CHECK(discriminant(X * X - one) == QNum(4));
    CHECK(discriminant(lin(1) * lin(1)) == QNum(0));
    CHECK(discriminant(X * X * X - X) == QNum(4));   // pins the cubic dichotomy
    CHECK_THROWS_AS(discriminant(X), std::domain_error);
}

TEST_CASE("sturm counting") {
    CHECK(sturm_count(X * X - UPoly::constant(QNum(2))) == 2);
    CHECK(sturm_count(X * X + one) == 0);
    CHECK(sturm_count(X * X * X - X) == 3);
    CHECK(sturm_count(X * X * X - X, QNum(Rational(-1, 2)), QNum(Rational(3, 2))) == 2);
    CHECK(sturm_count(X * X * X - X, QNum(Rational(1, 2)), QNum(5)) == 1);
    CHECK_THROWS_AS(sturm_count(UPoly()), std::domain_error);
    CHECK_THROWS_AS(sturm_count(X * X * X - X, QNum(0), QNum(2)), std::domain_error);
    CHECK_THROWS_AS(sturm_count(X, QNum(2), QNum(1)), std::invalid_argument);
    // repeated roots still count once
    CHECK(sturm_count(lin(1) * lin(1) * lin(2)) == 2);
}

TEST_CASE("subresultant PRS agrees with the Sylvester determinant") {
    std::mt19937_64 rng(123);
    int checked = 0;
    while (checked < 800) {
        const UPoly f = testsupport::planted_poly(rng, 2, 1).poly;
        const UPoly g = testsupport::planted_poly(rng, 2, 1).poly;
        if (f.degree() < 1 || g.degree() < 1) continue;
        ++checked;
        CHECK(resultant(f, g) == testsupport::sylvester_resultant(f, g));
    }
}

TEST_CASE("resultant vanishes exactly on shared roots") {
    std::mt19937_64 rng(55);
    for (int i = 0; i < 300; ++i) {
        auto a = testsupport::planted_poly(rng, 2, 0);
        auto b = testsupport::planted_poly(rng, 2, 0);
        if (a.poly.degree() < 1 || b.poly.degree() < 1) continue;
        const bool share = gcd(a.poly, b.poly).degree() >= 1;
        CHECK((resultant(a.poly, b.poly).is_zero()) == share);
    }
}

TEST_CASE("discriminant detects repeated roots; cubic dichotomy") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 300; ++i) {
        const auto planted = testsupport::planted_poly(rng, 3, 1);
        const UPoly& f = planted.poly;
        if (f.degree() < 2) continue;
        CHECK(discriminant(f).is_zero() == (gcd(f, f.derivative()).degree() >= 1));

        int distinct = static_cast<int>(planted.real_roots.size());
        CHECK(sturm_count(f) == distinct);

        if (f.degree() == 3 && !discriminant(f).is_zero()) {
            const int expect = discriminant(f).sign() > 0 ? 3 : 1;
            CHECK(sturm_count(f) == expect);
        }
    }
}
