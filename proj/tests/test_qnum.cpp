#include "abelsign/qnum.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace abelsign;

TEST_CASE("exact sign of a + b sqrt(d)") {
    CHECK(QNum(0).sign() == 0);
    CHECK(QNum(Rational(-1), Rational(1), 2).sign() == 1);   // sqrt(2) > 1
    CHECK(QNum(Rational(3), Rational(-2), 2).sign() == 1);   // 9 > 8
    CHECK(QNum(Rational(-3), Rational(2), 2).sign() == -1);
    CHECK(QNum(Rational(0), Rational(-1), 7).sign() == -1);
    CHECK(QNum(Rational(5), Rational(0), 1).sign() == 1);
}

TEST_CASE("radicand bookkeeping") {
    CHECK(QNum(Rational(1), Rational(0), 7).d() == 1);  // b == 0 collapses to rational
    CHECK_THROWS_AS(QNum(Rational(1), Rational(1), 12), std::invalid_argument);  // 12 = 4*3
    CHECK_THROWS_AS(QNum(Rational(1), Rational(1), 0), std::invalid_argument);
    const QNum x(Rational(1), Rational(1), 2), y(Rational(1), Rational(1), 3);
    CHECK_THROWS_AS(x + y, std::invalid_argument);
    CHECK_THROWS_AS(x * y, std::invalid_argument);
    CHECK((x + QNum(2)).d() == 2);  // rationals are compatible with every radicand
}

TEST_CASE("field arithmetic is exact") {
    std::mt19937_64 rng(7);
    const auto draw = [&rng](std::int64_t d) {
        const auto r = [&rng] {
            return Rational(static_cast<long long>(rng() % 19) - 9,
                            1 + static_cast<long long>(rng() % 4));
        };
        return QNum(r(), r(), d);
    };
    for (int i = 0; i < 500; ++i) {
        const std::int64_t d = (i % 2) ? 5 : 1;
        const QNum x = draw(d), y = draw(d), z = draw(d);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(qnum_sign(x * y) == qnum_sign(x) * qnum_sign(y));
        if (!y.is_zero()) CHECK((x / y) * y == x);
        CHECK(x * x.conjugate() == QNum(x.a() * x.a() - x.b() * x.b() * x.d()));
    }
}

TEST_CASE("textual form round trips") {
    const char* cases[] = {"0",
                           "3",
                           "-5/3",
                           "201/58+1/29*sqrt(1509)",
                           "-941/512-31/512*sqrt(7913)",
                           "0+1*sqrt(14)",
                           "1/4-7/16384*sqrt(1726)"};
    for (const char* s : cases) {
        const QNum v = QNum::parse(s);
        CHECK(QNum::parse(v.str()) == v);
        CHECK(v.str() == s);
    }
    CHECK(QNum::parse("2/4").str() == "1/2");  // normalized on construction
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(QNum::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(QNum::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(QNum::parse("1+2*sqrt(4)"), std::invalid_argument);   // 4 not square-free
    CHECK_THROWS_AS(QNum::parse("1+2*sqrt(2"), std::invalid_argument);
    CHECK_THROWS_AS(QNum::parse("1+2sqrt(2)"), std::invalid_argument);
    CHECK_THROWS_AS(QNum::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(QNum::parse("1 + 1*sqrt(2)"), std::invalid_argument);
    CHECK_THROWS_AS(QNum::parse("x"), std::invalid_argument);
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(QNum(1) / QNum(0), std::domain_error);
}
