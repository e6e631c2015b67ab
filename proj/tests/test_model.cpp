#include "abelsign/model.hpp"

#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace abelsign;

namespace {

Params rational_params(std::initializer_list<Rational> vals) {
    std::array<QNum, 6> a;
    int i = 0;
    for (const auto& v : vals) a[static_cast<std::size_t>(i++)] = QNum(v);
    return Params(a[0], a[1], a[2], a[3], a[4], a[5]);
}

Params random_params(std::mt19937_64& rng) {
    return Params(testsupport::rand_qnum(rng), testsupport::rand_qnum(rng),
                  testsupport::rand_qnum(rng), testsupport::rand_qnum(rng),
                  testsupport::rand_qnum(rng), testsupport::rand_qnum(rng));
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("polynomial builders") {
    // p1 vanishes identically on the first degenerate family
    CHECK(build_p1(rational_params({1, 0, 1, -3, 0, 0})).is_zero());
    CHECK(build_p1(rational_params({0, 0, 0, 0, 0, 0})).is_zero());
    CHECK(build_p1(rational_params({0, 1, 0, 0, 0, 0})) ==
          UPoly({QNum(1), QNum(0), QNum(-3)}));

    CHECK(build_p2(rational_params({0, 0, 1, 0, 0, 0})) == UPoly({QNum(-1), QNum(0), QNum(2)}));
    CHECK(build_p2(rational_params({0, 0, 0, 0, 0, 0})).is_zero());
    CHECK(build_p2(rational_params({0, 0, 0, 0, 0, 1})) == UPoly({QNum(0), QNum(0), QNum(1)}));

    // p3 vanishes identically on the second degenerate family
    CHECK(build_p3(rational_params({1, 1, -1, 2, -4, 1})).is_zero());
    CHECK(build_p3(rational_params({0, 0, 0, 0, 0, 0})).is_zero());
    CHECK(build_p3(rational_params({0, 0, 0, 0, 0, 1})) == UPoly({QNum(0), QNum(0), QNum(-1)}));

    CHECK(build_q(rational_params({0, 1, 1, -4, -4, 1})).is_zero());
    CHECK(build_q(rational_params({0, 0, 0, 0, 0, 0})).is_zero());
    CHECK(build_q(rational_params({0, 0, 1, 0, 0, 0})) == UPoly({QNum(-4), QNum(0), QNum(8)}));
}

TEST_CASE("degree and leading-coefficient structure") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Params p = random_params(rng);
        const UPoly p1 = build_p1(p), p3 = build_p3(p);
        CHECK(p1.degree() <= 3);
        CHECK(p3.degree() <= 3);
        CHECK(p1.coeff(3) == -p.a6());
        CHECK(p3.coeff(3) == p.a2() - p.a1() * p.a6());
        // p3 is linear in a1: with a1 = 0 it is exactly -p2
        const Params p0(QNum(0), p.a2(), p.a3(), p.a4(), p.a5(), p.a6());
        CHECK(build_p3(p0) == -build_p2(p0));
    }
}

TEST_CASE("A and B symmetry under theta -> theta + pi") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const Params p = random_params(rng);
        const double th = (static_cast<double>(rng() % 100000) / 100000.0) * 2 * kPi;
        const double scale =
            1.0 + std::fabs(eval_A(p, th)) + std::fabs(eval_B(p, th));
        CHECK(std::fabs(eval_A(p, th + kPi) - eval_A(p, th)) < 1e-10 * scale);
        CHECK(std::fabs(eval_B(p, th + kPi) + eval_B(p, th)) < 1e-10 * scale);
    }
}

TEST_CASE("tan-substitution identities") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        const Params p = random_params(rng);
        const double th = -kPi / 2 + 0.05 + (static_cast<double>(rng() % 100000) / 100000.0) *
                                                (kPi - 0.1);
        const double t = std::tan(th);
        const double w = 1.0 + t * t;

        const double lhs_a = eval_A(p, th) * w * w * w;
        const double rhs_a = build_p1(p).eval(t) * build_p3(p).eval(t);
        CHECK(std::fabs(lhs_a - rhs_a) <= 1e-9 * (1.0 + std::fabs(rhs_a)));

        const double lhs_b = eval_B(p, th) * std::pow(w, 1.5);
        const double rhs_b = build_q(p).eval(t);
        CHECK(std::fabs(lhs_b - rhs_b) <= 1e-9 * (1.0 + std::fabs(rhs_b)));
    }
}

TEST_CASE("A vanishes identically when p1 does") {
    const Params p = rational_params({1, 0, 1, -3, 0, 0});
    REQUIRE(build_p1(p).is_zero());
    for (int i = 0; i < 64; ++i) CHECK(std::fabs(eval_A(p, 0.1 * i)) < 1e-12);
}

TEST_CASE("mixed-radicand params are rejected") {
    CHECK_THROWS_AS(Params(QNum(Rational(0), Rational(1), 2), QNum(Rational(0), Rational(1), 3),
                           QNum(0), QNum(0), QNum(0), QNum(0)),
                    std::invalid_argument);
    const Params ok(QNum(Rational(0), Rational(1), 14), QNum(1), QNum(0), QNum(0), QNum(0),
                    QNum(0));
    CHECK(ok.radicand() == 14);
}
