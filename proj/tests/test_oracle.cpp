#include "abelsign/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace abelsign;

namespace {

Params P(std::initializer_list<Rational> vals) {
    std::array<QNum, 6> a;
    int i = 0;
    for (const auto& v : vals) a[static_cast<std::size_t>(i++)] = QNum(v);
    return Params(a[0], a[1], a[2], a[3], a[4], a[5]);
}

}  // namespace

TEST_CASE("root-coincidence verdicts") {
    const OracleVerdict row4 = decide_definite(P({1, 0, Rational(1, 3), -1, -1, 0}));
    CHECK(row4.definite);
    CHECK(row4.reason == OracleReason::odd_roots_coincide);
    CHECK(row4.roots1 == 0);
    CHECK(row4.roots3 == 0);

    // p1 = -x^3, p3 = -x^2: odd parts x and 1
    const OracleVerdict v = decide_definite(P({0, 0, 0, 0, 0, 1}));
    CHECK_FALSE(v.definite);
    CHECK(v.reason == OracleReason::odd_roots_differ);
    CHECK(v.odd1 == UPoly({QNum(0), QNum(1)}));
    CHECK(v.odd3 == UPoly::constant(QNum(1)));

    const OracleVerdict null1 = decide_definite(P({1, 0, 1, -3, 0, 0}));
    CHECK(null1.definite);
    CHECK(null1.reason == OracleReason::p1_null);

    const OracleVerdict null3 = decide_definite(P({1, 1, -1, 2, -4, 1}));
    CHECK(null3.definite);
    CHECK(null3.reason == OracleReason::p3_null);
}

TEST_CASE("numeric scan outcomes") {
    CHECK(numeric_sign_scan(P({1, 1, -1, 2, -4, 1})).kind == ScanResult::numerically_zero);
    CHECK(numeric_sign_scan(P({1, 2, 3, 4, 5, 6})).kind == ScanResult::sign_change);
    const ScanReport row4 = numeric_sign_scan(P({1, 0, Rational(1, 3), -1, -1, 0}));
    CHECK((row4.kind == ScanResult::non_negative || row4.kind == ScanResult::non_positive));
    CHECK_THROWS_AS(numeric_sign_scan(P({1, 2, 3, 4, 5, 6}), 8), std::invalid_argument);
}

TEST_CASE("definiteness is scale invariant") {
    // odd_part and sturm_count ignore positive scalings of p1 and p3
    const UPoly f({QNum(-2), QNum(0), QNum(1)});  // x^2 - 2
    CHECK(odd_part(f * QNum(7)) == odd_part(f));
    CHECK(sturm_count(f * QNum(Rational(3, 5))) == sturm_count(f));
    CHECK(sturm_count(f * QNum(-4)) == sturm_count(f));
}
