#include "abelsign/io.hpp"
#include "abelsign/sampler.hpp"

#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace abelsign;

TEST_CASE("params JSON round trip") {
    const Params p(QNum(Rational(-1)), QNum(Rational(201, 58), Rational(1, 29), 1509),
                   QNum(Rational(-33, 58), Rational(2, 29), 1509), QNum(Rational(-1)),
                   QNum(Rational(-16)), QNum(Rational(-201, 58), Rational(-1, 29), 1509));
    const Json j = params_to_json(p);
    CHECK(j["d"] == 1509);
    const Params q = params_from_json(j);
    CHECK(p == q);
}

TEST_CASE("params JSON validation") {
    Json j;
    j["a1"] = "1";
    j["a2"] = "0";
    j["a3"] = "0";
    j["a4"] = "0";
    j["a5"] = "0";
    CHECK_THROWS_AS(params_from_json(j), std::invalid_argument);  // missing a6
    j["a6"] = "0+1*sqrt(14)";
    j["d"] = 13;  // contradicts the coordinate radicand
    CHECK_THROWS_AS(params_from_json(j), std::invalid_argument);
    j["d"] = 14;
    CHECK(params_from_json(j).radicand() == 14);
    j["a6"] = 0.25;  // floats are not accepted as exact scalars
    CHECK_THROWS_AS(params_from_json(j), std::invalid_argument);
}

TEST_CASE("exact scalars never degrade to floats in JSON") {
    std::mt19937_64 rng(29);
    std::array<QNum, 6> a;
    for (auto& v : a) v = testsupport::rand_qnum(rng);
    const Params p(a[0], a[1], a[2], a[3], a[4], a[5]);
    const Json j = bundle_to_json(compute_bundle(p));
    CHECK(j["R1"].is_string());
    CHECK(j["R2"].is_string());
    CHECK(j["res_p1p3"].is_string());
    const Json v = verdict_to_json(p, classify(p));
    for (int i = 1; i <= 6; ++i) CHECK(v["point"]["a" + std::to_string(i)].is_string());
}

TEST_CASE("bundle JSON marks undefined fields") {
    const Params p(QNum(1), QNum(0), QNum(1), QNum(-3), QNum(0), QNum(0));  // p1 == 0
    const Json j = bundle_to_json(compute_bundle(p));
    CHECK(j["D1"].is_null());
    CHECK(j["undefined"].contains("D1"));
    CHECK(j["undefined"].contains("r1"));
}

TEST_CASE("output is byte-identical for identical inputs") {
    const Params p(QNum(1), QNum(2), QNum(3), QNum(4), QNum(5), QNum(6));
    const std::string a = verdict_to_json(p, classify(p)).dump(2);
    const std::string b = verdict_to_json(p, classify(p)).dump(2);
    CHECK(a == b);
    const auto s1 = sample_case(CaseLabel::c5a, 123, 3);
    const auto s2 = sample_case(CaseLabel::c5a, 123, 3);
    Json j1 = Json::array(), j2 = Json::array();
    for (const auto& q : s1) j1.push_back(params_to_json(q));
    for (const auto& q : s2) j2.push_back(params_to_json(q));
    CHECK(j1.dump() == j2.dump());
}
