// Seeded exact sampling of points on individual semi-varieties. Every
// returned point satisfies its case's equalities exactly and the side
// inequalities strictly; construction is by parametrization, with R2 = 0
// enforced by solving R2 in a5 (quadratic for case 5a, linear under the
// case-3a umbrella) in Q or Q(sqrt(disc)).
#pragma once

#include "abelsign/classifier.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace abelsign {

struct SamplingExhausted : std::runtime_error {
    SamplingExhausted(CaseLabel c, std::uint64_t seed, int attempts)
        : std::runtime_error(std::string("sample_case: budget exhausted for case ") +
                             to_string(c) + " (seed " + std::to_string(seed) + ", " +
                             std::to_string(attempts) + " attempts)") {}
};

namespace detail {

// Deliberately avoids std::uniform_int_distribution: its output is
// implementation-defined and the sampler must be bit-reproducible.
inline long long draw_int(std::mt19937_64& rng, long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(rng() % span);
}

inline Rational draw_rational(std::mt19937_64& rng, long long max_abs = 9) {
    static constexpr long long dens[] = {1, 1, 2, 3, 4};
    const long long num = draw_int(rng, -max_abs, max_abs);
    const long long den = dens[rng() % 5];
    return Rational(num, den);
}

inline Rational draw_nonzero(std::mt19937_64& rng, long long max_abs = 9) {
    for (;;) {
        Rational r = draw_rational(rng, max_abs);
        if (r != 0) return r;
    }
}

// sqrt of a non-negative rational as a QNum, radicand made square-free
inline QNum rational_sqrt(const Rational& x) {
    if (x < 0) throw std::domain_error("rational_sqrt: negative");
    if (x == 0) return QNum(0);
    const Int num = boost::multiprecision::numerator(x);
    const Int den = boost::multiprecision::denominator(x);
    const auto [s, f] = split_square_part(num * den);
    if (f > 1000000000000LL)
        throw std::domain_error("rational_sqrt: radicand too large to certify square-free");
    if (f == 1) return QNum(Rational(s, den));
    return QNum(Rational(0), Rational(s, den), f.convert_to<std::int64_t>());
}

// R2 as a polynomial in a5 with the other coordinates fixed:
// returns (alpha, beta, gamma) with R2 = alpha a5^2 + beta a5 + gamma.
inline std::array<QNum, 3> r2_in_a5(const QNum& a1, const QNum& a2, const QNum& a3,
                                    const QNum& a4, const QNum& a6) {
    const auto at = [&](int v5) {
        return compute_R2(Params(a1, a2, a3, a4, QNum(v5), a6));
    };
    const QNum g0 = at(0), gp = at(1), gm = at(-1);
    const QNum half(Rational(1, 2));
    const QNum alpha = (gp + gm) * half - g0;
    const QNum beta = (gp - gm) * half;
    return {alpha, beta, g0};
}

}  // namespace detail

inline std::vector<Params> sample_case(CaseLabel label, std::uint64_t seed, int count) {
    using detail::draw_int;
    using detail::draw_nonzero;
    using detail::draw_rational;
    std::mt19937_64 rng(seed);
    std::vector<Params> out;
    const int budget_per_point = 400;
    int attempts = 0;

    const auto give_up = [&]() -> bool { return ++attempts > budget_per_point * count; };

    while (static_cast<int>(out.size()) < count) {
        if (give_up()) throw SamplingExhausted(label, seed, attempts);
        switch (label) {
            case CaseLabel::c1a: {
                const Rational t1 = draw_rational(rng), t3 = draw_rational(rng);
                out.emplace_back(QNum(t1), QNum(0), QNum(t3), QNum(-3 * t3), QNum(0), QNum(0));
                break;
            }
            case CaseLabel::c1b: {
                const Rational t1 = draw_rational(rng), t6 = draw_rational(rng);
                out.emplace_back(QNum(t1), QNum(t1 * t6), QNum(-t1 * t1 * t6),
                                 QNum((3 * t1 * t1 - 1) * t6), QNum(-4 * t1 * t6), QNum(t6));
                break;
            }
            case CaseLabel::c2: {
                const Rational c1 = draw_rational(rng), c2 = draw_nonzero(rng),
                               c3 = draw_nonzero(rng);
                const Rational c4 = (c2 * c2 - 3 * c3 * c3) / c3;  // forces R2 = 0
                if (c2 * c2 - 4 * c3 * c3 - 4 * c1 * c2 * c3 >= 0) break;  // need strict <
                Params p(QNum(c1), QNum(c2), QNum(c3), QNum(c4), QNum(-3 * c2), QNum(0));
                if (classify(p).has(CaseLabel::c2)) out.push_back(std::move(p));
                break;
            }
            case CaseLabel::c3a: {
                if (rng() % 4 == 0) {
                    // a1 = 0 branch: R2 vanishes for every a5 once a2 = a3 = 0, a4 = -a6
                    const Rational c6 = draw_nonzero(rng);
                    const Rational c5 = draw_nonzero(rng, 3);
                    if (!(c5 * c5 < 4 * c6 * c6)) break;  // one real odd root for p1
                    Params p(QNum(0), QNum(0), QNum(0), QNum(-c6), QNum(c5), QNum(c6));
                    if (classify(p).has(CaseLabel::c3a)) out.push_back(std::move(p));
                    break;
                }
                const Rational c1 = draw_nonzero(rng, 5), c3 = draw_rational(rng),
                               c6 = draw_nonzero(rng, 5);
                const QNum a1(c1), a3(c3), a6(c6);
                const QNum a2 = a1 * a6;
                // a4 depends on a5; R2 restricted to the umbrella is linear in a5
                const auto a4_of = [&](const QNum& a5) {
                    return -(QNum(2) * a3) - a1 * (QNum(3) * a2 + a5) - a6;
                };
                const QNum r0 = compute_R2(Params(a1, a2, a3, a4_of(QNum(0)), QNum(0), a6));
                const QNum r1 = compute_R2(Params(a1, a2, a3, a4_of(QNum(1)), QNum(1), a6));
                const QNum slope = r1 - r0;
                if (slope.is_zero()) break;
                const QNum a5 = -r0 / slope;
                Params p(a1, a2, a3, a4_of(a5), a5, a6);
                const InvariantBundle b = compute_bundle(p);
                if (!b.D1 || b.D1->sign() >= 0) break;  // demand D1 < 0 strictly
                if (classify(p).has(CaseLabel::c3a)) out.push_back(std::move(p));
                break;
            }
            case CaseLabel::c4: {
                const Rational c1 = draw_rational(rng), c3 = draw_nonzero(rng),
                               c5 = draw_nonzero(rng);
                if (!(4 * c3 * c3 - 4 * c1 * c3 * c5 > c5 * c5)) break;  // strict
                if (c3 == c1 * c5) break;
                out.emplace_back(QNum(c1), QNum(0), QNum(c3), QNum(-3 * c3), QNum(c5), QNum(0));
                break;
            }
            case CaseLabel::c5a: {
                const Rational c1 = draw_rational(rng, 4), c2 = draw_nonzero(rng, 4),
                               c3 = draw_rational(rng, 4), c4 = draw_rational(rng, 4),
                               c6 = draw_nonzero(rng, 4);
                const QNum a1(c1), a2(c2), a3(c3), a4(c4), a6(c6);
                if ((a2 - a1 * a6).is_zero()) break;
                const auto [alpha, beta, gamma] = detail::r2_in_a5(a1, a2, a3, a4, a6);
                if (alpha.is_zero()) break;
                const QNum disc = beta * beta - QNum(4) * alpha * gamma;
                if (disc.sign() < 0) break;
                QNum root;
                try {
                    root = detail::rational_sqrt(disc.a());
                } catch (const std::domain_error&) {
                    break;
                }
                const QNum a5 = (rng() % 2 ? -beta + root : -beta - root) /
                                (QNum(2) * alpha);
                Params p(a1, a2, a3, a4, a5, a6);
                if (classify(p).has(CaseLabel::c5a)) out.push_back(std::move(p));
                break;
            }
            case CaseLabel::B1: {
                const Rational c2 = draw_rational(rng), c6 = draw_rational(rng);
                Params p(QNum(0), QNum(c2), QNum(c6), QNum(-4 * c6), QNum(-4 * c2), QNum(c6));
                if (!in_B1(p) || !build_q(p).is_zero())
                    throw std::logic_error("B1 sampling broken");
                out.push_back(std::move(p));
                break;
            }
            case CaseLabel::B2: {
                const Rational c1 = draw_rational(rng), c2 = draw_rational(rng);
                Params p(QNum(c1), QNum(c2), QNum(-2 * c1 * c2), QNum(6 * c1 * c2),
                         QNum(-4 * c2), QNum(0));
                if (!in_B2(p) || !build_q(p).is_zero())
                    throw std::logic_error("B2 sampling broken");
                out.push_back(std::move(p));
                break;
            }
            default:
                throw std::invalid_argument(
                    std::string("sample_case: case ") + to_string(label) +
                    " has no exact parametrization (supported: 1a 1b 2 3a 4 5a B1 B2)");
        }
    }
    return out;
}

}  // namespace abelsign
