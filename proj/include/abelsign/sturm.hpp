// Sturm chains and exact real-root counting.
#pragma once

#include "abelsign/upoly.hpp"

#include <optional>
#include <vector>

namespace abelsign {

// Signed remainder sequence f, f', -rem(f, f'), ... ending at the gcd.
struct SturmChain {
    std::vector<UPoly> polys;

    static SturmChain build(const UPoly& f) {
        if (f.is_zero()) throw std::domain_error("SturmChain: zero polynomial");
        SturmChain ch;
        ch.polys.push_back(f);
        if (f.degree() >= 1) {
            ch.polys.push_back(f.derivative());
            while (ch.polys.back().degree() >= 1) {
                UPoly r = divrem(ch.polys[ch.polys.size() - 2], ch.polys.back()).second;
                if (r.is_zero()) break;
                ch.polys.push_back(-r);
            }
        }
        return ch;
    }

    // sign variations in the chain evaluated at x (zeros skipped)
    int variations_at(const QNum& x) const {
        int var = 0, prev = 0;
        for (const auto& p : polys) {
            const int s = p.eval(x).sign();
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    // sign variations at +inf (dir = +1) or -inf (dir = -1)
    int variations_at_infinity(int dir) const {
        int var = 0, prev = 0;
        for (const auto& p : polys) {
            int s = p.lc().sign();
            if (dir < 0 && p.degree() % 2 == 1) s = -s;
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }
};

// Number of distinct real roots of f (whole line).
inline int sturm_count(const UPoly& f) {
    if (f.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
    if (f.degree() == 0) return 0;
    const SturmChain ch = SturmChain::build(f);
    return ch.variations_at_infinity(-1) - ch.variations_at_infinity(+1);
}

// Number of distinct real roots of f in the open interval (lo, hi).
// Endpoints must not be roots of f.
inline int sturm_count(const UPoly& f, const QNum& lo, const QNum& hi) {
    if (f.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
    if ((hi - lo).sign() <= 0) throw std::invalid_argument("sturm_count: empty interval");
    if (f.eval(lo).sign() == 0 || f.eval(hi).sign() == 0)
        throw std::domain_error("sturm_count: interval endpoint is a root");
    if (f.degree() == 0) return 0;
    const SturmChain ch = SturmChain::build(f);
    return ch.variations_at(lo) - ch.variations_at(hi);
}

}  // namespace abelsign
