// Agreement corpus: the case classifier must coincide with the
// root-coincidence oracle everywhere (the two directions of the definite-
// sign characterization), and the numeric scan must never contradict the
// oracle. Corpus = random generic points + exact on-variety samples for
// every parametrized case + the built-in reference table points + exact
// +-1/1000 perturbations of all of those.
#pragma once

#include "abelsign/oracle.hpp"
#include "abelsign/sampler.hpp"
#include "abelsign/table1.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace abelsign {

struct CorpusOptions {
    int random_points = 4000;
    int per_case = 400;
    int perturbed_per_base = 1;
    bool include_table1 = true;
};

inline std::vector<Params> build_corpus(std::uint64_t seed, const CorpusOptions& opt = {}) {
    std::mt19937_64 rng(seed);
    std::vector<Params> corpus;
    for (int i = 0; i < opt.random_points; ++i) {
        std::array<QNum, 6> a;
        for (auto& v : a) v = QNum(detail::draw_rational(rng));
        corpus.emplace_back(a[0], a[1], a[2], a[3], a[4], a[5]);
    }
    std::vector<Params> on_variety;
    const CaseLabel cases[] = {CaseLabel::c1a, CaseLabel::c1b, CaseLabel::c2, CaseLabel::c3a,
                               CaseLabel::c4, CaseLabel::c5a, CaseLabel::B1, CaseLabel::B2};
    for (const auto c : cases) {
        auto pts = sample_case(c, rng(), opt.per_case);
        on_variety.insert(on_variety.end(), pts.begin(), pts.end());
    }
    if (opt.include_table1)
        for (const auto& row : table1_entries()) on_variety.push_back(row.point);
    const Rational eps(1, 1000);
    for (const auto& base : on_variety) {
        corpus.push_back(base);
        for (int k = 0; k < opt.perturbed_per_base; ++k) {
            std::array<QNum, 6> a = base.a;
            for (auto& v : a) {
                const Rational delta = (rng() % 2) ? eps : Rational(-eps);
                v = v + QNum(delta);
            }
            corpus.emplace_back(a[0], a[1], a[2], a[3], a[4], a[5]);
        }
    }
    return corpus;
}

struct CrosscheckFailure {
    Params point;
    std::string what;
};

struct CrosscheckStats {
    std::size_t total = 0;
    std::size_t definite = 0;
    std::size_t classifier_disagreements = 0;
    std::size_t numeric_violations = 0;
    std::vector<CrosscheckFailure> failures;
};

// Oracle vs classifier on one point; optionally also the numeric scan.
inline void crosscheck_point(const Params& p, CrosscheckStats& st, bool with_scan,
                             int scan_grid = 4096) {
    ++st.total;
    const OracleVerdict ov = decide_definite(p);
    const CaseVerdict cv = classify(p);
    const bool classified_definite = cv.conclusion == Conclusion::ADefiniteSign;
    if (ov.definite) ++st.definite;
    if (ov.definite != classified_definite) {
        ++st.classifier_disagreements;
        st.failures.push_back(
            {p, std::string("oracle says ") + (ov.definite ? "definite" : "indefinite") +
                    " (" + to_string(ov.reason) + ") but classifier says " +
                    to_string(cv.conclusion)});
    }
    if (!with_scan) return;
    const ScanReport sc = numeric_sign_scan(p, scan_grid);
    if (ov.definite && sc.kind == ScanResult::sign_change) {
        ++st.numeric_violations;
        st.failures.push_back({p, "oracle says definite but numeric scan sees a sign change"});
    }
    if (!ov.definite) {
        const double margin = 1e-6 * sc.scale;
        const bool confident_one_sided =
            (sc.kind == ScanResult::non_negative && sc.min_value > margin) ||
            (sc.kind == ScanResult::non_positive && sc.max_value < -margin);
        if (confident_one_sided) {
            ++st.numeric_violations;
            st.failures.push_back(
                {p, "oracle says indefinite but numeric scan is one-sided with margin > 1e-6"});
        }
    }
}

inline CrosscheckStats run_crosscheck(std::uint64_t seed, const CorpusOptions& opt = {},
                                      bool with_scan = true, int scan_grid = 4096) {
    CrosscheckStats st;
    for (const auto& p : build_corpus(seed, opt)) crosscheck_point(p, st, with_scan, scan_grid);
    return st;
}

}  // namespace abelsign
