#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "paulilab/classify.hpp"

using namespace paulilab;

TEST_CASE("corollary clause examples") {
    CHECK(classify_power_law(1.0, 2.0, -1.0, 1.0).verdict == Verdict::Discrete);
    CHECK(classify_power_law(1.0, 1.0, -1.0, 1.0).verdict == Verdict::Discrete);
    const Classification b = classify_power_law(1.0, 1.0, -2.0, 1.0);
    CHECK(b.verdict == Verdict::ZeroInEssential);
    CHECK(b.k == 1);
    const Classification b2 = classify_power_law(0.5, 1.0, -4.0, 1.0);
    CHECK(b2.verdict == Verdict::ZeroInEssential);
    CHECK(b2.k == 4);
    CHECK(classify_power_law(1.0, 1.0, -1.0, 1.2).verdict == Verdict::DenseRealLine);
    CHECK(classify_power_law(1.0, 0.0, -1.0, 0.5).verdict == Verdict::DenseRealLine);
    CHECK(classify_power_law(1.0, 0.0, -1.0, 0.8).basis == "corollary d (thm4)");
    // t = s with non-resonant |v0| > 2 b0 matches no clause
    CHECK(classify_power_law(1.0, 1.0, -3.0, 1.0).verdict == Verdict::Unknown);
    // t = 0 (bounded potential) matches no clause
    CHECK(classify_power_law(1.0, 1.0, -1.0, 0.0).verdict == Verdict::Unknown);
    // clause-c upper boundary 3t = 2(s+1) is excluded
    CHECK(classify_power_law(1.0, 1.0, -1.0, 4.0 / 3.0).verdict == Verdict::Unknown);
}

TEST_CASE("clause b fires exactly on integer |v0|/(2 b0)") {
    CHECK(classify_power_law(1.0, 1.0, -2.0 * (1.0 + 1e-13), 1.0).verdict ==
          Verdict::ZeroInEssential);
    CHECK(classify_power_law(1.0, 1.0, -2.0 * (1.0 + 1e-9), 1.0).verdict ==
          Verdict::Unknown);
    CHECK(classify_power_law(1.0, 1.0, -2.1, 1.0).verdict == Verdict::Unknown);
}

TEST_CASE("classification depends only on exponents and |v0|/b0") {
    for (const double scale : {2.0, 10.0, 0.25}) {
        const Classification a = classify_power_law(1.0, 1.0, -2.0, 1.0);
        const Classification b = classify_power_law(scale, 1.0, -2.0 * scale, 1.0);
        CHECK(a.verdict == b.verdict);
        CHECK(a.k == b.k);
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(classify_power_law(0.0, 1.0, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(classify_power_law(1.0, 1.0, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(classify_power_law(1.0, 1.0, -1.0, 2.5), std::domain_error);
    CHECK_THROWS_AS(classify_power_law(1.0, -1.0, -1.0, 1.0), std::domain_error);
}

TEST_CASE("growth bound") {
    double c = 0.0, d = 0.0;
    CHECK(check_growth_bound({-3.0, 1.5}, &c, &d));
    CHECK(c == doctest::Approx(3.0));
    CHECK(d == doctest::Approx(-3.0));
    CHECK_FALSE(check_growth_bound({-1.0, 2.5}, nullptr, nullptr));
}

TEST_CASE("theorem 1 hypotheses") {
    const HypothesisReport r1 =
        evaluate_hypotheses({1.0, 1.0}, {-1.0, 0.5}, "thm1");
    CHECK(r1.all_satisfied()); // t < s: |V/2B| -> 0
    const HypothesisReport r2 =
        evaluate_hypotheses({1.0, 1.0}, {-1.0, 1.0}, "thm1");
    CHECK(r2.all_satisfied()); // t = s, |v0| < 2 b0
    const HypothesisReport r3 =
        evaluate_hypotheses({1.0, 1.0}, {-3.0, 1.0}, "thm1");
    CHECK_FALSE(r3.all_satisfied());
    const HypothesisReport r4 =
        evaluate_hypotheses({1.0, 0.0}, {-1.0, 0.5}, "thm1");
    CHECK_FALSE(r4.all_satisfied()); // t > s: ratio diverges
}

TEST_CASE("theorem 2 hypotheses need the resonance") {
    const HypothesisReport ok =
        evaluate_hypotheses({1.0, 1.0}, {-2.0, 1.0}, "thm2");
    CHECK(ok.all_satisfied());
    const HypothesisReport bad =
        evaluate_hypotheses({1.0, 1.0}, {-1.9, 1.0}, "thm2");
    CHECK_FALSE(bad.all_satisfied());
    // s close to 2 still admits a small eps with s(1+eps) < 2
    const HypothesisReport tight =
        evaluate_hypotheses({1.0, 1.9}, {-4.0, 1.9}, "thm2");
    CHECK(tight.all_satisfied());
}

TEST_CASE("theorem 3 hypotheses on the corollary-c instance") {
    const HypothesisReport r =
        evaluate_hypotheses({1.0, 1.0}, {-1.0, 1.2}, "thm3");
    CHECK(r.all_satisfied());
    bool found = false;
    for (const auto& c : r.conditions)
        if (c.id == "con3.2") {
            found = true;
            // (1+eps)(3t-2s) < 2 caps eps below 2/1.6 - 1 = 0.25
            CHECK(c.witness.find("0.25") != std::string::npos);
        }
    CHECK(found);
    // explicit eps beyond the cap must fail con3.2
    HypothesisParams hp;
    hp.eps = 0.5;
    const HypothesisReport far =
        evaluate_hypotheses({1.0, 1.0}, {-1.0, 1.2}, "thm3", hp);
    CHECK_FALSE(far.all_satisfied());
    // t <= s regime is rejected by con3.1
    CHECK_FALSE(evaluate_hypotheses({1.0, 1.0}, {-1.0, 0.5}, "thm3").all_satisfied());
}

TEST_CASE("theorem 4 hypotheses") {
    CHECK(evaluate_hypotheses({1.0, 0.0}, {-1.0, 0.5}, "thm4").all_satisfied());
    // non-constant field fails the standing assumption
    CHECK_FALSE(evaluate_hypotheses({1.0, 1.0}, {-1.0, 0.5}, "thm4").all_satisfied());
    // t = 1 needs t(2+eps) < 2, impossible
    CHECK_FALSE(evaluate_hypotheses({1.0, 0.0}, {-1.0, 1.0}, "thm4").all_satisfied());
    // t = 2 borderline of con4.4: |v0| vs b0^2
    const HypothesisReport hi =
        evaluate_hypotheses({2.0, 0.0}, {-3.0, 2.0}, "thm4");
    bool c44 = true;
    for (const auto& c : hi.conditions)
        if (c.id == "con4.4")
            c44 = c.satisfied;
    CHECK(c44); // 4|v0| = 12 < (2 b0)^2 = 16
}

TEST_CASE("unknown theorem id") {
    CHECK_THROWS_AS(evaluate_hypotheses({1.0, 0.0}, {-1.0, 0.5}, "thm9"),
                    std::invalid_argument);
}

TEST_CASE("clause sweep against a direct transcription") {
    int checked = 0;
    for (double s = 0.0; s <= 2.01; s += 0.25)
        for (double t = 0.0; t <= 2.001; t += 0.2)
            for (const double q : {0.5, 1.0, 2.0, 3.0, 4.0, 5.0}) {
                const double b0 = 1.0, v0 = -q;
                const Classification got =
                    classify_power_law(b0, s, v0, std::min(t, 2.0));
                const double tt = std::min(t, 2.0);
                Verdict want = Verdict::Unknown;
                if (tt > 0.0 && (tt < s || (tt == s && q < 2.0 * b0)))
                    want = Verdict::Discrete;
                else if (tt > 0.0 && tt == s &&
                         std::fabs(q / 2.0 - std::round(q / 2.0)) < 1e-12 &&
                         q >= 2.0)
                    want = Verdict::ZeroInEssential;
                else if ((3.0 * s < 3.0 * tt && 3.0 * tt < 2.0 * (s + 1.0)) ||
                         (s == 0.0 && tt > 0.0 && tt < 1.0))
                    want = Verdict::DenseRealLine;
                CHECK(got.verdict == want);
                ++checked;
            }
    CHECK(checked >= 200);
}
