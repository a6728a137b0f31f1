#pragma once
#include <string>
#include <vector>

#include "paulilab/fields.hpp"

namespace paulilab {

struct ConditionResult {
    std::string id;
    bool satisfied = false;
    std::string witness;
};

struct HypothesisReport {
    std::string theorem; // "thm1" .. "thm4"
    std::vector<ConditionResult> conditions;

    bool all_satisfied() const;
};

enum class Verdict { Discrete, ZeroInEssential, DenseRealLine, Unknown };

struct Classification {
    Verdict verdict = Verdict::Unknown;
    int k = 0; // resonance level for ZeroInEssential
    std::string basis;
};

const char* to_string(Verdict v);

// V >= -c |x|^2 + d lower bound; witnesses written through the out params.
bool check_growth_bound(const PowerLawPotential& p, double* c = nullptr,
                        double* d = nullptr);

struct HypothesisParams {
    int k = 1;         // level for thm2
    double eps = -1.0; // <= 0: search the log grid {1e-3 .. 1}
};

// Decides every limit condition of the requested theorem by closed-form
// exponent arithmetic for the power-law family (never by sampling).
HypothesisReport evaluate_hypotheses(const PowerLawField& f, const PowerLawPotential& p,
                                     const std::string& theorem,
                                     HypothesisParams params = {});

Classification classify_power_law(double b0, double s, double v0, double t);

} // namespace paulilab
