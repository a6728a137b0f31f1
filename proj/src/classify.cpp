#include "paulilab/classify.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace paulilab {

namespace {

constexpr double kResonanceTol = 1e-12;

std::vector<double> eps_grid() {
    // log grid {1e-3, ..., 1}
    std::vector<double> g;
    for (int i = 0; i <= 30; ++i)
        g.push_back(std::pow(10.0, -3.0 + 3.0 * i / 30.0));
    return g;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

bool resonance_level(double b0, double v0, int* k_out) {
    const double q = std::fabs(v0) / (2.0 * b0);
    const int k = static_cast<int>(std::lround(q));
    if (k >= 1 && std::fabs(q - k) <= kResonanceTol * std::max(1.0, q)) {
        if (k_out)
            *k_out = k;
        return true;
    }
    return false;
}

ConditionResult cond(std::string id, bool ok, std::string witness) {
    return {std::move(id), ok, std::move(witness)};
}

} // namespace

bool HypothesisReport::all_satisfied() const {
    for (const auto& c : conditions)
        if (!c.satisfied)
            return false;
    return true;
}

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Discrete: return "Discrete";
    case Verdict::ZeroInEssential: return "ZeroInEssential";
    case Verdict::DenseRealLine: return "DenseRealLine";
    default: return "Unknown";
    }
}

bool check_growth_bound(const PowerLawPotential& p, double* c, double* d) {
    if (p.t > 2.0) {
        return false;
    }
    // v0 r^t >= -|v0| r^2 - |v0| for t <= 2
    if (c)
        *c = std::fabs(p.v0);
    if (d)
        *d = -std::fabs(p.v0);
    return true;
}

HypothesisReport evaluate_hypotheses(const PowerLawField& f, const PowerLawPotential& p,
                                     const std::string& theorem, HypothesisParams params) {
    validate(f);
    validate(p);
    const double s = f.s, t = p.t, b0 = f.b0, v0 = p.v0;
    HypothesisReport rep;
    rep.theorem = theorem;

    const bool decays = (v0 < 0.0 && t > 0.0);

    if (theorem == "thm1") {
        rep.conditions.push_back(cond("t1", decays,
            decays ? "v0 < 0, t > 0: V = v0 r^t -> -inf" : "V does not tend to -inf"));
        rep.conditions.push_back(cond("t2", true, "|grad V / V| = t / r -> 0"));
        bool ok;
        std::string w;
        if (t < s) {
            ok = true;
            w = "|V/2B| ~ r^{" + fmt(t - s) + "} -> 0 < 1";
        } else if (t == s) {
            ok = std::fabs(v0) / (2.0 * b0) < 1.0;
            w = "|V/2B| -> |v0|/(2 b0) = " + fmt(std::fabs(v0) / (2.0 * b0));
        } else {
            ok = false;
            w = "|V/2B| ~ r^{" + fmt(t - s) + "} -> inf";
        }
        rep.conditions.push_back(cond("t3", ok, w));
        return rep;
    }

    if (theorem == "thm2") {
        rep.conditions.push_back(cond("rate0", true,
            "|grad V|, |grad B| are power laws: vary with rate 0 away from 0"));
        rep.conditions.push_back(cond("con0a", decays,
            decays ? "V(x_n) = v0 |x_n|^t -> -inf" : "V does not tend to -inf"));
        // con1a: s(1+eps) < 2 and t(1+eps) < 2 for some eps in (0,1)
        double eps = params.eps;
        auto con1a_at = [&](double e) {
            const bool okB = (s == 0.0) || (s * (1.0 + e) < 2.0);
            const bool okV = (t == 0.0) || (t * (1.0 + e) < 2.0);
            return okB && okV;
        };
        bool ok1 = false;
        if (eps > 0.0 && eps < 1.0) {
            ok1 = con1a_at(eps);
        } else {
            for (const double e : eps_grid()) {
                if (e < 1.0 && con1a_at(e)) {
                    ok1 = true;
                    eps = e;
                    break;
                }
            }
        }
        std::string w1 = "exponents s(1+eps)-2 = " + fmt(s * (1.0 + eps) - 2.0) +
                         ", t(1+eps)-2 = " + fmt(t * (1.0 + eps) - 2.0) +
                         " at eps = " + fmt(eps);
        const double sup1 =
            std::min(s > 0.0 ? 2.0 / s - 1.0 : 1.0, t > 0.0 ? 2.0 / t - 1.0 : 1.0);
        w1 += "; admissible sup eps = " + fmt(std::min(1.0, sup1));
        rep.conditions.push_back(cond("con1a", ok1, w1));
        int k = params.k;
        const bool res = (t == s) && resonance_level(b0, v0, &k);
        rep.conditions.push_back(cond("con2a", res,
            res ? "t = s and |v0| = 2 k b0 with k = " + fmt(k)
                : "V + 2k|B| does not tend to 0 along any unbounded sequence"));
        return rep;
    }

    if (theorem == "thm3") {
        rep.conditions.push_back(cond("rate-nu", true,
            "power laws vary with any rate nu in [0,1]; nu = 1 is used"));
        const bool c1 = decays && (t > s);
        rep.conditions.push_back(cond("con3.1", c1,
            c1 ? "V/2|B| ~ r^{" + fmt(t - s) + "} -> -inf"
               : "V/2|B| does not tend to -inf (need t > s, v0 < 0)"));
        // con3.2: (1+eps)(3t-2s) < 2; con3.3 (nu = 1): (1+eps)(t-2s) < 2
        auto c2_at = [&](double e) {
            return (3.0 * t - 2.0 * s <= 0.0) || ((1.0 + e) * (3.0 * t - 2.0 * s) < 2.0);
        };
        auto c3_at = [&](double e) {
            return (t - 2.0 * s <= 0.0) || ((1.0 + e) * (t - 2.0 * s) < 2.0);
        };
        double eps = params.eps;
        bool ok23 = false;
        if (eps > 0.0) {
            ok23 = c2_at(eps) && c3_at(eps);
        } else {
            for (const double e : eps_grid()) {
                if (c2_at(e) && c3_at(e)) {
                    ok23 = true;
                    eps = e;
                    break;
                }
            }
            if (!ok23)
                eps = eps_grid().front();
        }
        const double g2 = 3.0 * t - 2.0 * s;
        std::string w2 = "gradient factor ~ r^{-1}; (1+eps)(3t-2s) = " +
                         fmt((1.0 + eps) * g2) + " vs 2 at eps = " + fmt(eps);
        if (g2 > 0.0)
            w2 += "; admissible sup eps = " + fmt(2.0 / g2 - 1.0);
        rep.conditions.push_back(cond("con3.2", c2_at(eps) && (eps > 0.0), w2));
        rep.conditions.push_back(cond("con3.3", c3_at(eps),
            "(1+eps)(t-2s) = " + fmt((1.0 + eps) * (t - 2.0 * s)) + " vs 2"));
        const bool c4 = (t > s) || (s == 0.0);
        rep.conditions.push_back(cond("con3.4", c4,
            c4 ? "|B| bounded below along the ray; exp(kappa |V/B|) dominates r^s"
               : "r^s is not dominated by exp(kappa |V/B|) when t <= s, s > 0"));
        return rep;
    }

    if (theorem == "thm4") {
        rep.conditions.push_back(cond("constant-field", s == 0.0,
            s == 0.0 ? "B = b0 constant" : "field is not constant (s > 0)"));
        rep.conditions.push_back(cond("rate-nu", true,
            "||Hess V||_2 is a power law: varies with any rate; nu = 1 is used"));
        rep.conditions.push_back(cond("con4.1", decays,
            decays ? "V -> -inf" : "V does not tend to -inf"));
        auto c2_at = [&](double e) { return (t == 0.0) || (t * (2.0 + e) < 2.0); };
        auto c3_at = [&](double e) { return (t == 0.0) || (t * (1.0 + e) < 2.0); };
        double eps = params.eps;
        bool ok2 = false;
        if (eps > 0.0) {
            ok2 = c2_at(eps) && c3_at(eps);
        } else {
            for (const double e : eps_grid()) {
                if (c2_at(e) && c3_at(e)) {
                    ok2 = true;
                    eps = e;
                    break;
                }
            }
            if (!ok2)
                eps = eps_grid().front();
        }
        std::string w2 = "exponent t(2+eps)-2 = " + fmt(t * (2.0 + eps) - 2.0) +
                         " at eps = " + fmt(eps);
        if (t > 0.0)
            w2 += "; admissible sup eps = " + fmt(2.0 / t - 2.0);
        rep.conditions.push_back(cond("con4.2", c2_at(eps) && (eps > 0.0), w2));
        rep.conditions.push_back(cond("con4.3", c3_at(eps),
            "exponent t(1+eps)-2 = " + fmt(t * (1.0 + eps) - 2.0)));
        bool c4;
        std::string w4;
        if (t < 2.0) {
            c4 = true;
            w4 = "|grad V|^2/|V| ~ r^{" + fmt(t - 2.0) + "} -> 0 < (2 b0)^2";
        } else {
            c4 = 4.0 * std::fabs(v0) < 4.0 * b0 * b0;
            w4 = "t = 2: limit 4|v0| = " + fmt(4.0 * std::fabs(v0)) +
                 " vs (2 b0)^2 = " + fmt(4.0 * b0 * b0);
        }
        rep.conditions.push_back(cond("con4.4", c4, w4));
        return rep;
    }

    throw std::invalid_argument("evaluate_hypotheses: unknown theorem id '" + theorem + "'");
}

Classification classify_power_law(double b0, double s, double v0, double t) {
    if (!(b0 > 0.0) || !(v0 < 0.0) || !(s >= 0.0) || !(t >= 0.0 && t <= 2.0))
        throw std::domain_error(
            "classify_power_law: need b0 > 0 > v0, s >= 0, 0 <= t <= 2");
    Classification c;
    if (t > 0.0 && (t < s || (t == s && std::fabs(v0) < 2.0 * b0))) {
        c.verdict = Verdict::Discrete;
        c.basis = "corollary a (thm1)";
        return c;
    }
    int k = 0;
    if (t > 0.0 && t == s && resonance_level(b0, v0, &k)) {
        c.verdict = Verdict::ZeroInEssential;
        c.k = k;
        c.basis = "corollary b (thm2)";
        return c;
    }
    const bool clause_c = 3.0 * s < 3.0 * t && 3.0 * t < 2.0 * (s + 1.0);
    const bool clause_d = s == 0.0 && t > 0.0 && t < 1.0;
    if (clause_c || clause_d) {
        c.verdict = Verdict::DenseRealLine;
        c.basis = clause_c && clause_d ? "corollary c, d (thm3, thm4)"
                  : clause_c           ? "corollary c (thm3)"
                                       : "corollary d (thm4)";
        return c;
    }
    c.verdict = Verdict::Unknown;
    c.basis = "outside every corollary clause";
    return c;
}

} // namespace paulilab
