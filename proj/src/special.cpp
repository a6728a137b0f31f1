#include "paulilab/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

namespace paulilab {

namespace {

struct Scaled {
    double mant;
    double logscale;
};

// phi_n(x) = mant * exp(logscale). The Gaussian is kept in the exponent from
// the start; mantissas are rescaled whenever they grow past 1e150.
Scaled phi_scaled(int n, double x) {
    if (n < 0)
        throw std::invalid_argument("hermite_phi: n must be >= 0");
    double off = -0.5 * x * x - 0.25 * std::log(std::numbers::pi);
    double p_prev = 0.0;
    double p = 1.0;
    for (int k = 0; k < n; ++k) {
        const double next =
            x * std::sqrt(2.0 / (k + 1)) * p - std::sqrt(k / (k + 1.0)) * p_prev;
        p_prev = p;
        p = next;
        const double m = std::max(std::fabs(p), std::fabs(p_prev));
        if (m > 1e150) {
            p *= 1e-150;
            p_prev *= 1e-150;
            off += 150.0 * std::numbers::ln10;
        }
    }
    return {p, off};
}

} // namespace

double hermite_phi(int n, double x) {
    const Scaled s = phi_scaled(n, x);
    return s.mant * std::exp(s.logscale);
}

LogValue hermite_phi_log(int n, double x) {
    const Scaled s = phi_scaled(n, x);
    if (s.mant == 0.0)
        return {-std::numeric_limits<double>::infinity(), 0.0};
    return {std::log(std::fabs(s.mant)) + s.logscale, s.mant > 0.0 ? 1.0 : -1.0};
}

void hermite_phi_row(int nmax, double x, double* out) {
    if (nmax < 0)
        throw std::invalid_argument("hermite_phi_row: nmax must be >= 0");
    double off = -0.5 * x * x - 0.25 * std::log(std::numbers::pi);
    double p_prev = 0.0;
    double p = 1.0;
    out[0] = p * std::exp(off);
    for (int k = 0; k < nmax; ++k) {
        const double next =
            x * std::sqrt(2.0 / (k + 1)) * p - std::sqrt(k / (k + 1.0)) * p_prev;
        p_prev = p;
        p = next;
        const double m = std::max(std::fabs(p), std::fabs(p_prev));
        if (m > 1e150) {
            p *= 1e-150;
            p_prev *= 1e-150;
            off += 150.0 * std::numbers::ln10;
        }
        out[k + 1] = p * std::exp(off);
    }
}

namespace {

// Shared truncation scan: returns the upper limit b and the max of the
// log-integrand 2*log|phi_n| on [a, b].
std::pair<double, double> tail_cutoff(int n, double a, double log_threshold_rel,
                                      bool absolute, double abs_threshold) {
    const double turn = std::sqrt(2.0 * n + 1.0);
    double b0 = std::max(a, turn) + 1.0;
    double lmax = -std::numeric_limits<double>::infinity();
    const int scan = 128;
    for (int i = 0; i <= scan; ++i) {
        const double x = a + (b0 - a) * i / scan;
        lmax = std::max(lmax, 2.0 * hermite_phi_log(n, x).log_abs);
    }
    const double cut = absolute ? abs_threshold : lmax + log_threshold_rel;
    double b = b0;
    while (2.0 * hermite_phi_log(n, b).log_abs > cut && b < a + 400.0)
        b += 1.0;
    return {b, lmax};
}

} // namespace

double hermite_tail(int n, double eps, const QuadratureRule& rule) {
    if (n < 1 || eps <= 0.0)
        throw std::invalid_argument("hermite_tail: need n >= 1, eps > 0");
    const double a = std::sqrt(std::pow(static_cast<double>(n), 1.0 + eps));
    const auto [b, lmax] = tail_cutoff(n, a, 0.0, true, std::log(1e-300));
    if (lmax < std::log(1e-300))
        return 0.0;
    return integrate_1d(
        [n](double x) {
            const double p = hermite_phi(n, x);
            return p * p;
        },
        a, b, rule);
}

double hermite_tail_log(int n, double eps, const QuadratureRule& rule) {
    if (n < 1 || eps <= 0.0)
        throw std::invalid_argument("hermite_tail_log: need n >= 1, eps > 0");
    const double a = std::sqrt(std::pow(static_cast<double>(n), 1.0 + eps));
    const auto [b, lmax] = tail_cutoff(n, a, -745.0, false, 0.0);
    // deep tails decay like exp(-slope x); keep the per-panel phase small so
    // the fixed-order rule stays accurate
    const double slope =
        2.0 * std::sqrt(std::max(0.0, b * b - (2.0 * n + 1.0)));
    const int panels =
        std::max(rule.panels, static_cast<int>(std::ceil((b - a) * slope / 3.0)));
    const double h = (b - a) / panels;
    // log-sum-exp over the composite nodes
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double x = mid + 0.5 * h * rule.nodes[i];
            const double L = 2.0 * hermite_phi_log(n, x).log_abs;
            acc += 0.5 * h * rule.weights[i] * std::exp(L - lmax);
        }
    }
    return lmax + std::log(acc);
}

double log_landau_norm_sq(int k, double B) {
    if (k < 0 || B <= 0.0)
        throw std::invalid_argument("log_landau_norm_sq: need k >= 0, B > 0");
    return (k + 1) * std::numbers::ln2 + std::log(std::numbers::pi) +
           (k - 1) * std::log(B) + std::lgamma(k + 1.0);
}

double gamma_q(double a, double x) {
    return boost::math::gamma_q(a, x);
}

} // namespace paulilab
