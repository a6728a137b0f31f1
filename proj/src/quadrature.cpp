#include "paulilab/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace paulilab {

QuadratureRule QuadratureRule::gauss_legendre(int pts, int panels) {
    if (pts < 1 || panels < 1)
        throw std::invalid_argument("gauss_legendre: pts and panels must be >= 1");
    QuadratureRule rule;
    rule.panels = panels;
    rule.nodes.resize(pts);
    rule.weights.resize(pts);
    const int m = (pts + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n(x) = 0
        double x = std::cos(std::numbers::pi * (i + 0.75) / (pts + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < pts; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
            }
            pp = pts * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15)
                break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.nodes[i] = -x;
        rule.nodes[pts - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[pts - 1 - i] = w;
    }
    return rule;
}

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const QuadratureRule& rule) {
    if (a > b)
        throw std::invalid_argument("integrate_1d: a > b");
    if (a == b)
        return 0.0;
    const double h = (b - a) / rule.panels;
    double total = 0.0;
    for (int p = 0; p < rule.panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        double panel = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double v = f(mid + 0.5 * h * rule.nodes[i]);
            if (!std::isfinite(v))
                throw std::domain_error("integrate_1d: non-finite integrand sample");
            panel += rule.weights[i] * v;
        }
        total += 0.5 * h * panel;
    }
    return total;
}

double integrate_annulus(const std::function<double(Vec2)>& f, Vec2 center,
                         double r_in, double r_out, const QuadratureRule& rule,
                         int angular_nodes) {
    if (r_in < 0.0 || r_in >= r_out)
        throw std::invalid_argument("integrate_annulus: need 0 <= r_in < r_out");
    if (angular_nodes < 1)
        throw std::invalid_argument("integrate_annulus: angular_nodes must be >= 1");
    const double dth = 2.0 * std::numbers::pi / angular_nodes;
    std::vector<double> cth(angular_nodes), sth(angular_nodes);
    for (int k = 0; k < angular_nodes; ++k) {
        cth[k] = std::cos(k * dth);
        sth[k] = std::sin(k * dth);
    }
    const double h = (r_out - r_in) / rule.panels;
    double total = 0.0;
    for (int p = 0; p < rule.panels; ++p) {
        const double mid = r_in + (p + 0.5) * h;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double r = mid + 0.5 * h * rule.nodes[i];
            const double wr = 0.5 * h * rule.weights[i] * r;
            double ring = 0.0;
            for (int k = 0; k < angular_nodes; ++k) {
                const double v = f({center.x + r * cth[k], center.y + r * sth[k]});
                if (!std::isfinite(v))
                    throw std::domain_error("integrate_annulus: non-finite integrand sample");
                ring += v;
            }
            total += wr * ring * dth;
        }
    }
    return total;
}

} // namespace paulilab
