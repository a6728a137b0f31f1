#pragma once
#include <functional>
#include <vector>

#include "paulilab/vec2.hpp"

namespace paulilab {

// Composite rule: nodes/weights live on [-1, 1]; the interval is split into
// `panels` equal panels and the rule is mapped onto each.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int panels = 1;

    // Gauss-Legendre points by Newton iteration on P_n; exact on each panel
    // for polynomials of degree <= 2*pts - 1.
    static QuadratureRule gauss_legendre(int pts, int panels = 1);
};

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const QuadratureRule& rule);

// Polar tensor quadrature over the annulus r_in <= |x - center| <= r_out:
// Gauss-Legendre in radius (times the measure factor r), uniform trapezoid in
// angle (exact for trigonometric polynomials of degree < angular_nodes).
double integrate_annulus(const std::function<double(Vec2)>& f, Vec2 center,
                         double r_in, double r_out, const QuadratureRule& rule,
                         int angular_nodes);

} // namespace paulilab
