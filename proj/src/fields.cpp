#include "paulilab/fields.hpp"

#include <cmath>
#include <stdexcept>

#include "paulilab/quadrature.hpp"

namespace paulilab {

void validate(const PowerLawField& f) {
    if (!(f.b0 > 0.0) || !(f.s >= 0.0))
        throw std::domain_error("PowerLawField: need b0 > 0 and s >= 0");
}

void validate(const PowerLawPotential& p) {
    if (!(p.v0 <= 0.0) || !(p.t >= 0.0 && p.t <= 2.0))
        throw std::domain_error("PowerLawPotential: need v0 <= 0 and 0 <= t <= 2");
}

double field_value(const PowerLawField& f, Vec2 x) {
    return f.b0 * std::pow(norm(x), f.s);
}

double potential_value(const PowerLawPotential& p, Vec2 x) {
    if (p.v0 == 0.0)
        return 0.0;
    return p.v0 * std::pow(norm(x), p.t);
}

double rotational_A(const PowerLawField& f, double r) {
    if (r < 0.0)
        throw std::domain_error("rotational_A: r must be >= 0");
    return f.b0 * std::pow(r, f.s + 1.0) / (f.s + 2.0);
}

double rotational_A_prime(const PowerLawField& f, double r) {
    if (r < 0.0)
        throw std::domain_error("rotational_A_prime: r must be >= 0");
    return f.b0 * (f.s + 1.0) * std::pow(r, f.s) / (f.s + 2.0);
}

GaugeSample symmetric_A_n(double B_n, Vec2 x_n, Vec2 x) {
    GaugeSample g;
    g.a = wedge(0.5 * B_n, x - x_n);
    g.div_a = 0.0;
    g.curl_a = B_n;
    return g;
}

GaugeSample tilde_A(const PowerLawField& f, Vec2 x_n, Vec2 x, int panels) {
    if (panels < 1)
        throw std::invalid_argument("tilde_A: panels must be >= 1");
    const Vec2 w = x - x_n;
    GaugeSample g;
    g.curl_a = field_value(f, x);
    if (w.x == 0.0 && w.y == 0.0)
        return g;
    static const QuadratureRule base = QuadratureRule::gauss_legendre(16);
    QuadratureRule rule = base;
    rule.panels = panels;
    // I = int_0^1 b(|x_n + s w|) s ds;  tilde A = I ^ w
    const double I = integrate_1d(
        [&](double s) { return field_value(f, x_n + s * w) * s; }, 0.0, 1.0, rule);
    g.a = wedge(I, w);
    // div tilde A = int_0^1 s^2 b'(|y(s)|) cross(w, x_n)/|y(s)| ds
    const double wedge_const = cross(w, x_n);
    if (f.s > 0.0 && wedge_const != 0.0) {
        g.div_a = integrate_1d(
            [&](double s) {
                const double ry = norm(x_n + s * w);
                if (ry == 0.0)
                    return 0.0;
                const double bp = f.b0 * f.s * std::pow(ry, f.s - 1.0);
                return s * s * bp * wedge_const / ry;
            },
            0.0, 1.0, rule);
    }
    return g;
}

PotDerivs potential_derivatives(const PowerLawPotential& p, Vec2 x) {
    PotDerivs d;
    d.value = potential_value(p, x);
    if (p.t == 0.0 || p.v0 == 0.0)
        return d; // constant potential: zero gradient and Hessian
    const double r = norm(x);
    if (r == 0.0) {
        if (p.t < 2.0)
            throw std::domain_error("potential_derivatives: singular at the origin for t < 2");
        d.hess_norm = 2.0 * std::fabs(p.v0);
        return d;
    }
    // grad = v0 t r^{t-2} x;  Hessian eigenvalues v0 t r^{t-2} * {t-1, 1}
    const double c = p.v0 * p.t * std::pow(r, p.t - 2.0);
    d.grad = c * x;
    d.hess_norm = std::fabs(c) * std::max(std::fabs(p.t - 1.0), 1.0);
    return d;
}

} // namespace paulilab
