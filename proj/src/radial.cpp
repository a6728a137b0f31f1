#include "paulilab/radial.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace paulilab {

namespace {

// Common part of the effective potential: A^2 - (2 m_j / r) A - sigma3 A' + v,
// with sigma3 = +1 for spin-up.
double potential_noncentrifugal(const PowerLawField& f, const PowerLawPotential& p,
                                int j, Spin spin, double r) {
    const double A = rotational_A(f, r);
    const double Ap = rotational_A_prime(f, r);
    const double mj = j + 0.5;
    const double s3 = (spin == Spin::up) ? 1.0 : -1.0;
    double v = 0.0;
    if (p.v0 != 0.0)
        v = p.v0 * std::pow(r, p.t);
    return A * A - 2.0 * mj * A / r - s3 * Ap + v;
}

int channel_m(int j, Spin spin) { return spin == Spin::up ? j : j + 1; }

bool rotational_pure_point(const PowerLawField& f, const PowerLawPotential& p) {
    // liminf b > 0 and A'/A^2 -> 0 hold for every power law with b0 > 0;
    // the binding condition is limsup |v|/A^2 < 1.
    const double lead = std::pow(f.b0 / (f.s + 2.0), 2.0); // coeff of r^{2s+2}
    if (p.t < 2.0 * f.s + 2.0)
        return true;
    if (p.t == 2.0 * f.s + 2.0)
        return std::fabs(p.v0) < lead;
    return false;
}

int resolve_threads(int threads) {
    if (threads > 0)
        return threads;
    if (const char* env = std::getenv("PAULI_LAB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

} // namespace

double channel_potential(const PowerLawField& f, const PowerLawPotential& p,
                         int j, Spin spin, double r) {
    if (r <= 0.0)
        throw std::domain_error("channel_potential: r must be > 0");
    const double m = channel_m(j, spin);
    return (m * m - 0.25) / (r * r) + potential_noncentrifugal(f, p, j, spin, r);
}

TridiagonalSym assemble_channel(const PowerLawField& f, const PowerLawPotential& p,
                                const ChannelSpec& spec) {
    validate(f);
    validate(p);
    if (spec.R <= 0.0 || spec.n < 16)
        throw std::domain_error("assemble_channel: need R > 0 and n >= 16");
    const int n = spec.n;
    const double h = spec.R / n;
    const double h2 = h * h;
    const double m = channel_m(spec.j, spec.spin);
    TridiagonalSym T;
    T.diag.resize(n);
    T.offdiag.resize(n - 1);
    for (int i = 0; i < n; ++i) {
        const double r = (i + 0.5) * h;
        // finite-volume centrifugal term carries m^2/r^2 (the -1/4 belongs
        // to the symmetrized half-line form, not the weighted one)
        T.diag[i] = 2.0 / h2 + m * m / (r * r) +
                    potential_noncentrifugal(f, p, spec.j, spec.spin, r);
    }
    for (int i = 0; i + 1 < n; ++i)
        T.offdiag[i] = -(i + 1.0) / (h2 * std::sqrt((i + 0.5) * (i + 1.5)));
    return T;
}

ChannelSpectrum channel_spectrum(const PowerLawField& f, const PowerLawPotential& p,
                                 const ChannelSpec& spec, double a, double b) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::domain_error("channel_spectrum: invalid window");
    ChannelSpectrum out;
    out.spec = spec;
    out.window_a = a;
    out.window_b = b;
    const TridiagonalSym T = assemble_channel(f, p, spec);
    out.eigenvalues = eig_window(T, a, b);

    const double h = spec.R / spec.n;
    // trust threshold: classical turning point must stay inside 0.8 R
    const double m = channel_m(spec.j, spec.spin);
    double wall_min = std::numeric_limits<double>::infinity();
    double w_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < spec.n; ++i) {
        const double r = (i + 0.5) * h;
        // discrete potential of the scheme (m^2/r^2 stays bounded below,
        // unlike the half-line form whose -1/(4r^2) blows down for m = 0)
        const double w =
            m * m / (r * r) + potential_noncentrifugal(f, p, spec.j, spec.spin, r);
        w_min = std::min(w_min, w);
        if (r >= 0.8 * spec.R)
            wall_min = std::min(wall_min, w);
    }
    out.trusted.reserve(out.eigenvalues.size());
    for (const double lam : out.eigenvalues)
        out.trusted.push_back(lam < wall_min);
    // oscillation-resolution heuristic: at least 8 nodes per local wavelength
    // at the window top
    if (b > w_min) {
        const double lam_osc = 2.0 * std::numbers::pi / std::sqrt(b - w_min);
        out.coarse_warning = h > lam_osc / 8.0;
    }
    return out;
}

SpectrumReport aggregate_spectrum(const PowerLawField& f, const PowerLawPotential& p,
                                  int j_min, int j_max, double a, double b,
                                  GridPolicy policy, int threads) {
    validate(f);
    validate(p);
    if (j_min > j_max)
        throw std::domain_error("aggregate_spectrum: j_min > j_max");
    if (!(a < b))
        throw std::domain_error("aggregate_spectrum: invalid window");

    const bool pure_point = rotational_pure_point(f, p);
    double R = policy.R;
    if (R <= 0.0) {
        if (pure_point) {
            // grow the box until every channel potential clears the window top
            R = 10.0;
            while (R < 640.0) {
                double wmin = std::numeric_limits<double>::infinity();
                for (int j = j_min; j <= j_max; ++j)
                    for (const Spin sp : {Spin::up, Spin::down})
                        wmin = std::min(wmin, channel_potential(f, p, j, sp, R));
                if (wmin >= b + 10.0)
                    break;
                R *= 2.0;
            }
        } else {
            R = 60.0;
        }
    }
    int n = policy.n;
    if (n <= 0)
        n = std::max(4000, static_cast<int>(std::ceil(200.0 * R)));

    std::vector<ChannelSpec> specs;
    for (int j = j_min; j <= j_max; ++j)
        for (const Spin sp : {Spin::up, Spin::down})
            specs.push_back({j, sp, R, n});

    SpectrumReport rep;
    rep.window_a = a;
    rep.window_b = b;
    rep.pure_point_regime = pure_point;
    rep.per_channel.resize(specs.size());

    const int nthreads = std::min<int>(resolve_threads(threads), specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= specs.size())
                return;
            rep.per_channel[i] = channel_spectrum(f, p, specs[i], a, b);
        }
    };
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    for (const auto& ch : rep.per_channel) {
        rep.merged.insert(rep.merged.end(), ch.eigenvalues.begin(), ch.eigenvalues.end());
        rep.coarse_warning = rep.coarse_warning || ch.coarse_warning;
    }
    std::sort(rep.merged.begin(), rep.merged.end());
    std::tie(rep.max_gap, rep.min_abs, rep.count) = gap_metrics(rep);
    return rep;
}

std::tuple<double, double, std::size_t> gap_metrics(const SpectrumReport& report) {
    const double a = report.window_a, b = report.window_b;
    if (!(a < b))
        throw std::domain_error("gap_metrics: empty window");
    const auto& m = report.merged;
    if (m.empty())
        return {b - a, std::numeric_limits<double>::infinity(), 0};
    double max_gap = std::max(m.front() - a, b - m.back());
    double min_abs = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i + 1 < m.size())
            max_gap = std::max(max_gap, m[i + 1] - m[i]);
        min_abs = std::min(min_abs, std::fabs(m[i]));
    }
    return {max_gap, min_abs, m.size()};
}

} // namespace paulilab
