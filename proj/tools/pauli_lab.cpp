#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paulilab/checks.hpp"
#include "paulilab/classify.hpp"
#include "paulilab/errors.hpp"
#include "paulilab/radial.hpp"
#include "paulilab/weyl.hpp"

namespace {

using namespace paulilab;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitRegime = 3;
constexpr int kExitNoConvergence = 4;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Options {
    double b0 = 1.0, s = 0.0, v0 = -1.0, t = 0.5;
    std::string out_dir = ".";
    bool stamp = false;
    int threads = 0;

    // spectrum
    int jmax = 10;
    int jmin = 1; // sentinel overridden to -jmax unless set
    bool jmin_set = false;
    double emin = -3.0, emax = 3.0;
    double R = 0.0;
    int n = 0;
    bool svg = false;

    // weyl
    int theorem = 3;
    int nmin = 5, nmax = 30;
    double E = 0.0;
    double eps = 0.0; // 0: per-theorem default
    int k = 1;
    int pts = 8;

    // validate
    bool quick = false;
};

std::ofstream open_out(const Options& o, const std::string& name) {
    std::filesystem::create_directories(o.out_dir);
    std::ofstream f(std::filesystem::path(o.out_dir) / name);
    if (!f)
        throw std::runtime_error("cannot open output file " + name);
    return f;
}

void metadata(std::ostream& os, const Options& o, const std::string& cmd) {
    os << "# pauli_lab " << cmd << " b0=" << fmt(o.b0) << " s=" << fmt(o.s)
       << " v0=" << fmt(o.v0) << " t=" << fmt(o.t) << "\n";
    if (o.stamp)
        os << "# generated at " << __DATE__ << " (build date)\n";
}

int cmd_classify(const Options& o) {
    const Classification c = classify_power_law(o.b0, o.s, o.v0, o.t);
    std::cout << "verdict: " << to_string(c.verdict);
    if (c.verdict == Verdict::ZeroInEssential)
        std::cout << " (k = " << c.k << ")";
    std::cout << "\nbasis: " << c.basis << "\n\n";

    auto report = open_out(o, "classify_report.csv");
    metadata(report, o, "classify");
    report << "theorem,condition,satisfied,witness\n";
    const PowerLawField f{o.b0, o.s};
    const PowerLawPotential p{o.v0, o.t};
    for (const char* th : {"thm1", "thm2", "thm3", "thm4"}) {
        const HypothesisReport rep = evaluate_hypotheses(f, p, th);
        std::cout << th << (rep.all_satisfied() ? "  [all conditions hold]" : "") << "\n";
        for (const auto& cond : rep.conditions) {
            std::cout << "  " << (cond.satisfied ? "+" : "-") << " " << cond.id << ": "
                      << cond.witness << "\n";
            std::string w = cond.witness;
            for (auto& ch : w)
                if (ch == ',')
                    ch = ';';
            report << th << "," << cond.id << "," << (cond.satisfied ? 1 : 0) << ","
                   << w << "\n";
        }
    }
    report << "verdict," << to_string(c.verdict) << "," << c.k << "," << c.basis << "\n";
    return kExitOk;
}

void write_strip_svg(const Options& o, const SpectrumReport& rep) {
    auto svg = open_out(o, "spectrum_strip.svg");
    const int width = 800, row = 8;
    const int height = row * static_cast<int>(rep.per_channel.size()) + 20;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='"
        << height << "'>\n";
    const double a = rep.window_a, b = rep.window_b;
    int y = 10;
    for (const auto& ch : rep.per_channel) {
        for (const double lam : ch.eigenvalues) {
            const int x = static_cast<int>((lam - a) / (b - a) * (width - 20)) + 10;
            svg << "<line x1='" << x << "' y1='" << y << "' x2='" << x << "' y2='"
                << y + row - 2 << "' stroke='black'/>\n";
        }
        y += row;
    }
    svg << "</svg>\n";
}

int cmd_spectrum(const Options& o) {
    const PowerLawField f{o.b0, o.s};
    const PowerLawPotential p{o.v0, o.t};
    const int jmin = o.jmin_set ? o.jmin : -o.jmax;
    const SpectrumReport rep = aggregate_spectrum(f, p, jmin, o.jmax, o.emin, o.emax,
                                                  {o.R, o.n}, o.threads);
    auto table = open_out(o, "spectrum.csv");
    metadata(table, o, "spectrum");
    table << "j,spin,lambda [energy],trusted\n";
    for (const auto& ch : rep.per_channel)
        for (std::size_t i = 0; i < ch.eigenvalues.size(); ++i)
            table << ch.spec.j << "," << (ch.spec.spin == Spin::up ? "up" : "down")
                  << "," << fmt(ch.eigenvalues[i]) << "," << (ch.trusted[i] ? 1 : 0)
                  << "\n";

    auto summary = open_out(o, "spectrum_summary.txt");
    summary << "count = " << rep.count << "\n"
            << "max_gap = " << fmt(rep.max_gap) << "\n"
            << "min_abs = " << fmt(rep.min_abs) << "\n"
            << "window = [" << fmt(rep.window_a) << ", " << fmt(rep.window_b) << "]\n"
            << "pure_point_regime = " << (rep.pure_point_regime ? 1 : 0) << "\n"
            << "coarse_warning = " << (rep.coarse_warning ? 1 : 0) << "\n";
    std::cout << "count = " << rep.count << ", max_gap = " << fmt(rep.max_gap)
              << ", min_abs = " << fmt(rep.min_abs) << "\n";
    if (rep.coarse_warning)
        std::cout << "warning: grid may be too coarse at the window top\n";
    if (o.svg)
        write_strip_svg(o, rep);
    return kExitOk;
}

void guard_regime(const PowerLawField& f, const PowerLawPotential& p, int theorem,
                  int k, double eps) {
    const std::string id = "thm" + std::to_string(theorem);
    HypothesisParams hp;
    hp.k = k;
    hp.eps = eps;
    const HypothesisReport rep = evaluate_hypotheses(f, p, id, hp);
    for (const auto& c : rep.conditions)
        if (!c.satisfied)
            throw regime_error("hypotheses of " + id + " fail: " + c.id + " (" +
                               c.witness + ")");
}

int cmd_weyl(const Options& o) {
    const PowerLawField f{o.b0, o.s};
    const PowerLawPotential p{o.v0, o.t};
    double eps = o.eps;
    if (eps <= 0.0)
        eps = o.theorem == 3 ? 0.05 : (o.theorem == 4 ? 0.1 : 0.9);
    guard_regime(f, p, o.theorem, o.k, o.theorem == 2 ? -1.0 : eps);

    const QuadratureRule quad = QuadratureRule::gauss_legendre(o.pts);
    auto table = open_out(o, "weyl.csv");
    metadata(table, o, "weyl");
    std::vector<double> ln_n, ln_ratio;
    bool header = false;
    for (int n = o.nmin; n <= o.nmax; ++n) {
        ResidualBreakdown r;
        double center = 0.0, rn = 0.0;
        if (o.theorem == 3) {
            const WeylPacket3 P = make_packet_thm3(f, p, n, eps, o.E, {1, 0});
            r = residual_thm3(f, p, P, quad);
            center = norm(P.x_n);
            rn = P.r_n;
        } else if (o.theorem == 2) {
            const WeylPacket3 P = make_packet_thm2(f, p, o.k, eps, n, {1, 0});
            r = residual_thm2(f, p, o.k, eps, n, {1, 0}, quad);
            center = norm(P.x_n);
            rn = P.r_n;
        } else {
            const WeylPacket4 P = find_center_thm4(p, n, o.b0, o.E, eps);
            r = residual_thm4(p, P, quad);
            center = P.y_n.x;
            rn = P.r_n;
        }
        if (!header) {
            table << "n,center [length],r_n [length]";
            for (const auto& [name, v] : r.term_norms)
                table << ",|" << name << "| [L2]";
            table << ",ratio\n";
            header = true;
        }
        table << n << "," << fmt(center) << "," << fmt(rn);
        for (const auto& [name, v] : r.term_norms)
            table << "," << fmt(v);
        table << "," << fmt(r.ratio) << "\n";
        std::cout << "n = " << n << "  ratio = " << fmt(r.ratio) << "\n";
        ln_n.push_back(std::log(static_cast<double>(n)));
        ln_ratio.push_back(std::log(r.ratio));
    }
    // least-squares slope of log ratio vs log n
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(ln_n.size());
    for (std::size_t i = 0; i < ln_n.size(); ++i) {
        sx += ln_n[i];
        sy += ln_ratio[i];
        sxx += ln_n[i] * ln_n[i];
        sxy += ln_n[i] * ln_ratio[i];
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    auto summary = open_out(o, "weyl_summary.txt");
    summary << "theorem = " << o.theorem << "\n"
            << "eps = " << fmt(eps) << "\n"
            << "E = " << fmt(o.E) << "\n"
            << "n_range = [" << o.nmin << ", " << o.nmax << "]\n"
            << "loglog_slope = " << fmt(slope) << "\n"
            << "first_ratio = " << fmt(std::exp(ln_ratio.front())) << "\n"
            << "last_ratio = " << fmt(std::exp(ln_ratio.back())) << "\n";
    std::cout << "log-log slope = " << fmt(slope) << "\n";
    return kExitOk;
}

int cmd_validate(const Options& o) {
    const auto results = checks::run_validation_suite(o.quick);
    bool all = true;
    for (const auto& c : results) {
        std::printf("%-22s %s  measured = %.3e  bound = %.3e  %s\n", c.id.c_str(),
                    c.pass ? "pass" : "FAIL", c.measured, c.bound, c.note.c_str());
        all = all && c.pass;
    }
    std::cout << (all ? "all invariants hold\n" : "validation FAILED\n");
    return all ? kExitOk : kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for the 2D Pauli operator with power-law "
                 "field and potential"};
    app.require_subcommand(1);
    app.fallthrough(); // allow the shared flags after the subcommand name
    Options o;

    app.set_config("--config", "", "flat key = value config file");
    app.add_option("--out-dir", o.out_dir, "directory for report files");
    app.add_flag("--stamp", o.stamp, "include a build-date metadata line");
    app.add_option("--threads", o.threads,
                   "worker threads (0: PAULI_LAB_THREADS, then hardware)");

    // every option lives on the parent so a flat key = value config file and
    // flags after the subcommand name (fallthrough) both resolve
    app.add_option("--b0", o.b0, "field amplitude, > 0");
    app.add_option("--s", o.s, "field exponent, >= 0");
    app.add_option("--v0", o.v0, "potential amplitude, < 0");
    app.add_option("--t", o.t, "potential exponent, in [0, 2]");

    app.add_option("--jmax", o.jmax, "largest channel index");
    app.add_option("--jmin", o.jmin, "smallest channel index (default -jmax)")
        ->each([&](const std::string&) { o.jmin_set = true; });
    app.add_option("--emin", o.emin, "window bottom");
    app.add_option("--emax", o.emax, "window top");
    app.add_option("--R", o.R, "box size (0: automatic)");
    app.add_option("--n", o.n, "grid nodes per channel (0: automatic)");
    app.add_flag("--svg", o.svg, "write an eigenvalue-strip SVG");

    app.add_option("--theorem", o.theorem, "2, 3 or 4")->check(CLI::IsMember({2, 3, 4}));
    app.add_option("--nmin", o.nmin, "first packet index");
    app.add_option("--nmax", o.nmax, "last packet index");
    app.add_option("--E", o.E, "spectral target");
    app.add_option("--eps", o.eps, "schedule exponent (0: per-theorem default)");
    app.add_option("--k", o.k, "Landau level for theorem 2");
    app.add_option("--pts", o.pts, "Gauss-Legendre points per panel");
    app.add_flag("--quick", o.quick, "validate: reduced ranges, < 60 s");

    CLI::App* cls = app.add_subcommand("classify", "corollary verdict + hypothesis table");
    CLI::App* spec = app.add_subcommand("spectrum", "channel-wise spectrum in a window");
    CLI::App* weyl = app.add_subcommand("weyl", "residual decay of the trial packets");
    app.add_subcommand("validate", "run the invariant suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return kExitBadParams;
    }

    try {
        if (cls->parsed())
            return cmd_classify(o);
        if (spec->parsed())
            return cmd_spectrum(o);
        if (weyl->parsed())
            return cmd_weyl(o);
        return cmd_validate(o);
    } catch (const regime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRegime;
    } catch (const convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
