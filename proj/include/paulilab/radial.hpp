#pragma once
#include <tuple>
#include <vector>

#include "paulilab/fields.hpp"
#include "paulilab/tridiag.hpp"

namespace paulilab {

enum class Spin { up, down };

struct ChannelSpec {
    int j = 0;
    Spin spin = Spin::up;
    double R = 20.0; // box size
    int n = 4000;    // node count; staggered nodes r_i = (i + 1/2) h, h = R/n
};

struct ChannelSpectrum {
    ChannelSpec spec;
    double window_a = 0.0, window_b = 0.0;
    std::vector<double> eigenvalues;
    std::vector<bool> trusted; // turning point within 0.8 R
    bool coarse_warning = false;
};

struct SpectrumReport {
    double window_a = 0.0, window_b = 0.0;
    std::vector<ChannelSpectrum> per_channel;
    std::vector<double> merged;
    double max_gap = 0.0;
    double min_abs = 0.0;
    std::size_t count = 0;
    bool pure_point_regime = false; // rotational-gauge discreteness conditions
    bool coarse_warning = false;
};

// Effective half-line potential of the channel (j, spin), including the
// centrifugal term (m^2 - 1/4)/r^2 with m = j (up) / j+1 (down).
double channel_potential(const PowerLawField& f, const PowerLawPotential& p,
                         int j, Spin spin, double r);

// Finite-volume discretization of the channel operator in the weighted
// measure r dr, symmetrized to a plain symmetric tridiagonal matrix.
// Spectrally equivalent to the half-line form above, but second-order
// accurate also for the borderline -1/(4r^2) channels.
TridiagonalSym assemble_channel(const PowerLawField& f, const PowerLawPotential& p,
                                const ChannelSpec& spec);

ChannelSpectrum channel_spectrum(const PowerLawField& f, const PowerLawPotential& p,
                                 const ChannelSpec& spec, double a, double b);

struct GridPolicy {
    double R = 0.0; // <= 0: choose automatically
    int n = 0;      // <= 0: max(4000, 200 R)
};

// Runs every channel j in [j_min, j_max], both spins. threads = 0 consults
// PAULI_LAB_THREADS, then hardware concurrency.
SpectrumReport aggregate_spectrum(const PowerLawField& f, const PowerLawPotential& p,
                                  int j_min, int j_max, double a, double b,
                                  GridPolicy policy = {}, int threads = 0);

// (max_gap, min_abs, count) recomputed from the merged list.
std::tuple<double, double, std::size_t> gap_metrics(const SpectrumReport& report);

} // namespace paulilab
