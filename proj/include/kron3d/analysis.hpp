#ifndef KRON3D_ANALYSIS_HPP
#define KRON3D_ANALYSIS_HPP

#include "kron3d/channel.hpp"
#include "kron3d/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kron3d {

enum class ChannelScheme {
    ray_model, // direct ray-based synthesis
    full_corr, // h = R^{1/2} w
    kron_corr, // h = R_K^{1/2} w
};

const char *scheme_name(ChannelScheme scheme);

struct SpectrumComparison {
    std::vector<double> eig_full; // descending
    std::vector<double> eig_kron; // descending
    double max_rel_gap = 0.0;     // max_i |eig_full[i]-eig_kron[i]| / eig_full[0]
};

struct CapacitySample {
    ChannelScheme scheme;
    double snr_db = 0.0;
    double capacity = 0.0; // bits/s/Hz
};

struct BeamformingLossReport {
    double lambda1 = 0.0; // dominant eigenvalue of R
    double mu = 0.0;      // gain along the Kronecker dominant eigenvector
    double loss_db = 0.0; // 10*log10(lambda1/mu)
};

struct LossSweepRow {
    std::string varied_param; // "default", "phi", "theta", "sigma", "xi"
    double value = 0.0;
    double loss_db = 0.0;
};

SpectrumComparison compare_spectra(const ComplexMatrix &r_full, const ComplexMatrix &r_kron);

// Per-trial ergodic capacity log2(1 + rho * ||h||^2) for one channel scheme.
// Trial t draws from the substream (seed, t), so results do not depend on
// execution order and compared schemes can share their randomness.
std::vector<CapacitySample> capacity_cdf(ChannelScheme scheme, const ArrayGeometry &geom,
                                         const ChannelParams &params, double snr_db,
                                         int64_t trials, uint64_t seed);

// Statistical beamforming along u_az (x) u_el instead of the dominant
// eigenvector of R; reports the resulting gain loss.
BeamformingLossReport beamforming_loss(const ArrayGeometry &geom, const ChannelParams &params);

// One-at-a-time sweeps around `defaults`: phi over [0,pi], theta over the
// interior of (0,pi), sigma over [0,sigma_max], xi over [0,xi_max], each with
// `points` evenly spaced values. The first row evaluates the defaults.
std::vector<LossSweepRow> beamforming_loss_sweep(const ArrayGeometry &geom,
                                                 const ChannelParams &defaults, int points = 25);

// Per-trial gains |h^H f|^2 with h = sqrt_true * w and f the normalized
// beamformer sqrt_beam * w; one w per trial, shared across arms via the seed.
std::vector<double> unlimited_feedback_gains(const ComplexMatrix &sqrt_true,
                                             const ComplexMatrix &sqrt_beam, int64_t trials,
                                             uint64_t seed);

// Spec'd wrapper: the true channel always uses R; the beamformer uses R when
// use_kron is false and R_K when it is true.
std::vector<double> unlimited_feedback_snr(const ArrayGeometry &geom, const ChannelParams &params,
                                           bool use_kron, int64_t trials, uint64_t seed);

// Dominant eigenvector with the phase convention that its largest-magnitude
// entry is real positive.
ComplexVector dominant_eigenvector(const ComplexMatrix &m);

} // namespace kron3d

#endif
