#include "kron3d/analysis.hpp"

#include "kron3d/correlation.hpp"
#include "kron3d/errors.hpp"

#include <cmath>
#include <numbers>

namespace kron3d {

namespace {

double real_quadratic_form(const ComplexVector &v, const ComplexMatrix &m) {
    return inner_product(v, m * v).real();
}

} // namespace

const char *scheme_name(ChannelScheme scheme) {
    switch (scheme) {
    case ChannelScheme::ray_model:
        return "SIM";
    case ChannelScheme::full_corr:
        return "R";
    case ChannelScheme::kron_corr:
        return "R_sep";
    }
    return "?";
}

SpectrumComparison compare_spectra(const ComplexMatrix &r_full, const ComplexMatrix &r_kron) {
    if (r_full.rows() != r_kron.rows() || r_full.cols() != r_kron.cols()) {
        throw DimensionMismatchError("compare_spectra: matrices differ in shape");
    }
    SpectrumComparison cmp;
    cmp.eig_full = hermitian_eig(r_full).eigenvalues;
    cmp.eig_kron = hermitian_eig(r_kron).eigenvalues;
    const double lambda1 = cmp.eig_full.empty() ? 1.0 : std::max(cmp.eig_full.front(), 1e-300);
    for (size_t i = 0; i < cmp.eig_full.size(); ++i) {
        cmp.max_rel_gap = std::max(cmp.max_rel_gap,
                                   std::abs(cmp.eig_full[i] - cmp.eig_kron[i]) / lambda1);
    }
    return cmp;
}

std::vector<CapacitySample> capacity_cdf(ChannelScheme scheme, const ArrayGeometry &geom,
                                         const ChannelParams &params, double snr_db,
                                         int64_t trials, uint64_t seed) {
    geom.validate();
    params.validate();
    if (trials < 1) {
        throw InvalidArgumentError("capacity_cdf: trials must be >= 1");
    }
    const double rho = std::pow(10.0, snr_db / 10.0);

    ComplexMatrix sqrt_r;
    if (scheme == ChannelScheme::full_corr) {
        sqrt_r = psd_sqrt(full_correlation(geom, params));
    } else if (scheme == ChannelScheme::kron_corr) {
        sqrt_r = psd_sqrt(kronecker_correlation(geom, params));
    }

    std::vector<CapacitySample> samples;
    samples.reserve(static_cast<size_t>(trials));
    for (int64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, static_cast<uint64_t>(t));
        ComplexVector h;
        if (scheme == ChannelScheme::ray_model) {
            const std::vector<PathDraw> draws = sample_paths(params, rng.next_u64());
            h = channel_vector(geom, params, draws);
        } else {
            h = channel_from_correlation(sqrt_r, rng);
        }
        const double power = norm2(h);
        const double capacity = std::log2(1.0 + rho * power * power);
        samples.push_back({scheme, snr_db, capacity});
    }
    return samples;
}

ComplexVector dominant_eigenvector(const ComplexMatrix &m) {
    const EigenDecomposition eig = hermitian_eig(m);
    ComplexVector v = eig.eigenvectors.column(0);
    size_t pivot = 0;
    double best = -1.0;
    for (size_t i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        if (a > best) {
            best = a;
            pivot = i;
        }
    }
    if (best > 0.0) {
        const Complex rot = std::conj(v[pivot]) / best;
        for (Complex &z : v) {
            z *= rot;
        }
        v[pivot] = Complex(std::abs(v[pivot]), 0.0);
    }
    return v;
}

BeamformingLossReport beamforming_loss(const ArrayGeometry &geom, const ChannelParams &params) {
    const ComplexMatrix r = full_correlation(geom, params);
    const ComplexVector u_el = dominant_eigenvector(elevation_correlation(geom, params));
    const ComplexVector u_az = dominant_eigenvector(azimuth_correlation(geom, params));
    const ComplexVector u_kron = kron(u_az, u_el);

    BeamformingLossReport report;
    report.lambda1 = hermitian_eig(r).eigenvalues.front();
    report.mu = real_quadratic_form(u_kron, r);
    report.loss_db = 10.0 * std::log10(report.lambda1 / report.mu);
    return report;
}

std::vector<LossSweepRow> beamforming_loss_sweep(const ArrayGeometry &geom,
                                                 const ChannelParams &defaults, int points) {
    if (points < 2) {
        throw InvalidArgumentError("beamforming_loss_sweep: need at least two sweep points");
    }
    std::vector<LossSweepRow> rows;
    rows.push_back({"default", 0.0, beamforming_loss(geom, defaults).loss_db});

    const double pi = std::numbers::pi;
    for (int i = 0; i < points; ++i) {
        ChannelParams p = defaults;
        p.phi = pi * i / (points - 1);
        rows.push_back({"phi", p.phi, beamforming_loss(geom, p).loss_db});
    }
    for (int i = 1; i <= points; ++i) {
        // theta is restricted to the open interval (0, pi).
        ChannelParams p = defaults;
        p.theta = pi * i / (points + 1);
        rows.push_back({"theta", p.theta, beamforming_loss(geom, p).loss_db});
    }
    for (int i = 0; i < points; ++i) {
        ChannelParams p = defaults;
        p.sigma = defaults.sigma * i / (points - 1);
        rows.push_back({"sigma", p.sigma, beamforming_loss(geom, p).loss_db});
    }
    for (int i = 0; i < points; ++i) {
        ChannelParams p = defaults;
        p.xi = defaults.xi * i / (points - 1);
        rows.push_back({"xi", p.xi, beamforming_loss(geom, p).loss_db});
    }
    return rows;
}

std::vector<double> unlimited_feedback_gains(const ComplexMatrix &sqrt_true,
                                             const ComplexMatrix &sqrt_beam, int64_t trials,
                                             uint64_t seed) {
    if (sqrt_true.rows() != sqrt_true.cols() || sqrt_beam.rows() != sqrt_beam.cols() ||
        sqrt_true.rows() != sqrt_beam.rows()) {
        throw DimensionMismatchError("unlimited_feedback_gains: square matrices of equal size required");
    }
    if (trials < 1) {
        throw InvalidArgumentError("unlimited_feedback_gains: trials must be >= 1");
    }
    std::vector<double> gains;
    gains.reserve(static_cast<size_t>(trials));
    const size_t dim = static_cast<size_t>(sqrt_true.rows());
    for (int64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, static_cast<uint64_t>(t));
        const ComplexVector w = rng.complex_normal_vector(dim);
        const ComplexVector h = sqrt_true * w;
        ComplexVector f = sqrt_beam * w;
        const double fn = norm2(f);
        if (fn <= 0.0) {
            gains.push_back(0.0);
            continue;
        }
        for (Complex &z : f) {
            z /= fn;
        }
        gains.push_back(std::norm(inner_product(h, f)));
    }
    return gains;
}

std::vector<double> unlimited_feedback_snr(const ArrayGeometry &geom, const ChannelParams &params,
                                           bool use_kron, int64_t trials, uint64_t seed) {
    const ComplexMatrix sqrt_r = psd_sqrt(full_correlation(geom, params));
    if (!use_kron) {
        return unlimited_feedback_gains(sqrt_r, sqrt_r, trials, seed);
    }
    const ComplexMatrix sqrt_rk = psd_sqrt(kronecker_correlation(geom, params));
    return unlimited_feedback_gains(sqrt_r, sqrt_rk, trials, seed);
}

} // namespace kron3d
