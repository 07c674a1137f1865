#include "kron3d/correlation.hpp"

#include "kron3d/csv.hpp"
#include "kron3d/errors.hpp"
#include "kron3d/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace kron3d {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_indices(const ArrayGeometry &geom, int k, int l, int p, int q) {
    if (k < 1 || k > geom.m_elev || p < 1 || p > geom.m_elev) {
        throw InvalidArgumentError("correlation: elevation index out of range");
    }
    if (l < 1 || l > geom.n_az || q < 1 || q > geom.n_az) {
        throw InvalidArgumentError("correlation: azimuth index out of range");
    }
}

} // namespace

DTerms correlation_terms(const ArrayGeometry &geom, const ChannelParams &params, int k, int l,
                         int p, int q) {
    geom.validate();
    params.validate();
    check_indices(geom, k, l, p, q);
    const int elev_lag = p - k;
    const int az_lag = q - l;
    const double a1 = kTwoPi * geom.d1 * elev_lag;
    const double a2 = kTwoPi * geom.d2 * az_lag;
    const double cos_th = std::cos(params.theta);
    const double sin_th = std::sin(params.theta);
    const double cos_ph = std::cos(params.phi);

    DTerms t;
    t.sigma_tilde = params.sigma * std::sin(params.phi);
    t.xi_tilde = params.xi * sin_th;
    t.d1_term = std::polar(std::exp(-0.5 * params.xi * params.xi * a1 * a1 * sin_th * sin_th),
                           a1 * cos_th);
    t.d2_term = a2 * sin_th;
    t.d3_term = params.xi * a2 * cos_th;
    t.d4_term = 0.5 * std::pow(params.xi * kTwoPi, 2) * geom.d1 * geom.d2 * elev_lag * az_lag *
                std::sin(2.0 * params.theta);
    t.d5_term = t.d3_term * t.d3_term * t.sigma_tilde * t.sigma_tilde + 1.0;
    t.d6_term = t.d4_term * t.sigma_tilde * t.sigma_tilde + cos_ph;
    t.d7_term = t.d3_term * t.d3_term * cos_ph * cos_ph -
                t.d4_term * t.d4_term * t.sigma_tilde * t.sigma_tilde - 2.0 * t.d4_term * cos_ph;
    return t;
}

Complex corr_entry(const ArrayGeometry &geom, const ChannelParams &params, int k, int l, int p,
                   int q) {
    const DTerms t = correlation_terms(geom, params, k, l, p, q);
    const double magnitude =
        std::exp(-t.d7_term / (2.0 * t.d5_term)) *
        std::exp(-0.5 * t.d2_term * t.d2_term * t.sigma_tilde * t.sigma_tilde / t.d5_term) /
        std::sqrt(t.d5_term);
    return t.d1_term * std::polar(magnitude, t.d2_term * t.d6_term / t.d5_term);
}

ComplexMatrix full_correlation(const ArrayGeometry &geom, const ChannelParams &params) {
    geom.validate();
    params.validate();
    const int m = geom.m_elev;
    const int n = geom.n_az;
    ComplexMatrix r(m * n, m * n);
    for (int l = 1; l <= n; ++l) {
        for (int k = 1; k <= m; ++k) {
            const int row = (k - 1) + (l - 1) * m;
            for (int q = 1; q <= n; ++q) {
                for (int p = 1; p <= m; ++p) {
                    const int col = (p - 1) + (q - 1) * m;
                    if (col < row) {
                        continue;
                    }
                    const Complex val = corr_entry(geom, params, k, l, p, q);
                    r(row, col) = val;
                    r(col, row) = std::conj(val);
                }
            }
        }
    }
    return r;
}

ComplexMatrix elevation_correlation(const ArrayGeometry &geom, const ChannelParams &params) {
    geom.validate();
    params.validate();
    const int m = geom.m_elev;
    const double sin_th = std::sin(params.theta);
    const double cos_th = std::cos(params.theta);
    ComplexMatrix r(m, m);
    for (int lag = 0; lag < m; ++lag) {
        const double a1 = kTwoPi * geom.d1 * lag;
        const Complex val = std::polar(
            std::exp(-0.5 * params.xi * params.xi * a1 * a1 * sin_th * sin_th), a1 * cos_th);
        for (int k = 0; k + lag < m; ++k) {
            r(k, k + lag) = val;
            r(k + lag, k) = std::conj(val);
        }
    }
    return r;
}

ComplexMatrix azimuth_correlation(const ArrayGeometry &geom, const ChannelParams &params) {
    geom.validate();
    params.validate();
    const int n = geom.n_az;
    const double sin_th = std::sin(params.theta);
    const double cos_th = std::cos(params.theta);
    const double cos_ph = std::cos(params.phi);
    const double sigma_t = params.sigma * std::sin(params.phi);
    ComplexMatrix r(n, n);
    for (int lag = 0; lag < n; ++lag) {
        const double a2 = kTwoPi * geom.d2 * lag;
        const double d2 = a2 * sin_th;
        const double d3 = params.xi * a2 * cos_th;
        const double d5 = d3 * d3 * sigma_t * sigma_t + 1.0;
        const double magnitude = std::exp(-0.5 * d3 * d3 * cos_ph * cos_ph / d5) *
                                 std::exp(-0.5 * d2 * d2 * sigma_t * sigma_t / d5) / std::sqrt(d5);
        const Complex val = std::polar(magnitude, d2 * cos_ph / d5);
        for (int l = 0; l + lag < n; ++l) {
            r(l, l + lag) = val;
            r(l + lag, l) = std::conj(val);
        }
    }
    return r;
}

ComplexMatrix kronecker_correlation(const ArrayGeometry &geom, const ChannelParams &params) {
    return kron(azimuth_correlation(geom, params), elevation_correlation(geom, params));
}

Complex quadrature_oracle_entry(const ArrayGeometry &geom, const ChannelParams &params, int k,
                                int l, int p, int q, int nodes_per_dim) {
    geom.validate();
    params.validate();
    check_indices(geom, k, l, p, q);
    if (nodes_per_dim < 1) {
        throw InvalidArgumentError("quadrature_oracle_entry: need at least one node");
    }
    const GaussHermiteRule rule = gauss_hermite_rule(nodes_per_dim);
    const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
    const double sqrt2 = std::numbers::sqrt2;

    const double a = kTwoPi * geom.d1 * (p - k);
    const double b_coef = kTwoPi * geom.d2 * (q - l);
    const double sigma_t = params.sigma * std::sin(params.phi);
    const double nu_mean = std::cos(params.phi);

    // Outer expectation over nu ~ N(cos(phi), sigma_tilde^2); for each nu the
    // two array axes combine into a single cosine with amplitude A and offset
    // eta, and the elevation perturbation enters through
    // mu = cos(theta + d_theta + eta) ~ N(cos(theta+eta), (xi sin(theta+eta))^2).
    Complex outer(0.0, 0.0);
    for (int i = 0; i < nodes_per_dim; ++i) {
        const double nu = nu_mean + sqrt2 * sigma_t * rule.nodes[static_cast<size_t>(i)];
        const double b = b_coef * nu;
        const double amplitude = std::hypot(a, b);
        Complex inner(1.0, 0.0);
        if (amplitude > 0.0) {
            const double eta = std::atan2(-b, a);
            const double mu_mean = std::cos(params.theta + eta);
            const double xi_t = params.xi * std::sin(params.theta + eta);
            Complex acc(0.0, 0.0);
            for (int j = 0; j < nodes_per_dim; ++j) {
                const double mu = mu_mean + sqrt2 * xi_t * rule.nodes[static_cast<size_t>(j)];
                acc += rule.weights[static_cast<size_t>(j)] * std::polar(1.0, amplitude * mu);
            }
            inner = acc * inv_sqrt_pi;
        }
        outer += rule.weights[static_cast<size_t>(i)] * inner;
    }
    return outer * inv_sqrt_pi;
}

void write_matrix_csv(const ComplexMatrix &m, const std::string &path) {
    CsvWriter csv(path, "row,col,re,im");
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            csv.row(r, c, m(r, c).real(), m(r, c).imag());
        }
    }
    csv.commit();
}

} // namespace kron3d
