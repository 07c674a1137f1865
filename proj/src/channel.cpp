#include "kron3d/channel.hpp"

#include "kron3d/errors.hpp"

#include <cmath>
#include <numbers>

namespace kron3d {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ComplexVector steering(int count, double arg) {
    ComplexVector v(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        v[static_cast<size_t>(k)] = std::polar(1.0, -arg * k);
    }
    return v;
}

} // namespace

void ArrayGeometry::validate() const {
    if (m_elev < 1 || n_az < 1) {
        throw InvalidArgumentError("ArrayGeometry: element counts must be >= 1");
    }
    if (!(d1 > 0.0) || !(d2 > 0.0) || !std::isfinite(d1) || !std::isfinite(d2)) {
        throw InvalidArgumentError("ArrayGeometry: spacings must be finite and positive");
    }
}

void ChannelParams::validate() const {
    if (!(theta > 0.0) || !(theta < std::numbers::pi)) {
        throw InvalidArgumentError("ChannelParams: theta must lie in (0, pi)");
    }
    if (!std::isfinite(phi) || !std::isfinite(sigma) || !std::isfinite(xi)) {
        throw InvalidArgumentError("ChannelParams: angles must be finite");
    }
    if (sigma < 0.0 || xi < 0.0) {
        throw InvalidArgumentError("ChannelParams: spreads must be nonnegative");
    }
    if (paths < 1) {
        throw InvalidArgumentError("ChannelParams: need at least one path");
    }
}

ComplexVector steering_elevation(const ArrayGeometry &geom, double u) {
    return steering(geom.m_elev, u);
}

ComplexVector steering_azimuth(const ArrayGeometry &geom, double v) {
    return steering(geom.n_az, v);
}

std::pair<double, double> phase_args(const ArrayGeometry &geom, const ChannelParams &params,
                                     const PathDraw &draw) {
    const double elev = params.theta + draw.d_theta;
    const double az = params.phi + draw.d_phi;
    const double u = kTwoPi * geom.d1 * std::cos(elev);
    const double v = kTwoPi * geom.d2 * std::sin(elev) * std::cos(az);
    return {u, v};
}

std::vector<PathDraw> sample_paths(const ChannelParams &params, uint64_t seed) {
    params.validate();
    Rng rng(seed);
    std::vector<PathDraw> draws(static_cast<size_t>(params.paths));
    for (PathDraw &d : draws) {
        d.d_theta = params.xi * rng.normal();
        d.d_phi = params.sigma * rng.normal();
        d.phase = kTwoPi * rng.uniform();
    }
    return draws;
}

ComplexVector channel_vector(const ArrayGeometry &geom, const ChannelParams &params,
                             const std::vector<PathDraw> &draws) {
    geom.validate();
    params.validate();
    if (draws.empty()) {
        throw InvalidArgumentError("channel_vector: no path draws");
    }
    const size_t dim = static_cast<size_t>(geom.total_elements());
    ComplexVector h(dim, Complex(0.0, 0.0));
    const double scale = 1.0 / std::sqrt(static_cast<double>(draws.size()));
    for (const PathDraw &draw : draws) {
        const auto [u, v] = phase_args(geom, params, draw);
        const ComplexVector a = steering_elevation(geom, u);
        const ComplexVector b = steering_azimuth(geom, v);
        const Complex gain = std::polar(scale, draw.phase);
        // b (x) a keeps the elevation index fastest: entry (k,l) -> k + l*M.
        size_t idx = 0;
        for (const Complex &bl : b) {
            const Complex gb = gain * bl;
            for (const Complex &ak : a) {
                h[idx++] += gb * ak;
            }
        }
    }
    return h;
}

ComplexVector channel_from_correlation(const ComplexMatrix &sqrt_r, Rng &rng) {
    if (sqrt_r.rows() != sqrt_r.cols()) {
        throw DimensionMismatchError("channel_from_correlation: matrix must be square");
    }
    const ComplexVector w = rng.complex_normal_vector(static_cast<size_t>(sqrt_r.rows()));
    return sqrt_r * w;
}

ComplexVector channel_from_correlation(const ComplexMatrix &sqrt_r, uint64_t seed) {
    Rng rng(seed);
    return channel_from_correlation(sqrt_r, rng);
}

} // namespace kron3d
