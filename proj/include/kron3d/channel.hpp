#ifndef KRON3D_CHANNEL_HPP
#define KRON3D_CHANNEL_HPP

#include "kron3d/linalg.hpp"
#include "kron3d/rng.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace kron3d {

// Uniform planar array at the transmitter. The wavelength is normalized to 1,
// so both spacings are in wavelengths.
struct ArrayGeometry {
    int m_elev = 4;  // vertical element count
    int n_az = 4;    // horizontal element count
    double d1 = 0.5; // vertical spacing
    double d2 = 0.5; // horizontal spacing

    int total_elements() const { return m_elev * n_az; }
    void validate() const;
};

// Mean departure angles and per-path Gaussian perturbation spreads, all in
// radians. `sigma` and `xi` are standard deviations.
struct ChannelParams {
    double phi = 0.0;   // mean azimuth angle of departure
    double theta = 1.0; // mean elevation angle of departure, in (0, pi)
    double sigma = 0.0; // azimuth perturbation std. dev.
    double xi = 0.0;    // elevation perturbation std. dev.
    int paths = 20;     // equal-gain NLOS path count

    void validate() const;
};

// One NLOS path: angular perturbations plus its uniform phase in [0, 2*pi).
struct PathDraw {
    double d_theta = 0.0;
    double d_phi = 0.0;
    double phase = 0.0;
};

// Elevation steering vector [1, e^{-ju}, ..., e^{-j(M-1)u}].
ComplexVector steering_elevation(const ArrayGeometry &geom, double u);

// Azimuth steering vector of length n_az, same form.
ComplexVector steering_azimuth(const ArrayGeometry &geom, double v);

// Electrical phase arguments for one path:
//   u = 2*pi*d1*cos(theta + d_theta)
//   v = 2*pi*d2*sin(theta + d_theta)*cos(phi + d_phi)
std::pair<double, double> phase_args(const ArrayGeometry &geom, const ChannelParams &params,
                                     const PathDraw &draw);

// `params.paths` independent draws, deterministic in the seed.
std::vector<PathDraw> sample_paths(const ChannelParams &params, uint64_t seed);

// Ray-based channel vector h = sum_k e^{j phase_k}/sqrt(L) * b(v_k) (x) a(u_k),
// vectorized with the elevation index running fastest.
ComplexVector channel_vector(const ArrayGeometry &geom, const ChannelParams &params,
                             const std::vector<PathDraw> &draws);

// Correlated Gaussian channel h = sqrt_r * w with w i.i.d. CN(0,1).
ComplexVector channel_from_correlation(const ComplexMatrix &sqrt_r, uint64_t seed);
ComplexVector channel_from_correlation(const ComplexMatrix &sqrt_r, Rng &rng);

} // namespace kron3d

#endif
