#ifndef KRON3D_CORRELATION_HPP
#define KRON3D_CORRELATION_HPP

#include "kron3d/channel.hpp"
#include "kron3d/linalg.hpp"

#include <string>

namespace kron3d {

// Intermediate quantities of the closed-form correlation entry. d1_term is the
// elevation-only factor; d2..d5 depend on the azimuth lag only; d4 is the
// elevation/azimuth cross term whose vanishing makes the matrix separable.
struct DTerms {
    Complex d1_term{1.0, 0.0};
    double d2_term = 0.0;
    double d3_term = 0.0;
    double d4_term = 0.0;
    double d5_term = 1.0;
    double d6_term = 0.0;
    double d7_term = 0.0;
    double sigma_tilde = 0.0; // sigma * sin(phi)
    double xi_tilde = 0.0;    // xi * sin(theta), the effective elevation spread
};

// Antenna indices are 1-based: k,p in 1..m_elev (elevation), l,q in 1..n_az
// (azimuth), matching the channel-vector layout index (k-1) + (l-1)*m_elev.
DTerms correlation_terms(const ArrayGeometry &geom, const ChannelParams &params, int k, int l,
                         int p, int q);

// Closed-form correlation between antenna (k,l) and antenna (p,q).
Complex corr_entry(const ArrayGeometry &geom, const ChannelParams &params, int k, int l, int p,
                   int q);

// Full MN x MN correlation matrix; Hermitian with unit diagonal.
ComplexMatrix full_correlation(const ArrayGeometry &geom, const ChannelParams &params);

// M x M elevation factor: Toeplitz, Hermitian, unit diagonal.
ComplexMatrix elevation_correlation(const ArrayGeometry &geom, const ChannelParams &params);

// N x N azimuth factor: Toeplitz, Hermitian, unit diagonal.
ComplexMatrix azimuth_correlation(const ArrayGeometry &geom, const ChannelParams &params);

// Kronecker model R_K = R_az (x) R_el.
ComplexMatrix kronecker_correlation(const ArrayGeometry &geom, const ChannelParams &params);

// Independent check on corr_entry: the same nested Gaussian expectations
// evaluated by 2D Gauss-Hermite quadrature instead of in closed form.
Complex quadrature_oracle_entry(const ArrayGeometry &geom, const ChannelParams &params, int k,
                                int l, int p, int q, int nodes_per_dim = 64);

// CSV dump, header "row,col,re,im", row-major entry order.
void write_matrix_csv(const ComplexMatrix &m, const std::string &path);

} // namespace kron3d

#endif
