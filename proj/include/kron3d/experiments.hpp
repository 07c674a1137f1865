#ifndef KRON3D_EXPERIMENTS_HPP
#define KRON3D_EXPERIMENTS_HPP

#include "kron3d/analysis.hpp"
#include "kron3d/channel.hpp"
#include "kron3d/codebook.hpp"

#include <cstdint>
#include <string>

namespace kron3d {

// Full parameter set of one experiment run. All fields are validated up front
// so a bad flag never costs a partial computation.
struct ExperimentConfig {
    ArrayGeometry geom;
    ChannelParams params;
    double snr_db = 10.0;
    int64_t trials = 1000;
    uint64_t seed = 1;
    int n1 = 8; // azimuth codebook size
    int n2 = 8; // elevation codebook size

    void validate() const;
};

// Eigen-spectrum comparison of R and R_K.
// CSV: index,eig_full,eig_kron,rel_gap
void run_eig_compare(const ExperimentConfig &cfg, const std::string &out_path);

// Per-trial ergodic capacities for the ray model and both correlation models,
// all three sharing per-trial randomness. CSV: scheme,snr_db,capacity
void run_capacity(const ExperimentConfig &cfg, const std::string &out_path);

// One-at-a-time beamforming-loss sweeps around the configured parameters.
// CSV: varied_param,value,loss_db
void run_beam_loss(const ExperimentConfig &cfg, const std::string &out_path);

// Unlimited full, unlimited Kronecker, joint-codebook and product-codebook
// beamforming on shared channels. CSV: arm,trial,index_az,index_el,gain,loss_db
void run_feedback(const ExperimentConfig &cfg, const std::string &out_path);

// Grassmannian packing written in the codebook file format.
PackingQuality run_pack(int dim, int size, uint64_t seed, int restarts, int iterations,
                        const std::string &out_path);

} // namespace kron3d

#endif
