// kron3d: command-line harness for the 3D-correlation experiments.
// Links the C API only; all numerics live behind kron3d.h.

#include "kron3d.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace {

constexpr double kPi = 3.14159265358979323846;

// Angles are accepted either as plain radians ("1.1781") or as fractions of
// pi with a "pi" suffix ("0.375pi", "pi").
double parse_angle(const std::string &text) {
    std::string body = text;
    bool in_pi = false;
    if (body.size() >= 2 && (body.substr(body.size() - 2) == "pi" || body.substr(body.size() - 2) == "PI")) {
        in_pi = true;
        body = body.substr(0, body.size() - 2);
    }
    if (body.empty() || body == "+" || body == "-") {
        if (!in_pi) {
            throw CLI::ValidationError("angle", "empty angle value");
        }
        body += "1";
    }
    size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(body, &consumed);
    } catch (const std::exception &) {
        throw CLI::ValidationError("angle", "cannot parse angle '" + text + "'");
    }
    if (consumed != body.size()) {
        throw CLI::ValidationError("angle", "trailing junk in angle '" + text + "'");
    }
    return in_pi ? value * kPi : value;
}

struct AngleFlags {
    std::string phi;
    std::string theta;
    std::string sigma;
    std::string xi;
};

void add_config_options(CLI::App *cmd, k3d_config &cfg, AngleFlags &angles) {
    cmd->add_option("--m-elev", cfg.m_elev, "vertical antenna count");
    cmd->add_option("--n-az", cfg.n_az, "horizontal antenna count");
    cmd->add_option("--d1", cfg.d1, "vertical spacing in wavelengths");
    cmd->add_option("--d2", cfg.d2, "horizontal spacing in wavelengths");
    cmd->add_option("--phi", angles.phi, "mean azimuth AoD (radians, or e.g. 0.3333pi)");
    cmd->add_option("--theta", angles.theta, "mean elevation AoD (radians or <x>pi)");
    cmd->add_option("--sigma", angles.sigma, "azimuth angular spread (radians or <x>pi)");
    cmd->add_option("--xi", angles.xi, "elevation angular spread (radians or <x>pi)");
    cmd->add_option("--paths", cfg.paths, "NLOS path count for the ray model");
    cmd->add_option("--snr-db", cfg.snr_db, "SNR in dB");
    cmd->add_option("--trials", cfg.trials, "Monte-Carlo trial count");
    cmd->add_option("--seed", cfg.seed, "RNG seed");
    cmd->add_option("--n1", cfg.n1, "azimuth codebook size");
    cmd->add_option("--n2", cfg.n2, "elevation codebook size");
}

void apply_angles(k3d_config &cfg, const AngleFlags &angles) {
    if (!angles.phi.empty()) {
        cfg.phi = parse_angle(angles.phi);
    }
    if (!angles.theta.empty()) {
        cfg.theta = parse_angle(angles.theta);
    }
    if (!angles.sigma.empty()) {
        cfg.sigma = parse_angle(angles.sigma);
    }
    if (!angles.xi.empty()) {
        cfg.xi = parse_angle(angles.xi);
    }
}

int finish(k3d_status status, const char *what) {
    if (status == K3D_OK) {
        return 0;
    }
    std::fprintf(stderr, "kron3d: %s failed: %s (%s)\n", what, k3d_status_name(status),
                 k3d_last_error());
    switch (status) {
    case K3D_ERR_INVALID_ARGUMENT:
    case K3D_ERR_DIMENSION_MISMATCH:
    case K3D_ERR_IO:
        return 2;
    default:
        return 3;
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"3D MIMO correlation, Kronecker model, and product-codebook experiments"};
    app.require_subcommand(1);

    k3d_config cfg;
    k3d_config_defaults(&cfg);
    AngleFlags angles;

    std::string out_eig = "eig_compare.csv";
    std::string out_capacity = "capacity.csv";
    std::string out_beam = "beam_loss.csv";
    std::string out_feedback = "feedback.csv";
    std::string out_corr = "correlation.csv";
    std::string out_pack = "codebook.txt";
    std::string corr_which = "full";

    CLI::App *eig = app.add_subcommand("eig-compare", "eigen-spectra of R and its Kronecker model");
    add_config_options(eig, cfg, angles);
    eig->add_option("--out", out_eig, "output CSV path");

    CLI::App *capacity = app.add_subcommand("capacity", "per-trial ergodic capacities");
    add_config_options(capacity, cfg, angles);
    capacity->add_option("--out", out_capacity, "output CSV path");

    CLI::App *beam = app.add_subcommand("beam-loss", "statistical beamforming gain loss sweeps");
    add_config_options(beam, cfg, angles);
    beam->add_option("--out", out_beam, "output CSV path");

    CLI::App *feedback = app.add_subcommand("feedback", "limited-feedback beamforming comparison");
    add_config_options(feedback, cfg, angles);
    feedback->add_option("--out", out_feedback, "output CSV path");

    CLI::App *corr = app.add_subcommand("corr", "dump a correlation matrix as CSV");
    add_config_options(corr, cfg, angles);
    corr->add_option("--which", corr_which, "full | kron | az | el");
    corr->add_option("--out", out_corr, "output CSV path");

    CLI::App *pack = app.add_subcommand("pack", "Grassmannian line packing");
    int32_t pack_dim = 2;
    int32_t pack_size = 8;
    uint64_t pack_seed = 1;
    int32_t pack_restarts = 20;
    int32_t pack_iterations = 2000;
    pack->add_option("--dim", pack_dim, "ambient complex dimension");
    pack->add_option("--size", pack_size, "codebook size");
    pack->add_option("--seed", pack_seed, "RNG seed");
    pack->add_option("--restarts", pack_restarts, "random restarts");
    pack->add_option("--iterations", pack_iterations, "refinement iterations per restart");
    pack->add_option("--out", out_pack, "output codebook path");

    try {
        app.parse(argc, argv);
        apply_angles(cfg, angles);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    if (eig->parsed()) {
        return finish(k3d_run_eig_compare(&cfg, out_eig.c_str()), "eig-compare");
    }
    if (capacity->parsed()) {
        return finish(k3d_run_capacity(&cfg, out_capacity.c_str()), "capacity");
    }
    if (beam->parsed()) {
        return finish(k3d_run_beam_loss(&cfg, out_beam.c_str()), "beam-loss");
    }
    if (feedback->parsed()) {
        return finish(k3d_run_feedback(&cfg, out_feedback.c_str()), "feedback");
    }
    if (corr->parsed()) {
        k3d_corr_kind kind = K3D_CORR_FULL;
        if (corr_which == "full") {
            kind = K3D_CORR_FULL;
        } else if (corr_which == "kron") {
            kind = K3D_CORR_KRONECKER;
        } else if (corr_which == "az") {
            kind = K3D_CORR_AZIMUTH;
        } else if (corr_which == "el") {
            kind = K3D_CORR_ELEVATION;
        } else {
            std::fprintf(stderr, "kron3d: --which must be one of full|kron|az|el, got '%s'\n",
                         corr_which.c_str());
            return 2;
        }
        k3d_matrix *m = nullptr;
        k3d_status status = k3d_correlation_matrix(&cfg, kind, &m);
        if (status == K3D_OK) {
            status = k3d_matrix_write_csv(m, out_corr.c_str());
        }
        k3d_matrix_free(m);
        return finish(status, "corr");
    }
    if (pack->parsed()) {
        double distance = 0.0;
        double bound = 0.0;
        const k3d_status status = k3d_pack_codebook(pack_dim, pack_size, pack_seed, pack_restarts,
                                                    pack_iterations, out_pack.c_str(), &distance,
                                                    &bound);
        if (status == K3D_OK) {
            std::printf("min_chordal_distance %.6f\nrankin_bound %.6f\n", distance, bound);
        }
        return finish(status, "pack");
    }
    return 2;
}
