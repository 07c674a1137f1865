#include "kron3d.h"

#include "kron3d/correlation.hpp"
#include "kron3d/errors.hpp"
#include "kron3d/experiments.hpp"

#include <cmath>
#include <cstring>
#include <exception>
#include <numbers>
#include <string>

struct k3d_matrix {
    kron3d::ComplexMatrix data;
};

namespace {

thread_local std::string t_last_error;

k3d_status fail(k3d_status status, const char *what) {
    t_last_error = what != nullptr ? what : "";
    return status;
}

k3d_status from_exception() {
    try {
        throw;
    } catch (const kron3d::Error &e) {
        t_last_error = e.what();
        return static_cast<k3d_status>(static_cast<int>(e.code()));
    } catch (const std::exception &e) {
        t_last_error = e.what();
        return K3D_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return K3D_ERR_INTERNAL;
    }
}

kron3d::ExperimentConfig to_config(const k3d_config &cfg) {
    kron3d::ExperimentConfig out;
    out.geom.m_elev = cfg.m_elev;
    out.geom.n_az = cfg.n_az;
    out.geom.d1 = cfg.d1;
    out.geom.d2 = cfg.d2;
    out.params.phi = cfg.phi;
    out.params.theta = cfg.theta;
    out.params.sigma = cfg.sigma;
    out.params.xi = cfg.xi;
    out.params.paths = cfg.paths;
    out.snr_db = cfg.snr_db;
    out.trials = cfg.trials;
    out.seed = cfg.seed;
    out.n1 = cfg.n1;
    out.n2 = cfg.n2;
    return out;
}

template <typename Fn> k3d_status run_guarded(Fn &&fn) {
    try {
        fn();
        t_last_error.clear();
        return K3D_OK;
    } catch (...) {
        return from_exception();
    }
}

} // namespace

extern "C" {

void k3d_config_defaults(k3d_config *cfg) {
    if (cfg == nullptr) {
        return;
    }
    const double pi = std::numbers::pi;
    cfg->m_elev = 4;
    cfg->n_az = 4;
    cfg->d1 = 0.5;
    cfg->d2 = 0.5;
    cfg->phi = pi / 3.0;
    cfg->theta = 3.0 * pi / 8.0;
    cfg->sigma = pi / 6.0;
    cfg->xi = pi / 12.0;
    cfg->paths = 20;
    cfg->snr_db = 10.0;
    cfg->trials = 1000;
    cfg->seed = 1;
    cfg->n1 = 8;
    cfg->n2 = 8;
}

const char *k3d_version(void) {
    return "1.0.0";
}

const char *k3d_status_name(k3d_status status) {
    switch (status) {
    case K3D_OK:
        return "ok";
    case K3D_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case K3D_ERR_NOT_HERMITIAN:
        return "matrix is not Hermitian";
    case K3D_ERR_NOT_PSD:
        return "matrix is not positive semidefinite";
    case K3D_ERR_NO_CONVERGENCE:
        return "iteration did not converge";
    case K3D_ERR_SINGULAR:
        return "matrix is numerically singular";
    case K3D_ERR_DIMENSION_MISMATCH:
        return "dimension mismatch";
    case K3D_ERR_NULL_SPACE_WORD:
        return "codeword in null space";
    case K3D_ERR_IO:
        return "I/O failure";
    case K3D_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char *k3d_last_error(void) {
    return t_last_error.c_str();
}

k3d_status k3d_run_eig_compare(const k3d_config *cfg, const char *out_path) {
    if (cfg == nullptr || out_path == nullptr) {
        return fail(K3D_ERR_INVALID_ARGUMENT, "cfg and out_path must be non-null");
    }
    return run_guarded([&] { kron3d::run_eig_compare(to_config(*cfg), out_path); });
}

k3d_status k3d_run_capacity(const k3d_config *cfg, const char *out_path) {
    if (cfg == nullptr || out_path == nullptr) {
        return fail(K3D_ERR_INVALID_ARGUMENT, "cfg and out_path must be non-null");
    }
    return run_guarded([&] { kron3d::run_capacity(to_config(*cfg), out_path); });
}

k3d_status k3d_run_beam_loss(const k3d_config *cfg, const char *out_path) {
    if (cfg == nullptr || out_path == nullptr) {
        return fail(K3D_ERR_INVALID_ARGUMENT, "cfg and out_path must be non-null");
    }
    return run_guarded([&] { kron3d::run_beam_loss(to_config(*cfg), out_path); });
}

k3d_status k3d_run_feedback(const k3d_config *cfg, const char *out_path) {
    if (cfg == nullptr || out_path == nullptr) {
        return fail(K3D_ERR_INVALID_ARGUMENT, "cfg and out_path must be non-null");
    }
    return run_guarded([&] { kron3d::run_feedback(to_config(*cfg), out_path); });
}

k3d_status k3d_pack_codebook(int32_t dim, int32_t size, uint64_t seed, int32_t restarts,
                             int32_t iterations, const char *out_path, double *min_distance,
                             double *bound) {
    if (out_path == nullptr) {
        return fail(K3D_ERR_INVALID_ARGUMENT, "out_path must be non-null");
    }
    return run_guarded([&] {
        const kron3d::PackingQuality q =
            kron3d::run_pack(dim, size, seed, restarts, iterations, out_path);
        if (min_distance != nullptr) {
            *min_distance = q.min_chordal_distance;
        }
        if (bound != nullptr) {
            *bound = q.rankin_bound;
        }
    });
}

k3d_status k3d_correlation_matrix(const k3d_config *cfg, k3d_corr_kind kind, k3d_matrix **out) {
    if (cfg == nullptr || out == nullptr) {
        return fail(K3D_ERR_INVALID_ARGUMENT, "cfg and out must be non-null");
    }
    *out = nullptr;
    return run_guarded([&] {
        const kron3d::ExperimentConfig c = to_config(*cfg);
        c.validate();
        kron3d::ComplexMatrix m;
        switch (kind) {
        case K3D_CORR_FULL:
            m = kron3d::full_correlation(c.geom, c.params);
            break;
        case K3D_CORR_KRONECKER:
            m = kron3d::kronecker_correlation(c.geom, c.params);
            break;
        case K3D_CORR_AZIMUTH:
            m = kron3d::azimuth_correlation(c.geom, c.params);
            break;
        case K3D_CORR_ELEVATION:
            m = kron3d::elevation_correlation(c.geom, c.params);
            break;
        default:
            throw kron3d::InvalidArgumentError("unknown correlation kind");
        }
        *out = new k3d_matrix{std::move(m)};
    });
}

int32_t k3d_matrix_rows(const k3d_matrix *m) {
    return m == nullptr ? 0 : m->data.rows();
}

int32_t k3d_matrix_cols(const k3d_matrix *m) {
    return m == nullptr ? 0 : m->data.cols();
}

k3d_status k3d_matrix_get(const k3d_matrix *m, int32_t row, int32_t col, double *re, double *im) {
    if (m == nullptr || re == nullptr || im == nullptr) {
        return fail(K3D_ERR_INVALID_ARGUMENT, "matrix and outputs must be non-null");
    }
    if (row < 0 || row >= m->data.rows() || col < 0 || col >= m->data.cols()) {
        return fail(K3D_ERR_INVALID_ARGUMENT, "matrix index out of range");
    }
    const kron3d::Complex z = m->data(row, col);
    *re = z.real();
    *im = z.imag();
    return K3D_OK;
}

k3d_status k3d_matrix_eigenvalues(const k3d_matrix *m, double *out_values) {
    if (m == nullptr || out_values == nullptr) {
        return fail(K3D_ERR_INVALID_ARGUMENT, "matrix and output must be non-null");
    }
    return run_guarded([&] {
        const kron3d::EigenDecomposition eig = kron3d::hermitian_eig(m->data);
        std::memcpy(out_values, eig.eigenvalues.data(), eig.eigenvalues.size() * sizeof(double));
    });
}

k3d_status k3d_matrix_write_csv(const k3d_matrix *m, const char *out_path) {
    if (m == nullptr || out_path == nullptr) {
        return fail(K3D_ERR_INVALID_ARGUMENT, "matrix and out_path must be non-null");
    }
    return run_guarded([&] { kron3d::write_matrix_csv(m->data, out_path); });
}

void k3d_matrix_free(k3d_matrix *m) {
    delete m;
}

} // extern "C"
