/*
 * kron3d C API: 3D MIMO spatial-correlation modelling, Kronecker
 * approximation, and Grassmannian product-codebook experiments.
 *
 * All functions are thread-safe; handles are owned by the caller and freed
 * with the matching *_free call. Failures return a k3d_status code and leave
 * a human-readable detail string in k3d_last_error() (thread-local).
 */
#ifndef KRON3D_H
#define KRON3D_H

#include <stdint.h>

#if defined(_WIN32)
#define KRON3D_API __declspec(dllexport)
#else
#define KRON3D_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum k3d_status {
    K3D_OK = 0,
    K3D_ERR_INVALID_ARGUMENT = 1,
    K3D_ERR_NOT_HERMITIAN = 2,
    K3D_ERR_NOT_PSD = 3,
    K3D_ERR_NO_CONVERGENCE = 4,
    K3D_ERR_SINGULAR = 5,
    K3D_ERR_DIMENSION_MISMATCH = 6,
    K3D_ERR_NULL_SPACE_WORD = 7,
    K3D_ERR_IO = 8,
    K3D_ERR_INTERNAL = 9
} k3d_status;

/* Experiment parameters. Angles are radians; spacings are in wavelengths. */
typedef struct k3d_config {
    int32_t m_elev; /* vertical antenna count */
    int32_t n_az;   /* horizontal antenna count */
    double d1;      /* vertical spacing */
    double d2;      /* horizontal spacing */
    double phi;     /* mean azimuth angle of departure */
    double theta;   /* mean elevation angle of departure, in (0, pi) */
    double sigma;   /* azimuth angular spread (std. dev.) */
    double xi;      /* elevation angular spread (std. dev.) */
    int32_t paths;  /* NLOS path count for the ray model */
    double snr_db;
    int64_t trials;
    uint64_t seed;
    int32_t n1; /* azimuth codebook size */
    int32_t n2; /* elevation codebook size */
} k3d_config;

KRON3D_API void k3d_config_defaults(k3d_config *cfg);

KRON3D_API const char *k3d_version(void);
KRON3D_API const char *k3d_status_name(k3d_status status);
/* Detail message of the most recent failure on this thread ("" if none). */
KRON3D_API const char *k3d_last_error(void);

/* Experiment runners; each writes a CSV file at out_path. */
KRON3D_API k3d_status k3d_run_eig_compare(const k3d_config *cfg, const char *out_path);
KRON3D_API k3d_status k3d_run_capacity(const k3d_config *cfg, const char *out_path);
KRON3D_API k3d_status k3d_run_beam_loss(const k3d_config *cfg, const char *out_path);
KRON3D_API k3d_status k3d_run_feedback(const k3d_config *cfg, const char *out_path);

/* Grassmannian line packing; writes the codebook file and reports the
 * achieved minimum chordal distance plus its composite/Rankin bound.
 * min_distance and bound may be NULL. */
KRON3D_API k3d_status k3d_pack_codebook(int32_t dim, int32_t size, uint64_t seed,
                                        int32_t restarts, int32_t iterations,
                                        const char *out_path, double *min_distance,
                                        double *bound);

/* Opaque dense complex matrix handle. */
typedef struct k3d_matrix k3d_matrix;

typedef enum k3d_corr_kind {
    K3D_CORR_FULL = 0,      /* MN x MN closed-form correlation */
    K3D_CORR_KRONECKER = 1, /* azimuth (x) elevation model */
    K3D_CORR_AZIMUTH = 2,   /* N x N factor */
    K3D_CORR_ELEVATION = 3  /* M x M factor */
} k3d_corr_kind;

KRON3D_API k3d_status k3d_correlation_matrix(const k3d_config *cfg, k3d_corr_kind kind,
                                             k3d_matrix **out);
KRON3D_API int32_t k3d_matrix_rows(const k3d_matrix *m);
KRON3D_API int32_t k3d_matrix_cols(const k3d_matrix *m);
KRON3D_API k3d_status k3d_matrix_get(const k3d_matrix *m, int32_t row, int32_t col, double *re,
                                     double *im);
/* Eigenvalues in descending order; out_values must hold rows() doubles. */
KRON3D_API k3d_status k3d_matrix_eigenvalues(const k3d_matrix *m, double *out_values);
/* CSV dump with header row,col,re,im. */
KRON3D_API k3d_status k3d_matrix_write_csv(const k3d_matrix *m, const char *out_path);
KRON3D_API void k3d_matrix_free(k3d_matrix *m);

#ifdef __cplusplus
}
#endif

#endif /* KRON3D_H */
