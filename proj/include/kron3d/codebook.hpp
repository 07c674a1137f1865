#ifndef KRON3D_CODEBOOK_HPP
#define KRON3D_CODEBOOK_HPP

#include "kron3d/channel.hpp"
#include "kron3d/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kron3d {

// Ordered set of unit-norm codewords in a common ambient dimension.
struct Codebook {
    int dim = 0;
    std::vector<ComplexVector> words;

    int size() const { return static_cast<int>(words.size()); }
    void validate(double norm_tol = 1e-12) const;
};

struct PackingQuality {
    double min_chordal_distance = 0.0;
    double rankin_bound = 0.0;
};

struct FeedbackResult {
    int index_az = 0;
    int index_el = 0;
    double gain = 0.0;
    double loss_vs_unquantized_db = 0.0;
};

struct JointSelectResult {
    int index = 0;
    double gain = 0.0;
    double loss_vs_unquantized_db = 0.0;
};

// Best Kronecker factor pair for a vector g: unit (w_az, w_el) maximizing
// |g^H (w_az (x) w_el)|, found by alternating power iterations on the
// matricized vector. `value` is the attained inner-product magnitude.
struct KronFactors {
    ComplexVector w_az;
    ComplexVector w_el;
    double value = 0.0;
};

// Minimum pairwise chordal distance sqrt(1 - |<ci,cj>|^2); 1.0 for a
// single-word book.
double min_chordal_distance(const Codebook &book);

// Composite/Rankin limit on the minimum chordal distance of `size` lines in
// C^dim; the generic sqrt((dim-1)/dim) limit once size exceeds dim^2.
double rankin_bound(int dim, int size);

// Grassmannian line packing by seeded random restarts, each refined with
// soft-min repulsion. Deterministic in (seed, restarts, iterations), and
// restart substreams depend only on the restart index, so enlarging
// `restarts` can only improve the result.
std::pair<Codebook, PackingQuality> pack_lines(int dim, int size, uint64_t seed,
                                               int restarts = 20, int iterations = 2000);

// Codeword rotation c -> corr_sqrt*c / ||corr_sqrt*c||.
Codebook rotate_codebook(const Codebook &base, const ComplexMatrix &corr_sqrt);

// Exhaustive search over all (az, el) codeword pairs for the largest
// |h^H (f_az (x) f_el)|; ties resolve to the smallest index pair.
FeedbackResult product_select(const ComplexVector &h, const Codebook &f_az,
                              const Codebook &f_el);

// Same search over a single joint codebook.
JointSelectResult joint_select(const ComplexVector &h, const Codebook &f_joint);

KronFactors optimal_kron_factors(const ComplexVector &g, int m_elev, int n_az,
                                 double tol = 1e-10, int max_iterations = 10000);

// Monte-Carlo estimate of the mean gain gap between the per-trial optimal
// Kronecker beamformer and the best product-codebook pair, selected on the
// fed-back vector w. Nonnegative by construction.
double distortion_estimate(const ArrayGeometry &geom, const ChannelParams &params,
                           const Codebook &f_az, const Codebook &f_el, int64_t trials,
                           uint64_t seed);

// Analytic upper bound on the distortion for unrotated base codebooks:
// 2*M*N*lambda_max/sqrt(lambda_min) * (sqrt(2-2E_az) + sqrt(2-2E_el)), the
// expectations taken over isotropic unit vectors by seeded Monte-Carlo.
double distortion_bound(const ArrayGeometry &geom, const ChannelParams &params,
                        const Codebook &base_az, const Codebook &base_el,
                        int64_t draws = 100000, uint64_t seed = 0x5eedULL);

// Plain-text format: "dim size" on the first line, then one codeword per line
// as interleaved "re im" pairs at full precision (round-trips bit-exactly).
void save_codebook(const Codebook &book, const std::string &path);
Codebook load_codebook(const std::string &path);

} // namespace kron3d

#endif
