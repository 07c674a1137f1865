#include "kron3d/codebook.hpp"

#include "kron3d/correlation.hpp"
#include "kron3d/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace kron3d {

namespace {

// Squared inner-product magnitudes for every pair i < j.
std::vector<double> pair_overlaps(const std::vector<ComplexVector> &words) {
    const size_t n = words.size();
    std::vector<double> g;
    g.reserve(n * (n - 1) / 2);
    for (size_t i = 0; i + 1 < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            g.push_back(std::norm(inner_product(words[i], words[j])));
        }
    }
    return g;
}

double worst_overlap(const std::vector<ComplexVector> &words) {
    double worst = 0.0;
    for (size_t i = 0; i + 1 < words.size(); ++i) {
        for (size_t j = i + 1; j < words.size(); ++j) {
            worst = std::max(worst, std::norm(inner_product(words[i], words[j])));
        }
    }
    return worst;
}

// One soft-min repulsion pass: every word moves away from its neighbours,
// weighted by a softmax over pair overlaps so the tightest pairs dominate.
void repulsion_step(std::vector<ComplexVector> &words, double beta, double step) {
    const size_t n = words.size();
    const size_t dim = words[0].size();

    std::vector<double> g = pair_overlaps(words);
    const double g_max = *std::max_element(g.begin(), g.end());
    double weight_sum = 0.0;
    for (double &v : g) {
        v = std::exp(beta * (v - g_max));
        weight_sum += v;
    }

    std::vector<ComplexVector> grad(n, ComplexVector(dim, Complex(0.0, 0.0)));
    size_t pair_idx = 0;
    for (size_t i = 0; i + 1 < n; ++i) {
        for (size_t j = i + 1; j < n; ++j, ++pair_idx) {
            const double w = g[pair_idx] / weight_sum;
            if (w < 1e-14) {
                continue;
            }
            const Complex cij = inner_product(words[i], words[j]); // c_i^H c_j
            for (size_t d = 0; d < dim; ++d) {
                grad[i][d] += w * words[j][d] * std::conj(cij);
                grad[j][d] += w * words[i][d] * cij;
            }
        }
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t d = 0; d < dim; ++d) {
            words[i][d] -= step * grad[i][d];
        }
        normalize(words[i]);
    }
}

void require_unit_words(const Codebook &book, double tol, const char *where) {
    if (book.dim < 1 || book.words.empty()) {
        throw InvalidArgumentError(std::string(where) + ": codebook must have >= 1 word");
    }
    for (const ComplexVector &w : book.words) {
        if (w.size() != static_cast<size_t>(book.dim)) {
            throw DimensionMismatchError(std::string(where) + ": word length != dim");
        }
        if (std::abs(norm2(w) - 1.0) > tol) {
            throw InvalidArgumentError(std::string(where) + ": codeword is not unit norm");
        }
    }
}

} // namespace

void Codebook::validate(double norm_tol) const {
    require_unit_words(*this, norm_tol, "Codebook::validate");
}

double min_chordal_distance(const Codebook &book) {
    if (book.size() < 2) {
        return 1.0;
    }
    const double overlap = worst_overlap(book.words);
    return std::sqrt(std::max(0.0, 1.0 - overlap));
}

double rankin_bound(int dim, int size) {
    if (dim < 1 || size < 1) {
        throw InvalidArgumentError("rankin_bound: dim and size must be >= 1");
    }
    if (size == 1) {
        return 1.0;
    }
    const double d = dim;
    const double n = size;
    if (size <= dim * dim) {
        return std::sqrt((d - 1.0) * n / (d * (n - 1.0)));
    }
    return std::sqrt((d - 1.0) / d);
}

std::pair<Codebook, PackingQuality> pack_lines(int dim, int size, uint64_t seed, int restarts,
                                               int iterations) {
    if (dim < 1 || size < 1) {
        throw InvalidArgumentError("pack_lines: dim and size must be >= 1");
    }
    if (restarts < 1 || iterations < 0) {
        throw InvalidArgumentError("pack_lines: restarts must be >= 1, iterations >= 0");
    }

    Codebook best;
    best.dim = dim;
    double best_distance = -1.0;

    // Softmax sharpness ramps up while the step decays, so early iterations
    // spread all words and late ones only separate the tightest pair.
    const double beta_lo = 10.0;
    const double beta_hi = 20000.0;
    const double step_lo = 0.5;
    const double step_hi = 0.01;

    for (int r = 0; r < restarts; ++r) {
        Rng rng = Rng::substream(seed, static_cast<uint64_t>(r));
        std::vector<ComplexVector> words;
        words.reserve(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) {
            words.push_back(rng.isotropic_unit_vector(static_cast<size_t>(dim)));
        }
        if (size > 1) {
            for (int it = 0; it < iterations; ++it) {
                const double frac = iterations > 1 ? static_cast<double>(it) / (iterations - 1) : 1.0;
                const double beta = beta_lo * std::pow(beta_hi / beta_lo, frac);
                const double step = step_lo * std::pow(step_hi / step_lo, frac);
                repulsion_step(words, beta, step);
            }
        }
        Codebook candidate{dim, words};
        const double distance = min_chordal_distance(candidate);
        if (distance > best_distance) {
            best_distance = distance;
            best = std::move(candidate);
        }
    }

    PackingQuality quality;
    quality.min_chordal_distance = best_distance;
    quality.rankin_bound = rankin_bound(dim, size);
    return {best, quality};
}

Codebook rotate_codebook(const Codebook &base, const ComplexMatrix &corr_sqrt) {
    require_unit_words(base, 1e-9, "rotate_codebook");
    if (corr_sqrt.rows() != corr_sqrt.cols() || corr_sqrt.rows() != base.dim) {
        throw DimensionMismatchError("rotate_codebook: matrix dimension != codebook dim");
    }
    Codebook rotated;
    rotated.dim = base.dim;
    rotated.words.reserve(base.words.size());
    for (const ComplexVector &c : base.words) {
        ComplexVector w = corr_sqrt * c;
        const double n = norm2(w);
        if (n <= 1e-12) {
            throw NullSpaceWordError("rotate_codebook: codeword lies in the null space");
        }
        for (Complex &z : w) {
            z /= n;
        }
        rotated.words.push_back(std::move(w));
    }
    return rotated;
}

FeedbackResult product_select(const ComplexVector &h, const Codebook &f_az,
                              const Codebook &f_el) {
    require_unit_words(f_az, 1e-9, "product_select");
    require_unit_words(f_el, 1e-9, "product_select");
    const int m = f_el.dim;
    const int n = f_az.dim;
    if (h.size() != static_cast<size_t>(m) * static_cast<size_t>(n)) {
        throw DimensionMismatchError("product_select: channel length != az dim * el dim");
    }

    FeedbackResult result;
    double best = -1.0;
    ComplexVector reduced(static_cast<size_t>(m));
    for (int i = 0; i < f_az.size(); ++i) {
        // reduced[k] = sum_l conj(h[k + l*m]) * f_az[i][l]; the codeword inner
        // product then reduces to a plain dot with each elevation word.
        const ComplexVector &az = f_az.words[static_cast<size_t>(i)];
        for (int k = 0; k < m; ++k) {
            Complex acc(0.0, 0.0);
            for (int l = 0; l < n; ++l) {
                acc += std::conj(h[static_cast<size_t>(k) + static_cast<size_t>(l) * m]) *
                       az[static_cast<size_t>(l)];
            }
            reduced[static_cast<size_t>(k)] = acc;
        }
        for (int k = 0; k < f_el.size(); ++k) {
            const ComplexVector &el = f_el.words[static_cast<size_t>(k)];
            Complex val(0.0, 0.0);
            for (int d = 0; d < m; ++d) {
                val += reduced[static_cast<size_t>(d)] * el[static_cast<size_t>(d)];
            }
            const double mag = std::norm(val);
            if (mag > best) {
                best = mag;
                result.index_az = i;
                result.index_el = k;
            }
        }
    }
    result.gain = best;
    const double hn = norm2(h);
    result.loss_vs_unquantized_db = 10.0 * std::log10(hn * hn / best);
    return result;
}

JointSelectResult joint_select(const ComplexVector &h, const Codebook &f_joint) {
    require_unit_words(f_joint, 1e-9, "joint_select");
    if (h.size() != static_cast<size_t>(f_joint.dim)) {
        throw DimensionMismatchError("joint_select: channel length != codebook dim");
    }
    JointSelectResult result;
    double best = -1.0;
    for (int i = 0; i < f_joint.size(); ++i) {
        const double mag = std::norm(inner_product(h, f_joint.words[static_cast<size_t>(i)]));
        if (mag > best) {
            best = mag;
            result.index = i;
        }
    }
    result.gain = best;
    const double hn = norm2(h);
    result.loss_vs_unquantized_db = 10.0 * std::log10(hn * hn / best);
    return result;
}

KronFactors optimal_kron_factors(const ComplexVector &g, int m_elev, int n_az, double tol,
                                 int max_iterations) {
    if (g.size() != static_cast<size_t>(m_elev) * static_cast<size_t>(n_az)) {
        throw DimensionMismatchError("optimal_kron_factors: vector length != m_elev * n_az");
    }
    // |g^H (w_az (x) w_el)| = |u^H C w_az| with C = conj(unvec(g)) and
    // u = conj(w_el); the maximizer is the dominant singular pair of C.
    ComplexMatrix c(m_elev, n_az);
    for (int l = 0; l < n_az; ++l) {
        for (int k = 0; k < m_elev; ++k) {
            c(k, l) = std::conj(g[static_cast<size_t>(k) + static_cast<size_t>(l) * m_elev]);
        }
    }

    // Deterministic start: the column with the largest norm.
    int start_col = 0;
    double best_col = -1.0;
    for (int l = 0; l < n_az; ++l) {
        double s = 0.0;
        for (int k = 0; k < m_elev; ++k) {
            s += std::norm(c(k, l));
        }
        if (s > best_col) {
            best_col = s;
            start_col = l;
        }
    }
    ComplexVector v(static_cast<size_t>(n_az), Complex(0.0, 0.0));
    v[static_cast<size_t>(start_col)] = 1.0;

    ComplexVector u(static_cast<size_t>(m_elev), Complex(0.0, 0.0));
    double sigma_prev = -1.0;
    double sigma = 0.0;
    for (int it = 0; it < max_iterations; ++it) {
        // u <- normalize(C v)
        for (int k = 0; k < m_elev; ++k) {
            Complex acc(0.0, 0.0);
            for (int l = 0; l < n_az; ++l) {
                acc += c(k, l) * v[static_cast<size_t>(l)];
            }
            u[static_cast<size_t>(k)] = acc;
        }
        const double un = norm2(u);
        if (un <= 0.0) {
            break; // g == 0: any unit pair attains the (zero) optimum
        }
        for (Complex &z : u) {
            z /= un;
        }
        // v <- normalize(C^H u), sigma = ||C^H u||
        for (int l = 0; l < n_az; ++l) {
            Complex acc(0.0, 0.0);
            for (int k = 0; k < m_elev; ++k) {
                acc += std::conj(c(k, l)) * u[static_cast<size_t>(k)];
            }
            v[static_cast<size_t>(l)] = acc;
        }
        sigma = norm2(v);
        if (sigma <= 0.0) {
            break;
        }
        for (Complex &z : v) {
            z /= sigma;
        }
        if (sigma_prev >= 0.0 && std::abs(sigma - sigma_prev) <= tol * std::max(1.0, sigma)) {
            break;
        }
        sigma_prev = sigma;
    }

    KronFactors out;
    out.w_az = v;
    out.w_el.resize(static_cast<size_t>(m_elev));
    for (int k = 0; k < m_elev; ++k) {
        out.w_el[static_cast<size_t>(k)] = std::conj(u[static_cast<size_t>(k)]);
    }
    if (norm2(out.w_el) <= 0.0) {
        out.w_el.assign(static_cast<size_t>(m_elev), Complex(0.0, 0.0));
        out.w_el[0] = 1.0;
    }
    out.value = sigma;
    return out;
}

double distortion_estimate(const ArrayGeometry &geom, const ChannelParams &params,
                           const Codebook &f_az, const Codebook &f_el, int64_t trials,
                           uint64_t seed) {
    geom.validate();
    params.validate();
    if (trials < 1) {
        throw InvalidArgumentError("distortion_estimate: trials must be >= 1");
    }
    if (f_az.dim != geom.n_az || f_el.dim != geom.m_elev) {
        throw DimensionMismatchError("distortion_estimate: codebook dims must match the array");
    }
    const ComplexMatrix sqrt_az = psd_sqrt(azimuth_correlation(geom, params));
    const ComplexMatrix sqrt_el = psd_sqrt(elevation_correlation(geom, params));
    const ComplexMatrix sqrt_kron = kron(sqrt_az, sqrt_el);
    const size_t dim = static_cast<size_t>(geom.total_elements());

    double acc = 0.0;
    for (int64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, static_cast<uint64_t>(t));
        const ComplexVector w = rng.complex_normal_vector(dim);
        const ComplexVector g = sqrt_kron * w;
        const KronFactors opt = optimal_kron_factors(g, geom.m_elev, geom.n_az);

        ComplexVector best_az = sqrt_az * opt.w_az;
        ComplexVector best_el = sqrt_el * opt.w_el;
        const double naz = norm2(best_az);
        const double nel = norm2(best_el);
        if (naz <= 0.0 || nel <= 0.0) {
            continue;
        }
        for (Complex &z : best_az) {
            z /= naz;
        }
        for (Complex &z : best_el) {
            z /= nel;
        }
        const double gain_inf = std::norm(inner_product(w, kron(best_az, best_el)));
        const double gain_q = product_select(w, f_az, f_el).gain;
        acc += std::max(0.0, gain_inf - gain_q);
    }
    return acc / static_cast<double>(trials);
}

double distortion_bound(const ArrayGeometry &geom, const ChannelParams &params,
                        const Codebook &base_az, const Codebook &base_el, int64_t draws,
                        uint64_t seed) {
    geom.validate();
    params.validate();
    require_unit_words(base_az, 1e-9, "distortion_bound");
    require_unit_words(base_el, 1e-9, "distortion_bound");
    if (base_az.dim != geom.n_az || base_el.dim != geom.m_elev) {
        throw DimensionMismatchError("distortion_bound: codebook dims must match the array");
    }
    if (draws < 1) {
        throw InvalidArgumentError("distortion_bound: draws must be >= 1");
    }

    // Extreme eigenvalues of R_az (x) R_el are products of the factor extremes.
    const std::vector<double> eig_az = hermitian_eig(azimuth_correlation(geom, params)).eigenvalues;
    const std::vector<double> eig_el = hermitian_eig(elevation_correlation(geom, params)).eigenvalues;
    const double lambda_max = eig_az.front() * eig_el.front();
    const double lambda_min = eig_az.back() * eig_el.back();
    if (lambda_min <= 1e-14 * lambda_max) {
        throw SingularError("distortion_bound: Kronecker correlation is numerically singular");
    }

    const auto mean_best_overlap = [](const Codebook &book, Rng &rng, int64_t n) {
        double acc = 0.0;
        for (int64_t i = 0; i < n; ++i) {
            const ComplexVector w = rng.isotropic_unit_vector(static_cast<size_t>(book.dim));
            double best = 0.0;
            for (const ComplexVector &c : book.words) {
                best = std::max(best, std::abs(inner_product(w, c)));
            }
            acc += best;
        }
        return acc / static_cast<double>(n);
    };

    Rng rng_az = Rng::substream(seed, 1);
    Rng rng_el = Rng::substream(seed, 2);
    const double e_az = mean_best_overlap(base_az, rng_az, draws);
    const double e_el = mean_best_overlap(base_el, rng_el, draws);

    const double m_t = static_cast<double>(geom.total_elements());
    return 2.0 * m_t * lambda_max / std::sqrt(lambda_min) *
           (std::sqrt(std::max(0.0, 2.0 - 2.0 * e_az)) +
            std::sqrt(std::max(0.0, 2.0 - 2.0 * e_el)));
}

void save_codebook(const Codebook &book, const std::string &path) {
    require_unit_words(book, 1e-9, "save_codebook");
    std::string buffer = std::to_string(book.dim) + " " + std::to_string(book.size()) + "\n";
    char cell[40];
    for (const ComplexVector &w : book.words) {
        bool first = true;
        for (const Complex &z : w) {
            if (!first) {
                buffer += ' ';
            }
            first = false;
            std::snprintf(cell, sizeof(cell), "%.17g", z.real());
            buffer += cell;
            buffer += ' ';
            std::snprintf(cell, sizeof(cell), "%.17g", z.imag());
            buffer += cell;
        }
        buffer += '\n';
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open '" + tmp + "' for writing");
        }
        out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        if (!out) {
            throw IoError("short write to '" + tmp + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
    }
}

Codebook load_codebook(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    Codebook book;
    int size = 0;
    if (!(in >> book.dim >> size) || book.dim < 1 || size < 1) {
        throw InvalidArgumentError("load_codebook: malformed header in '" + path + "'");
    }
    book.words.reserve(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) {
        ComplexVector w(static_cast<size_t>(book.dim));
        for (Complex &z : w) {
            double re = 0.0;
            double im = 0.0;
            if (!(in >> re >> im)) {
                throw InvalidArgumentError("load_codebook: truncated codeword in '" + path + "'");
            }
            z = Complex(re, im);
        }
        if (std::abs(norm2(w) - 1.0) > 1e-9) {
            throw InvalidArgumentError("load_codebook: codeword " + std::to_string(i) +
                                       " is not unit norm");
        }
        book.words.push_back(std::move(w));
    }
    return book;
}

} // namespace kron3d
