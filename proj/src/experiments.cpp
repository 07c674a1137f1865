#include "kron3d/experiments.hpp"

#include "kron3d/correlation.hpp"
#include "kron3d/csv.hpp"
#include "kron3d/errors.hpp"

#include <cmath>

namespace kron3d {

namespace {

// Substream tags for codebook construction; trial substreams use the raw
// trial index, so tags stay clear of small integers via mix64 inside Rng.
constexpr uint64_t kAzBookTag = 0x617a626f6f6bULL;    // "azbook"
constexpr uint64_t kElBookTag = 0x656c626f6f6bULL;    // "elbook"
constexpr uint64_t kJointBookTag = 0x6a6f696e7462ULL; // "jointb"

uint64_t book_seed(uint64_t seed, uint64_t tag) {
    return seed ^ mix64(tag);
}

} // namespace

void ExperimentConfig::validate() const {
    geom.validate();
    params.validate();
    if (!std::isfinite(snr_db)) {
        throw InvalidArgumentError("ExperimentConfig: snr_db must be finite");
    }
    if (trials < 1) {
        throw InvalidArgumentError("ExperimentConfig: trials must be >= 1");
    }
    if (n1 < 1 || n2 < 1) {
        throw InvalidArgumentError("ExperimentConfig: codebook sizes must be >= 1");
    }
}

void run_eig_compare(const ExperimentConfig &cfg, const std::string &out_path) {
    cfg.validate();
    const ComplexMatrix r = full_correlation(cfg.geom, cfg.params);
    const ComplexMatrix rk = kronecker_correlation(cfg.geom, cfg.params);
    const SpectrumComparison cmp = compare_spectra(r, rk);

    const double lambda1 = std::max(cmp.eig_full.front(), 1e-300);
    CsvWriter csv(out_path, "index,eig_full,eig_kron,rel_gap");
    for (size_t i = 0; i < cmp.eig_full.size(); ++i) {
        csv.row(static_cast<long long>(i), cmp.eig_full[i], cmp.eig_kron[i],
                std::abs(cmp.eig_full[i] - cmp.eig_kron[i]) / lambda1);
    }
    csv.commit();
}

void run_capacity(const ExperimentConfig &cfg, const std::string &out_path) {
    cfg.validate();
    CsvWriter csv(out_path, "scheme,snr_db,capacity");
    for (const ChannelScheme scheme :
         {ChannelScheme::ray_model, ChannelScheme::full_corr, ChannelScheme::kron_corr}) {
        const std::vector<CapacitySample> samples =
            capacity_cdf(scheme, cfg.geom, cfg.params, cfg.snr_db, cfg.trials, cfg.seed);
        for (const CapacitySample &s : samples) {
            csv.row(scheme_name(s.scheme), s.snr_db, s.capacity);
        }
    }
    csv.commit();
}

void run_beam_loss(const ExperimentConfig &cfg, const std::string &out_path) {
    cfg.validate();
    const std::vector<LossSweepRow> rows = beamforming_loss_sweep(cfg.geom, cfg.params);
    CsvWriter csv(out_path, "varied_param,value,loss_db");
    for (const LossSweepRow &row : rows) {
        csv.row(row.varied_param, row.value, row.loss_db);
    }
    csv.commit();
}

void run_feedback(const ExperimentConfig &cfg, const std::string &out_path) {
    cfg.validate();
    const ComplexMatrix sqrt_r = psd_sqrt(full_correlation(cfg.geom, cfg.params));
    const ComplexMatrix sqrt_az = psd_sqrt(azimuth_correlation(cfg.geom, cfg.params));
    const ComplexMatrix sqrt_el = psd_sqrt(elevation_correlation(cfg.geom, cfg.params));
    const ComplexMatrix sqrt_rk = kron(sqrt_az, sqrt_el);

    const int mn = cfg.geom.total_elements();
    const Codebook base_az = pack_lines(cfg.geom.n_az, cfg.n1, book_seed(cfg.seed, kAzBookTag)).first;
    const Codebook base_el = pack_lines(cfg.geom.m_elev, cfg.n2, book_seed(cfg.seed, kElBookTag)).first;
    const Codebook base_joint =
        pack_lines(mn, cfg.n1 * cfg.n2, book_seed(cfg.seed, kJointBookTag)).first;

    const Codebook f_az = rotate_codebook(base_az, sqrt_az);
    const Codebook f_el = rotate_codebook(base_el, sqrt_el);
    const Codebook f_joint = rotate_codebook(base_joint, sqrt_r);

    CsvWriter csv(out_path, "arm,trial,index_az,index_el,gain,loss_db");
    for (int64_t t = 0; t < cfg.trials; ++t) {
        Rng rng = Rng::substream(cfg.seed, static_cast<uint64_t>(t));
        const ComplexVector w = rng.complex_normal_vector(static_cast<size_t>(mn));
        const ComplexVector h = sqrt_r * w;
        const double h_power = norm2(h) * norm2(h);

        const auto loss_db = [h_power](double gain) {
            return 10.0 * std::log10(h_power / gain);
        };

        ComplexVector f_full = h;
        normalize(f_full);
        const double gain_full = std::norm(inner_product(h, f_full));
        csv.row("unlimited_full", t, -1, -1, gain_full, loss_db(gain_full));

        ComplexVector f_kron = sqrt_rk * w;
        normalize(f_kron);
        const double gain_kron = std::norm(inner_product(h, f_kron));
        csv.row("unlimited_kron", t, -1, -1, gain_kron, loss_db(gain_kron));

        const JointSelectResult joint = joint_select(h, f_joint);
        csv.row("joint", t, joint.index, -1, joint.gain, joint.loss_vs_unquantized_db);

        const FeedbackResult product = product_select(h, f_az, f_el);
        csv.row("product", t, product.index_az, product.index_el, product.gain,
                product.loss_vs_unquantized_db);
    }
    csv.commit();
}

PackingQuality run_pack(int dim, int size, uint64_t seed, int restarts, int iterations,
                        const std::string &out_path) {
    const auto [book, quality] = pack_lines(dim, size, seed, restarts, iterations);
    save_codebook(book, out_path);
    return quality;
}

} // namespace kron3d
