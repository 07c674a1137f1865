#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kron3d/codebook.hpp"
#include "kron3d/correlation.hpp"
#include "kron3d/errors.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

using namespace kron3d;

namespace {

constexpr double kPi = std::numbers::pi;

const ArrayGeometry kGeom22{2, 2, 0.5, 0.5};
const ChannelParams kFig5{kPi / 3.0, 3.0 * kPi / 8.0, kPi / 12.0, kPi / 36.0, 20};

Codebook standard_basis(int dim) {
    Codebook book;
    book.dim = dim;
    for (int i = 0; i < dim; ++i) {
        ComplexVector e(static_cast<size_t>(dim), Complex(0.0, 0.0));
        e[static_cast<size_t>(i)] = 1.0;
        book.words.push_back(std::move(e));
    }
    return book;
}

} // namespace

TEST_CASE("two lines in C^2 pack orthogonally") {
    const auto [book, quality] = pack_lines(2, 2, 7);
    CHECK(quality.min_chordal_distance == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(quality.rankin_bound == doctest::Approx(1.0));
    book.validate();
}

TEST_CASE("three lines in C^2 reach the composite bound") {
    const auto [book, quality] = pack_lines(2, 3, 7);
    const double bound = std::sqrt(3.0) / 2.0;
    CHECK(quality.rankin_bound == doctest::Approx(bound).epsilon(1e-12));
    CHECK(quality.min_chordal_distance >= 0.98 * bound);
    CHECK(quality.min_chordal_distance <= quality.rankin_bound + 1e-9);
    book.validate();
}

TEST_CASE("sixteen lines in C^4: absolute floor and restart self-consistency") {
    const auto few = pack_lines(4, 16, 33, 20, 2000);
    CHECK(few.second.min_chordal_distance >= 0.7);

    const auto many = pack_lines(4, 16, 33, 50, 2000);
    CHECK(many.second.min_chordal_distance >= few.second.min_chordal_distance); // nested restarts
    CHECK(few.second.min_chordal_distance >= 0.95 * many.second.min_chordal_distance);
    CHECK(many.second.min_chordal_distance <= many.second.rankin_bound + 1e-9);
}

TEST_CASE("packing is deterministic in its inputs") {
    const auto a = pack_lines(3, 5, 99, 4, 300);
    const auto b = pack_lines(3, 5, 99, 4, 300);
    REQUIRE(a.first.size() == b.first.size());
    for (int i = 0; i < a.first.size(); ++i) {
        for (int d = 0; d < 3; ++d) {
            CHECK(a.first.words[static_cast<size_t>(i)][static_cast<size_t>(d)] ==
                  b.first.words[static_cast<size_t>(i)][static_cast<size_t>(d)]);
        }
    }
}

TEST_CASE("rankin bound switches to the generic limit past dim^2 words") {
    CHECK(rankin_bound(2, 5) == doctest::Approx(std::sqrt(0.5)));
    CHECK(rankin_bound(2, 4) == doctest::Approx(std::sqrt(1.0 * 4.0 / (2.0 * 3.0))));
    CHECK(rankin_bound(3, 1) == doctest::Approx(1.0));
}

TEST_CASE("rotating by the identity or a positive scale is a no-op") {
    const Codebook base = pack_lines(2, 4, 5).first;
    const Codebook same = rotate_codebook(base, ComplexMatrix::identity(2));
    ComplexMatrix twice(2, 2);
    twice(0, 0) = 2.0;
    twice(1, 1) = 2.0;
    const Codebook scaled = rotate_codebook(base, twice);
    for (int i = 0; i < base.size(); ++i) {
        for (int d = 0; d < 2; ++d) {
            const auto iu = static_cast<size_t>(i);
            const auto du = static_cast<size_t>(d);
            CHECK(std::abs(same.words[iu][du] - base.words[iu][du]) < 1e-15);
            CHECK(std::abs(scaled.words[iu][du] - base.words[iu][du]) < 1e-14);
        }
    }
}

TEST_CASE("rotation rejects null-space codewords") {
    const Codebook base = standard_basis(2);
    ComplexMatrix rank1(2, 2);
    rank1(0, 0) = 1.0; // e2 maps to zero
    CHECK_THROWS_AS(rotate_codebook(base, rank1), NullSpaceWordError);
}

TEST_CASE("rotated sub-codebook at Fig-5 parameters") {
    const Codebook base = pack_lines(2, 4, 42).first;
    const ComplexMatrix sqrt_az = psd_sqrt(azimuth_correlation(kGeom22, kFig5));
    const Codebook rotated = rotate_codebook(base, sqrt_az);
    REQUIRE(rotated.size() == base.size());
    for (const ComplexVector &w : rotated.words) {
        CHECK(std::abs(norm2(w) - 1.0) < 1e-12);
    }
    // Pinned overlap profile |<f_i, f_j>| of the first verified run.
    const double expected[4][4] = {
        {1.0, 0.88280575, 0.86016462, 0.42339748},
        {0.88280575, 1.0, 0.94135336, 0.79930828},
        {0.86016462, 0.94135336, 1.0, 0.75853745},
        {0.42339748, 0.79930828, 0.75853745, 1.0},
    };
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double overlap = std::abs(inner_product(rotated.words[static_cast<size_t>(i)],
                                                          rotated.words[static_cast<size_t>(j)]));
            CHECK(overlap == doctest::Approx(expected[i][j]).epsilon(1e-6));
        }
    }
}

TEST_CASE("product_select finds an exact codeword pair") {
    const Codebook f_az = pack_lines(2, 4, 1).first;
    const Codebook f_el = pack_lines(3, 6, 2).first;
    const ComplexVector h = kron(f_az.words[2], f_el.words[5]);
    const FeedbackResult r = product_select(h, f_az, f_el);
    CHECK(r.index_az == 2);
    CHECK(r.index_el == 5);
    CHECK(r.gain == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(r.loss_vs_unquantized_db) < 1e-9);
}

TEST_CASE("singleton codebooks always select index zero") {
    Codebook az;
    az.dim = 2;
    az.words = {pack_lines(2, 1, 3).first.words[0]};
    Codebook el;
    el.dim = 2;
    el.words = {pack_lines(2, 1, 4).first.words[0]};
    Rng rng(8);
    const FeedbackResult r = product_select(rng.complex_normal_vector(4), az, el);
    CHECK(r.index_az == 0);
    CHECK(r.index_el == 0);
}

TEST_CASE("reshaped selection equals brute-force joint search") {
    const Codebook f_az = pack_lines(2, 4, 11).first;
    const Codebook f_el = pack_lines(2, 4, 12).first;
    Rng rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexVector h = rng.complex_normal_vector(4);
        const FeedbackResult fast = product_select(h, f_az, f_el);

        double best = -1.0;
        int best_az = -1;
        int best_el = -1;
        for (int i = 0; i < 4; ++i) {
            for (int k = 0; k < 4; ++k) {
                const double gain = std::norm(inner_product(
                    h, kron(f_az.words[static_cast<size_t>(i)], f_el.words[static_cast<size_t>(k)])));
                if (gain > best) {
                    best = gain;
                    best_az = i;
                    best_el = k;
                }
            }
        }
        CHECK(fast.index_az == best_az);
        CHECK(fast.index_el == best_el);
        CHECK(std::abs(fast.gain - best) < 1e-12);
        const double hp = norm2(h) * norm2(h);
        CHECK(fast.gain <= hp + 1e-12);
    }
}

TEST_CASE("selection ignores a global phase on the channel") {
    const Codebook f_az = pack_lines(2, 4, 21).first;
    const Codebook f_el = pack_lines(2, 4, 22).first;
    Rng rng(23);
    const ComplexVector h = rng.complex_normal_vector(4);
    ComplexVector h_rot = h;
    for (Complex &z : h_rot) {
        z *= std::polar(1.0, 0.77);
    }
    const FeedbackResult a = product_select(h, f_az, f_el);
    const FeedbackResult b = product_select(h_rot, f_az, f_el);
    CHECK(a.index_az == b.index_az);
    CHECK(a.index_el == b.index_el);
    CHECK(a.gain == doctest::Approx(b.gain).epsilon(1e-12));
}

TEST_CASE("joint_select basics") {
    const Codebook book = pack_lines(4, 8, 31).first;
    const JointSelectResult exact = joint_select(book.words[5], book);
    CHECK(exact.index == 5);
    CHECK(std::abs(exact.loss_vs_unquantized_db) < 1e-9);

    Codebook single;
    single.dim = 4;
    single.words = {book.words[0]};
    Rng rng(32);
    CHECK(joint_select(rng.complex_normal_vector(4), single).index == 0);
}

TEST_CASE("optimal Kronecker factors attain the best rank-one gain") {
    Rng rng(41);
    const ComplexVector g = rng.complex_normal_vector(6);
    const KronFactors opt = optimal_kron_factors(g, 2, 3);
    CHECK(norm2(opt.w_az) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(norm2(opt.w_el) == doctest::Approx(1.0).epsilon(1e-9));
    const double attained = std::abs(inner_product(g, kron(opt.w_az, opt.w_el)));
    CHECK(attained == doctest::Approx(opt.value).epsilon(1e-9));

    // No random Kronecker pair may beat the reported optimum.
    for (int rep = 0; rep < 200; ++rep) {
        const ComplexVector az = rng.isotropic_unit_vector(3);
        const ComplexVector el = rng.isotropic_unit_vector(2);
        CHECK(std::abs(inner_product(g, kron(az, el))) <= attained + 1e-9);
    }
}

TEST_CASE("distortion vanishes when the codebook contains the per-trial optimum") {
    const ComplexMatrix sqrt_az = psd_sqrt(azimuth_correlation(kGeom22, kFig5));
    const ComplexMatrix sqrt_el = psd_sqrt(elevation_correlation(kGeom22, kFig5));
    const ComplexMatrix sqrt_kron = kron(sqrt_az, sqrt_el);
    const uint64_t seed = 555;

    // Reconstruct the trial-0 optimum and hand it to the codebooks.
    Rng rng = Rng::substream(seed, 0);
    const ComplexVector w = rng.complex_normal_vector(4);
    const KronFactors opt = optimal_kron_factors(sqrt_kron * w, 2, 2);
    ComplexVector best_az = sqrt_az * opt.w_az;
    ComplexVector best_el = sqrt_el * opt.w_el;
    normalize(best_az);
    normalize(best_el);
    Codebook f_az{2, {best_az}};
    Codebook f_el{2, {best_el}};

    CHECK(distortion_estimate(kGeom22, kFig5, f_az, f_el, 1, seed) < 1e-10);
}

TEST_CASE("nested codebooks give monotone distortion and respect the bound") {
    const Codebook base_az = pack_lines(2, 8, 61).first;
    const Codebook base_el = pack_lines(2, 8, 62).first;
    const ComplexMatrix sqrt_az = psd_sqrt(azimuth_correlation(kGeom22, kFig5));
    const ComplexMatrix sqrt_el = psd_sqrt(elevation_correlation(kGeom22, kFig5));
    const Codebook f_az = rotate_codebook(base_az, sqrt_az);
    const Codebook f_el = rotate_codebook(base_el, sqrt_el);

    double previous = -1.0;
    for (int size : {2, 4, 8}) {
        Codebook az;
        az.dim = 2;
        az.words.assign(f_az.words.begin(), f_az.words.begin() + size);
        Codebook el;
        el.dim = 2;
        el.words.assign(f_el.words.begin(), f_el.words.begin() + size);
        const double d = distortion_estimate(kGeom22, kFig5, az, el, 400, 63);
        CHECK(d >= 0.0);
        if (previous >= 0.0) {
            CHECK(d <= previous + 1e-12);
        }
        previous = d;
    }

    const double estimate = distortion_estimate(kGeom22, kFig5, f_az, f_el, 400, 63);
    const double bound = distortion_bound(kGeom22, kFig5, base_az, base_el, 20000, 64);
    CHECK(estimate <= bound);
}

TEST_CASE("distortion bound is stable across seeds and shrinks for dense books") {
    const Codebook base_az = pack_lines(2, 8, 71).first;
    const Codebook base_el = pack_lines(2, 8, 72).first;
    const double b1 = distortion_bound(kGeom22, kFig5, base_az, base_el, 100000, 1);
    const double b2 = distortion_bound(kGeom22, kFig5, base_az, base_el, 100000, 2);
    CHECK(std::abs(b1 - b2) / b1 < 0.01);

    // A dense 256-word packing in C^2 covers well: both expectation terms of
    // the bound drop below 0.15.
    const Codebook dense = pack_lines(2, 256, 73, 2, 600).first;
    Rng rng(74);
    double acc = 0.0;
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) {
        const ComplexVector w = rng.isotropic_unit_vector(2);
        double best = 0.0;
        for (const ComplexVector &c : dense.words) {
            best = std::max(best, std::abs(inner_product(w, c)));
        }
        acc += best;
    }
    const double mean_best = acc / draws;
    CHECK(std::sqrt(std::max(0.0, 2.0 - 2.0 * mean_best)) < 0.15);
}

TEST_CASE("codebook files round-trip bit-exactly") {
    const Codebook book = pack_lines(3, 7, 81).first;
    const std::string path =
        (std::filesystem::temp_directory_path() / "kron3d_codebook_test.txt").string();
    save_codebook(book, path);
    const Codebook loaded = load_codebook(path);
    REQUIRE(loaded.dim == book.dim);
    REQUIRE(loaded.size() == book.size());
    for (int i = 0; i < book.size(); ++i) {
        for (int d = 0; d < book.dim; ++d) {
            CHECK(loaded.words[static_cast<size_t>(i)][static_cast<size_t>(d)] ==
                  book.words[static_cast<size_t>(i)][static_cast<size_t>(d)]);
        }
    }
    std::filesystem::remove(path);
}

TEST_CASE("the loader rejects non-unit codewords") {
    const std::string path =
        (std::filesystem::temp_directory_path() / "kron3d_codebook_bad.txt").string();
    {
        std::ofstream out(path);
        out << "2 1\n0.5 0 0.5 0\n";
    }
    CHECK_THROWS_AS(load_codebook(path), InvalidArgumentError);
    std::filesystem::remove(path);
}
