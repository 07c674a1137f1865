#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kron3d.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace {

std::string temp_path(const char *name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("defaults populate every field") {
    k3d_config cfg;
    std::memset(&cfg, 0, sizeof(cfg));
    k3d_config_defaults(&cfg);
    CHECK(cfg.m_elev == 4);
    CHECK(cfg.n_az == 4);
    CHECK(cfg.d1 == 0.5);
    CHECK(cfg.theta == doctest::Approx(3.0 * 3.14159265358979323846 / 8.0));
    CHECK(cfg.paths == 20);
    CHECK(cfg.trials == 1000);
    CHECK(cfg.n1 == 8);
}

TEST_CASE("null arguments are rejected with a message") {
    CHECK(k3d_run_eig_compare(nullptr, "x.csv") == K3D_ERR_INVALID_ARGUMENT);
    CHECK(std::string(k3d_last_error()).size() > 0);
    k3d_config cfg;
    k3d_config_defaults(&cfg);
    CHECK(k3d_run_capacity(&cfg, nullptr) == K3D_ERR_INVALID_ARGUMENT);
}

TEST_CASE("invalid config maps to the invalid-argument status") {
    k3d_config cfg;
    k3d_config_defaults(&cfg);
    cfg.theta = -1.0;
    CHECK(k3d_run_eig_compare(&cfg, temp_path("k3d_bad.csv").c_str()) ==
          K3D_ERR_INVALID_ARGUMENT);
    CHECK(std::string(k3d_last_error()).find("theta") != std::string::npos);
}

TEST_CASE("unwritable output path maps to the I/O status") {
    k3d_config cfg;
    k3d_config_defaults(&cfg);
    cfg.m_elev = 2;
    cfg.n_az = 2;
    CHECK(k3d_run_eig_compare(&cfg, "/nonexistent-dir/out.csv") == K3D_ERR_IO);
}

TEST_CASE("eig-compare writes the documented CSV") {
    k3d_config cfg;
    k3d_config_defaults(&cfg);
    cfg.m_elev = 2;
    cfg.n_az = 2;
    const std::string path = temp_path("k3d_eig.csv");
    REQUIRE(k3d_run_eig_compare(&cfg, path.c_str()) == K3D_OK);
    const std::string content = read_file(path);
    CHECK(content.rfind("index,eig_full,eig_kron,rel_gap\n", 0) == 0);
    // header + one row per eigenvalue
    CHECK(std::count(content.begin(), content.end(), '\n') == 5);
    std::filesystem::remove(path);
}

TEST_CASE("correlation matrix handles expose entries and eigenvalues") {
    k3d_config cfg;
    k3d_config_defaults(&cfg);
    cfg.m_elev = 2;
    cfg.n_az = 2;

    k3d_matrix *full = nullptr;
    REQUIRE(k3d_correlation_matrix(&cfg, K3D_CORR_FULL, &full) == K3D_OK);
    REQUIRE(full != nullptr);
    CHECK(k3d_matrix_rows(full) == 4);
    CHECK(k3d_matrix_cols(full) == 4);

    double re = 0.0;
    double im = 1.0;
    REQUIRE(k3d_matrix_get(full, 0, 0, &re, &im) == K3D_OK);
    CHECK(re == doctest::Approx(1.0));
    CHECK(im == doctest::Approx(0.0));
    CHECK(k3d_matrix_get(full, 9, 0, &re, &im) == K3D_ERR_INVALID_ARGUMENT);

    std::vector<double> eig(4, 0.0);
    REQUIRE(k3d_matrix_eigenvalues(full, eig.data()) == K3D_OK);
    double trace = 0.0;
    for (double v : eig) {
        trace += v;
    }
    CHECK(trace == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(eig[0] >= eig[1]);

    const std::string path = temp_path("k3d_corr.csv");
    REQUIRE(k3d_matrix_write_csv(full, path.c_str()) == K3D_OK);
    CHECK(read_file(path).rfind("row,col,re,im\n", 0) == 0);
    std::filesystem::remove(path);
    k3d_matrix_free(full);

    k3d_matrix *az = nullptr;
    REQUIRE(k3d_correlation_matrix(&cfg, K3D_CORR_AZIMUTH, &az) == K3D_OK);
    CHECK(k3d_matrix_rows(az) == 2);
    k3d_matrix_free(az);
}

TEST_CASE("experiment runners are deterministic at the byte level") {
    k3d_config cfg;
    k3d_config_defaults(&cfg);
    cfg.m_elev = 2;
    cfg.n_az = 2;
    cfg.trials = 50;

    const std::string a = temp_path("k3d_cap_a.csv");
    const std::string b = temp_path("k3d_cap_b.csv");
    REQUIRE(k3d_run_capacity(&cfg, a.c_str()) == K3D_OK);
    REQUIRE(k3d_run_capacity(&cfg, b.c_str()) == K3D_OK);
    CHECK(read_file(a) == read_file(b));
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST_CASE("packing through the C API reports distance and bound") {
    const std::string path = temp_path("k3d_pack.txt");
    double distance = 0.0;
    double bound = 0.0;
    REQUIRE(k3d_pack_codebook(2, 2, 7, 8, 400, path.c_str(), &distance, &bound) == K3D_OK);
    CHECK(distance == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(bound == doctest::Approx(1.0));
    const std::string content = read_file(path);
    CHECK(content.rfind("2 2\n", 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("status names are stable strings") {
    CHECK(std::string(k3d_status_name(K3D_OK)) == "ok");
    CHECK(std::string(k3d_status_name(K3D_ERR_SINGULAR)).size() > 0);
    CHECK(std::string(k3d_version()).size() > 0);
}
