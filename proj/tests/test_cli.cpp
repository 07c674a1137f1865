#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunResult run_cli(const std::string &args) {
    const std::string cmd = std::string(KRON3D_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> chunk{};
    RunResult result;
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(chunk.data(), static_cast<int>(chunk.size()), pipe) != nullptr) {
        result.output += chunk.data();
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string temp_path(const char *name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("missing subcommand fails with exit code 2") {
    const RunResult r = run_cli("");
    CHECK(r.exit_code == 2);
}

TEST_CASE("unknown flags fail before any computation") {
    const RunResult r = run_cli("eig-compare --no-such-flag 7");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("--no-such-flag") != std::string::npos);
}

TEST_CASE("invalid parameter values exit with the config code and name the problem") {
    const RunResult r = run_cli("eig-compare --theta 0 --out " + temp_path("cli_bad.csv"));
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("theta") != std::string::npos);
}

TEST_CASE("angles accept fractions of pi") {
    const std::string out = temp_path("cli_angle.csv");
    const RunResult r = run_cli("beam-loss --m-elev 2 --n-az 2 --phi 0.3333pi --xi 0pi --out " + out);
    CHECK(r.exit_code == 0);
    const std::string content = read_file(out);
    CHECK(content.rfind("varied_param,value,loss_db\n", 0) == 0);
    std::filesystem::remove(out);
}

TEST_CASE("pack prints the achieved distance and bound") {
    const std::string out = temp_path("cli_pack.txt");
    const RunResult r = run_cli("pack --dim 2 --size 2 --seed 5 --restarts 8 --iterations 400 --out " + out);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("min_chordal_distance 1.000000") != std::string::npos);
    CHECK(r.output.find("rankin_bound") != std::string::npos);
    std::filesystem::remove(out);
}

TEST_CASE("pack output reloads through the corr/codebook toolchain") {
    const std::string out = temp_path("cli_pack_roundtrip.txt");
    const RunResult r = run_cli("pack --dim 3 --size 4 --seed 9 --restarts 4 --iterations 300 --out " + out);
    REQUIRE(r.exit_code == 0);
    const std::string first = read_file(out);
    const RunResult again =
        run_cli("pack --dim 3 --size 4 --seed 9 --restarts 4 --iterations 300 --out " + out);
    REQUIRE(again.exit_code == 0);
    CHECK(first == read_file(out));
    std::filesystem::remove(out);
}

TEST_CASE("corr subcommand dumps a matrix CSV") {
    const std::string out = temp_path("cli_corr.csv");
    const RunResult r = run_cli("corr --which az --m-elev 2 --n-az 3 --out " + out);
    CHECK(r.exit_code == 0);
    const std::string content = read_file(out);
    CHECK(content.rfind("row,col,re,im\n", 0) == 0);
    std::filesystem::remove(out);

    const RunResult bad = run_cli("corr --which nonsense --out " + out);
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("which") != std::string::npos);
}

TEST_CASE("unwritable output paths are a config error") {
    const RunResult r = run_cli("eig-compare --m-elev 2 --n-az 2 --out /nonexistent-dir/x.csv");
    CHECK(r.exit_code == 2);
}
