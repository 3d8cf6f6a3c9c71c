#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "bp/spec_io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "bp_cli_tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path path = scratch_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

RunResult run_cli(const std::string& args) {
    const fs::path out_path = scratch_dir() / "stdout.txt";
    const std::string cmd =
        std::string(BP_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    std::ifstream in(out_path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return RunResult{WEXITSTATUS(raw), buffer.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const char* kBridgeSpec = R"({
  "structure": {"formula": "x1*x4 | x2*x5 | x1*x3*x5 | x2*x3*x4", "n": 5},
  "model": {"model": "exchangeable"}
})";

}  // namespace

TEST_CASE("cli analyze emits table and JSON") {
    const fs::path spec = write_file("bridge.json", kBridgeSpec);
    const fs::path out = scratch_dir() / "bridge_report.json";
    const auto r = run_cli("analyze " + spec.string() + " --json " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("7/30") != std::string::npos);
    const std::string report = slurp(out);
    CHECK(report.find("\"1/15\"") != std::string::npos);
    CHECK(report.find("\"exact\": true") != std::string::npos);
}

TEST_CASE("cli analyze rejects malformed specs with exit 2") {
    const fs::path bad_json = write_file("bad.json", "{not json");
    CHECK(run_cli("analyze " + bad_json.string()).exit_code == 2);

    const fs::path bad_field = write_file(
        "bad_field.json",
        R"({"structure": {"formula": "x1*x2", "n": 2}, "model": {"model": "weibull", "lambda": [1.0], "alpha": 1.0}})");
    CHECK(run_cli("analyze " + bad_field.string()).exit_code == 2);

    CHECK(run_cli("analyze /nonexistent/spec.json").exit_code == 2);
}

TEST_CASE("cli rejects order-distribution enumeration beyond n = 8") {
    std::string perm = "123456789";
    const std::string spec = std::string(R"({
      "structure": {"formula": "x1*x2*x3*x4*x5*x6*x7*x8*x9", "n": 9},
      "model": {"model": "order_distribution", "probs": {")") +
                             perm + R"(": "1"}},
      "options": {"method": "exact"}
    })";
    const fs::path path = write_file("big_order.json", spec);
    CHECK(run_cli("verify " + path.string()).exit_code == 2);
    CHECK(run_cli("analyze " + path.string()).exit_code == 2);
}

TEST_CASE("cli verify passes on the bridge and reports PASS lines") {
    const fs::path spec = write_file("bridge.json", kBridgeSpec);
    const auto r = run_cli("verify " + spec.string() + " --samples 20000 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("PASS") != std::string::npos);
    CHECK(r.stdout_text.find("FAIL") == std::string::npos);
}

TEST_CASE("cli symmetry prints six decimal places") {
    const fs::path spec = write_file("bridge.json", kBridgeSpec);
    const auto r = run_cli("symmetry " + spec.string());
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("H(I_BP) = 0.956113") != std::string::npos);

    const fs::path single = write_file(
        "single.json", R"({"structure": {"formula": "x1", "n": 1}, "model": {"model": "exchangeable"}})");
    CHECK(run_cli("symmetry " + single.string()).exit_code == 2);
}

TEST_CASE("cli analyze exits 3 when quadrature cannot reach tolerance") {
    // A tolerance below the panel-rule noise floor is unreachable at any
    // subdivision depth.
    const fs::path spec = write_file("unreachable_tol.json", R"({
      "structure": {"formula": "x1*x2", "n": 2},
      "model": {"model": "independent", "marginals": [
        {"dist": "exponential", "rate": 1.0},
        {"dist": "exponential", "rate": 2.0}]}
    })");
    CHECK(run_cli("analyze " + spec.string() + " --tol 1e-18").exit_code == 3);
}

TEST_CASE("cli runs are byte-identical") {
    const fs::path spec = write_file("bridge.json", kBridgeSpec);
    const fs::path out1 = scratch_dir() / "rep1.json";
    const fs::path out2 = scratch_dir() / "rep2.json";
    CHECK(run_cli("analyze " + spec.string() + " --json " + out1.string()).exit_code == 0);
    CHECK(run_cli("analyze " + spec.string() + " --json " + out2.string()).exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));
}
