#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

const char* cli_path() {
    const char* p = std::getenv("QLADDER_CLI");
    REQUIRE_MESSAGE(p != nullptr, "QLADDER_CLI must point at the built binary");
    return p;
}

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("table command: documented invocations") {
    auto r1 = run_cli("table --family sw --sqrt-q 1/2 --nmax 2");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out.find("alpha=152") != std::string::npos);
    CHECK(r1.out.find("beta=192") != std::string::npos);
    CHECK(r1.out.find("R=1/3") != std::string::npos);
    CHECK(r1.out.find("r=-8") != std::string::npos);

    auto r2 = run_cli("table --family qlaguerre --alpha 1 --sqrt-q 1/2 --nmax 1");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("beta=720") != std::string::npos);
    CHECK(r2.out.find("r=-16") != std::string::npos);
    CHECK(r2.out.find("R=1/3") != std::string::npos);

    auto r3 = run_cli("table --family sw --sqrt-q 3/2 --nmax 2");
    CHECK(r3.exit_code == 2);
}

TEST_CASE("verify command: documented invocations") {
    auto r1 = run_cli("verify --family sw --sqrt-q 1/2 --nmax 8");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out.find("(1.9) S1 n=3: PASS") != std::string::npos);

    auto r2 = run_cli("verify --family qlaguerre --alpha 1 --sqrt-q 1/2 --nmax 8");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("(4.6)") != std::string::npos);
    CHECK(r2.out.find("failed as expected") != std::string::npos);

    auto r3 = run_cli("verify --family qlaguerre --alpha 0 --sqrt-q 1/2 --nmax 4");
    CHECK(r3.exit_code == 2);
}

TEST_CASE("oracle command: documented invocations") {
    auto r1 = run_cli("oracle --family sw --sqrt-q 1/2 --nmax 12");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out.find("MISMATCH") == std::string::npos);

    auto r2 = run_cli("oracle --family qlaguerre --alpha 2 --sqrt-q 2/3 --nmax 6");
    CHECK(r2.exit_code == 0);

    auto r3 = run_cli("oracle --family sw --sqrt-q 0/1 --nmax 4");
    CHECK(r3.exit_code == 2);
}

TEST_CASE("quadcheck command: validation paths") {
    // precision floor
    auto r1 = run_cli("quadcheck --family sw --sqrt-q 1/2 --precision 32");
    CHECK(r1.exit_code == 2);

    // unreachable tolerance at modest precision -> tolerance breach, exit 1
    auto r2 = run_cli("quadcheck --family sw --sqrt-q 1/2 --nmax 0 --precision 128 --tol-exp 60");
    CHECK(r2.exit_code == 1);
    CHECK(r2.out.find("FAIL") != std::string::npos);
}

TEST_CASE("json output is deterministic and round-trips byte-identically") {
    const std::string args = "verify --family qlaguerre --alpha 1 --sqrt-q 1/2 --nmax 4 --format json";
    auto first = run_cli(args);
    auto second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);

    nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(first.out);
    CHECK(parsed.dump(2) + "\n" == first.out);

    CHECK(parsed["config"]["family"] == "qlaguerre");
    CHECK(parsed["config"]["sqrt_q"] == "1/2");
    CHECK(parsed["summary"]["failed"] == 0);
    CHECK(parsed["summary"]["expected_failures"] > 0);
}

TEST_CASE("exact values are serialized as rational strings") {
    auto r = run_cli("table --family sw --sqrt-q 1/2 --nmax 3 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(r.out);
    for (const auto& row : parsed["rows"]) {
        CHECK(row["alpha"].is_string());
        CHECK(row["beta"].is_string());
        CHECK(row["R"].is_string());
    }
    CHECK(parsed["rows"][1]["R"] == "1/3");
    CHECK(parsed["rows"][2]["beta"] == "61440");
}

TEST_CASE("--out writes the same bytes as stdout") {
    const std::string path = "/tmp/qladder_cli_out_test.json";
    std::remove(path.c_str());
    auto r = run_cli("oracle --family sw --sqrt-q 1/2 --nmax 4 --format json --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(slurp(path) == r.out);
    std::remove(path.c_str());
}

TEST_CASE("csv output has a stable header") {
    auto r = run_cli("table --family sw --sqrt-q 1/2 --nmax 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("n,alpha,beta,R,r,p1,zeta_ratio\n", 0) == 0);
}
