#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(HF_CLI_PATH) + " " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(HF_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kMaxIdeal = "--ideal 'ring: x,y; ideal: x, y'";

}  // namespace

TEST_CASE("golden json and csv outputs are byte-stable") {
    struct Case {
        std::string args;
        std::string file;
    };
    const Case cases[] = {
        {"hilbert --ideal 'ring: x,y; ideal: x^2, x*y' --format json", "hilbert_quotient.json"},
        {"hilbert --ideal 'ring: x,y; ideal: x^2, x*y' --module ideal --format json",
         "hilbert_ideal.json"},
        {"scan-power --ideal 'ring: x,y; ideal: x, y' --i 1 --j 2 --kmax 8 --format json",
         "scan_power_m_12.json"},
        {"scan-power --ideal 'ring: x,y; ideal: x, y' --i 1 --j 2 --kmax 8 --format csv",
         "scan_power_m_12.csv"},
        {"betti --ideal 'ring: x,y; ideal: x, y' --k 2 --format json", "betti_m_2.json"},
        {"strand --n 2 --m 2 --p 1,2 --a 0 --b 0 --k 2 --j 1 --format json", "strand_p12.json"},
        {"scan-betti --ideal 'ring: x,y; ideal: x, y' --l 1 --j 0 --kmax 6 --format json",
         "scan_betti_m_l1.json"},
        {"coeffs --ideal 'ring: x,y; ideal: x^2, x*y, y^3' --module ideal --imax 2 --format json",
         "coeffs_mixed.json"},
        {"hvector --ideal 'ring: x,y; ideal: x,y' --power 2 --module ideal --format json",
         "hvector_m2.json"},
        {"fiber-dim --ideal 'ring: x,y,z; ideal: x*y, y*z, z*x' --format json", "fiber_dim.json"},
    };
    for (const auto& c : cases) {
        INFO(c.args);
        auto first = run_cli(c.args);
        REQUIRE(first.exit_code == 0);
        REQUIRE(first.out == golden(c.file));
        // identical bytes on a second run (scans may run multi-threaded)
        auto second = run_cli(c.args);
        REQUIRE(second.out == first.out);
    }
}

TEST_CASE("table outputs of the documented examples") {
    auto hilbert = run_cli("hilbert --ideal 'ring: x,y; ideal: x^2, x*y'");
    REQUIRE(hilbert.exit_code == 0);
    REQUIRE(hilbert.out.find("numerator: [1, 0, -2, 1]") != std::string::npos);
    REQUIRE(hilbert.out.find("dimension: 1") != std::string::npos);

    auto strand = run_cli("strand --n 2 --m 2 --p 1,1 --a 2 --b 1 --k 3 --j 2");
    REQUIRE(strand.exit_code == 0);
    REQUIRE(strand.out.find("e(i=1, j=2): 18") != std::string::npos);

    auto scan = run_cli(std::string("scan-power ") + kMaxIdeal + " --i 1 --j 2 --kmax 8");
    REQUIRE(scan.exit_code == 0);
    REQUIRE(scan.out.find("e: -1 -3 -6 -10 -15 -21 -28 -36") != std::string::npos);
    REQUIRE(scan.out.find("pass") != std::string::npos);
}

TEST_CASE("oracle flags cross-check and succeed on good input") {
    for (const std::string args :
         {std::string("hilbert ") + kMaxIdeal + " --power 2 --oracle",
          std::string("coeffs ") + kMaxIdeal + " --module ideal --oracle",
          std::string("hvector ") + kMaxIdeal + " --oracle",
          std::string("strand --n 2 --m 2 --p 1,2 --k 3 --j 1 --oracle"),
          std::string("strand --n 2 --m 2 --p 1,2 --j 1 --kmax 8 --oracle"),
          std::string("scan-power ") + kMaxIdeal + " --i 0 --j 0 --kmax 5 --oracle",
          std::string("betti ") + kMaxIdeal + " --k 3 --oracle",
          std::string("scan-betti ") + kMaxIdeal + " --l 0 --j 0 --kmax 5 --oracle",
          std::string("fiber-dim ") + kMaxIdeal + " --oracle",
          std::string("verify ") + kMaxIdeal}) {
        INFO(args);
        auto r = run_cli(args, true);
        REQUIRE(r.exit_code == 0);
    }
}

TEST_CASE("exit code 1 on input errors") {
    REQUIRE(run_cli("hilbert --ideal 'ring: x; ideal: y'").exit_code == 1);
    REQUIRE(run_cli("hilbert --ideal 'ring x; ideal: x'").exit_code == 1);
    REQUIRE(run_cli("hilbert").exit_code == 1);                    // no ideal
    REQUIRE(run_cli("scan-power --j 0").exit_code == 1);           // no ideal
    REQUIRE(run_cli("no-such-command").exit_code == 1);
    REQUIRE(run_cli("fiber-dim --ideal 'ring: x,y; ideal: x^2, y^3'").exit_code == 1);
    REQUIRE(run_cli("hilbert --ideal 'ring: x; ideal: x' --format yaml").exit_code == 1);
}

TEST_CASE("exit code 2 on enumeration cap breaches") {
    auto r = run_cli("hilbert --ideal 'ring: x,y,z,w; ideal: x*y' --oracle --enum-cap 100", true);
    REQUIRE(r.exit_code == 2);
    REQUIRE(r.out.find("exceeds cap") != std::string::npos);
}

TEST_CASE("exit code 3 on unstable fits under --require-stable") {
    auto r = run_cli(std::string("scan-power ") + kMaxIdeal +
                     " --i 1 --j 2 --kmax 6 --window 4 --require-stable");
    REQUIRE(r.exit_code == 3);
    // without the flag the same scan reports instability with exit 0
    auto soft = run_cli(std::string("scan-power ") + kMaxIdeal + " --i 1 --j 2 --kmax 6 --window 4");
    REQUIRE(soft.exit_code == 0);
    REQUIRE(soft.out.find("unstable") != std::string::npos);
}

TEST_CASE("reading the ideal from a file") {
    std::string path = std::string(HF_GOLDEN_DIR) + "/../tmp_ideal_input.txt";
    {
        std::ofstream out(path);
        out << "ring: x, y\nideal: x^3, x*y, y^4\n";
    }
    auto r = run_cli("hilbert --input " + path + " --module ideal --format json");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("\"shift\":2") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("modular rank mode warns") {
    auto r = run_cli(std::string("betti ") + kMaxIdeal + " --k 2 --modular", true);
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("probabilistic") != std::string::npos);
}
