#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "pauli_lab_cli_tests";

int run(const std::string& args, const std::string& stdout_file = "out.txt") {
    const std::string cmd = std::string(PAULI_LAB_BIN) + " " + args + " > " +
                            (kWork / stdout_file).string() + " 2>&1";
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

struct WorkDir {
    WorkDir() {
        fs::remove_all(kWork);
        fs::create_directories(kWork);
    }
} const kWorkDir;

} // namespace

TEST_CASE("classify examples and exit codes") {
    CHECK(run("classify --b0 1 --s 0 --v0 -1 --t 0.5 --out-dir " +
              (kWork / "c1").string()) == 0);
    const std::string out = slurp(kWork / "out.txt");
    CHECK(out.find("DenseRealLine") != std::string::npos);
    const std::string report = slurp(kWork / "c1" / "classify_report.csv");
    CHECK(report.rfind("#", 0) == 0); // metadata first
    CHECK(report.find("theorem,condition,satisfied,witness") != std::string::npos);

    CHECK(run("classify --b0 1 --s 1 --v0 -2 --t 1 --out-dir " +
              (kWork / "c2").string()) == 0);
    CHECK(slurp(kWork / "out.txt").find("ZeroInEssential (k = 1)") != std::string::npos);

    CHECK(run("classify --t 3 --out-dir " + (kWork / "c3").string()) == 2);
    CHECK(run("classify --no-such-flag") == 2);
}

TEST_CASE("weyl regime guard names the failing condition") {
    CHECK(run("weyl --theorem 3 --t 0.5 --s 1 --out-dir " + (kWork / "w0").string()) ==
          3);
    CHECK(slurp(kWork / "out.txt").find("con3.1") != std::string::npos);
    CHECK(run("weyl --theorem 2 --b0 1 --s 1 --v0 -1.5 --t 1 --out-dir " +
              (kWork / "w0").string()) == 3);
}

TEST_CASE("spectrum writes table, summary and svg") {
    const std::string dir = (kWork / "s1").string();
    CHECK(run("spectrum --b0 1 --s 0 --v0 0 --t 0 --jmax 2 --emin -0.5 --emax 5 "
              "--R 14 --n 1500 --svg --out-dir " +
              dir) == 0);
    const std::string table = slurp(kWork / "s1" / "spectrum.csv");
    CHECK(table.find("j,spin,lambda [energy],trusted") != std::string::npos);
    CHECK(table.find(",up,") != std::string::npos);
    const std::string summary = slurp(kWork / "s1" / "spectrum_summary.txt");
    CHECK(summary.find("count = ") != std::string::npos);
    CHECK(summary.find("max_gap = ") != std::string::npos);
    CHECK(slurp(kWork / "s1" / "spectrum_strip.svg").find("<svg") == 0);
}

TEST_CASE("reports are byte-identical across reruns") {
    const std::string args =
        "spectrum --b0 1 --s 1 --v0 -1 --t 0.5 --jmax 3 --emin -2 --emax 2 "
        "--R 20 --n 2000 --out-dir ";
    CHECK(run(args + (kWork / "d1").string()) == 0);
    CHECK(run(args + (kWork / "d2").string()) == 0);
    CHECK(slurp(kWork / "d1" / "spectrum.csv") == slurp(kWork / "d2" / "spectrum.csv"));
    CHECK(slurp(kWork / "d1" / "spectrum_summary.txt") ==
          slurp(kWork / "d2" / "spectrum_summary.txt"));

    const std::string wargs =
        "weyl --theorem 4 --b0 1 --s 0 --v0 -1 --t 0.5 --E 0 --nmin 10 --nmax 12 "
        "--out-dir ";
    CHECK(run(wargs + (kWork / "d3").string()) == 0);
    CHECK(run(wargs + (kWork / "d4").string()) == 0);
    CHECK(slurp(kWork / "d3" / "weyl.csv") == slurp(kWork / "d4" / "weyl.csv"));
}

TEST_CASE("weyl reports slope and per-term columns") {
    const std::string dir = (kWork / "w1").string();
    CHECK(run("weyl --theorem 2 --b0 1 --s 1 --v0 -2 --t 1 --k 1 --nmin 10 "
              "--nmax 14 --out-dir " +
              dir) == 0);
    const std::string table = slurp(kWork / "w1" / "weyl.csv");
    CHECK(table.find("n,center [length],r_n [length]") != std::string::npos);
    CHECK(table.find("|b| [L2]") != std::string::npos);
    CHECK(table.find("ratio") != std::string::npos);
    const std::string summary = slurp(kWork / "w1" / "weyl_summary.txt");
    CHECK(summary.find("loglog_slope = -") != std::string::npos); // decaying stretch
}

TEST_CASE("config file keys with flag override") {
    const fs::path cfg = kWork / "family.cfg";
    std::ofstream(cfg) << "b0=1\ns=1\nv0=-2\nt=1\n";
    CHECK(run("classify --config " + cfg.string() + " --out-dir " +
              (kWork / "cf1").string()) == 0);
    CHECK(slurp(kWork / "out.txt").find("ZeroInEssential") != std::string::npos);
    CHECK(run("classify --config " + cfg.string() + " --t 0.5 --out-dir " +
              (kWork / "cf2").string()) == 0);
    CHECK(slurp(kWork / "out.txt").find("Discrete") != std::string::npos);
}

TEST_CASE("validate --quick passes") {
    CHECK(run("validate --quick") == 0);
    const std::string out = slurp(kWork / "out.txt");
    CHECK(out.find("all invariants hold") != std::string::npos);
    CHECK(out.find("FAIL") == std::string::npos);
}
