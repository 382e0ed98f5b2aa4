#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// End-to-end checks against the installed binary (path injected by CMake).

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "qduality_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const fs::path out = work_dir() / "stdout.txt";
    const fs::path err = work_dir() / "stderr.txt";
    const std::string cmd = env + (env.empty() ? "" : " ") + QDUALITY_BIN + " " + args + " >" +
                            out.string() + " 2>" + err.string();
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<std::string> fields;
        std::istringstream fs_(line);
        std::string field;
        while (std::getline(fs_, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

size_t column_index(const std::vector<std::string>& header, const std::string& name) {
    for (size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    REQUIRE(false);
    return 0;
}

}  // namespace

TEST_CASE("usage errors exit with code 2 and name the flag") {
    const RunResult bad_range = run_cli("campaign --d 1..3");
    CHECK(bad_range.exit_code == 2);
    CHECK(bad_range.err.find("--d") != std::string::npos);

    CHECK(run_cli("campaign --no-such-flag").exit_code == 2);
    CHECK(run_cli("campaign --d 2..4 --rank 3").exit_code == 2);
    CHECK(run_cli("werner --a-steps 1").exit_code == 2);
    CHECK(run_cli("werner --w 1.5").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);  // missing subcommand
}

TEST_CASE("campaign writes the schema-stable CSV and exits 0") {
    const fs::path csv = work_dir() / "small.csv";
    const RunResult r =
        run_cli("campaign --d 2..3 --samples 20 --seed 5 --out " + csv.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all inequalities hold") != std::string::npos);

    const auto rows = parse_csv(slurp(csv));
    REQUIRE(rows.size() == 1 + 2 * 20);
    CHECK(rows[0][0] == "d");
    CHECK(rows[0][21] == "pass_all");
    const size_t pass_col = column_index(rows[0], "pass_all");
    for (size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 22);
        CHECK(rows[i][pass_col] == "1");
    }
}

TEST_CASE("identical config and seed give byte-identical CSVs across engines") {
    const fs::path a = work_dir() / "a.csv";
    const fs::path b = work_dir() / "b.csv";
    const fs::path c = work_dir() / "c.csv";
    const fs::path d = work_dir() / "d.csv";
    const std::string base = "campaign --d 2..4 --samples 30 --seed 123 --out ";
    CHECK(run_cli(base + a.string()).exit_code == 0);
    CHECK(run_cli(base + b.string()).exit_code == 0);
    CHECK(run_cli(base + c.string(), "QDUALITY_THREADS=1").exit_code == 0);
    CHECK(run_cli(base + d.string() + " --serial").exit_code == 0);
    const std::string ref = slurp(a);
    CHECK(ref == slurp(b));
    CHECK(ref == slurp(c));
    CHECK(ref == slurp(d));
    CHECK(run_cli(base + a.string(), "QDUALITY_THREADS=zzz").exit_code == 2);
}

TEST_CASE("corrupted state trips exit 1 and dumps the offender") {
    const fs::path csv = work_dir() / "corrupt.csv";
    const RunResult r = run_cli("campaign --d 3..3 --samples 10 --seed 4 --corrupt-sample 6 --out " +
                                csv.string());
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("VIOLATION") != std::string::npos);
    CHECK(r.err.find("sample_id=6") != std::string::npos);

    const auto rows = parse_csv(slurp(csv));
    const size_t pass_col = column_index(rows[0], "pass_all");
    int fails = 0;
    for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i][pass_col] == "0") ++fails;
    CHECK(fails == 1);
}

TEST_CASE("werner sweep at w=1 saturates the linear complementarity column-wise") {
    const fs::path csv = work_dir() / "werner.csv";
    const RunResult r = run_cli("werner --w 1 --a-steps 26 --out " + csv.string());
    CHECK(r.exit_code == 0);

    const auto rows = parse_csv(slurp(csv));
    REQUIRE(rows.size() == 1 + 26);
    CHECK(rows[0][1] == "w");
    CHECK(rows[0][2] == "a");
    const size_t chs = column_index(rows[0], "c_hs");
    const size_t phsl = column_index(rows[0], "p_hs_l");
    for (size_t i = 1; i < rows.size(); ++i) {
        const double sum = std::stod(rows[i][chs]) + std::stod(rows[i][phsl]);
        CHECK(std::abs(sum - 0.75) <= 1e-10);
    }
}

TEST_CASE("axioms subcommand reports all suites and exits 0") {
    const fs::path csv = work_dir() / "axioms.csv";
    const RunResult r =
        run_cli("axioms --d 3 --trials 40 --seed 2 --out " + csv.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all axiom checks hold") != std::string::npos);
    const auto rows = parse_csv(slurp(csv));
    CHECK(rows.size() == 1 + 36);  // 6 measures x 6 axioms
}

TEST_CASE("evaluate prints verdicts and can emit a one-row CSV") {
    const fs::path csv = work_dir() / "eval.csv";
    const RunResult r = run_cli("evaluate --d 6 --seed 42 --out " + csv.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("tohs_l") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(parse_csv(slurp(csv)).size() == 2);

    const RunResult n = run_cli("evaluate --d 4 --seed 9 --normalized");
    CHECK(n.exit_code == 0);
    CHECK(n.out.find("normalized (c_l1+p_l1)/(d-1)") != std::string::npos);
}

TEST_CASE("unwritable output path exits with the io code") {
    CHECK(run_cli("campaign --d 2..2 --samples 1 --out /nonexistent_dir_qd/x.csv").exit_code == 3);
}

TEST_CASE("help is available and exits 0") {
    const RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("campaign") != std::string::npos);
}
