#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const std::string kCli = LIEGEO_CLI_PATH;
const std::string kFixtures = LIEGEO_FIXTURE_DIR;

fs::path work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("liegeo_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run(const std::string& args) {
    static int counter = 0;
    const fs::path out = work_dir() / ("out" + std::to_string(counter) + ".txt");
    const fs::path err = work_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = kCli + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    result.out = slurp(out);
    result.err = slurp(err);
    return result;
}

std::string fixture_path(const std::string& name) { return kFixtures + "/" + name; }

}  // namespace

TEST_CASE("describe reports dimension, labels and validation") {
    const auto r = run("describe " + fixture_path("hyperbolic2.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("dimension: 2") != std::string::npos);
    CHECK(r.out.find("labels: u, b") != std::string::npos);
    CHECK(r.out.find("validation: ok") != std::string::npos);
}

TEST_CASE("lift then describe round-trips through a file") {
    const fs::path lifted = work_dir() / "hyperbolic2_lift.json";
    const auto r1 = run("lift " + fixture_path("hyperbolic2.json") + " --out " + lifted.string());
    REQUIRE(r1.exit_code == 0);

    const auto r2 = run("describe " + lifted.string());
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("dimension: 4") != std::string::npos);
    CHECK(r2.out.find("labels: u^c, b^c, u^v, b^v") != std::string::npos);
    CHECK(r2.out.find("validation: ok") != std::string::npos);

    // the lifted file is accepted by every other command
    const auto r3 = run("connection " + lifted.string());
    CHECK(r3.exit_code == 0);
}

TEST_CASE("verify heisenberg exits 1 and reports the conflicting pair") {
    const fs::path report_path = work_dir() / "heis.json";
    const auto r = run("verify " + fixture_path("heisenberg.json") + " --format json --output " +
                       report_path.string());
    CHECK(r.exit_code == 1);

    std::ifstream in(report_path);
    REQUIRE(in.good());
    const auto report = nlohmann::json::parse(in);
    bool base_claim = false, lifted_claim = false;
    for (const auto& e : report.at("entries")) {
        if (e.at("formula_id") == "L3.K_xe" && e.at("argument_desc") == "K(u1,e)") {
            base_claim = true;
            CHECK(e.at("claimed").get<double>() == doctest::Approx(0.25));
            CHECK(e.at("oracle").get<double>() == doctest::Approx(0.25));
            CHECK(e.at("status") == "pass");
        }
        if (e.at("formula_id") == "E20.K_xc_ec" && e.at("argument_desc") == "K(u1^c,e^c)") {
            lifted_claim = true;
            CHECK(e.at("claimed").get<double>() == doctest::Approx(-0.25));
            CHECK(e.at("oracle").get<double>() == doctest::Approx(0.25));
            CHECK(e.at("status") == "fail");
        }
    }
    CHECK(base_claim);
    CHECK(lifted_claim);
}

TEST_CASE("verify exit code follows the report it emits") {
    const fs::path report_path = work_dir() / "special_n2.json";
    const auto r = run("verify " + fixture_path("special_n2.json") + " --format json --output " +
                       report_path.string());
    std::ifstream in(report_path);
    REQUIRE(in.good());
    const auto report = nlohmann::json::parse(in);
    bool any_gating_failure = false;
    for (const auto& e : report.at("entries"))
        if (e.at("gating") == true && e.at("status") == "fail") any_gating_failure = true;
    CHECK(r.exit_code == (any_gating_failure ? 1 : 0));
}

TEST_CASE("identical invocations produce byte-identical reports") {
    const fs::path a = work_dir() / "rep_a.json";
    const fs::path b = work_dir() / "rep_b.json";
    // same logical invocation twice (the embedded invocation string must match,
    // so write to the same path and snapshot in between)
    const std::string invocation =
        "verify " + fixture_path("special_scaled.json") + " --format json --seed 5 --output " + a.string();
    REQUIRE(run(invocation).exit_code >= 0);
    fs::copy_file(a, b, fs::copy_options::overwrite_existing);
    REQUIRE(run(invocation).exit_code >= 0);

    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    std::ostringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK_FALSE(sa.str().empty());
}

TEST_CASE("verify refuses generic inputs, naming the failed hypotheses") {
    const auto r = run("verify " + fixture_path("so3.json"));
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("commutator dimension") != std::string::npos);
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(run("verify " + (work_dir() / "does_not_exist.json").string()).exit_code == 2);
    CHECK(run("nonsense-subcommand").exit_code == 2);
    CHECK(run("describe").exit_code == 2);
    CHECK(run("describe " + fixture_path("hyperbolic2.json") + " --format csv").exit_code == 2);
    CHECK(run("verify --all-fixtures " + fixture_path("so3.json")).exit_code == 2);

    const fs::path bad = work_dir() / "bad.json";
    std::ofstream(bad) << "{not json";
    CHECK(run("describe " + bad.string()).exit_code == 2);

    const fs::path closure = work_dir() / "closure.json";
    std::ofstream(closure)
        << R"({"family": "one_dim_commutator", "n": 3, "a": [1, 0, 0], "f": [[0, 0, 0], [0, 0, 1], [0, -1, 0]]})";
    const auto r = run("verify " + closure.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("(0,1,2)") != std::string::npos);
}

TEST_CASE("verify --all-fixtures runs the six family fixtures") {
    const fs::path report_path = work_dir() / "all.json";
    const auto r = run("verify --all-fixtures --format json --output " + report_path.string());
    CHECK(r.exit_code == 1);  // known formula discrepancies gate at least one fixture
    std::ifstream in(report_path);
    REQUIRE(in.good());
    const auto all = nlohmann::json::parse(in);
    CHECK(all.at("reports").size() == 6);
    for (const auto& rep : all.at("reports")) CHECK(rep.at("entries").size() > 0);
}

TEST_CASE("curvature tables: sectional and ricci flags") {
    const auto sect = run("curvature " + fixture_path("so3.json") + " --sectional");
    CHECK(sect.exit_code == 0);
    CHECK(sect.out.find("K(e1,e2) = 0.25") != std::string::npos);

    const auto ric = run("curvature " + fixture_path("heisenberg.json") + " --ricci");
    CHECK(ric.exit_code == 0);
    CHECK(ric.out.find("Ric(e,e) = 0.5") != std::string::npos);

    CHECK(run("curvature " + fixture_path("so3.json") + " --sectional --ricci").exit_code == 2);
}

TEST_CASE("connection table prints the expected special-family row") {
    const auto r = run("connection " + fixture_path("special_n2.json"));
    CHECK(r.exit_code == 0);
    // D[u1] b = -u1
    CHECK(r.out.find("D[u1] b = [-1, 0, 0]") != std::string::npos);
}
