#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dictatorlab/cli.hpp"
#include "dictatorlab/io.hpp"
#include "support.hpp"

using namespace dictatorlab;

namespace {

std::filesystem::path test_dir() {
    static const std::filesystem::path dir = [] {
        const auto d = std::filesystem::temp_directory_path() / "dictatorlab_tests";
        std::filesystem::remove_all(d);
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("dictatorlab");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("grid function files") {
    SUBCASE("save/load round trip is bit-exact") {
        std::mt19937_64 rng(79);
        const GridFunction f = testsupport::random_function(GridShape(5, 3), rng);
        const auto path = test_dir() / "roundtrip.json";
        save_grid_function(f, path);
        const GridFunction g = load_grid_function(path);
        REQUIRE(g.shape() == f.shape());
        for (std::int64_t i = 0; i < f.shape().size(); ++i) CHECK(f[i] == g[i]);
    }

    SUBCASE("the ones form loads identically to the dense form") {
        const auto dense = test_dir() / "dense.json";
        const auto ones = test_dir() / "ones.json";
        save_grid_function(testsupport::two_point_example_function(), dense);
        spit(ones, R"({"r":3,"n":2,"ones":[0,3]})");
        const GridFunction a = load_grid_function(dense);
        const GridFunction b = load_grid_function(ones);
        for (std::int64_t i = 0; i < 9; ++i) CHECK(a[i] == b[i]);
    }

    SUBCASE("schema violations") {
        const auto bad = test_dir() / "bad.json";
        spit(bad, R"({"r":1,"n":2,"ones":[0]})");
        CHECK_THROWS_AS(load_grid_function(bad), ValidationError);
        spit(bad, R"({"r":3,"n":0,"ones":[0]})");
        CHECK_THROWS_AS(load_grid_function(bad), ValidationError);
        spit(bad, R"({"r":3,"n":2,"values":[[0,0]],"ones":[0]})");
        CHECK_THROWS_AS(load_grid_function(bad), ValidationError);
        spit(bad, R"({"r":3,"n":2,"values":[[0,0],[0,0]]})");
        CHECK_THROWS_AS(load_grid_function(bad), ValidationError);
        spit(bad, R"({"r":3,"n":2,"ones":[9]})");
        CHECK_THROWS_AS(load_grid_function(bad), ValidationError);
        spit(bad, "not json");
        CHECK_THROWS_AS(load_grid_function(bad), ValidationError);
        CHECK_THROWS_AS(load_grid_function(test_dir() / "missing.json"), IoError);
    }
}

TEST_CASE("vertex set and spectrum files") {
    const auto path = test_dir() / "set.json";
    save_vertex_set(testsupport::two_point_example_set(), path);
    const VertexSet vs = load_vertex_set(path);
    CHECK(vs.members() == std::vector<std::int64_t>{0, 3});

    const nlohmann::json j = nlohmann::json::parse(slurp(path));
    CHECK(j["vertices"].size() == 2);
    CHECK(j["vertices"][0] == nlohmann::json::array({0, 0}));
    CHECK(j["vertices"][1] == nlohmann::json::array({0, 1}));

    spit(path, R"({"r":3,"n":2,"vertices":[[0,0,0]]})");
    CHECK_THROWS_AS(load_vertex_set(path), ValidationError);
    spit(path, R"({"r":3,"n":2,"vertices":[[0,3]]})");
    CHECK_THROWS_AS(load_vertex_set(path), ValidationError);

    const auto spec_path = test_dir() / "spec.json";
    std::mt19937_64 rng(83);
    const Spectrum spec = fast_forward(testsupport::random_function(GridShape(4, 2), rng));
    save_spectrum(spec, spec_path);
    const Spectrum back = load_spectrum(spec_path);
    for (std::int64_t i = 0; i < spec.shape().size(); ++i) CHECK(spec[i] == back[i]);
}

TEST_CASE("report serialization") {
    const auto [dict, report] = recover_independent_set(testsupport::two_point_example_set());
    (void)dict;
    const nlohmann::json j = nlohmann::json::parse(report_to_json(report));
    CHECK(j["r"] == 3);
    CHECK(j["n"] == 2);
    CHECK(j["epsilon"]["num"] == 1);
    CHECK(j["epsilon"]["den"] == 3);
    CHECK(j["symdiff"]["num"] == 1);
    CHECK(j["symdiff"]["den"] == 9);
    CHECK(j["recovery"]["i0"] == 1);
    CHECK(j["recovery"]["dictator"]["coord"] == 1);
    CHECK(j["recovery"]["dictator"]["value"] == 0);
    CHECK(j["recovery"]["g1"] == nlohmann::json::array({1, 0, 0}));
    CHECK(j["hypotheses"]["level1_le_inv_r"] == true);
    CHECK(j["oracle_agrees"] == true);
}

TEST_CASE("verify corpus rows") {
    const GridShape shape(3, 2);
    const auto rows = run_perturbation_corpus(shape, 1, 5, 0);
    REQUIRE(rows.size() == 10);  // k in {0,1} x 5 seeds
    for (const VerifyTrial& t : rows) {
        CHECK(t.recovered.coord == t.source.coord);
        CHECK(t.recovered.value == t.source.value);
        CHECK(t.oracle_agrees);
        CHECK(t.symdiff == Rational(t.k, shape.size()));
    }
    CHECK(verify_csv(rows, "x") == verify_csv(run_perturbation_corpus(shape, 1, 5, 0), "x"));

    const std::string csv = verify_csv(rows, "provenance line");
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "# provenance line");
    std::getline(lines, line);
    CHECK(line == "r,n,k,seed,epsilon,tail_weight,tail_bound,i0,j,symdiff,theorem_bound,oracle_agrees");
}

TEST_CASE("cli subcommands") {
    SUBCASE("spectrum") {
        const auto in = test_dir() / "cli_fn.json";
        const auto out = test_dir() / "cli_levels.csv";
        spit(in, R"({"r":3,"n":2,"ones":[0,3]})");
        CHECK(run_cli({"spectrum", "--in", in.string(), "--out", out.string()}) == 0);
        std::istringstream lines(slurp(out));
        std::string line;
        std::getline(lines, line);
        CHECK(line == "level,weight");
        int rows = 0;
        while (std::getline(lines, line))
            if (!line.empty()) ++rows;
        CHECK(rows == 3);
    }

    SUBCASE("recover emits the report") {
        const auto in = test_dir() / "cli_set.json";
        const auto out = test_dir() / "cli_report.json";
        save_vertex_set(testsupport::two_point_example_set(), in);
        CHECK(run_cli({"recover", "--set", in.string(), "--out", out.string()}) == 0);
        const nlohmann::json j = nlohmann::json::parse(slurp(out));
        CHECK(j["symdiff"]["num"] == 1);
        CHECK(j["symdiff"]["den"] == 9);
    }

    SUBCASE("recover on a non-independent set fails with exit 1 and no output") {
        const auto in = test_dir() / "cli_bad_set.json";
        const auto out = test_dir() / "cli_bad_report.json";
        spit(in, R"({"r":3,"n":2,"vertices":[[0,0],[1,1]]})");
        CHECK(run_cli({"recover", "--set", in.string(), "--out", out.string()}) == 1);
        CHECK_FALSE(std::filesystem::exists(out));
    }

    SUBCASE("missing input file exits 2") {
        CHECK(run_cli({"recover", "--set", (test_dir() / "nope.json").string()}) == 2);
    }

    SUBCASE("enumerate prints one set per line") {
        const auto out = test_dir() / "cli_enum.txt";
        CHECK(run_cli({"enumerate", "--r", "3", "--n", "2", "--size", "3", "--out", out.string()}) == 0);
        std::istringstream lines(slurp(out));
        std::string line;
        int rows = 0;
        while (std::getline(lines, line))
            if (!line.empty()) ++rows;
        CHECK(rows == 6);
    }

    SUBCASE("verify is byte-identical across repeated runs") {
        const auto out1 = test_dir() / "verify1.csv";
        const auto out2 = test_dir() / "verify2.csv";
        const std::vector<std::string> args{"verify", "--r", "3", "--n", "2", "--k", "1",
                                            "--seeds", "5", "--seed", "0"};
        auto with_out = [&](const std::filesystem::path& p) {
            std::vector<std::string> a = args;
            a.push_back("--out");
            a.push_back(p.string());
            return a;
        };
        CHECK(run_cli(with_out(out1)) == 0);
        CHECK(run_cli(with_out(out2)) == 0);
        CHECK(slurp(out1) == slurp(out2));
    }

    SUBCASE("verify --set rejects a non-independent set naming the pair") {
        const auto in = test_dir() / "cli_bad_set2.json";
        spit(in, R"({"r":3,"n":2,"vertices":[[0,0],[1,1]]})");
        CHECK(run_cli({"verify", "--set", in.string()}) == 1);
    }

    SUBCASE("corpus output feeds recover") {
        const auto set_path = test_dir() / "cli_corpus.json";
        CHECK(run_cli({"corpus", "--r", "5", "--n", "2", "--coord", "1", "--value", "0", "--k", "1",
                       "--seed", "7", "--out", set_path.string()}) == 0);
        const IndependentSet j(load_vertex_set(set_path));
        CHECK(j.size() == 4);
        CHECK(run_cli({"recover", "--set", set_path.string(), "--out",
                       (test_dir() / "cli_corpus_report.json").string()}) == 0);
    }

    SUBCASE("bennett evaluates both bounds") {
        CHECK(run_cli({"bennett", "--sigma2", "1", "--c", "1", "--t", "1"}) == 0);
    }

    SUBCASE("usage errors exit 1") {
        CHECK(run_cli({"verify"}) == 1);                      // neither --set nor --r/--n
        CHECK(run_cli({"no_such_command"}) == 1);
        CHECK(run_cli({"enumerate", "--r", "3"}) == 1);       // missing --n
    }

    SUBCASE("size cap env override") {
        REQUIRE(setenv("DICTATORLAB_SIZE_CAP", "8", 1) == 0);
        const auto in = test_dir() / "cli_cap.json";
        spit(in, R"({"r":3,"n":2,"ones":[0]})");
        CHECK(run_cli({"spectrum", "--in", in.string()}) == 1);  // 9 > 8
        REQUIRE(setenv("DICTATORLAB_SIZE_CAP", "noise", 1) == 0);
        CHECK(run_cli({"spectrum", "--in", in.string()}) == 1);
        REQUIRE(unsetenv("DICTATORLAB_SIZE_CAP") == 0);
        const auto out = test_dir() / "cli_cap.csv";
        CHECK(run_cli({"spectrum", "--in", in.string(), "--out", out.string()}) == 0);
    }
}
