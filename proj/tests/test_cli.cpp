#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"
#include "fixtures.hpp"
#include "perronkit/io.hpp"

using namespace perronkit;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    json record() const { return json::parse(out); }
};

Outcome run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("perronkit_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
        eq41_ = write("eq41.mtx", fixture::three_by_three());
        eq6_ = write("eq6.mtx", fixture::imprimitive());
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const NonnegMatrix& a) {
        const auto path = dir_ / name;
        std::ofstream f(path);
        io::write_matrix_market(f, a, io::MatrixMarketLayout::Coordinate);
        return path.string();
    }
    std::string write_text(const std::string& name, const std::string& text) {
        const auto path = dir_ / name;
        std::ofstream(path) << text;
        return path.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
    std::string eq41_, eq6_;
};

std::vector<std::vector<std::string>> read_csv_rows(const std::string& path) {
    std::ifstream f(path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(f, line)) {
        std::vector<std::string> cells;
        std::stringstream s(line);
        std::string cell;
        while (std::getline(s, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_F(Cli, PerronThreeByThree) {
    const Outcome r = run({"perron", "--algo", "b", "--side", "auto", eq41_});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = r.record();
    EXPECT_EQ(j["command"], "perron");
    EXPECT_EQ(j["input"], eq41_);
    EXPECT_NEAR(j["result"]["root"].get<double>(), fixture::kThreeByThreeRoot, 1e-6);
    EXPECT_EQ(j["result"]["side_used"], "col");
    EXPECT_EQ(j["result"]["status"], "converged");
    EXPECT_EQ(j["result"]["eigenvector"].size(), 3u);
    EXPECT_EQ(j["config"]["algorithm"], "b");
    EXPECT_EQ(j["config"]["tolerance"], 1e-8);
    EXPECT_TRUE(j.contains("timing_ms"));
    EXPECT_TRUE(j.contains("version"));
    EXPECT_FALSE(j["result"].contains("balanced"));
}

TEST_F(Cli, PerronFullJsonRoundTrips) {
    const Outcome r = run({"perron", "--json", "--algo", "a", eq41_});
    ASSERT_EQ(r.code, 0);
    const json j = r.record();
    EXPECT_TRUE(j["result"]["eigenvector"].is_null());
    EXPECT_EQ(j["result"]["balanced"]["storage"], "csr");
    EXPECT_EQ(j["result"]["history"]["rmin"].size(), j["result"]["iterations"].get<std::size_t>() + 1);
    EXPECT_EQ(json::parse(j.dump()), j);
    EXPECT_EQ(json::parse(j.dump(2)), j);
}

TEST_F(Cli, ResultPayloadIsDeterministic) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"perron", "--json", eq41_}, {"power", "--json", eq41_}, {"bounds", eq41_},
          {"primitivity", eq6_}}) {
        json a = run(args).record(), b = run(args).record();
        a.erase("timing_ms");
        b.erase("timing_ms");
        EXPECT_EQ(a.dump(), b.dump());
    }
}

TEST_F(Cli, ImprimitiveExitsWithStagnation) {
    const Outcome r = run({"perron", "--side", "row", eq6_});
    EXPECT_EQ(r.code, cli::kExitStagnated);
    EXPECT_EQ(r.record()["result"]["status"], "stagnated");
    EXPECT_NE(r.err.find("stagnated"), std::string::npos);
}

TEST_F(Cli, MaxIterationsExitCodeAndEnvironment) {
    const Outcome r = run({"perron", "--max-iter", "2", eq41_});
    EXPECT_EQ(r.code, cli::kExitMaxIterations);
    EXPECT_EQ(r.record()["result"]["iterations"], 2);

    ::setenv("PERRONKIT_MAX_ITER", "3", 1);
    EXPECT_EQ(cli::default_max_iterations(), 3u);
    const Outcome e = run({"perron", eq41_});
    EXPECT_EQ(e.code, cli::kExitMaxIterations);
    EXPECT_EQ(e.record()["config"]["max_iterations"], 3);
    const Outcome flag = run({"perron", "--max-iter", "100", eq41_});
    EXPECT_EQ(flag.code, 0);
    ::setenv("PERRONKIT_MAX_ITER", "junk", 1);
    EXPECT_EQ(cli::default_max_iterations(), 100000u);
    ::unsetenv("PERRONKIT_MAX_ITER");
}

TEST_F(Cli, InputErrors) {
    EXPECT_EQ(run({"perron", path("missing.mtx")}).code, cli::kExitInputError);
    const auto neg = write_text("neg.csv", "1,-2\n3,4\n");
    const Outcome r = run({"perron", neg});
    EXPECT_EQ(r.code, cli::kExitInputError);
    EXPECT_NE(r.err.find("negative entry"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(run({"perron", "--side", "diagonal", eq41_}).code, cli::kExitInputError);
    EXPECT_EQ(run({"perron", "--tol", "-1", eq41_}).code, cli::kExitInputError);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitInputError);
    EXPECT_EQ(run({}).code, cli::kExitInputError);
    const auto zero = write_text("zero.csv", "1,1\n0,0\n");
    EXPECT_EQ(run({"perron", "--side", "row", zero}).code, cli::kExitInputError);
}

TEST_F(Cli, HelpAndVersion) {
    const Outcome h = run({"--help"});
    EXPECT_EQ(h.code, 0);
    EXPECT_NE(h.out.find("perron"), std::string::npos);
    const Outcome v = run({"--version"});
    EXPECT_EQ(v.code, 0);
    EXPECT_FALSE(v.out.empty());
}

TEST_F(Cli, CsvInput) {
    const auto csv = write_text("eq41.csv", "2,1,0\n0.5,3,2\n1,2,4\n");
    const Outcome r = run({"perron", "--format", "csv", csv});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(r.record()["result"]["root"].get<double>(), fixture::kThreeByThreeRoot, 1e-6);
    EXPECT_EQ(run({"perron", csv}).code, 0);
}

TEST_F(Cli, TraceIsMonotone) {
    const auto trace = path("trace.csv");
    ASSERT_EQ(run({"perron", "--trace", trace, eq41_}).code, 0);
    const auto rows = read_csv_rows(trace);
    ASSERT_GE(rows.size(), 3u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"iter", "rmin", "rmax"}));
    for (std::size_t k = 2; k < rows.size(); ++k) {
        EXPECT_GE(std::stod(rows[k][1]), std::stod(rows[k - 1][1]));
        EXPECT_LE(std::stod(rows[k][2]), std::stod(rows[k - 1][2]));
    }
}

TEST_F(Cli, DiscsAlignAtConvergence) {
    const auto discs = path("discs.csv");
    const Outcome r = run({"perron", "--discs", discs, eq41_});
    ASSERT_EQ(r.code, 0);
    const double root = r.record()["result"]["root"];
    const std::size_t iters = r.record()["result"]["iterations"];
    const auto rows = read_csv_rows(discs);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"iter", "index", "center", "radius"}));
    ASSERT_EQ(rows.size(), 1 + 3 * (iters + 1));
    for (std::size_t k = rows.size() - 3; k < rows.size(); ++k) {
        EXPECT_EQ(std::stoul(rows[k][0]), iters);
        EXPECT_LE(std::abs(std::stod(rows[k][2]) + std::stod(rows[k][3]) - root), 1e-7);
    }
}

TEST_F(Cli, Power) {
    const Outcome r = run({"power", "--json", eq41_});
    ASSERT_EQ(r.code, 0);
    const json j = r.record();
    EXPECT_NEAR(j["result"]["eigenvalue"].get<double>(), fixture::kThreeByThreeRoot, 1e-6);
    EXPECT_EQ(j["result"]["eigenvector"].size(), 3u);
    EXPECT_EQ(run({"power", "--max-iter", "5", eq6_}).code, cli::kExitMaxIterations);
    const Outcome col = run({"power", "--side", "col", eq41_});
    EXPECT_EQ(col.record()["config"]["side"], "col");
}

TEST_F(Cli, Bounds) {
    const Outcome r = run({"bounds", eq41_});
    ASSERT_EQ(r.code, 0);
    const json res = r.record()["result"];
    EXPECT_EQ(res["frobenius_row"], json::array({3.0, 7.0}));
    EXPECT_EQ(res["frobenius_col"], json::array({3.5, 6.0}));
    EXPECT_LE(res["minc_col"][1].get<double>(), 6.0);
}

TEST_F(Cli, Primitivity) {
    const json j = run({"primitivity", eq6_}).record();
    EXPECT_EQ(j["result"]["irreducible"], true);
    EXPECT_EQ(j["result"]["primitive"], false);
    EXPECT_EQ(j["result"]["wielandt_bound"], 5);
}

TEST_F(Cli, Stationary) {
    const auto p = write_text("p.csv", "0.9,0.1\n0.5,0.5\n");
    const Outcome r = run({"stationary", "--alpha", "1", p});
    ASSERT_EQ(r.code, 0) << r.err;
    const json res = r.record()["result"];
    EXPECT_NEAR(res["u"][0].get<double>(), 5.0 / 6.0, 1e-8);
    EXPECT_EQ(res["ranking"], json::array({0, 1}));
    const auto near = write_text("near.csv", "9,1\n5,5\n");
    EXPECT_EQ(run({"stationary", near}).code, cli::kExitInputError);
    const Outcome n = run({"stationary", "--normalize", near});
    EXPECT_EQ(n.code, 0);
    EXPECT_EQ(n.record()["config"]["alpha"], 0.85);
    EXPECT_EQ(run({"stationary", "--alpha", "0", p}).code, cli::kExitInputError);
}

TEST_F(Cli, GenThenPerron) {
    const auto t50 = path("t50.mtx");
    ASSERT_EQ(run({"gen", "tridiag", "--n", "50", "--a", "3", "--b", "2", "--c", "1", "-o", t50}).code, 0);
    const Outcome r = run({"perron", "--algo", "b", t50});
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(r.record()["result"]["root"].get<double>(), 5.823063, 1e-6);

    const Outcome cycle = run({"gen", "cycle", "--n", "4"});
    ASSERT_EQ(cycle.code, 0);
    std::istringstream in(cycle.out);
    EXPECT_EQ(io::read_matrix_market(in).stored_entries(), 4u);

    const Outcome rnd = run({"gen", "random", "--n", "6", "--seed", "3", "--layout", "array"});
    ASSERT_EQ(rnd.code, 0);
    EXPECT_EQ(rnd.out.rfind("%%MatrixMarket matrix array", 0), 0u);
    EXPECT_EQ(run({"gen", "tridiag", "--n", "1"}).code, cli::kExitInputError);
}

TEST_F(Cli, Bench) {
    const auto summary = path("summary.json");
    const Outcome r = run({"bench", "--suite", "tridiag", "--orders", "5", "10", "--summary", summary});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream csv(r.out);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(csv, line)) ++lines;
    EXPECT_EQ(lines, 3u);
    std::ifstream f(summary);
    const json s = json::parse(f);
    EXPECT_EQ(s["records"], 2);
    EXPECT_EQ(s["all_methods_converged"], 2);
}

TEST(CliExitCodes, MapStatuses) {
    EXPECT_EQ(cli::exit_code(Status::Converged), 0);
    EXPECT_EQ(cli::exit_code(Status::Stagnated), 2);
    EXPECT_EQ(cli::exit_code(Status::MaxIterations), 3);
}
