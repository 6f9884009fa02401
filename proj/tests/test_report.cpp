#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "stepmp/cli.hpp"
#include "stepmp/report.hpp"

using namespace stepmp;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("stepmp-test-" + std::to_string(std::random_device{}()) + "-" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return path / name;
  }
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("csv parsing") {
  const CsvTable headed = parse_csv("t,value\n1,0.5\n2, -1e3 \n\n3,\"7\"\n");
  CHECK(headed.header == std::vector<std::string>{"t", "value"});
  CHECK(headed.numeric_column("value") == std::vector<double>{0.5, -1000.0, 7.0});
  CHECK(headed.numeric_column("0") == std::vector<double>{1.0, 2.0, 3.0});
  CHECK_THROWS_AS(headed.numeric_column("missing"), std::invalid_argument);
  CHECK_THROWS_AS(headed.numeric_column("5"), std::invalid_argument);

  const CsvTable bare = parse_csv("1.5,2\n-3,4\n");
  CHECK(bare.header.empty());
  CHECK(bare.numeric_column("1") == std::vector<double>{2.0, 4.0});

  CHECK_THROWS_AS(parse_csv("x\n1\nabc\n").numeric_column("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("x\n1\nnan\n").numeric_column("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("x\n").numeric_column("x"), std::invalid_argument);
  CHECK_THROWS_AS(read_csv("/nonexistent/stepmp.csv"), std::runtime_error);
}

TEST_CASE("run report round-trips through json exactly") {
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> dist(-1e3, 1e3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> values(50);
    for (double& v : values) v = dist(rng) * std::pow(10.0, trial % 7 - 3);
    PursuitConfig config{8, 1e-12, 0.0, trial % 2 ? std::optional<double>(dist(rng)) : std::nullopt};
    const auto expansion = run_pursuit(ScalarSequence(values), config);
    const RunReport report = make_run_report(expansion, config, "in.csv", "value", 0.125);
    const RunReport back = run_report_from_json(nlohmann::json::parse(to_json(report).dump()));
    CHECK(back == report);
  }
  CHECK(std::stod(format_real(0.1)) == 0.1);
  CHECK(format_real(0.1) == "0.1");
}

TEST_CASE("approx command") {
  TempDir dir;
  const auto input = dir.write("block.csv", "value\n0\n3\n3\n3\n0\n");
  const auto report_path = dir.path / "report.json";
  const auto plot_path = dir.path / "plot.csv";
  const CliRun run = run_cli({"approx", input.string(), "--column", "value", "--max-iter", "5",
                              "--residual-eps", "1e-12", "--out", report_path.string(),
                              "--csv-out", plot_path.string()});
  CHECK(run.code == 0);
  const auto doc = nlohmann::json::parse(slurp(report_path));
  CHECK(doc.at("terms").size() == 1);
  CHECK(doc.at("terms")[0].at("start") == 2);
  CHECK(doc.at("terms")[0].at("length") == 3);
  CHECK(doc.at("residual_norms").back() == 0.0);
  CHECK(doc.at("breakpoints") == nlohmann::json::array({1, 4}));
  CHECK(slurp(plot_path).rfind("t,value,reconstruction\n1,0,0\n2,3,3\n", 0) == 0);
  CHECK_FALSE(fs::exists(dir.path / "report.json.tmp"));

  const auto shifted = dir.write("noise.csv", "-0.3\n1.2\n0.4\n-2.1\n0.05\n");
  const CliRun with_shift = run_cli({"approx", shifted.string(), "--shift", "10", "--max-iter", "2"});
  CHECK(with_shift.code == 0);
  const auto sdoc = nlohmann::json::parse(with_shift.out);
  CHECK(sdoc.at("shift") == 10.0);
  CHECK(sdoc.at("config").at("pre_shift") == 10.0);
  // Two terms on shifted data: the reconstruction has the shift removed.
  const auto recon = sdoc.at("reconstruction").get<std::vector<double>>();
  for (double v : recon) CHECK(std::abs(v) < 3.0);

  const CliRun missing = run_cli({"approx", (dir.path / "absent.csv").string()});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  const auto bad = dir.write("bad.csv", "v\n1\nx2\n");
  CHECK(run_cli({"approx", bad.string()}).code == 2);
  const auto empty = dir.write("empty.csv", "v\n");
  CHECK(run_cli({"approx", empty.string()}).code == 2);
  CHECK(run_cli({"approx", input.string(), "--max-iter", "0"}).code == 2);
  CHECK(run_cli({"approx", input.string(), "--column", "nope"}).code == 2);
}

TEST_CASE("simulate command") {
  const CliRun sim1 = run_cli({"simulate", "sim1-3state", "--T", "250", "--seed", "1"});
  CHECK(sim1.code == 0);
  const CsvTable table = parse_csv(sim1.out);
  CHECK(table.header == std::vector<std::string>{"t", "value", "state", "true_mean"});
  CHECK(table.rows.size() == 250);
  for (double s : table.numeric_column("state")) CHECK((s == 1.0 || s == 2.0 || s == 3.0));
  CHECK(run_cli({"simulate", "sim1-3state", "--T", "250", "--seed", "1"}).out == sim1.out);

  const CliRun normal = run_cli({"simulate", "normal-mean2", "--T", "500"});
  CHECK(normal.code == 0);
  const CsvTable ntable = parse_csv(normal.out);
  CHECK(ntable.rows.size() == 500);
  for (double m : ntable.numeric_column("true_mean")) CHECK(m == 2.0);

  CHECK(parse_csv(run_cli({"simulate", "ar2"}).out).rows.size() == 100);
  CHECK(run_cli({"simulate", "sim1-3state", "--T", "0"}).code == 2);
  CHECK(run_cli({"simulate", "no-such-preset"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("compare command") {
  TempDir dir;
  const auto data = dir.path / "sim1.csv";
  REQUIRE(run_cli({"simulate", "sim1-3state", "--T", "250", "--seed", "3", "--out", data.string()})
              .code == 0);
  const CliRun run = run_cli({"compare", data.string(), "--max-iter", "11"});
  CHECK(run.code == 0);
  const auto doc = nlohmann::json::parse(run.out);
  CHECK(doc.at("mse_pursuit").get<double>() < doc.at("mse_raw").get<double>());
  CHECK(doc.at("kmeans").at("centers").size() == 2);

  const auto flat = dir.write("flat.csv", "value,true_mean\n4,4\n4,4\n4,4\n4,4\n");
  const auto fdoc = nlohmann::json::parse(run_cli({"compare", flat.string(), "--max-iter", "1"}).out);
  CHECK(fdoc.at("mse_pursuit") == 0.0);
  CHECK(fdoc.at("mse_raw") == 0.0);
  CHECK(fdoc.at("kmeans").at("mse") == 0.0);

  const auto two = dir.path / "two.csv";
  REQUIRE(run_cli({"simulate", "kmeans-2state", "--seed", "2", "--out", two.string()}).code == 0);
  const auto kdoc = nlohmann::json::parse(run_cli({"compare", two.string(), "--k", "2"}).out);
  const auto centers = kdoc.at("kmeans").at("centers").get<std::vector<double>>();
  CHECK(std::abs(centers[0] + 0.2) < 0.05);
  CHECK(std::abs(centers[1] - 0.2) < 0.05);

  const auto no_truth = dir.write("no_truth.csv", "value\n1\n2\n");
  CHECK(run_cli({"compare", no_truth.string()}).code == 2);
}

TEST_CASE("verify command") {
  const CliRun lemma2 = run_cli({"verify", "lemma2", "--trials", "5"});
  CHECK(lemma2.code == 0);
  CHECK(lemma2.out.find("PASS lemma2") != std::string::npos);

  const CliRun energy = run_cli({"verify", "energy", "--trials", "10", "--n", "64"});
  CHECK(energy.code == 0);

  const CliRun theorem2 = run_cli({"verify", "theorem2", "--trials", "3", "--n", "5", "--grid-step", "0.05"});
  CHECK(theorem2.code == 0);

  CHECK(run_cli({"verify", "remark", "--trials", "100"}).code == 0);
  CHECK(run_cli({"verify", "lemma1", "--trials", "2", "--n", "4"}).code == 0);
  CHECK(run_cli({"verify", "theorem1", "--trials", "2", "--n", "3", "--grid-step", "0.1"}).code == 0);
  CHECK(run_cli({"verify", "bogus"}).code == 2);
  CHECK(run_cli({"verify", "energy", "--trials", "0"}).code == 2);
}
