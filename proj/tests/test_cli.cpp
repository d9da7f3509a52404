#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "rhomnk/experiment.hpp"
#include "rhomnk/landscape.hpp"

namespace fs = std::filesystem;
using namespace rhomnk;

namespace {

const std::string cli = RHOMNK_CLI_PATH;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("rhomnk_cli_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static inline int counter = 0;
};

int run(const std::string& args) {
  const std::string cmd = cli + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int run_capture(const std::string& args, const fs::path& stderr_file) {
  const std::string cmd =
      cli + " " + args + " >/dev/null 2>" + stderr_file.string();
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("generate writes a re-readable, reproducible instance") {
  TempDir dir;
  const fs::path file = dir.path / "inst.txt";
  CHECK(run("generate --m 2 --n 10 --k 4 --rho 0.9 --seed 7 --model random --out " +
            file.string()) == 0);
  const Instance inst = read_instance_file(file.string());
  CHECK(inst.params.m == 2);
  CHECK(inst.params.n == 10);
  CHECK(inst.params.k == 4);
  CHECK(inst.params.seed == 7);
  CHECK(inst.params.correlation.at(0, 1) == 0.9);

  const fs::path file2 = dir.path / "inst2.txt";
  CHECK(run("generate --m 2 --n 10 --k 4 --rho 0.9 --seed 7 --model random --out " +
            file2.string()) == 0);
  CHECK(slurp(file) == slurp(file2));
}

TEST_CASE("generate rejects out-of-range correlations with exit 2") {
  TempDir dir;
  const fs::path err = dir.path / "stderr.txt";
  CHECK(run_capture("generate --m 3 --rho -0.6 --out " + (dir.path / "x.txt").string(),
                    err) == 2);
  CHECK(slurp(err).find("-0.5") != std::string::npos);
}

TEST_CASE("analyze emits consistent reports") {
  TempDir dir;
  const fs::path file = dir.path / "inst.txt";
  REQUIRE(run("generate --m 2 --n 10 --k 2 --rho 0.9 --seed 3 --out " + file.string()) == 0);
  const fs::path out = dir.path / "analysis";
  CHECK(run("analyze --instance " + file.string() + " --out-dir " + out.string() +
            " --baseline-repeats 5 --plot") == 0);

  const std::string csv = slurp(out / "efficient.csv");
  CHECK(csv.rfind("# rhomnk", 0) == 0);
  CHECK(csv.find("# config ") != std::string::npos);
  CHECK(csv.find("solution,bits,f1,f2,supported,lambda1,lambda2") != std::string::npos);

  const auto report = nlohmann::json::parse(slurp(out / "report.json"));
  const uint64_t n_efficient = report["efficient"]["count"];
  const uint64_t n_supported = report["supported"]["count"];
  CHECK(n_efficient >= 1);
  CHECK(n_supported <= n_efficient);
  CHECK(report["n_solutions"] == 1024);

  // CSV data rows match the efficient count, supported flags the supported count
  size_t rows = 0, flagged = 0;
  std::istringstream lines(csv);
  std::string line;
  bool past_header = false;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!past_header) {
      past_header = true;
      continue;
    }
    ++rows;
    // supported flag is the 5th comma-separated field (m=2)
    size_t pos = 0;
    for (int c = 0; c < 4; ++c) pos = line.find(',', pos) + 1;
    if (line[pos] == '1') ++flagged;
  }
  CHECK(rows == n_efficient);
  CHECK(flagged == n_supported);

  const std::string svg = slurp(out / "objspace.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("config") != std::string::npos);
}

TEST_CASE("plot refuses non-two-objective instances with exit 5") {
  TempDir dir;
  const fs::path file = dir.path / "inst3.txt";
  REQUIRE(run("generate --m 3 --n 8 --k 1 --rho 0.2 --seed 1 --out " + file.string()) == 0);
  CHECK(run("plot --instance " + file.string() + " --out " +
            (dir.path / "x.svg").string()) == 5);
  const fs::path out = dir.path / "analysis";
  CHECK(run("analyze --instance " + file.string() + " --out-dir " + out.string() +
            " --baseline-repeats 2 --plot") == 5);
}

TEST_CASE("plot writes an svg for two objectives") {
  TempDir dir;
  const fs::path file = dir.path / "inst.txt";
  REQUIRE(run("generate --m 2 --n 8 --k 2 --rho -0.4 --seed 5 --out " + file.string()) == 0);
  const fs::path svg = dir.path / "space.svg";
  CHECK(run("plot --instance " + file.string() + " --out " + svg.string()) == 0);
  CHECK(slurp(svg).find("</svg>") != std::string::npos);
}

TEST_CASE("analyze propagates the enumeration guard as exit 3") {
  TempDir dir;
  InstanceParams p;
  p.m = 2;
  p.n = 30;
  p.k = 1;
  p.link_model = LinkModel::random;
  p.correlation = uniform_rho_matrix(0.0, 2);
  p.seed = 1;
  const fs::path file = dir.path / "big.txt";
  write_instance_file(generate_instance(p), file.string());
  CHECK(run("analyze --instance " + file.string() + " --out-dir " +
            (dir.path / "a").string()) == 3);
}

TEST_CASE("experiment runs, resumes and ignores worker count") {
  TempDir dir;
  const std::string grid_flags =
      "experiment --rho -0.4,0.4 --m 2 --k 2 --n 8 --replicates 2 --seed 11 "
      "--baseline-repeats 3 ";
  const fs::path out_a = dir.path / "a";
  CHECK(run(grid_flags + "--workers 1 --out-dir " + out_a.string()) == 0);

  const std::string results = slurp(out_a / "results.csv");
  CHECK(results.rfind("# rhomnk", 0) == 0);
  {
    std::istringstream in(results);
    std::string digest;
    const auto rows = read_results_csv(in, &digest);
    CHECK(rows.size() == 4);
    CHECK(digest.size() == 16);
  }
  const std::string aggregate_text = slurp(out_a / "aggregate.csv");
  CHECK(std::count(aggregate_text.begin(), aggregate_text.end(), '\n') == 3 + 1 + 2);

  // a different worker count must give byte-identical outputs
  const fs::path out_b = dir.path / "b";
  CHECK(run(grid_flags + "--workers 2 --out-dir " + out_b.string()) == 0);
  CHECK(slurp(out_b / "results.csv") == results);
  CHECK(slurp(out_b / "aggregate.csv") == aggregate_text);

  // truncate to two data rows plus a partial line, then resume
  {
    std::istringstream in(results);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    std::ofstream out(out_a / "results.csv", std::ios::binary | std::ios::trunc);
    for (size_t i = 0; i < 6; ++i) out << lines[i] << '\n';  // header(4) + 2 rows
    out << lines[6].substr(0, 10);                           // partial row
  }
  CHECK(run(grid_flags + "--workers 2 --out-dir " + out_a.string()) == 0);
  CHECK(slurp(out_a / "results.csv") == results);
  CHECK(slurp(out_a / "aggregate.csv") == aggregate_text);

  // a different master seed must refuse to resume
  CHECK(run("experiment --rho -0.4,0.4 --m 2 --k 2 --n 8 --replicates 2 --seed 12 "
            "--baseline-repeats 3 --out-dir " +
            out_a.string()) == 4);
}

TEST_CASE("experiment rejects infeasible rho bounds with exit 2") {
  TempDir dir;
  CHECK(run("experiment --rho -0.9 --m 3 --k 1 --n 6 --replicates 1 --seed 1 --out-dir " +
            (dir.path / "x").string()) != 0);
}
