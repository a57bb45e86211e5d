// Drives the installed command-line binary end to end: exit codes, byte
// determinism of the cache, and cross-format value identity.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#ifndef MEANOMEGA_BIN
#error "MEANOMEGA_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(MEANOMEGA_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    rows.push_back(fields);
  }
  return rows;
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("sieve --help").exit_code == 0);
  CHECK(run("").exit_code == 1);                    // subcommand required
  CHECK(run("frobnicate").exit_code == 1);          // unknown subcommand
  CHECK(run("sieve --out x.cache").exit_code == 1); // missing required flag
  CHECK(run("sieve --checkpoints banana --out x.cache").exit_code == 1);
  CHECK(run("sum --cache c --k 2 --format yaml").exit_code == 1);
}

TEST_CASE("cache bytes are identical across threads and segment sizes") {
  std::string base = "sieve --checkpoints 1e3,1e4,1e5 --quiet";
  std::vector<std::string> files;
  int idx = 0;
  for (const char* threads : {"1", "4"}) {
    for (const char* seg : {"65536", "1048576"}) {
      std::string f = "cli_det_" + std::to_string(idx++) + ".cache";
      auto r = run(base + " --threads " + threads + " --segment-size " + seg +
                   " --out " + f);
      REQUIRE(r.exit_code == 0);
      files.push_back(f);
    }
  }
  std::string ref = slurp(files[0]);
  CHECK(!ref.empty());
  for (const auto& f : files) CHECK(slurp(f) == ref);
  for (const auto& f : files) std::remove(f.c_str());
}

TEST_CASE("environment variable overrides the threads flag") {
  auto ok = run("sieve --checkpoints 1e4 --out cli_env.cache --threads 1 --quiet",
                "MEANOMEGA_THREADS=4");
  CHECK(ok.exit_code == 0);
  std::remove("cli_env.cache");
  auto bad = run("sieve --checkpoints 1e4 --out cli_env.cache --quiet",
                 "MEANOMEGA_THREADS=banana");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("sum emits exact rationals and canonical floats") {
  REQUIRE(run("sieve --checkpoints 1e3,1e4,1e5 --out cli_sum.cache --quiet")
              .exit_code == 0);
  auto r = run("sum --cache cli_sum.cache --k 2");
  REQUIRE(r.exit_code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"x", "S_num", "S_den", "S"});
  CHECK(rows[3][0] == "100000");
  CHECK(rows[3][1] == "2280935");
  CHECK(rows[3][2] == "16");
  CHECK(rows[3][3] == "142558.4375");

  SUBCASE("json carries bit-identical values") {
    auto j = run("sum --cache cli_sum.cache --k 2 --format json");
    REQUIRE(j.exit_code == 0);
    auto doc = nlohmann::json::parse(j.out);
    REQUIRE(doc.size() == 3);
    CHECK(doc[2]["x"] == 100000);
    CHECK(doc[2]["S_num"] == "2280935");
    CHECK(doc[2]["S_den"] == "16");
    double csv_val = std::strtod(rows[3][3].c_str(), nullptr);
    CHECK(doc[2]["S"].get<double>() == csv_val);
  }
  std::remove("cli_sum.cache");
}

TEST_CASE("io failures exit with the io code") {
  CHECK(run("sum --cache does_not_exist.cache --k 2").exit_code == 3);
  std::ofstream bad("cli_corrupt.cache");
  bad << "not a cache\n";
  bad.close();
  CHECK(run("sum --cache cli_corrupt.cache --k 2").exit_code == 3);
  std::remove("cli_corrupt.cache");
  CHECK(run("sieve --checkpoints 1e3 --out no/such/dir/out.cache --quiet")
            .exit_code == 3);
}

TEST_CASE("verification subcommand maps pass and fail to exit codes") {
  CHECK(run("verify --lemma 1 --k 2 --x 1e5").exit_code == 0);
  CHECK(run("verify --lemma 3 --k 4 --x 1e5").exit_code == 0);
  // theta is flat between adjacent integers, so this window must fail
  CHECK(run("verify --lemma 2 --k 2 --checkpoints 10000,10001").exit_code == 2);
  CHECK(run("verify --lemma 9 --k 2 --x 1e5").exit_code == 1);
  CHECK(run("verify --lemma 6 --z 3.0 --checkpoints 1e4").exit_code == 1);
}

TEST_CASE("constants and cofactor tables") {
  auto c = run("constant --k 2 --method series --p0 100 --order 60");
  REQUIRE(c.exit_code == 0);
  auto rows = parse_csv(c.out);
  REQUIRE(rows.size() == 2);
  double val = std::strtod(rows[1][5].c_str(), nullptr);
  CHECK(val == doctest::Approx(1.42765653542484).epsilon(1e-12));

  auto g = run("gk --k 2 --alpha-max 3");
  REQUIRE(g.exit_code == 0);
  auto grows = parse_csv(g.out);
  REQUIRE(grows.size() == 5);
  CHECK(grows[2] == std::vector<std::string>{"1", "0", "1", "0"});
  CHECK(grows[3] == std::vector<std::string>{"2", "1", "2", "0.5"});
}

TEST_CASE("compare trends and strict mode") {
  REQUIRE(run("sieve --checkpoints 1e3,1e4,1e5,1e6 --out cli_cmp.cache --quiet")
              .exit_code == 0);
  auto r = run("compare --cache cli_cmp.cache --k 2 --strict");
  REQUIRE(r.exit_code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::vector<std::string>{"x", "S", "M", "ratio", "e_norm"});
  // ratio approaches 1 down the table
  double r1 = std::strtod(rows[1][3].c_str(), nullptr);
  double r4 = std::strtod(rows[4][3].c_str(), nullptr);
  CHECK(std::abs(r4 - 1) < std::abs(r1 - 1));
  std::remove("cli_cmp.cache");
}

TEST_CASE("tauz table at the exact-count parameter") {
  auto r = run("tauz --z 1 --checkpoints 1e3,1e4");
  REQUIRE(r.exit_code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1][1] == "1000");   // sum tau_1 = floor(x)
  CHECK(rows[2][1] == "10000");
}
