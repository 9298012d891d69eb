#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

const std::string kCli = SHIFTLAB_CLI_PATH;

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string tmp_path(const std::string& name) {
  return std::string("cli_tmp_") + name;
}

int count_lines(const std::string& path) {
  std::ifstream in(path);
  int n = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++n;
  return n;
}

}  // namespace

TEST_CASE("region: 100-row CSV with the expected header") {
  const std::string csv = tmp_path("curves.csv");
  REQUIRE(run("region --curve example46 --ygrid 0:1:0.01 --csv " + csv) == 0);
  CHECK(count_lines(csv) == 101);  // header + 100 rows
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "y,s,h,CA,PA");
  std::remove(csv.c_str());
}

TEST_CASE("build then check: flat diagram is certifying and exits 0") {
  const std::string d = tmp_path("flat.json");
  REQUIRE(run("build --family tensor --sigma 1 --tau 1 --out " + d) == 0);
  const std::string rep = tmp_path("flat_report.json");
  CHECK(run("check --k 1 --in " + d + " --window 4x4 --report " + rep) == 0);
  std::ifstream in(rep);
  nlohmann::json j;
  in >> j;
  CHECK(j["verdicts"][0]["scope"] == "certifying");
  CHECK(j["verdicts"][0]["verdict"] == true);
  std::remove(d.c_str());
  std::remove(rep.c_str());
}

TEST_CASE("transforming the Drury-Arveson shift breaks hyponormality: exit 2") {
  const std::string da = tmp_path("da.json");
  const std::string tda = tmp_path("tda.json");
  REQUIRE(run("build --family da --out " + da) == 0);
  REQUIRE(run("transform --kind toral --in " + da + " --out " + tda + " --window 5x5") == 0);
  CHECK(run("check --k 1 --in " + tda + " --window 4x4") == 2);
  CHECK(run("check --k 1 --in " + da + " --window 4x4") == 2);  // the shift itself fails too
  std::remove(da.c_str());
  std::remove(tda.c_str());
}

TEST_CASE("malformed input exits 1") {
  const std::string bad = tmp_path("bad.json");
  {
    std::ofstream out(bad);
    out << "{ not json";
  }
  CHECK(run("check --k 1 --in " + bad + " --window 3x3") == 1);
  {
    std::ofstream out(bad);
    out << R"({"kind": "mystery"})";
  }
  CHECK(run("check --k 1 --in " + bad + " --window 3x3") == 1);
  std::remove(bad.c_str());
}

TEST_CASE("build fig2 with a measure spec and check subnormal parameters") {
  const std::string d = tmp_path("fig2.json");
  REQUIRE(run("build --family fig2 --x0 0.8 --a 0.5 --xi 0.5@1,0.5@2 --out " + d) == 0);
  CHECK(run("check --k 2 --in " + d + " --window 4x4") == 0);
  std::remove(d.c_str());
}

TEST_CASE("quasinormal subcommand builds a verified fixed point") {
  const std::string d = tmp_path("quasi.json");
  CHECK(run("quasinormal --row 0.5,0.8,0.8 --C 1 --out " + d + " --window 6x6") == 0);
  CHECK(run("check --k 3 --in " + d + " --window 5x5") == 0);
  std::remove(d.c_str());
}

TEST_CASE("spectra prints radii and agrees for a tensor-core diagram") {
  const std::string d = tmp_path("tc.json");
  REQUIRE(run("build --family tensor --sigma 0.5,0.9,1 --tau 0.7,1 --out " + d) == 0);
  CHECK(run("spectra --in " + d) == 0);
  std::remove(d.c_str());
}

TEST_CASE("probe runs and echoes the seed in the report") {
  const std::string d = tmp_path("probe_in.json");
  const std::string rep = tmp_path("probe_report.json");
  REQUIRE(run("build --family tensor --sigma 1 --tau 1 --out " + d) == 0);
  CHECK(run("probe --in " + d + " --eps 0.01 --window 5x5 --seed 11 --report " + rep) == 0);
  std::ifstream in(rep);
  nlohmann::json j;
  in >> j;
  CHECK(j["inputs"]["seed"] == 11);
  CHECK(j["diagnostics"][0]["toral_gap"].get<double>() < 0.1);
  std::remove(d.c_str());
  std::remove(rep.c_str());
}

TEST_CASE("da-verify exits 0 for small degree ranges") {
  CHECK(run("da-verify --nmax 12") == 0);
}

TEST_CASE("usage error exits 1") {
  CHECK(run("check --k 1") == 1);  // missing --in
  CHECK(run("transform --kind sideways --in x --out y") == 1);
}
