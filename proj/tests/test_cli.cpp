#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "hermquant/operators.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(HERMQUANT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("poly hermite") {
  const Run r = cli("poly hermite --r 2 --s 2 --z 1+1i");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"]["re"].get<double>() == doctest::Approx(-2.0));
  CHECK(j["value"]["im"].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("poly assoc-hermite exact coefficients") {
  auto j = nlohmann::json::parse(cli("poly assoc-hermite --n 2 --s 1").out);
  CHECK(j["coefficients"] == nlohmann::json({"-4", "0", "4"}));
  j = nlohmann::json::parse(cli("poly assoc-hermite --n 3 --s 0").out);
  CHECK(j["coefficients"] == nlohmann::json({"0", "-12", "0", "8"}));
  j = nlohmann::json::parse(cli("poly assoc-hermite --n 2 --s 1 --monic").out);
  CHECK(j["coefficients"] == nlohmann::json({"-1", "0", "1"}));
}

TEST_CASE("exit codes") {
  CHECK(cli("poly hermite --r 2 --s 2 --z 1+xi").code == 2);
  CHECK(cli("poly hermite --r 2").code == 2);
  CHECK(cli("nonsense").code == 2);
  CHECK(cli("export spectrum-table --out /nonexistent-dir/x.csv").code == 3);
  CHECK(cli("--help").code == 0);
  CHECK(cli("verify --suite ladder").code == 0);
  // An impossible tolerance on the quadrature checks must fail the suite.
  CHECK(cli("verify --suite quantize --tol 1e-30").code == 1);
}

TEST_CASE("verify report is machine readable") {
  const Run r = cli("verify --suite spectral");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_pass"] == true);
  REQUIRE(j["checks"].size() > 5);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("identity"));
    CHECK(c.contains("witness"));
    CHECK(c["pass"] == true);
  }
}

TEST_CASE("export operator Q matches the builder") {
  const Run r = cli("export operator --name Q --s 2 --dim 10 --format csv");
  REQUIRE(r.code == 0);
  const auto q = hermq::build_Q(2, 10, hermq::Sector::L);
  std::istringstream in(r.out);
  std::string line;
  std::size_t i = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string cell;
    std::size_t j = 0;
    for (; std::getline(ls, cell, ','); ++j) CHECK(std::stod(cell) == q.at(i, j).real());
    CHECK(j == 10);
    ++i;
  }
  CHECK(i == 10);
}

TEST_CASE("export is deterministic and honors --out") {
  const std::string path = "cli_test_kernel.csv";
  REQUIRE(cli("export kernel-grid --s 1 --points 7 --format csv --out " + path).code == 0);
  std::ifstream f(path);
  std::stringstream file;
  file << f.rdbuf();
  CHECK(file.str() == cli("export kernel-grid --s 1 --points 7 --format csv").out);
  std::remove(path.c_str());
}

TEST_CASE("export spectrum table columns") {
  const auto j = nlohmann::json::parse(cli("export spectrum-table --s-list 0..4").out);
  REQUIRE(j["rows"].size() == 5);
  for (std::size_t s = 0; s < 5; ++s) {
    CHECK(j["rows"][s]["H_hat_first_gap"].get<double>() == s / 2.0 + 1.0);
    CHECK(j["rows"][s]["infimum_Aq2"].get<double>() == doctest::Approx(s + 0.5).epsilon(1e-3));
  }
}
