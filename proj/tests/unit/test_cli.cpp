#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hankel/constants.hpp"
#include "json.hpp"

using namespace hankel::cli;
using doctest::Approx;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hankel-spectra");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("kernel at a single point") {
  const auto r = invoke({"kernel", "--ell", "0", "--x", "1.5707963"});
  REQUIRE(r.code == kOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"x", "value", "route", "error_estimate"});
  CHECK(std::stod(rows[1][1]) == Approx(0.405285).epsilon(1e-6));
}

TEST_CASE("kernel closed and convolution routes agree") {
  const auto a = invoke({"kernel", "--ell", "1", "--x", "1", "--method", "closed", "--format", "json"});
  const auto b = invoke({"kernel", "--ell", "1", "--x", "1", "--method", "conv", "--format", "json"});
  REQUIRE(a.code == kOk);
  REQUIRE(b.code == kOk);
  const auto ja = nlohmann::json::parse(a.out);
  const auto jb = nlohmann::json::parse(b.out);
  CHECK(ja["rows"][0]["route"] == "closed");
  CHECK(jb["rows"][0]["route"] == "conv");
  const double va = ja["rows"][0]["value"];
  const double vb = jb["rows"][0]["value"];
  CHECK(std::abs(va - vb) <= 1e-8);
}

TEST_CASE("kernel grid") {
  const auto r = invoke({"kernel", "--ell", "2", "--xmin", "0.5", "--xmax", "20", "--num", "40"});
  REQUIRE(r.code == kOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 41);
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(std::stod(rows[i][0]) > std::stod(rows[i - 1][0]));
  CHECK(std::stod(rows[1][0]) == 0.5);
  CHECK(std::stod(rows[40][0]) == 20.0);
}

TEST_CASE("verify identities") {
  const auto r = invoke({"verify", "--suite", "identities"});
  REQUIRE(r.code == kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_pass"] == true);
  CHECK(j["checks"].size() > 100);
  for (const auto& c : j["checks"]) {
    CHECK(c["measured"] == 0.0);
    CHECK_FALSE(c["anchor"].get<std::string>().empty());
  }
}

TEST_CASE("verify operators with a tolerance override") {
  const auto r = invoke({"verify", "--suite", "operators", "--tol", "1e-13"});
  REQUIRE(r.code == kOk);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& c : j["checks"]) {
    // exact checks (vanishing blocks, sign conjugation) stay exact
    const double t = c["threshold"];
    CHECK((t == 1e-13 || t == 0.0));
  }
}

TEST_CASE("verify reports failure through the exit code") {
  const auto r = invoke({"verify", "--suite", "kernels", "--tol", "1e-30"});
  CHECK(r.code == kVerifyFailed);
  CHECK(nlohmann::json::parse(r.out)["all_pass"] == false);
}

TEST_CASE("spectrum commands") {
  const auto r = invoke({"spectrum", "--ell", "0", "--size", "2", "--format", "json"});
  REQUIRE(r.code == kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["eigenvalues"][0].get<double>() == Approx(-2 / (3 * hankel::kPi)).epsilon(1e-15));
  CHECK(j["eigenvalues"][1].get<double>() == Approx(2 / hankel::kPi).epsilon(1e-15));

  const auto s = invoke({"spectrum", "--ell", "1", "--size", "128"});
  REQUIRE(s.code == kOk);
  CHECK(csv_rows(s.out).size() == 129);
  const auto summary = nlohmann::json::parse(s.err);
  CHECK(std::abs(summary["min"].get<double>() + summary["max"].get<double>()) <= 1e-10);

  const auto c = invoke({"spectrum", "--ell", "0", "--size", "256", "--format", "json"});
  CHECK(nlohmann::json::parse(c.out)["containment_violation"].get<double>() <= 1e-9);
}

TEST_CASE("density and blocks") {
  const auto d = invoke({"density", "--p", "0.5", "--lambda", "1"});
  REQUIRE(d.code == kOk);
  const auto rows = csv_rows(d.out);
  CHECK(std::stod(rows[1][1]) == Approx(3.6898333277790746985).epsilon(1e-12));
  CHECK(std::stod(rows[1][2]) == Approx(0.27101495139941834789).epsilon(1e-12));

  const auto b = invoke({"blocks", "--ell", "3", "--size", "16"});
  REQUIRE(b.code == kOk);
  const auto j = nlohmann::json::parse(b.out);
  CHECK(j["parity"] == "odd");
  CHECK(j["cross_block_max"] == 0.0);
  CHECK(j["max_abs_deviation"].get<double>() <= 1e-13);
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(invoke({"kernel", "--ell", "9", "--x", "1"}).code == kConfigError);
  CHECK(invoke({"kernel", "--x", "1"}).code == kConfigError);
  CHECK(invoke({"kernel", "--ell", "1", "--x", "1", "--method", "magic"}).code == kConfigError);
  CHECK(invoke({"kernel", "--ell", "1", "--xmin", "2", "--xmax", "1", "--num", "3"}).code == kConfigError);
  CHECK(invoke({"kernel", "--ell", "1", "--x", "1", "--format", "xml"}).code == kConfigError);
  CHECK(invoke({"kernel", "--ell", "1", "--x", "0.0001", "--method", "closed"}).code == kConfigError);
  CHECK(invoke({"verify", "--suite", "nothing"}).code == kConfigError);
  CHECK(invoke({"density", "--p", "0.75", "--lambda", "1"}).code == kConfigError);
  CHECK(invoke({"spectrum", "--ell", "0", "--size", "5000"}).code == kConfigError);
  CHECK(invoke({}).code == kConfigError);
  const auto r = invoke({"kernel", "--ell", "1"});
  CHECK(r.err.rfind("hankel-spectra kernel: ", 0) == 0);
}

TEST_CASE("help exits with 0") {
  const auto r = invoke({"--help"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("spectrum") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"kernel", "--ell", "3", "--xmin", "0.05", "--xmax", "30", "--num", "25"};
  CHECK(invoke(args).out == invoke(args).out);
}

TEST_CASE("--out writes the file atomically") {
  const auto dir = std::filesystem::temp_directory_path() / "hankel_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "spec.csv";
  const auto r = invoke({"spectrum", "--ell", "0", "--size", "4", "--out", path.string()});
  REQUIRE(r.code == kOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(csv_rows(body.str()).size() == 5);
  CHECK(std::filesystem::exists(path.string() + ".summary.json"));
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove_all(dir);
}
