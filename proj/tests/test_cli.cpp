#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace salpeter::cli;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult invoke(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"salpeter"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream is(line);
  for (std::string f; std::getline(is, f, ',');) fields.push_back(f);
  return fields;
}

double value_after(const std::string& text, const std::string& key) {
  const auto pos = text.find(key);
  REQUIRE(pos != std::string::npos);
  return std::stod(text.substr(pos + key.size()));
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << contents;
  return path.string();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("parse fills defaults") {
  std::ostringstream out, err;
  std::vector<const char*> argv = {"salpeter", "solve", "--kappa", "1", "--upsilon", "-1",
                                   "--ell", "0", "--dim", "32"};
  const ParseOutcome outcome =
      parse_config(static_cast<int>(argv.size()), argv.data(), out, err);
  REQUIRE(outcome.config.has_value());
  const RunConfig& c = *outcome.config;
  CHECK(c.command == Command::Solve);
  CHECK(c.kappa == doctest::Approx(1.0));
  CHECK(c.upsilon == doctest::Approx(-1.0));
  CHECK(c.m == doctest::Approx(1.0));
  CHECK(c.beta == doctest::Approx(1.0));
  CHECK(c.mu == doctest::Approx(1.0));
  CHECK(c.b == doctest::Approx(1.0));
  CHECK(c.dim == 32);
  CHECK(c.mode == "best");
  CHECK(c.format == OutputFormat::Text);
}

TEST_CASE("config file keys load and flags win") {
  const std::string path = temp_file("salpeter_cli_test.cfg",
                                     "# test configuration\nkappa = 0.5\nupsilon = -1\n");
  {
    std::ostringstream out, err;
    std::vector<const char*> argv = {"salpeter", "classify", "--config", path.c_str()};
    const ParseOutcome o = parse_config(static_cast<int>(argv.size()), argv.data(), out, err);
    REQUIRE(o.config.has_value());
    CHECK(o.config->kappa == doctest::Approx(0.5));
    CHECK(o.config->upsilon == doctest::Approx(-1.0));
  }
  {
    std::ostringstream out, err;
    std::vector<const char*> argv = {"salpeter", "classify", "--config", path.c_str(),
                                     "--kappa", "1"};
    const ParseOutcome o = parse_config(static_cast<int>(argv.size()), argv.data(), out, err);
    REQUIRE(o.config.has_value());
    CHECK(o.config->kappa == doctest::Approx(1.0));
  }
  const std::string bad = temp_file("salpeter_cli_bad.cfg", "no_such_key = 3\n");
  std::ostringstream out, err;
  std::vector<const char*> argv = {"salpeter", "classify", "--config", bad.c_str()};
  const ParseOutcome o = parse_config(static_cast<int>(argv.size()), argv.data(), out, err);
  CHECK_FALSE(o.config.has_value());
  CHECK(o.exit_code == 2);
}

TEST_CASE("usage errors exit with 2 and name the precondition") {
  const CliResult beta = invoke({"solve", "--beta", "-0.6"});
  CHECK(beta.code == 2);
  CHECK(beta.err.find("beta > -1/2") != std::string::npos);

  for (const std::vector<std::string>& bad :
       {std::vector<std::string>{"solve", "--kappa", "-1"},
        {"solve", "--mu", "0"},
        {"solve", "--dim", "0"},
        {"solve", "--b", "-2"},
        {"solve", "--mode", "verybest"},
        {"solve", "--format", "yaml"},
        {"solve", "--states", "0"},
        {"solve", "--ell", "-1"},
        {"count", "--potential", "squarewell"},
        {"profile", "--rmin", "5", "--rmax", "1"},
        {"profile", "--samples", "1"},
        {"optimize", "--mu-min", "2", "--mu-max", "1"},
        {"optimize", "--beta-min", "-0.7"},
        {"solve", "--no-such-flag", "1"},
        {"noexistcommand"},
        {}}) {
    const CliResult r = invoke(bad);
    CHECK(r.code == 2);
  }

  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"solve", "--help"}).code == 0);
}

TEST_CASE("classify output") {
  const CliResult r = invoke({"classify", "--kappa", "1", "--upsilon", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("category: upsilon=kappa; unbounded below; singular at origin") !=
        std::string::npos);

  const CliResult bounded = invoke({"classify", "--kappa", "1", "--upsilon", "-2"});
  CHECK(bounded.out.find("upsilon<-kappa; bounded below; repulsive at origin") !=
        std::string::npos);
  CHECK(bounded.out.find("minimum:") != std::string::npos);
}

TEST_CASE("bounds command reproduces the paper lower bounds") {
  const CliResult r =
      invoke({"bounds", "--kappa", "1", "--upsilon", "-2", "--mode", "paper"});
  CHECK(r.code == 0);
  CHECK(std::abs(value_after(r.out, "lower bound (binding): ") - (-0.37336)) < 1e-5);
  CHECK(r.out.find("method: potential-minimum") != std::string::npos);

  const CliResult best = invoke({"bounds", "--kappa", "1", "--upsilon", "-1"});
  CHECK(std::abs(value_after(best.out, "lower bound (binding): ") - (-0.585786)) < 1e-5);

  const CliResult unbounded = invoke({"bounds", "--kappa", "1", "--upsilon", "0.5"});
  CHECK(unbounded.code == 0);
  CHECK(unbounded.out.find("bounded below: no") != std::string::npos);
}

TEST_CASE("table1 csv") {
  const CliResult r = invoke({"table1", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 1 + 18 + 3);
  CHECK(lines[0] == "n_r,ell,column,binding,virial_residual");

  bool found = false;
  for (const auto& line : lines) {
    const auto fields = split_csv(line);
    if (fields.size() >= 5 && fields[0] == "0" && fields[1] == "0" && fields[2] == "2") {
      const double binding = std::stod(fields[3]);
      CHECK(binding >= -0.17951 - 2e-3);
      CHECK(binding <= -0.17951 + 1e-4);
      found = true;
    }
  }
  CHECK(found);

  // three lower-bound rows, mode=best by default
  int lb_rows = 0;
  for (const auto& line : lines)
    if (line.rfind(",,", 0) == 0) ++lb_rows;
  CHECK(lb_rows == 3);

  // --dim override is honored (smaller table still emits all rows)
  const CliResult small = invoke({"table1", "--format", "csv", "--dim", "8"});
  CHECK(small.code == 0);
  CHECK(split_lines(small.out).size() == 22);
}

TEST_CASE("csv output round-trips at six decimals") {
  for (const std::vector<std::string>& cmd :
       {std::vector<std::string>{"table1", "--format", "csv", "--dim", "12"},
        {"profile", "--kappa", "1", "--upsilon", "-2", "--samples", "40"}}) {
    const CliResult r = invoke(cmd);
    REQUIRE(r.code == 0);
    const auto lines = split_lines(r.out);
    for (size_t i = 1; i < lines.size(); ++i) {
      for (const std::string& field : split_csv(lines[i])) {
        if (field.empty() || field.find('.') == std::string::npos) continue;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", std::stod(field));
        CHECK(field == buf);
      }
    }
  }
}

TEST_CASE("profile emits the (r, V) table") {
  const CliResult r = invoke({"profile", "--kappa", "1", "--upsilon", "1", "--rmin", "0.1",
                              "--rmax", "10", "--samples", "5"});
  REQUIRE(r.code == 0);
  const auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "r,V");
  CHECK(split_csv(lines[1])[0] == "0.100000");
  CHECK(split_csv(lines[5])[0] == "10.000000");
  double prev = 0.0;
  for (size_t i = 1; i < lines.size(); ++i) {
    const double rv = std::stod(split_csv(lines[i])[0]);
    CHECK(rv > prev);
    prev = rv;
  }
}

TEST_CASE("count command") {
  const CliResult well = invoke({"count", "--potential", "exponential-well", "--v0", "1",
                                 "--b", "1", "--m", "0"});
  REQUIRE(well.code == 0);
  CHECK(std::abs(value_after(well.out, "N_bound: ") - 0.0119364) < 1e-6);
  CHECK(well.out.find("at most 0 bound states") != std::string::npos);

  const CliResult hellmann = invoke({"count", "--kappa", "1", "--upsilon", "-1"});
  CHECK(hellmann.code == 0);
  CHECK(hellmann.out.find("condition (L): violated") != std::string::npos);
  CHECK(hellmann.out.find("Coulomb tail at infinity") != std::string::npos);
}

TEST_CASE("solve command prints the virial column") {
  const CliResult r = invoke({"solve", "--kappa", "1", "--upsilon", "-1", "--dim", "8",
                              "--states", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("virial_residual") != std::string::npos);
  CHECK(split_lines(r.out).size() == 4);  // two comment/header lines + two states

  const CliResult csv = invoke({"solve", "--kappa", "1", "--upsilon", "-1", "--dim", "8",
                                "--states", "2", "--format", "csv"});
  const auto lines = split_lines(csv.out);
  REQUIRE(lines.size() == 3);
  CHECK(split_csv(lines[1]).size() == 5);
}

TEST_CASE("domain violations inside the run exit with 2") {
  const CliResult r = invoke({"solve", "--kappa", "1", "--beta", "0.4", "--dim", "4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("2 ell + 2 beta") != std::string::npos);
}

TEST_CASE("output file sink") {
  const auto path = std::filesystem::temp_directory_path() / "salpeter_profile.csv";
  std::filesystem::remove(path);
  const CliResult r = invoke({"profile", "--kappa", "1", "--samples", "3", "--rmin", "0.5",
                              "--rmax", "2", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  CHECK(header == "r,V");
}

TEST_CASE("optimize command smoke") {
  const CliResult r = invoke({"optimize", "--kappa", "1", "--upsilon", "-1", "--dim", "6",
                              "--mu-min", "0.5", "--mu-max", "2", "--beta-min", "1",
                              "--beta-max", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("best mu: ") != std::string::npos);
  CHECK(value_after(r.out, "best binding: ") < 0.0);
  CHECK(value_after(r.out, "evaluations: ") > 10);
}

TEST_CASE("malformed quadrature env var is a usage error") {
  setenv("SALPETER_QUAD_ORDER", "banana", 1);
  const CliResult r = invoke({"solve", "--kappa", "1", "--dim", "2"});
  unsetenv("SALPETER_QUAD_ORDER");
  CHECK(r.code == 2);
  CHECK(r.err.find("SALPETER_QUAD_ORDER") != std::string::npos);
}

TEST_SUITE_END();
