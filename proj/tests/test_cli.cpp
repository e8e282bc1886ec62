#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "eisen/report.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = eisen::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("count subcommand") {
  auto r = run({"count", "--degree", "2", "--height", "2", "--variant",
                "monic", "--method", "both"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "6");

  r = run({"count", "--degree", "2", "--height", "3", "--variant", "general",
           "--method", "exact"});
  CHECK(r.code == 0);
  CHECK(r.out == "48\n");

  r = run({"count", "--degree", "3", "--height", "2", "--method", "brute"});
  CHECK(r.out == "18\n");

  r = run({"count", "--degree", "1", "--height", "5"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());

  r = run({"count", "--degree", "9", "--height", "50", "--method", "brute"});
  CHECK(r.code == 3);

  r = run({"count", "--degree", "2", "--height", "5", "--format", "json",
           "--method", "both", "--variant", "general"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["match"] == true);
  CHECK(doc["results"][0]["value"] == doc["results"][1]["value"]);
  CHECK(doc["results"][0]["value"].is_string());
}

TEST_CASE("numeric flags reject trailing garbage and bad values") {
  CHECK(run({"count", "--degree", "2x", "--height", "5"}).code == 2);
  CHECK(run({"count", "--degree", "2", "--height", "5.5"}).code == 2);
  CHECK(run({"count", "--degree", "2", "--height", "-3"}).code == 2);
  CHECK(run({"count", "--degree", "2", "--height", "5", "--variant", "x"})
            .code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--precision-bits", "59", "table"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("exact count beyond the sieve limit is refused") {
  const auto r =
      run({"--sieve-limit", "100", "count", "--degree", "2", "--height", "101"});
  CHECK(r.code == 3);
}

TEST_CASE("density subcommand") {
  auto r = run({"density", "--degree", "2", "--kind", "theta", "--prime-count",
                "10000"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("theta_2 = 0.2515", 0) == 0);

  r = run({"density", "--degree", "2", "--kind", "rho", "--prime-count",
           "10000"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("rho_2 = 0.1677", 0) == 0);

  r = run({"density", "--degree", "2", "--kind", "theta", "--method", "both"});
  CHECK(r.code == 0);
  CHECK(r.out.find("brackets overlap") != std::string::npos);

  r = run({"density", "--degree", "3", "--method", "both", "--prime-limit",
           "1000", "--series-limit", "5000", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["method"] == "euler_product");
  CHECK(doc[0]["truncation"]["kind"] == "prime_limit");
  CHECK(doc[1]["truncation"]["bound"] == 5000);

  // Coarse series truncation still overlaps since its bracket is wide.
  r = run({"density", "--degree", "2", "--method", "both", "--series-limit",
           "3"});
  CHECK(r.code == 0);

  CHECK(run({"density", "--degree", "1"}).code == 2);
  CHECK(run({"density", "--degree", "2", "--prime-count", "5",
             "--prime-limit", "10"})
            .code == 2);
  CHECK(run({"--sieve-limit", "1000", "density", "--degree", "2",
             "--method", "series"})
            .code == 3);
}

TEST_CASE("table subcommand") {
  auto r = run({"table"});
  CHECK(r.code == 0);
  CHECK(r.out.find(" 2   0.2515   0.1677") != std::string::npos);
  CHECK(r.out.find("10   0.0005   0.0003") != std::string::npos);

  r = run({"table", "--format", "csv", "--degrees", "2..3"});
  CHECK(r.code == 0);
  CHECK(r.out == "d,theta,rho\n2,0.2515,0.1677\n3,0.0953,0.0556\n");
  CHECK(eisen::parse_density_table_csv(r.out).rows.size() == 2);

  r = run({"--format", "json", "table", "--degrees", "4..4"});
  CHECK(r.code == 0);
  CHECK(eisen::parse_density_table_json(r.out).rows.at(0).theta == "0.0409");

  CHECK(run({"table", "--degrees", "5..4"}).code == 2);
  CHECK(run({"table", "--degrees", "1..4"}).code == 2);
  CHECK(run({"table", "--degrees", "2..x"}).code == 2);
}

TEST_CASE("verify subcommand") {
  auto r = run({"verify", "--max-degree", "2", "--max-height", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("monic    d=2 H=  2  exact=6 brute=6") != std::string::npos);
  CHECK(r.out.find("general  d=2 H=  2  exact=12 brute=12") !=
        std::string::npos);
  CHECK(r.out.find("4/4 checks passed") != std::string::npos);

  r = run({"verify", "--max-degree", "3", "--max-height", "20", "--format",
           "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["failures"] == 0);

  CHECK(run({"verify", "--max-degree", "9", "--max-height", "50"}).code == 3);
  CHECK(run({"verify", "--max-degree", "1"}).code == 2);
}

TEST_CASE("error-term subcommand") {
  auto r = run({"error-term", "--variant", "monic", "--degree", "3",
                "--heights", "100,1000,10000", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = eisen::parse_error_rows_csv(r.out);
  REQUIRE(rows.size() == 3);
  double prev = 1e9;
  for (const auto& row : rows) {
    const double rel =
        std::abs(row.residual.to_double() / row.main.to_double());
    CHECK(rel < prev);
    prev = rel;
  }

  r = run({"error-term", "--variant", "general", "--degree", "2", "--heights",
           "10,100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("H^2 (ln H)^2") != std::string::npos);

  r = run({"error-term", "--variant", "general", "--degree", "2", "--heights",
           "10,100", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(eisen::parse_error_rows_json(r.out).size() == 2);

  CHECK(run({"error-term", "--degree", "3", "--heights", "1"}).code == 2);
  CHECK(run({"error-term", "--degree", "3", "--heights", "10,5"}).code == 2);
}

TEST_CASE("flags override environment, environment overrides defaults") {
  ::setenv("EISEN_FORMAT", "csv", 1);
  auto r = run({"table", "--degrees", "2..2"});
  CHECK(r.out == "d,theta,rho\n2,0.2515,0.1677\n");
  r = run({"table", "--degrees", "2..2", "--format", "json"});
  CHECK(r.out.front() == '{');
  ::unsetenv("EISEN_FORMAT");

  ::setenv("EISEN_ENUMERATION_BUDGET", "10", 1);
  CHECK(run({"count", "--degree", "2", "--height", "2", "--method", "brute"})
            .code == 3);
  CHECK(run({"--budget", "1000", "count", "--degree", "2", "--height", "2",
             "--method", "brute"})
            .code == 0);
  ::unsetenv("EISEN_ENUMERATION_BUDGET");
}

TEST_CASE("thread count does not change results") {
  const auto one = run({"count", "--degree", "4", "--height", "3000",
                        "--variant", "general"});
  const auto many = run({"--threads", "8", "count", "--degree", "4",
                         "--height", "3000", "--variant", "general"});
  CHECK(one.code == 0);
  CHECK(one.out == many.out);
}
