#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "merobound/bounds.hpp"
#include "merobound/cli.hpp"
#include "merobound/membership.hpp"
#include "merobound/search.hpp"

using namespace merobound;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "merobound");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("bounds over an alpha range") {
  const auto r = invoke({"bounds", "--variant", "starlike", "--alpha", "0:0.9:0.1", "--lambda", "1", "--mu", "0"});
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 11);
  CHECK(l[0] == "variant,alpha,lambda,mu,b0_bound,b1_bound");
  CHECK(l[1] == "starlike,0,1,0,2,2.2360679774997898");
  CHECK(l[10].rfind("starlike,0.90000000000000002,1,0,", 0) == 0);
}

TEST_CASE("bounds single point, skipped points and JSON") {
  auto r = invoke({"bounds", "--alpha", "1/2", "--lambda", "2", "--mu", "1/2"});
  CHECK(lines(r.out).size() == 2);
  CHECK(lines(r.out)[1].rfind("starlike,0.5,2,0.5,0.66666666666666663,", 0) == 0);

  r = invoke({"bounds", "--alpha", "0.5", "--lambda", "1,2", "--mu", "1"});
  CHECK(r.code == 0);
  CHECK(lines(r.out)[1].rfind("# skipped", 0) == 0);
  CHECK(r.err.find("warning: skipped") != std::string::npos);
  CHECK(lines(r.out).size() == 3);

  r = invoke({"--format", "json", "bounds", "--variant", "strongly-starlike", "--alpha", "1"});
  const auto j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["b0_bound"] == 2.0);
  CHECK(j["rows"][0]["b1_bound"] == std::sqrt(5.0));
}

TEST_CASE("verify") {
  auto r = invoke({"verify", "--trials", "200", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find(",false,") == std::string::npos);

  r = invoke({"verify", "--trials", "0"});
  CHECK(r.code == 64);

  r = invoke({"verify", "--trials", "5", "--mutant", "th2-ceof-p2"});
  CHECK(r.code == 1);
  CHECK(r.out.find("starlike,th2-ceof-p2,false,5,trial=0") != std::string::npos);
  CHECK(r.err.find("identity th2-ceof-p2 failed") != std::string::npos);

  CHECK(invoke({"verify", "--mutant", "no-such-identity"}).code == 64);

  r = invoke({"--format", "json", "verify", "--trials", "3", "--variant", "strongly-starlike"});
  const auto j = json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["variants"].size() == 1);
}

TEST_CASE("invert") {
  auto r = invoke({"invert", "--mero", "1/2,1/3,1/5,0"});
  CHECK(r.out == "index,coefficient\n0,-1/2\n1,-1/3\n2,-11/30\n3,-71/180\n");
  r = invoke({"invert", "--mero", "0,0,0,0"});
  CHECK(r.out == "index,coefficient\n0,0\n1,0\n2,0\n3,0\n");
  r = invoke({"invert", "--analytic", "1,1,1"});
  CHECK(r.out == "index,coefficient\n2,-1\n3,1\n4,-1\n");
  r = invoke({"invert", "--mero", "0.5,0.25"});
  CHECK(r.out == "index,coefficient\n0,-0.5\n1,-0.25\n");
  r = invoke({"--order", "3", "invert", "--mero", "1/2"});
  CHECK(lines(r.out).size() == 5);
  r = invoke({"--format", "json", "invert", "--mero", "1/2,1/3"});
  CHECK(json::parse(r.out)["coefficients"] == json({"-1/2", "-1/3"}));
  CHECK(invoke({"invert"}).code == 64);
  CHECK(invoke({"invert", "--mero", "1,,2"}).code == 64);
  CHECK(invoke({"invert", "--mero", "1/x"}).code == 64);
}

TEST_CASE("member") {
  auto r = invoke({"--format", "json", "member", "--coeffs", "0", "--alpha", "0.5"});
  CHECK(r.code == 0);
  const auto rep = membership_report_from_json(json::parse(r.out));
  CHECK(rep.is_member);
  CHECK(rep.min_margin == 0.5);

  r = invoke({"member", "--coeffs", "3", "--alpha", "0"});
  CHECK(lines(r.out)[1].rfind("false,", 0) == 0);
  r = invoke({"member", "--coeffs", "3", "--variant", "strongly-starlike", "--alpha", "1"});
  CHECK(lines(r.out)[1].rfind("false,", 0) == 0);

  CHECK(invoke({"member", "--coeffs", "0", "--alpha", "1"}).code == 64);
  CHECK(invoke({"member", "--coeffs", "0", "--alpha", "0.5", "--lambda", "1", "--mu", "1"}).code == 64);
}

TEST_CASE("search output, manifest and reproducibility") {
  const auto dir = std::filesystem::temp_directory_path() / "merobound_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = (dir / "a.json").string();
  const auto b = (dir / "b.json").string();
  const std::vector<std::string> common{"--format", "json", "--seed", "5", "search", "--variant",
                                        "starlike", "--alpha", "0", "--budget", "300"};
  auto args_a = common;
  args_a.insert(args_a.begin(), {"--out", a});
  auto args_b = common;
  args_b.insert(args_b.begin(), {"--out", b});
  const auto ra = invoke(args_a);
  const auto rb = invoke(args_b);
  CHECK(ra.code == 0);
  CHECK(rb.code == 0);
  CHECK(ra.out.empty());
  CHECK(slurp(a) == slurp(b));

  const auto text = slurp(a);
  const auto report = bound_report_from_json(json::parse(text));
  CHECK(to_json(report).dump(2) + "\n" == text);
  CHECK(report.budget == 300);
  CHECK(report.seed == 5);

  const auto m = json::parse(slurp(a + ".manifest.json"));
  CHECK(m["subcommand"] == "search");
  CHECK(m["seed"] == 5);
  CHECK(m["output"] == a);

  // Replaying the manifest argv reproduces the output.
  auto replay = m["argv"].get<std::vector<std::string>>();
  for (auto& s : replay) {
    if (s == a) s = b;
  }
  CHECK(invoke(replay).code == 0);
  CHECK(slurp(b) == text);
  std::filesystem::remove_all(dir);
}

TEST_CASE("search falsification exit status") {
  const auto r = invoke({"search", "--variant", "strongly-starlike", "--alpha", "0.1", "--budget", "1000",
                      "--seed", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("bound falsified: |b1|") != std::string::npos);
  CHECK(lines(r.out)[1].find(",true") != std::string::npos);
}

TEST_CASE("usage errors and thread cap") {
  CHECK(invoke({}).code == 64);
  CHECK(invoke({"frobnicate"}).code == 64);
  CHECK(invoke({"--format", "xml", "bounds", "--alpha", "0"}).code == 64);
  CHECK(invoke({"bounds", "--alpha", "0:1:0"}).code == 64);
  CHECK(invoke({"bounds", "--alpha", "1:0:0.1"}).code == 64);
  CHECK(invoke({"search", "--alpha", "0.5", "--budget", "0"}).code == 64);
  CHECK(invoke({"--help"}).code == 0);

  ::setenv("MEROBOUND_THREADS", "zero", 1);
  CHECK(invoke({"search", "--alpha", "0.5", "--budget", "5"}).code == 64);
  ::setenv("MEROBOUND_THREADS", "2", 1);
  const auto capped = invoke({"search", "--alpha", "0.5", "--budget", "50"});
  ::unsetenv("MEROBOUND_THREADS");
  CHECK(capped.code == 0);
  CHECK(capped.out == invoke({"search", "--alpha", "0.5", "--budget", "50"}).out);
  CHECK(capped.err.find("\"merobound_threads\":\"2\"") != std::string::npos);
}

TEST_CASE("grid parsing") {
  CHECK(cli::parse_grid("0:1:1/4").size() == 5);
  CHECK(cli::parse_grid("0.1,1/3,2") == std::vector<Rational>{Rational(1, 10), Rational(1, 3), Rational(2)});
  CHECK(cli::parse_number("1e-3") == Rational(1, 1000));
  CHECK(cli::parse_number("-2.50") == Rational(-5, 2));
  CHECK_THROWS(cli::parse_number("."));
  CHECK_THROWS(cli::parse_number("1.2.3"));
}
