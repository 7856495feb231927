#include <json.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "holotrace/geometry.hpp"

using namespace holotrace;
using namespace holotrace::cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "holotrace");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int rc = main_entry(int(argv.size()), argv.data(), out, err);
  return {rc, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
    v.push_back(l);
  }
  return v;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string f; std::getline(is, f, ',');) v.push_back(f);
  return v;
}

}  // namespace

TEST_CASE("geometry row at eta = 0") {
  Result r = call({"geometry", "--eta", "0"});
  REQUIRE(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  auto head = split(ls[0]), row = split(ls[1]);
  REQUIRE(head.size() == row.size());
  auto col = [&](const std::string& name) {
    for (std::size_t i = 0; i < head.size(); ++i)
      if (head[i] == name) return std::stod(row[i]);
    FAIL("missing column " << name);
    return 0.0;
  };
  CHECK(col("z1_re") == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(col("z1_im") == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
  CHECK(col("z2_im") == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
  CHECK(col("volume") == doctest::Approx(2.0298832128).epsilon(1e-9));
}

TEST_CASE("domain and usage errors") {
  Result r = call({"trace", "--n", "4"});
  CHECK(r.code == 65);
  CHECK(r.err.find("n must be odd") != std::string::npos);
  CHECK(call({"trace", "--n", "11", "--m-v", "6"}).code == 65);
  CHECK(call({"converge", "--theta", "6.5"}).code == 65);
  CHECK(call({"geometry", "--eta", "3.2"}).code == 65);
  CHECK(call({"frobnicate"}).code == 64);
  CHECK(call({"trace", "--n", "abc"}).code == 64);
  CHECK(call({"trace", "--format", "xml", "--n", "5"}).code == 64);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("converge CSV") {
  Result r = call({"converge", "--theta", "0", "--n-list", "201,401,801"});
  REQUIRE(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "n,m_v,theta_n,log_abs_trace,scaled,vol,ratio");
  double vol = cone_volume(0.0), prev = 1e9;
  for (int i = 1; i <= 3; ++i) {
    auto f = split(ls[i]);
    double err = std::abs(std::stod(f[4]) - vol);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("JSON output round-trips at 17 digits") {
  Result csv = call({"converge", "--theta", "3.14159", "--n-list", "101,201"});
  Result js = call({"converge", "--theta", "3.14159", "--n-list", "101,201", "--format", "json"});
  REQUIRE(js.code == 0);
  auto doc = nlohmann::json::parse(js.out);
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["meta"]["config"]["command"] == "converge");
  CHECK(doc["meta"].contains("version"));
  auto ls = lines(csv.out);
  for (int i = 0; i < 2; ++i) {
    auto f = split(ls[i + 1]);
    CHECK(doc["rows"][i]["scaled"].get<double>() == std::stod(f[4]));
    CHECK(doc["rows"][i]["log_abs_trace"].get<double>() == std::stod(f[3]));
    CHECK(doc["rows"][i]["n"].get<int>() == std::stoi(f[0]));
  }
}

TEST_CASE("output is deterministic, also in parallel") {
  std::vector<std::string> a = {"trace", "--n-list", "51,101,151", "--theta", "1.0"};
  Result r1 = call(a), r2 = call(a);
  a.push_back("--parallel");
  Result r3 = call(a);
  REQUIRE(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out == r3.out);
  Result g1 = call({"geometry", "--eta-points", "12"}), g2 = call({"geometry", "--eta-points", "12", "--parallel"});
  CHECK(lines(g1.out).size() == 13);
  CHECK(g1.out == g2.out);
}

TEST_CASE("trace row") {
  RunConfig c;
  c.command = Command::Trace;
  c.n_list = {5};
  std::ostringstream out, err;
  REQUIRE(run(c, out, err) == 0);
  auto ls = lines(out.str());
  REQUIRE(ls.size() == 2);
  CHECK(split(ls[0]).size() == split(ls[1]).size());
}

TEST_CASE("fourier report") {
  Result r = call({"fourier", "--n", "101", "--k-list", "0,1"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 1 + 2 * 2 * 2);
}

TEST_CASE("verify") {
  Result r = call({"verify", "--criteria", "1,4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS  1") != std::string::npos);
  CHECK(r.out.find("PASS  4") != std::string::npos);
  CHECK(call({"verify", "--criteria", "13"}).code == 65);
}
