#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Run run(const std::string& args, const std::string& env = "") {
  char err_path[] = "/tmp/wittzeta_cli_err_XXXXXX";
  const int fd = mkstemp(err_path);
  REQUIRE(fd >= 0);
  close(fd);
  const std::string cmd = env + " " + WITTZETA_CLI_PATH + " " + args + " 2>" + err_path;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  Run r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, slurp(err_path)};
  std::remove(err_path);
  return r;
}

Json coeffs(std::initializer_list<long> v) {
  Json j = Json::array();
  for (long x : v) j.push_back(std::to_string(x));
  return j;
}

}  // namespace

TEST_CASE("witt mul of Teichmüller elements") {
  const Run r = run("witt mul --teich 2 --teich 3 -N 4");
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  const Json j = Json::parse(r.out);
  CHECK(j["precision"] == 4);
  CHECK(j["coeffs"] == coeffs({6, 36, 216, 1296}));
}

TEST_CASE("witt ghost and unghost") {
  const Run g = run("witt ghost --teich 3 -N 3");
  CHECK(g.code == 0);
  CHECK(Json::parse(g.out) == coeffs({3, 9, 27}));
  const Run u = run("witt unghost --ghost '[0,0,0]'");
  CHECK(u.code == 0);
  CHECK(Json::parse(u.out)["coeffs"] == coeffs({0, 0, 0}));
  const Run t = run("witt unghost --ghost '[2,4,8,16]'");
  CHECK(Json::parse(t.out)["coeffs"] == coeffs({2, 4, 8, 16}));
}

TEST_CASE("witt add, neg, frob, teich") {
  CHECK(Json::parse(run("witt add --teich 1 --teich 1 -N 3").out)["coeffs"] == coeffs({2, 3, 4}));
  CHECK(Json::parse(run("witt neg --teich 1 -N 3").out)["coeffs"] == coeffs({-1, 0, 0}));
  const Json f = Json::parse(run("witt frob --teich 3 -N 4 --n 2").out);
  CHECK(f["precision"] == 2);
  CHECK(f["coeffs"] == coeffs({9, 81}));
  CHECK(Json::parse(run("witt teich --teich 2 -N 3").out)["coeffs"] == coeffs({2, 4, 8}));
  const Run w = run(R"(witt add --witt '{"precision":2,"coeffs":["1","1"]}' --teich 0 -N 2)");
  CHECK(Json::parse(w.out)["coeffs"] == coeffs({1, 1}));
}

TEST_CASE("integrality failure exits 3") {
  const Run r = run("witt unghost --ghost '[1,0,0,0]'");
  CHECK(r.code == 3);
  CHECK(r.out.empty());
  const Json e = Json::parse(r.err);
  CHECK(e["error"]["kind"] == "integrality");
  CHECK(e["error"]["degree"] == 2);
}

TEST_CASE("malformed input exits 2 with an error object") {
  for (const char* args : {"witt mul --teich x --teich 3 -N 4", "witt unghost --ghost '[1,'", "witt frobnicate",
                           "zeta --spec '{\"type\":\"affine\",\"dim\":1,\"q\":6}' -N 3", "zeta --spec nosuchbuiltin -N 3",
                           "witt add --teich 2 -N 3", "zeta -N 3"}) {
    const Run r = run(args);
    CAPTURE(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(Json::parse(r.err).contains("error"));
  }
}

TEST_CASE("zeta") {
  const Run r = run(R"(zeta --spec '{"type":"projective","dim":1,"q":2}' -N 3)");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["coeffs"] == coeffs({3, 7, 15}));
  const Run euler = run(R"(zeta --spec '{"type":"projective","dim":1,"q":2}' -N 3 --route euler)");
  CHECK(euler.out == r.out);
  CHECK(Json::parse(run("zeta --spec E/F5 -N 2").out)["coeffs"] == coeffs({4, 24}));
}

TEST_CASE("spec from a file") {
  const std::string path = "/tmp/wittzeta_cli_spec.json";
  std::ofstream(path) << R"({"type":"elliptic","p":5,"a":1,"b":0})";
  const Run r = run("zeta --spec " + path + " -N 2");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["coeffs"] == coeffs({4, 24}));
  std::remove(path.c_str());
}

TEST_CASE("sym") {
  const Run g = run(R"(sym --spec '{"type":"projective","dim":2,"q":2}' -n 2 -N 1 --ghost)");
  CHECK(g.code == 0);
  CHECK(Json::parse(g.out) == coeffs({35}));
  const Run zero = run("sym --spec E/F5 -n 0 -N 4");
  CHECK(Json::parse(zero.out)["coeffs"] == coeffs({1, 1, 1, 1}));
}

TEST_CASE("series") {
  const Run r = run("series --spec P1/F2 -M 2 -N 2");
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["precision"] == 2);
  CHECK(j["coeffs"][0]["coeffs"] == coeffs({3, 7}));
  CHECK(j["coeffs"][1]["coeffs"] == coeffs({7, 35}));
}

TEST_CASE("reconstruct") {
  const Run r = run("reconstruct --spec P2/F2 --sym 2 -N 12 --dmax 6");
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["num"] == coeffs({1}));
  CHECK(j["den"] == coeffs({1, -35, 434, -2480, 6944, -8960, 4096}));
  CHECK(j["factored"] == "1/((1-t)(1-2t)(1-4t)^2(1-8t)(1-16t))");
  const Run s = run(R"(reconstruct --series '{"precision":4,"coeffs":["1","1","1","1"]}' --dmax 2)");
  CHECK(Json::parse(s.out)["factored"] == "1/(1-t)");
  const Run ell = run("reconstruct --spec E/F5 --dmax 2");
  CHECK(Json::parse(ell.out)["num"] == coeffs({1, -2, 5}));
}

TEST_CASE("precision shortfall and reconstruction failure exit 5") {
  const Run p = run(R"(zeta --spec '{"type":"counts","q":2,"counts":[3,5]}' -N 4)");
  CHECK(p.code == 5);
  CHECK(Json::parse(p.err)["error"]["required"] == 4);
  const Run q = run("reconstruct --spec ExE/F5 -N 12 --dmax 6");
  CHECK(q.code == 5);
  CHECK(Json::parse(q.err)["error"]["kind"] == "reconstruction");
}

TEST_CASE("budget exceeded exits 4") {
  const std::string spec = R"('{"type":"equations","p":2,"vars":["x","y"],"polys":["x*y"]}')";
  const Run r = run("zeta --spec " + spec + " -N 6", "WITTZETA_ENUM_BUDGET=100");
  CHECK(r.code == 4);
  CHECK(Json::parse(r.err)["error"]["kind"] == "budget");
  CHECK(run("zeta --spec " + spec + " -N 3", "WITTZETA_ENUM_BUDGET=100").code == 0);
  CHECK(run("zeta --spec " + spec + " -N 3", "WITTZETA_ENUM_BUDGET=zero").code == 2);
}

TEST_CASE("output is deterministic") {
  const std::string args = "series --spec E/F5 -M 3 -N 2";
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("check suites") {
  const Run r = run("check 6");
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["passed"] == true);
  REQUIRE(j["results"].size() == 1);
  CHECK(j["results"][0]["name"] == "symmetric-power-oracle");
  CHECK(run("check two-route-zeta").code == 0);
  CHECK(run("check nonsense").code == 2);
}
