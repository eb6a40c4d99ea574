#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + STIRSHARE_CLI + std::string(" ") + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

std::string squeeze(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch != ' ' && ch != '\n') out += ch;
  }
  return out;
}

}  // namespace

TEST_CASE("tables") {
  const Result a = run("tables --stirling first --max-n 4");
  CHECK(a.code == 0);
  CHECK(contains(squeeze(a.out), R"(["0","-6","11","-6","1"])"));

  const Result b = run("tables --zeta-eps --max-n 2");
  CHECK(b.code == 0);
  CHECK(contains(squeeze(b.out), R"([1,0,0,"1"])"));
  CHECK(contains(squeeze(b.out), R"("eps":[[1,0,0,"0"],[1,0,1,"1"])"));

  const Result c = run("tables --stirling second --max-n 0");
  CHECK(c.code == 0);
  CHECK(contains(squeeze(c.out), R"("rows":[["1"]])"));

  CHECK(run("tables --stirling second --max-n 3 --format text").out == "n=0: 1\nn=1: 0 1\nn=2: 0 1 1\nn=3: 0 1 3 1\n");
  CHECK(run("tables --lahiri --max-n 3").code == 0);
  CHECK(run("tables --stirling third --max-n 3").code == 2);
  CHECK(run("tables --zeta-eps --max-n 0").code == 2);
  CHECK(run("tables --stirling first --zeta-eps --max-n 3").code == 2);
}

TEST_CASE("ode") {
  const Result a = run("ode --n 3 --format text");
  CHECK(a.code == 0);
  CHECK(contains(a.out, "coeff[0] (alpha) = 1 - 2*a_n*c^2 + a_n*c*lambda*e^{cz} - a_n*lambda^2*e^{2cz}"));
  CHECK(contains(a.out, "coeff[2] (alpha^(2)) = -a_n + a_n*lambda*e^{cz}"));

  const Result b = run("ode --n 2 --check-routes");
  CHECK(b.code == 0);
  CHECK(contains(b.out, "PASS"));

  CHECK(run("ode --n 1").code == 2);
  CHECK(run("ode --n 4 --format latex").code == 0);
  CHECK(contains(run("ode --n 3 --format json --check-routes").out, R"("route_check": "PASS")"));
}

TEST_CASE("verify identities") {
  const Result a = run("verify identities --max-n 20");
  CHECK(a.code == 0);
  CHECK_FALSE(contains(a.out, "FAIL"));
  CHECK(contains(a.out, "ALL PASS"));

  const Result b = run("verify identities --max-n 2");
  CHECK(b.code == 0);
  CHECK(contains(b.out, "C1 vanishes: n=2 PASS"));

  CHECK(run("verify identities --max-n 1").code == 2);
  CHECK(run("verify").code == 2);
}

TEST_CASE("solve-n2") {
  const Result a = run("solve-n2 --s 1 --c 0.5 --lambda 1");
  CHECK(a.code == 0);
  const std::string s = squeeze(a.out);
  CHECK(contains(s, R"("a2":[2.0,0.0])"));
  CHECK(contains(s, R"("alpha":"e^z")"));
  CHECK(contains(s, R"("pass":true)"));

  CHECK(contains(squeeze(run("solve-n2 --s 0 --c 0.3 --lambda 2").out), R"("a2":[1.0,0.0])"));
  CHECK(run("solve-n2 --s 2 --c 0.5 --lambda 1").code == 2);
  CHECK(run("solve-n2 --s 1 --c 0 --lambda 1").code == 2);
}

TEST_CASE("verify-sharing") {
  const Result a = run("verify-sharing --n 2 --s 1 --c 0.5 --lambda 1 --samples 64 --radius 1");
  CHECK(a.code == 0);
  CHECK(contains(squeeze(a.out), R"("pass":true)"));
  CHECK(contains(squeeze(a.out), R"("via":"f'=f")"));

  const Result b = run("verify-sharing --n 3 --a3 1 --c -1.5 --lambda 1 --alpha-formula special");
  CHECK(b.code == 0);
  CHECK(contains(squeeze(b.out), R"("via":"a_n=1")"));

  CHECK(run("verify-sharing --n 2 --c 0 --lambda 1 --s 1").code == 2);
  CHECK(run("verify-sharing --n 2 --c 0.5 --lambda 0 --s 1").code == 2);
  CHECK(run("verify-sharing --n 3 --c 0.5 --lambda 0.3 --an 0 --alpha-formula ode").code == 2);
  CHECK(run("verify-sharing --n 3 --c 0.5 --lambda 0.3 --alpha-formula special").code == 2);
}

TEST_CASE("determinism") {
  const std::string args = "verify-sharing --n 3 --a3 2 --c 0.7 --c-im 0.1 --lambda 0.3 --alpha-formula ode --samples 8";
  const Result a = run(args);
  const Result b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("ode --n 5 --format json").out == run("ode --n 5 --format json --method assembled").out);
}

TEST_CASE("tolerance override") {
  const std::string args = "verify-sharing --n 2 --s 1 --c 0.5 --lambda 1 --samples 16";
  CHECK(run(args, "STIRSHARE_TOL=1e-30").code == 1);
  CHECK(run(args + " --tol 1e-6", "STIRSHARE_TOL=1e-30").code == 0);
  CHECK(run(args, "STIRSHARE_TOL=abc").code == 2);
  CHECK(run(args + " --tol -1").code == 2);
}
