#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#ifndef COPOCONE_CLI_PATH
#error "COPOCONE_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args, const std::string& input = "") {
  std::string cmd;
  if (!input.empty()) {
    cmd = "printf '%s' '" + input + "' | ";
  }
  cmd += std::string(COPOCONE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

const char* kIdentity =
    R"({"a11":1,"a22":1,"a33":1,"a12":0,"a13":0,"a23":0})";

}  // namespace

TEST_CASE("check certifies the identity") {
  const RunResult r = run("check", kIdentity);
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["verdict"] == "copositive");
  CHECK(j["margin"].get<double>() == doctest::Approx(1.0 / 3));
  CHECK(j["witness"].is_null());
}

TEST_CASE("check reports violations with a witness") {
  const RunResult r = run(
      "check", R"({"a11":1,"a22":1,"a33":1,"a12":-1.1,"a13":0,"a23":0})");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["verdict"] == "not_copositive");
  CHECK(j["witness"][0].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("param full reproduces the identity layer") {
  const RunResult r =
      run("param full --s 1,1,1 --lambda 2 --t 0.3333333,0.3333333,0.3333334");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(std::abs(j["a12"].get<double>()) <= 1e-6);
  CHECK(std::abs(j["a23"].get<double>()) <= 1e-6);
  CHECK(j["a11"].get<double>() == 1.0);
}

TEST_CASE("invert round trips through the CLI") {
  const RunResult r = run(
      "invert", R"({"a11":1,"a22":1,"a33":1,"a12":-1,"a13":1,"a23":1})");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["branch"] == "edge_null");
  CHECK(j["lambda"].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("invert rejects non-copositive input with exit 1") {
  const RunResult r = run(
      "invert", R"({"a11":1,"a22":1,"a33":1,"a12":-1.1,"a13":0,"a23":0})");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("not_copositive_input") != std::string::npos);
}

TEST_CASE("malformed JSON is a domain error") {
  const RunResult r = run("check", "not json");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("bad_json") != std::string::npos);
}

TEST_CASE("identical seeds give byte-identical samples") {
  const RunResult a = run("sample slice --n 2000 --seed 9");
  const RunResult b = run("sample slice --n 2000 --seed 9");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.rfind("a12,a13,a23\n", 0) == 0);
  const RunResult c = run("sample slice --n 2000 --seed 10");
  CHECK(c.output != b.output);
}

TEST_CASE("scalar and vector kernel selections emit identical bytes") {
  const RunResult vec = run("sample boundary --kind curved --resolution 30");
  RunResult scal;
  {
    const std::string cmd = std::string("COPOCONE_SIMD=scalar ") +
                            COPOCONE_CLI_PATH +
                            " sample boundary --kind curved --resolution 30";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) {
      scal.output += buf.data();
    }
    scal.exit_code = WEXITSTATUS(pclose(pipe));
  }
  CHECK(vec.exit_code == 0);
  CHECK(scal.exit_code == 0);
  CHECK(vec.output == scal.output);
}

TEST_CASE("layers CSV carries the label column") {
  const RunResult r = run("sample layers --s 1,1,1 --lambdas 0,2 --resolution 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("a12,a13,a23,label\n", 0) == 0);
}

TEST_CASE("diananda sampling streams matrix JSON lines") {
  const RunResult r = run("sample diananda --n 3 --seed 1");
  CHECK(r.exit_code == 0);
  int lines = 0;
  std::size_t pos = 0;
  while ((pos = r.output.find('\n', pos)) != std::string::npos) {
    ++lines;
    ++pos;
  }
  CHECK(lines == 3);
  const auto j = nlohmann::json::parse(r.output.substr(0, r.output.find('\n')));
  CHECK(j.contains("a11"));
  CHECK(j.contains("a23"));
}

TEST_CASE("roundtrip reports the max parameter error") {
  const RunResult r = run("roundtrip --n 50 --seed 3");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["max_param_error"].get<double>() <= 1e-6);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("param full --t 1,2").exit_code == 2);
  CHECK(run("").exit_code == 2);
}
