#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "hypint/exact/coeff_table.hpp"
#include "hypint/exact/tables.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace hypint;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HYPINT_CLI) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json json_of(const Run& r) {
  REQUIRE(r.code == 0);
  REQUIRE(nlohmann::json::accept(r.out));
  return nlohmann::json::parse(r.out);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("eval") {
  const Run l2 = run("eval --L 2 --T 0");
  CHECK(l2.code == 0);
  CHECK(l2.out.find("7·ζ(3)/π² = 8.5255") != std::string::npos);
  const nlohmann::json p = json_of(run("eval --power --N 2 --format json"));
  CHECK(p["combination"] == "14·ζ(3)/π²");
  CHECK(p["value"].get<std::string>().rfind("1.70511359527002316", 0) == 0);
  const nlohmann::json s = json_of(run("symbolic --L 2 --T 1 --format json"));
  CHECK(s["combination"]["log2"] == "3/2");
  CHECK(s["combination"]["betadot_m2"] == "-1");
  const nlohmann::json rec = json_of(run("eval --recurrence zeta --N 1 --format json"));
  CHECK(rec["value"].get<std::string>().rfind("8.5255", 0) == 0);
  const Run conj = run("eval --L 5 --T 0.5 2>&1");
  CHECK(conj.code == 3);
  CHECK(conj.out.find("onjecture") != std::string::npos);
  CHECK(run("eval --L 2 --T -1 2>/dev/null").code != 0);
  CHECK(run("eval --L 2 --T abc 2>/dev/null").code == 2);
  CHECK(run("eval --bogus 2>/dev/null").code == 2);
}

TEST_CASE("precision from the environment") {
  const Run lo = run("eval --L 1 --T 0");
  const std::string cmd = std::string("HYPINT_BITS=256 ") + HYPINT_CLI + " eval --L 1 --T 0";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 512> buf{};
  std::string out;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  CHECK(pclose(pipe) == 0);
  CHECK(out.size() > lo.out.size() + 30);
}

TEST_CASE("table") {
  const Run h = run("table --kind h --n 3");
  CHECK(h.code == 0);
  CHECK(h.out.find("\n3,2,5,4\n") != std::string::npos);
  const CoeffTable parsed = parse_csv(h.out, TableKind::kH);
  CHECK(to_csv(parsed) == h.out);
  CHECK(parsed.at(3, 2) == make_rational(5, 4));
  const Run c = run("table --kind c --n 2");
  CHECK(c.out.find("\n2,2,-120,1\n") != std::string::npos);
  for (const char* kind : {"g", "h", "c", "d", "u", "v", "x", "y", "dN"}) {
    const Run csv = run(std::string("table --kind ") + kind + " --n 5");
    CHECK(csv.code == 0);
    CHECK(to_csv(parse_csv(csv.out, *parse_kind(kind), 5)) == csv.out);
    const nlohmann::json j = json_of(run(std::string("table --kind ") + kind + " --n 5 --format json"));
    CHECK(j.is_array());
    CHECK(!j.empty());
  }
  CHECK(run("table --kind zz 2>/dev/null").code == 2);
}

TEST_CASE("constants and products") {
  const nlohmann::json c = json_of(run("constants --format json"));
  const Real beta2 = Real::parse(c["beta2"].get<std::string>(), 160);
  CHECK(abs(beta2 - test::catalan(160)).to_double() < 1e-32);
  CHECK(c.size() == 13);
  const nlohmann::json p = json_of(run("products --s 0.25 --terms 10000 --format json"));
  CHECK(std::stod(p["gap"].get<std::string>()) < 1e-3);
}

TEST_CASE("verify exit status follows the report") {
  const std::string out = "cli_verify_report.json";
  const Run ok = run("verify --suite ramanujan --trials 4 --out " + out + " >/dev/null");
  CHECK(ok.code == 0);
  const nlohmann::json rep = nlohmann::json::parse(slurp(out));
  REQUIRE(!rep["cases"].empty());
  for (const auto& c : rep["cases"]) CHECK(c["status"] != "fail");
  const Run bad = run("verify --suite polygamma --tolerance 1e-200 --out " + out + " >/dev/null");
  CHECK(bad.code == 1);
  int fails = 0;
  const nlohmann::json failing = nlohmann::json::parse(slurp(out));
  for (const auto& c : failing["cases"]) fails += c["status"] == "fail";
  CHECK(fails > 0);
  CHECK(run("verify --suite nope 2>/dev/null").code == 2);
  std::remove(out.c_str());
}
