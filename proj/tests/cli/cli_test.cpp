#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sys/wait.h>

#include <json.hpp>

using Json = nlohmann::ordered_json;

namespace {

const std::string kCli = REFLEX_CLI_PATH;
const std::string kData = std::string(REFLEX_SOURCE_DIR) + "/tests/data/";

struct Result {
  int code;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// Runs the CLI with stderr folded into the captured output when asked.
Result run(const std::string& args, bool with_stderr = false, const std::string& env = "") {
  const std::string cmd = env + " " + quote(kCli) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

Json run_json(const std::string& args) {
  const Result r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j) if (has_float(v)) return true;
  return false;
}

}  // namespace

TEST_CASE("classify") {
  const Json a = run_json("classify --in " + kData + "fig1a.json");
  CHECK(a["is_reflexive"] == true);
  CHECK(a["is_dual_fano"] == true);
  CHECK(a["is_dual_integral"] == true);
  const Json b = run_json("classify --in " + kData + "fig1b.json");
  CHECK(b["is_reflexive"] == false);
  CHECK(b["is_dual_fano"] == true);
  const Json c = run_json("classify --in " + kData + "fig1c.json");
  CHECK(c["is_dual_fano"] == false);
  CHECK(c["is_dual_integral"] == true);
  CHECK(c["facet_integers"] == Json::array({1, 1, 3}));
  // The report carries its polytope, so it can be fed back.
  CHECK(run_json("classify --in " + quote(a.dump())) == a);
  CHECK(run("classify --in " + kData + "fig1a.json --format text").out.find("reflexive: true") != std::string::npos);
}

TEST_CASE("ehrhart") {
  const Json h = run_json("ehrhart --in " + kData + "halfseg.json --nmax 6");
  CHECK(h["period"] == 2);
  CHECK(h["constituents"] == Json::parse(R"([["1","1/2"],["1/2","1/2"]])"));
  CHECK(h["values"] == Json::parse(R"([1,1,2,2,3,3,4])"));
  CHECK(h["quasi_lattice"] == false);
  CHECK(run_json("ehrhart --in " + quote(h.dump()) + " --nmax 6") == h);
  // A bare quasi-polynomial is evaluated.
  const Json q = run_json("ehrhart --in '{\"period\":1,\"constituents\":[[\"1\",\"3\",\"3\"]]}' --nmax 2");
  CHECK(q["values"] == Json::parse(R"([1,7,19])"));
}

TEST_CASE("dual, count, hibi, toric") {
  const Json d = run_json("dual --in " + kData + "fig1a.json");
  CHECK(d["vrep"] == Json::parse(R"([["-1","0"],["0","-1"],["2","3"]])"));
  CHECK(run_json("dual --in " + quote(d.dump())) == run_json("dual --in " + quote(d.dump())));
  CHECK(run_json("dual --in " + quote(run_json("dual --in " + quote(d.dump())).dump()))["vrep"] == d["vrep"]);

  const Json c = run_json("count --in " + kData + "fig1a.json --n 1 --points");
  CHECK(c["count"] == 7);
  CHECK(c["points"].size() == 7);
  CHECK(run_json("count --in " + kData + "fig1a.json --n 1 --interior")["count"] == 1);
  CHECK(run_json("count --in " + quote(c.dump()) + " --n 1 --points") == c);

  const Json h = run_json("hibi --in " + kData + "fig1c.json --nmax 5");
  CHECK(h["hibi_symmetric"] == true);
  CHECK(h["dual_integral"] == true);
  CHECK(run_json("hibi --in '{\"vrep\":[[\"0\",\"0\"],[\"1\",\"0\"],[\"0\",\"1\"],[\"1\",\"1\"]]}'")["hibi_symmetric"] ==
        false);

  const Json t = run_json("toric --in " + kData + "halfseg.json --nmax 4");
  CHECK(t["divisor"] == Json::parse(R"({"rays":[[-1],[1]],"coefficients":["0","1/2"]})"));
  CHECK(t["weil"] == false);
  CHECK(t["euler_char_global"] == Json::parse(R"([1,1,2,2,3])"));
  CHECK(t["euler_char_canonical_twist"] == Json::parse(R"([0,0,1,1])"));
  CHECK(run_json("toric --in " + quote(t.dump()) + " --nmax 4") == t);
  CHECK(run_json("toric --in " + quote(t["divisor"].dump()) + " --nmax 4") == t);
}

TEST_CASE("flag") {
  const Json f = run_json("flag --type A --rank 2 --parabolic 1,2 --lambda 2,2");
  CHECK(f["anticanonical"] == true);
  CHECK(f["polynomial_text"] == "8n^3 + 12n^2 + 6n + 1");
  CHECK(f["polynomial"]["constituents"] == Json::parse(R"([["1","6","12","8"]])"));
  CHECK(run_json("flag --in " + kData + "flag_a2_full.json") == f);
  CHECK(run_json("flag --in " + quote(f.dump())) == f);
  CHECK(run_json("flag --type A --rank 2 --parabolic 1,2 --lambda 1,1")["anticanonical"] == false);
  CHECK(run_json("flag --type G2 --rank 2 --parabolic 2")["anticanonical"] == true);
  CHECK(run("flag --type E --rank 6 --parabolic 1").code == 1);
  CHECK(run("flag --type A --rank 2 --parabolic 1 --lambda 1,1").code == 1);
}

TEST_CASE("fuzz replays its own report") {
  const std::string out = std::string(REFLEX_BINARY_DIR) + "/cli_fuzz_report.json";
  const Result r = run("fuzz --conjecture dualfano --dim 2 --samples 20 --seed 3 --out " + out);
  REQUIRE(r.code == 0);
  const Json report = Json::parse(r.out);
  CHECK(report["status"] == "open conjecture; results are evidence only");
  std::ifstream written(out);
  CHECK(Json::parse(written) == report);
  CHECK(run("fuzz --in " + out).out == r.out);
  CHECK(run("fuzz --conjecture riemann").code == 2);
  CHECK(run("fuzz --conjecture quasilattice --dim 4").code == 2);
}

TEST_CASE("errors, budgets and exit codes") {
  const Result usage = run("", true);
  CHECK(usage.code == 2);
  CHECK(run("classify").code == 2);
  CHECK(run("count --in x.json --format yaml").code == 2);

  const Result domain = run("dual --in '{\"vrep\":[[\"0\",\"0\"],[\"1\",\"0\"],[\"0\",\"1\"]]}'", true);
  CHECK(domain.code == 1);
  const Json e = Json::parse(domain.out);
  CHECK(e["error"] == "OriginNotInterior");
  CHECK(e["module"] == "kernel");

  CHECK(run("classify --in /nonexistent.json").code == 1);
  CHECK(run("classify --in '{\"vrep\": [[\"0\"]'").code == 1);
  CHECK(Json::parse(run("classify --in '{\"hrep\":[{\"normal\":[1],\"offset\":\"1\"}]}'", true).out)["error"] ==
        "UnboundedInput");

  const std::string big = "'{\"vrep\":[[\"0\",\"0\",\"0\"],[\"1/2\",\"0\",\"0\"],[\"0\",\"1/3\",\"0\"],[\"0\",\"0\",\"1/5\"]]}'";
  CHECK(run("ehrhart --in " + big).code == 0);
  const Result env = run("ehrhart --in " + big, true, "REFLEX_BUDGET=10");
  CHECK(env.code == 1);
  CHECK(Json::parse(env.out)["error"] == "ScaleExceeded");
  CHECK(run("ehrhart --in " + big + " --budget 10").code == 1);
  CHECK(run("ehrhart --in " + big + " --budget 100000", false, "REFLEX_BUDGET=10").code == 0);
  CHECK(run("ehrhart --in " + big, false, "REFLEX_BUDGET=abc").code == 1);
}

TEST_CASE("no floating point in any output") {
  for (const std::string& args : std::vector<std::string>{"classify --in " + kData + "fig1c.json", "ehrhart --in " + kData + "gt_rho_a2.json",
        "toric --in " + kData + "fig1b.json", "hibi --in " + kData + "fig1b.json",
        std::string("flag --type C --rank 3 --parabolic 1,3"), std::string("fuzz --conjecture quasilattice --samples 10")}) {
    CAPTURE(args);
    CHECK_FALSE(has_float(run_json(args)));
  }
  // The Gelfand-Tsetlin polytope of rho counts (n+1)^3.
  CHECK(run_json("ehrhart --in " + kData + "gt_rho_a2.json")["constituents"] ==
        Json::parse(R"([["1","3","3","1"]])"));
}
