#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "itercurves/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = itc::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  Run r = run(args);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["schema"] == itc::kSchema);
  return j["result"];
}

}  // namespace

TEST_CASE("cli orbit and stages") {
  Run r = run({"orbit", "--c", "-2", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("orbit: [-2, 2, 2, 2, 2]") != std::string::npos);

  json s = run_json({"stages", "--c", "3", "--n", "4"});
  CHECK(s["stages"][2]["status"] == "NonMaximal");
  CHECK(s["stages"][2]["witness"] == json::array({"f^2(0)"}));
  CHECK(s["stages"][3]["status"] == "Unknown");
  CHECK(s["tree_order"] == "32768");
}

TEST_CASE("cli verification commands") {
  json c = run_json({"verify", "chebyshev", "--n", "2", "--p", "5"});
  CHECK(c["holds"] == true);
  json off = run_json({"verify", "chebyshev", "--n", "1", "--p", "3"});
  CHECK(off["holds"] == false);
  CHECK(run_json({"verify", "decomp", "--c", "-2", "--n", "3", "--p", "5"})["holds"] == true);
  CHECK(run_json({"verify", "bijection", "--p", "3", "--n", "2", "--r", "3"})["holds"] == true);
  CHECK(run_json({"verify", "charsum", "--n", "2", "--p", "5"})["holds"] == true);
  CHECK(run_json({"verify", "cm"})["holds"] == true);
  CHECK(run_json({"verify", "disc", "--c", "3", "--m", "3"})["holds"] == true);
  json ser = run_json({"verify", "series"});
  CHECK(ser["eta0"][1] == "-21/2");
  CHECK(ser["lambda"][0][2] == "-21/4");
}

TEST_CASE("cli curves, counts and searches") {
  json cv = run_json({"curve", "--family", "F", "--index", "2"});
  CHECK(cv["h"] == json::array({"1", "0", "2", "3", "3", "3", "1"}));
  CHECK(cv["genus"] == 2);
  json tw = run_json({"curve", "--family", "C", "--c", "3", "--n", "2", "--twist", "3"});
  CHECK(tw["params"]["twist"] == "3");
  json cu = run_json({"curve", "--family", "custom", "--poly", R"(["1","0","0","0","0","0","1"])"});
  CHECK(cu["genus"] == 2);

  CHECK(run_json({"count", "--family", "B+", "--n", "1", "--p", "5"})["count"] == 6);
  json cp = run_json({"charpoly", "--family", "B", "--c", "-2", "--n", "2", "--p", "5"});
  CHECK(cp["charpoly"] == json::array({"25", "0", "0", "0", "1"}));
  CHECK(cp["order"] == "26");
  CHECK(cp["verified"] == true);

  json rg = run_json({"runge", "--family", "F", "--index", "2"});
  CHECK(rg["scale"] == "16");
  CHECK(rg["points"]["complete_over"] == "Z");
  json pts = run_json({"points", "--family", "F", "--index", "2", "--height", "10"});
  CHECK(pts["points"].size() == 12);
  CHECK(pts["complete_over"] == "search_bound");
  json tp = run_json({"points", "--family", "F", "--index", "2", "--twist", "-1", "--height", "5"});
  CHECK(tp["obstructions"][0] == 3);

  CHECK(run_json({"scan", "--n", "4", "--height", "10"})["newly_small"] == json::array({"2/3", "-6/7"}));
  CHECK(run_json({"gcd-bound", "--n", "4", "--primes", "5,13,29"})["gcd"] == "2");
  json m = run_json({"mordell-scan"});
  CHECK(m["passing"] == json::array({3}));
  json s4 = run_json({"s4-survey", "--height", "30"});
  CHECK(s4["candidates"].size() == 2);
}

TEST_CASE("cli determinism across thread counts") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"scan", "--n", "3", "--int-bound", "300", "--json"},
           {"points", "--family", "F", "--index", "4", "--height", "20", "--json"},
           {"count", "--family", "F", "--index", "2", "--p", "10007", "--json"}}) {
    auto a = args, b = args;
    a.insert(a.end(), {"--threads", "1"});
    b.insert(b.end(), {"--threads", "4"});
    Run ra = run(a), rb = run(b);
    CHECK(ra.code == 0);
    CHECK(ra.out == rb.out);
  }
}

TEST_CASE("cli errors") {
  CHECK(run({}).code == itc::kExitUsage);
  CHECK(run({"orbit", "--c", "1"}).code == itc::kExitUsage);
  CHECK(run({"orbit", "--c", "x/y", "--n", "2"}).code == itc::kExitUsage);
  Run bad = run({"count", "--family", "C", "--c", "3", "--n", "2", "--p", "3", "--json"});
  CHECK(bad.code == itc::kExitMath);
  json e = json::parse(bad.out);
  CHECK(e["error"]["code"] == "BadReduction");
  CHECK(e["error"]["prime"] == 3);
  Run hyp = run({"verify", "chebyshev", "--n", "2", "--p", "7", "--json"});
  CHECK(hyp.code == itc::kExitMath);
  CHECK(json::parse(hyp.out)["error"]["code"] == "HypothesisViolated");
  Run cap = run({"orbit", "--c", "2", "--n", "40", "--json"});
  CHECK(json::parse(cap.out)["error"]["code"] == "CapExceeded");
  Run wide = run({"count", "--family", "F", "--index", "2", "--p", "3", "--m", "9", "--q-width", "1000", "--json"});
  CHECK(json::parse(wide.out)["error"]["code"] == "CapExceeded");
  CHECK(run({"--help"}).code == 0);
}
