#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vlink/bracket.hpp"
#include "vlink/cli/app.hpp"
#include "vlink/cli/fixtures.hpp"
#include "vlink/cli/report.hpp"
#include "vlink/gauss.hpp"
#include "vlink/laurent.hpp"
#include "vlink/moves.hpp"

using namespace vlink;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Outcome vlink_cli(std::vector<std::string> args) {
  args.insert(args.begin(), {"vlink", "--fixtures", VLINK_FIXTURES_FILE});
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json invariants(const std::string& input) {
  const Outcome o = vlink_cli({"--json", "invariants", input});
  REQUIRE(o.code == cli::kExitOk);
  return o.report();
}

LaurentPoly jones_q(const json& r) { return cli::poly_from_json(r.at("jones").at("q")); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("invariants of the trefoil") {
  const json r = invariants("O1+U2+O3+U1+O2+U3+");
  CHECK(r["n"] == 3);
  CHECK(r["writhe"] == 3);
  CHECK(r["determinant"] == 3);
  CHECK(r["alexander"]["text"] == "t^2 - t + 1");
  CHECK(r["alternating"] == true);
  CHECK(r["split"]["split"] == "certified-false");
  CHECK(parse_quarter_powers(r["jones"]["t"].get<std::string>()) == parse_quarter_powers("t + t^3 - t^4"));
}

TEST_CASE("text output is aligned key value lines") {
  const Outcome o = vlink_cli({"parse", "O1+U1+"});
  CHECK(o.code == 0);
  CHECK(o.out.find("canonical") != std::string::npos);
  CHECK(o.out.find("O1+U1+") != std::string::npos);
  const Outcome j = vlink_cli({"parse", "O1+U1+", "--json"});
  CHECK(j.report()["canonical"] == "O1+U1+");
}

TEST_CASE("exit codes") {
  CHECK(vlink_cli({"parse", "O1+U1"}).code == cli::kExitParse);
  CHECK(vlink_cli({"parse", "O1+O1+"}).code == cli::kExitParse);
  CHECK(vlink_cli({"invariants", "@no-such-fixture"}).code == cli::kExitParse);
  CHECK(vlink_cli({"frobnicate"}).code == cli::kExitParse);
  CHECK(vlink_cli({}).code == cli::kExitParse);
  std::string big;
  for (int i = 1; i <= 21; ++i) big += "O" + std::to_string(i) + "+U" + std::to_string(i) + "+";
  CHECK(vlink_cli({"bracket", big}).code == cli::kExitBound);
  CHECK(vlink_cli({"trees", "O1+U2+O3+U1+O2+U3+", "--root", "40"}).code == cli::kExitPrecondition);
  CHECK(vlink_cli({"moves", "O1+U1+", "--apply", "{\"kind\":\"R1_delete\",\"labels\":[7]}"}).code ==
        cli::kExitParse);
  CHECK(vlink_cli({"moves", "O1+U1+", "--apply", "not json"}).code == cli::kExitParse);
}

TEST_CASE("non-checkerboard determinant is reported as not applicable") {
  const json r = invariants("O1+;U1+");
  CHECK(r["determinant"].get<std::string>().rfind("not-applicable", 0) == 0);
  CHECK(r["vlk"].size() == 2);
}

TEST_CASE("every fixture meets its recorded expectations") {
  const cli::FixtureSet set = cli::FixtureSet::load(VLINK_FIXTURES_FILE);
  REQUIRE(set.records().size() >= 20);
  for (const auto& rec : set.records()) {
    CAPTURE(rec.name);
    const json r = invariants("@" + rec.name);
    CHECK(r["canonical"] == canonical_code(parse_gauss_code(rec.gauss_code)));
    for (const auto& [key, want] : rec.expected.items()) {
      CAPTURE(key);
      if (key == "writhe" || key == "alternating" || key == "determinant" || key == "cheng" ||
          key == "alternating_poly") {
        CHECK(r[key] == want);
      } else if (key == "visibly_split") {
        CHECK(r["split"]["visibly_split"] == want);
      } else if (key == "alexander") {
        const LaurentPoly got = cli::poly_from_json(r["alexander"]["coeffs"]);
        CHECK(equal_up_to_unit(got, parse_laurent(want.get<std::string>())));
      } else if (key == "jones_t") {
        CHECK(jones_q(r) == parse_quarter_powers(want.get<std::string>()));
      } else if (key == "jones_times_t_minus_t_inverse") {
        CHECK(jones_q(r) * t_to_q(parse_laurent("t - t^-1")) == t_to_q(parse_laurent(want.get<std::string>())));
      } else if (key == "jones_times_root_difference") {
        CHECK(jones_q(r) * parse_quarter_powers("t^(-1/2) - t^(1/2)") ==
              t_to_q(parse_laurent(want.get<std::string>())));
      } else if (key == "vlk") {
        json got = json::array();
        for (const auto& e : r["vlk"]) got.push_back({e["over"], e["under"], e["value"]});
        for (const auto& triple : want) CHECK(std::find(got.begin(), got.end(), triple) != got.end());
        CHECK(got.size() == want.size());
      } else {
        FAIL("unknown expectation key");
      }
    }
  }
}

TEST_CASE("check --split-certified") {
  const json split = vlink_cli({"--json", "check", "--split-certified", "*;O1+U1+"}).report();
  CHECK(split["split_certified"]["split"] == "certified-true");
  CHECK(split["split_certified"]["w_split"] == "certified-true");
  const json tt = vlink_cli({"--json", "check", "--split-certified", "@trefoil#trefoil"}).report();
  CHECK(tt["split_certified"]["determinant"] == 9);
  CHECK(tt["split_certified"]["split"] == "certified-false");
  CHECK(tt["split_certified"]["semi_alternating"] == true);
  CHECK_FALSE(tt.contains("cheng"));
  const json all = vlink_cli({"--json", "check", "O1+;U1+"}).report();
  CHECK(all["cheng"]["value"] == false);
  CHECK(all["checkerboard"]["value"] == false);
  CHECK(all["split"]["visibly_split"] == false);
}

TEST_CASE("reduce and connect-sum") {
  const json r = vlink_cli({"--json", "reduce", "O4+U4+O1+U2+O3+U1+O2+U3+"}).report();
  CHECK(r["nugatory"] == json::array({4}));
  CHECK(r["n"] == 3);
  const json s = vlink_cli({"--json", "connect-sum", "@trefoil", "@trefoil"}).report();
  CHECK(s["n"] == 6);
  CHECK(invariants(s["canonical"].get<std::string>())["determinant"] == 9);
}

TEST_CASE("move records round trip through JSON") {
  const GaussDiagram d = parse_gauss_code("O1+U2-O3-U1+O4-U3-O2-U4-");
  for (const auto& [m, r] : enumerate_moves(d, MoveSet::welded_moves(), 6)) {
    const json j = cli::move_to_json(m);
    CHECK(apply_move(d, cli::move_from_json(json::parse(j.dump()))) == r);
  }
}

TEST_CASE("a search path replays through moves --apply") {
  const Outcome o = vlink_cli({"--json", "search", "@4.106", "@4.107", "--allow-f1", "--max-crossings", "6",
                               "--budget", "1000000"});
  REQUIRE(o.code == 0);
  const json v = o.report();
  REQUIRE(v["status"] == "equivalent");
  std::string code = v["start"];
  for (const auto& m : v["path"]) {
    const Outcome step = vlink_cli({"--json", "moves", code, "--allow-f1", "--apply", m.dump()});
    REQUIRE(step.code == 0);
    code = step.report()["canonical"];
  }
  CHECK(code == v["target"]);
}

TEST_CASE("moves listing agrees with enumeration") {
  const json r = vlink_cli({"--json", "moves", "O1+U1+", "--max-crossings", "2"}).report();
  CHECK(r["moves"].size() == enumerate_moves(parse_gauss_code("O1+U1+"), MoveSet::virtual_moves(), 2).size());
}

TEST_CASE("trees from an edge-list file") {
  const auto path = std::filesystem::temp_directory_path() / "vlink_cli_edges.txt";
  {
    std::ofstream f(path);
    f << "# a directed triangle plus its reverse\n0 1\n1 2\n2 0\n1 0\n2 1 -t\n0 2\n";
  }
  const Outcome o = vlink_cli({"--json", "trees", path.string(), "--list"});
  std::filesystem::remove(path);
  REQUIRE(o.code == 0);
  const json r = o.report();
  CHECK(r["vertices"] == 3);
  CHECK(r["arborescences"].size() == 3);
  CHECK(parse_laurent(r["tree_count"].get<std::string>()) == parse_laurent("2 - t"));
  CHECK(r["eulerian_circuits"] == "3");
}

TEST_CASE("trees of a valuated source-sink graph") {
  const json r = vlink_cli({"--json", "trees", "@trefoil", "--valuated"}).report();
  CHECK(equal_up_to_unit(parse_laurent(r["tree_count"].get<std::string>()), parse_laurent("t^2 - t + 1")));
}

}
