#include "vlink/cli/app.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vlink/arborescence.hpp"
#include "vlink/bracket.hpp"
#include "vlink/cli/fixtures.hpp"
#include "vlink/cli/report.hpp"
#include "vlink/error.hpp"
#include "vlink/gauss.hpp"
#include "vlink/moves.hpp"
#include "vlink/numbering.hpp"

namespace vlink::cli {

using nlohmann::json;

namespace {

struct Options {
  bool json_output = false;
  std::string fixtures_path;
  std::string input;
  std::string second_input;
  CheckFlags check;
  std::vector<std::size_t> gap1{0, 0};
  std::vector<std::size_t> gap2{0, 0};
  bool allow_f1 = false;
  std::optional<std::size_t> max_crossings;
  std::size_t budget = 100000;
  std::string apply;
  std::size_t root = 0;
  bool valuated = false;
  bool list_trees = false;
};

class Context {
 public:
  explicit Context(const Options& o) : options_(o) {}

  GaussDiagram diagram(const std::string& input) {
    if (!input.empty() && input.front() == '@' && !fixtures_) {
      const std::string path = options_.fixtures_path.empty() ? default_fixtures_path() : options_.fixtures_path;
      fixtures_ = FixtureSet::load(path);
    }
    return resolve_diagram(input, fixtures_ ? &*fixtures_ : nullptr);
  }

 private:
  const Options& options_;
  std::optional<FixtureSet> fixtures_;
};

Gap to_gap(const std::vector<std::size_t>& v) {
  if (v.size() != 2) throw std::invalid_argument("a gap is given as CIRCLE POSITION");
  return Gap{v[0], v[1]};
}

MoveSet allowed_moves(const Options& o) { return o.allow_f1 ? MoveSet::welded_moves() : MoveSet::virtual_moves(); }

json parse_report(const GaussDiagram& d) {
  const DiagramStats s = stats(d);
  return {{"code", serialize(d)},     {"canonical", canonical_code(d)}, {"n", s.n},
          {"k", s.k},                 {"writhe", s.writhe},             {"components", s.components},
          {"alternating", is_alternating(d)}};
}

json reduce_report(const GaussDiagram& d) {
  const GaussDiagram r = reduce(d);
  return {{"nugatory", find_nugatory(d)},
          {"reduced", serialize(r)},
          {"canonical", canonical_code(r)},
          {"n", r.crossing_count()}};
}

json moves_report(const GaussDiagram& d, const Options& o) {
  if (!o.apply.empty()) {
    const GaussDiagram r = apply_move(d, move_from_json(json::parse(o.apply)));
    return {{"result", serialize(r)}, {"canonical", canonical_code(r)}};
  }
  const std::size_t max_n = o.max_crossings.value_or(d.crossing_count() + 2);
  json list = json::array();
  for (const auto& [m, r] : enumerate_moves(d, allowed_moves(o), max_n))
    list.push_back({{"move", move_to_json(m)}, {"describe", describe(m)}, {"canonical", canonical_code(r)}});
  return {{"code", serialize(d)}, {"max_crossings", max_n}, {"moves", list}};
}

json search_report(const GaussDiagram& a, const GaussDiagram& b, const Options& o) {
  const std::size_t max_n = o.max_crossings.value_or(std::max(a.crossing_count(), b.crossing_count()) + 2);
  json r = verdict_to_json(equivalent_bounded(a, b, allowed_moves(o), max_n, o.budget));
  r["start"] = canonical_code(a);
  r["target"] = canonical_code(b);
  r["max_crossings"] = max_n;
  return r;
}

// Edge-list lines: "src dst [valuation]"; blank lines and '#' comments skip.
Digraph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list " + path);
  struct Row {
    std::size_t source, target;
    LaurentPoly valuation;
  };
  std::vector<Row> rows;
  std::size_t vertices = 0;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long s = 0;
    long long t = 0;
    if (!(fields >> s)) continue;
    if (!(fields >> t) || s < 0 || t < 0)
      throw ParseError("edge list line " + std::to_string(line_number) + " needs two vertex numbers", 0);
    std::string rest;
    std::getline(fields, rest);
    const bool blank = rest.find_first_not_of(" \t\r") == std::string::npos;
    rows.push_back({static_cast<std::size_t>(s), static_cast<std::size_t>(t),
                    blank ? LaurentPoly(1) : parse_laurent(rest)});
    vertices = std::max({vertices, rows.back().source + 1, rows.back().target + 1});
  }
  Digraph g(vertices);
  for (const Row& r : rows) g.add_edge(r.source, r.target, r.valuation);
  return g;
}

json trees_report(const Digraph& g, const Options& o) {
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back({{"source", e.source}, {"target", e.target}, {"valuation", e.valuation.to_string()}});
  json r = {{"vertices", g.vertex_count()}, {"edges", edges}, {"root", o.root}};
  if (o.root >= g.vertex_count()) throw PreconditionError("root is not a vertex of the graph");
  const LaurentPoly count = count_rooted_trees(g, o.root);
  r["tree_count"] = count.to_string();
  if (o.list_trees) {
    json trees = json::array();
    for (const Arborescence& t : enumerate_arborescences(g, o.root)) trees.push_back(t.edges);
    r["arborescences"] = trees;
  }
  r["articulation_vertex"] = has_articulation_vertex(g);
  if (g.edge_count() > 0 && g.is_balanced() && g.is_weakly_connected())
    r["eulerian_circuits"] = count_eulerian_circuits(g, EulerianMode::best).str();
  else
    r["eulerian_circuits"] = not_applicable("graph is not balanced and connected");
  return r;
}

void emit(std::ostream& out, const json& report, bool as_json) {
  if (as_json)
    out << report.dump(2) << '\n';
  else
    out << render_text(report);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Invariants of virtual and welded links from Gauss diagrams", "vlink"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json_output, "JSON output");
  app.add_option("--fixtures", o.fixtures_path, "fixture manifest for @name inputs");

  const std::string code_help = "Gauss code or @fixture";
  auto* parse = app.add_subcommand("parse", "Validate and canonicalize a Gauss code");
  parse->add_option("code", o.input, code_help)->required();

  auto* invariants = app.add_subcommand("invariants", "All invariants whose preconditions hold");
  invariants->add_option("code", o.input, code_help)->required();

  auto* check = app.add_subcommand("check", "Evaluate diagram predicates (all when no flag is given)");
  check->add_option("code", o.input, code_help)->required();
  check->add_flag("--alternating", o.check.alternating);
  check->add_flag("--split", o.check.split);
  check->add_flag("--checkerboard", o.check.checkerboard);
  check->add_flag("--almost-classical", o.check.almost_classical);
  check->add_flag("--cheng", o.check.cheng);
  check->add_flag("--split-certified", o.check.split_certified);

  auto* reduce_cmd = app.add_subcommand("reduce", "Remove nugatory crossings");
  reduce_cmd->add_option("code", o.input, code_help)->required();

  auto* sum = app.add_subcommand("connect-sum", "Connected sum at the given gaps");
  sum->add_option("first", o.input, code_help)->required();
  sum->add_option("second", o.second_input, code_help)->required();
  sum->add_option("--gap1", o.gap1, "CIRCLE POSITION in the first diagram")->expected(2);
  sum->add_option("--gap2", o.gap2, "CIRCLE POSITION in the second diagram")->expected(2);

  auto* moves = app.add_subcommand("moves", "List applicable moves, or apply one given as JSON");
  moves->add_option("code", o.input, code_help)->required();
  moves->add_flag("--allow-f1", o.allow_f1, "include the forbidden move F1");
  moves->add_option("--max-crossings", o.max_crossings, "largest chord count of a result (default n+2)");
  moves->add_option("--apply", o.apply, "move record to apply");

  auto* search = app.add_subcommand("search", "Bounded search for a move sequence between two diagrams");
  search->add_option("first", o.input, code_help)->required();
  search->add_option("second", o.second_input, code_help)->required();
  search->add_flag("--allow-f1", o.allow_f1, "welded equivalence");
  search->add_option("--max-crossings", o.max_crossings, "chord bound on intermediate diagrams");
  search->add_option("--budget", o.budget, "node budget");

  auto* trees = app.add_subcommand("trees", "Arborescence counts of a source-sink graph or edge-list file");
  trees->add_option("input", o.input, "Gauss code, @fixture, or edge-list file")->required();
  trees->add_option("--root", o.root, "root vertex");
  trees->add_flag("--valuated", o.valuated, "valuated source-sink graph");
  trees->add_flag("--list", o.list_trees, "list the arborescences");

  auto* bracket = app.add_subcommand("bracket", "Bracket state sum and Jones polynomial");
  bracket->add_option("code", o.input, code_help)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  Context ctx(o);
  try {
    json report;
    if (parse->parsed()) {
      report = parse_report(ctx.diagram(o.input));
    } else if (invariants->parsed()) {
      report = invariant_report(ctx.diagram(o.input));
    } else if (check->parsed()) {
      report = check_report(ctx.diagram(o.input), o.check);
    } else if (reduce_cmd->parsed()) {
      report = reduce_report(ctx.diagram(o.input));
    } else if (sum->parsed()) {
      const GaussDiagram r =
          connected_sum(ctx.diagram(o.input), to_gap(o.gap1), ctx.diagram(o.second_input), to_gap(o.gap2));
      report = parse_report(r);
    } else if (moves->parsed()) {
      report = moves_report(ctx.diagram(o.input), o);
    } else if (search->parsed()) {
      report = search_report(ctx.diagram(o.input), ctx.diagram(o.second_input), o);
    } else if (trees->parsed()) {
      const bool file = std::filesystem::is_regular_file(o.input);
      const Digraph g = file ? read_edge_list(o.input) : source_sink_graph(ctx.diagram(o.input), o.valuated);
      report = trees_report(g, o);
    } else if (bracket->parsed()) {
      report = bracket_report(ctx.diagram(o.input));
    }
    emit(out, report, o.json_output);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DiagramError& e) {
    err << "invalid diagram: " << e.what() << '\n';
    return kExitParse;
  } catch (const BoundExceeded& e) {
    err << "bound exceeded: " << e.what() << '\n';
    return kExitBound;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::out_of_range& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitParse;
  } catch (const json::exception& e) {
    err << "invalid JSON: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace vlink::cli
