#include "vlink/cli/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vlink/alexander.hpp"
#include "vlink/bracket.hpp"
#include "vlink/numbering.hpp"

namespace vlink::cli {

using nlohmann::json;

namespace {

json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long long>());
}

const char* verdict_name(int v) {
  switch (v) {
    case 1: return "certified-true";
    case 0: return "certified-false";
    default: return "unknown";
  }
}

json vlk_entries(const GaussDiagram& d) {
  json out = json::array();
  if (d.circle_count() < 2) return out;
  const VlkTable t = vlk_table(d, circle_partition(d));
  for (std::size_t i = 0; i < t.entries.size(); ++i)
    for (std::size_t j = 0; j < t.entries.size(); ++j)
      if (i != j) out.push_back({{"over", i}, {"under", j}, {"value", t.entries[i][j]}});
  return out;
}

struct SplitVerdicts {
  int split = -1;
  int w_split = -1;
  std::string basis;
};

// Split and w-split verdicts: visibly split diagrams are split; a nonzero
// determinant rules out w-splitting (and hence splitting), since the
// determinant is a welded invariant vanishing on split links.
SplitVerdicts split_verdicts(const GaussDiagram& d, const std::optional<Integer>& det) {
  SplitVerdicts v;
  if (is_visibly_split(d)) {
    v.split = v.w_split = 1;
    v.basis = "diagram is visibly split";
  } else if (det && *det != 0) {
    v.split = v.w_split = 0;
    v.basis = "determinant is nonzero";
  } else {
    v.basis = "no certificate: determinant vanishes or is unavailable";
  }
  return v;
}

json labeling_json(const std::optional<ArcLabeling>& l) {
  if (!l) return nullptr;
  return l->values;
}

}  // namespace

json poly_to_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = integer_to_json(c);
  return out;
}

LaurentPoly poly_from_json(const json& j) {
  std::map<int, Integer> terms;
  for (const auto& [key, value] : j.items()) terms[std::stoi(key)] = integer_from_json(value);
  return LaurentPoly::from_terms(terms);
}

std::string not_applicable(const std::string& reason) { return "not-applicable: " + reason; }

json invariant_report(const GaussDiagram& d) {
  const DiagramStats s = stats(d);
  json r;
  r["n"] = s.n;
  r["k"] = s.k;
  r["writhe"] = s.writhe;
  r["canonical"] = canonical_code(d);
  const bool checkerboard = is_checkerboard_colorable(d);
  const bool almost_classical = is_almost_classical_diagram(d);
  r["checkerboard"] = checkerboard;
  r["almost_classical_diagram"] = almost_classical;
  r["alternating"] = is_alternating(d);
  std::optional<Integer> det;
  if (checkerboard) {
    det = determinant(d);
    r["determinant"] = integer_to_json(*det);
  } else {
    r["determinant"] = not_applicable("diagram is not checkerboard colorable");
  }
  const AlexanderMode mode = almost_classical ? AlexanderMode::almost_classical : AlexanderMode::gcd;
  const LaurentPoly delta = alexander_polynomial(d, mode);
  r["alexander"] = {{"coeffs", poly_to_json(delta)},
                    {"mode", mode == AlexanderMode::almost_classical ? "almost_classical" : "gcd"},
                    {"text", delta.to_string()}};
  r["alternating_poly"] = is_alternating_poly(delta);
  r["vlk"] = vlk_entries(d);
  r["cheng"] = is_cheng_colorable(d);
  const SplitVerdicts v = split_verdicts(d, det);
  r["split"] = {{"visibly_split", is_visibly_split(d)}, {"split", verdict_name(v.split)},
                {"w_split", verdict_name(v.w_split)}};
  if (d.crossing_count() <= kBracketChordBound) {
    const LaurentPoly jones = jones_polynomial(d);
    r["jones"] = {{"q", poly_to_json(jones)}, {"t", format_quarter_powers(jones)}};
  } else {
    r["jones"] = not_applicable("state sum limited to " + std::to_string(kBracketChordBound) + " chords");
  }
  return r;
}

json check_report(const GaussDiagram& d, const CheckFlags& requested) {
  CheckFlags f = requested;
  if (!f.any()) f = CheckFlags{true, true, true, true, true, true};
  json r;
  r["n"] = d.crossing_count();
  if (f.alternating) r["alternating"] = is_alternating(d);
  if (f.split) {
    json components = json::array();
    for (const auto& c : connected_components(d)) components.push_back(c);
    r["split"] = {{"visibly_split", is_visibly_split(d)}, {"components", components}};
  }
  if (f.checkerboard) {
    const auto l = numbering(d, 2);
    r["checkerboard"] = {{"value", l.has_value()}, {"witness", labeling_json(l)}};
  }
  if (f.almost_classical) {
    const auto l = numbering(d, 0);
    r["almost_classical"] = {{"value", l.has_value()}, {"witness", labeling_json(l)}};
  }
  if (f.cheng) r["cheng"] = {{"value", is_cheng_colorable(d)}, {"vlk", vlk_entries(d)}};
  if (f.split_certified) {
    json c;
    const bool checkerboard = is_checkerboard_colorable(d);
    std::optional<Integer> det;
    if (checkerboard) det = determinant(d);
    c["reduced"] = is_reduced(d);
    c["alternating"] = is_alternating(d);
    c["semi_alternating"] = is_semi_alternating(d);
    c["determinant"] = det ? integer_to_json(*det) : json(not_applicable("diagram is not checkerboard colorable"));
    if (det && c["reduced"].get<bool>() && c["alternating"].get<bool>() && !is_visibly_split(d))
      c["determinant_at_least_n"] = *det >= Integer(d.crossing_count());
    const SplitVerdicts v = split_verdicts(d, det);
    c["split"] = verdict_name(v.split);
    c["w_split"] = verdict_name(v.w_split);
    c["basis"] = v.basis;
    r["split_certified"] = c;
  }
  return r;
}

json bracket_report(const GaussDiagram& d) {
  const LaurentPoly jones = jones_polynomial(d);
  return {{"bracket", poly_to_json(bracket_state_sum(d))},
          {"jones_q", poly_to_json(jones)},
          {"jones_t", format_quarter_powers(jones)},
          {"writhe", stats(d).writhe}};
}

json move_to_json(const MoveInstance& m) {
  json j;
  j["kind"] = std::string(move_kind_name(m.kind));
  auto gap = [](const Gap& g) { return json::array({g.circle, g.position}); };
  switch (m.kind) {
    case MoveKind::r1_insert:
      j["gap"] = gap(m.gap);
      j["tail_first"] = m.tail_first;
      j["sign"] = std::string(1, sign_char(m.sign));
      break;
    case MoveKind::r2_insert:
      j["gap"] = gap(m.gap);
      j["second_gap"] = gap(m.second_gap);
      j["reversed"] = m.reversed;
      j["heads_first"] = m.heads_first;
      j["sign"] = std::string(1, sign_char(m.sign));
      break;
    case MoveKind::f1:
      j["gap"] = gap(m.gap);
      break;
    default:
      j["labels"] = m.labels;
  }
  return j;
}

MoveInstance move_from_json(const json& j) {
  MoveInstance m;
  m.kind = parse_move_kind(j.at("kind").get<std::string>());
  auto gap = [](const json& g) {
    if (!g.is_array() || g.size() != 2) throw std::invalid_argument("gap must be [circle, position]");
    return Gap{g[0].get<std::size_t>(), g[1].get<std::size_t>()};
  };
  auto sign = [](const json& s) {
    const std::string text = s.get<std::string>();
    if (text != "+" && text != "-") throw std::invalid_argument("sign must be \"+\" or \"-\"");
    return text == "+" ? ChordSign::positive : ChordSign::negative;
  };
  if (j.contains("gap")) m.gap = gap(j["gap"]);
  if (j.contains("second_gap")) m.second_gap = gap(j["second_gap"]);
  if (j.contains("sign")) m.sign = sign(j["sign"]);
  m.tail_first = j.value("tail_first", true);
  m.reversed = j.value("reversed", false);
  m.heads_first = j.value("heads_first", false);
  if (j.contains("labels")) m.labels = j["labels"].get<std::vector<int>>();
  return m;
}

json verdict_to_json(const SearchVerdict& v) {
  json path = json::array();
  for (const auto& m : v.path) path.push_back(move_to_json(m));
  return {{"status", v.status == SearchVerdict::Status::equivalent ? "equivalent" : "not_found"},
          {"path", path},
          {"explored", v.explored},
          {"bound_hit", v.bound_hit}};
}

namespace {

bool is_poly_object(const json& j) {
  if (!j.is_object() || j.empty()) return false;
  for (const auto& [key, value] : j.items()) {
    if (key.find_first_not_of("-0123456789") != std::string::npos) return false;
    if (!value.is_number_integer() && !value.is_string()) return false;
  }
  return true;
}

// Integer-keyed objects print as polynomials: Alexander coefficients in t,
// the bracket in A, Jones values in q.
std::string poly_variable(const std::string& path) {
  const std::string last = path.substr(path.rfind('.') == std::string::npos ? 0 : path.rfind('.') + 1);
  if (last == "coeffs") return "t";
  if (last == "bracket") return "A";
  return "q";
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (is_poly_object(j)) {
    rows.emplace_back(prefix, poly_from_json(j).to_string(poly_variable(prefix)));
    return;
  }
  if (j.is_object() && !j.empty()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
    return;
  }
  rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

}  // namespace

std::string render_text(const json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return out.str();
}

}  // namespace vlink::cli
