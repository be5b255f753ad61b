#include "vlink/cli/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace vlink::cli {

FixtureSet FixtureSet::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("fixtures") || !doc["fixtures"].is_array())
    throw std::runtime_error("fixture file needs a \"fixtures\" array");
  FixtureSet set;
  for (const auto& entry : doc["fixtures"]) {
    FixtureRecord r;
    r.name = entry.at("name").get<std::string>();
    r.gauss_code = entry.at("gauss_code").get<std::string>();
    r.provenance = entry.at("provenance").get<std::string>();
    r.expected = entry.value("expected", nlohmann::json::object());
    if (set.find(r.name)) throw std::runtime_error("duplicate fixture name '" + r.name + "'");
    set.records_.push_back(std::move(r));
  }
  return set;
}

FixtureSet FixtureSet::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path);
  return from_json(nlohmann::json::parse(in));
}

const FixtureRecord* FixtureSet::find(const std::string& name) const {
  for (const auto& r : records_)
    if (r.name == name) return &r;
  return nullptr;
}

std::string default_fixtures_path() {
  if (const char* env = std::getenv("VLINK_FIXTURES")) return env;
#ifdef VLINK_FIXTURES_FILE
  return VLINK_FIXTURES_FILE;
#else
  return "fixtures.json";
#endif
}

GaussDiagram resolve_diagram(const std::string& input, const FixtureSet* fixtures) {
  if (!input.empty() && input.front() == '@') {
    const std::string name = input.substr(1);
    const FixtureRecord* r = fixtures ? fixtures->find(name) : nullptr;
    if (!r) throw std::invalid_argument("unknown fixture '" + name + "'");
    return parse_gauss_code(r->gauss_code);
  }
  return parse_gauss_code(input);
}

}  // namespace vlink::cli
