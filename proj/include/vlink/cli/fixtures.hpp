#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vlink/gauss.hpp"

namespace vlink::cli {

struct FixtureRecord {
  std::string name;
  std::string gauss_code;
  std::string provenance;
  nlohmann::json expected;  // object, possibly empty
};

// Read-only manifest of named diagrams.
class FixtureSet {
 public:
  // Throws std::runtime_error if the file cannot be read or lacks a
  // "fixtures" array of records with name, gauss_code and provenance.
  static FixtureSet load(const std::string& path);
  static FixtureSet from_json(const nlohmann::json& doc);

  const std::vector<FixtureRecord>& records() const { return records_; }
  const FixtureRecord* find(const std::string& name) const;

 private:
  std::vector<FixtureRecord> records_;
};

// Path compiled in at build time; VLINK_FIXTURES in the environment wins.
std::string default_fixtures_path();

// "@name" looks the name up in `fixtures`, anything else is parsed as Gauss
// code. Throws std::invalid_argument for an unknown fixture name.
GaussDiagram resolve_diagram(const std::string& input, const FixtureSet* fixtures);

}  // namespace vlink::cli
