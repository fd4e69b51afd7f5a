#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "seifcalc/json_io.hpp"

namespace seifcalc {

struct Expectation {
  std::string key;
  std::string check;  // equals | same_seifert | lens_equal | lens_equal_up_to_orientation |
                      // less_than | greater_than | residue_in
  Json value;
  std::string tag;    // PAPER | DERIVED | TRIVIAL
  std::string quote;  // required for PAPER
};

struct ScenarioCase {
  std::string name;
  std::string citation;
  std::string kind;
  Json inputs;
  std::vector<Expectation> expect;
};

struct AssertionRecord {
  std::string key, check;
  Json expected, computed;
  bool passed = false;
  std::string message;
};

struct CaseReport {
  std::string name;
  bool passed = false;
  std::string error;  // set when the computation itself threw
  std::vector<AssertionRecord> assertions;
};

struct Summary {
  std::size_t total = 0, passed = 0, failed = 0;
  std::vector<std::string> failed_names;
  std::vector<CaseReport> reports;
  friend bool operator==(const Summary& a, const Summary& b);
};

// Every output a case kind produces, keyed by name.
Json compute_case_outputs(const std::string& kind, const Json& inputs);

// Compares one expectation against the computed outputs.
AssertionRecord check_expectation(const Expectation& e, const Json& outputs);

class ScenarioSuite {
 public:
  static ScenarioSuite parse(const Json& data);
  static ScenarioSuite load(const std::string& path);
  // $SEIFCALC_CASE_DATA, else the source-tree file, else the installed copy.
  static std::string default_path();
  static ScenarioSuite load_default();

  // Cases in data-file order.
  std::vector<std::string> list_cases() const;
  const ScenarioCase& find(const std::string& name) const;
  CaseReport run_case(const std::string& name) const;
  Summary run_all(bool parallel) const;

  std::vector<ScenarioCase>& cases() { return cases_; }
  const std::vector<ScenarioCase>& cases() const { return cases_; }

 private:
  std::vector<ScenarioCase> cases_;
};

CaseReport run_scenario(const ScenarioCase& c);

Json encode(const CaseReport& r);
Json encode(const Summary& s);

}  // namespace seifcalc
