#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgereg/field.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/io.hpp"
#include "edgereg/monomial.hpp"
#include "edgereg/regularity.hpp"

namespace edgereg {

struct ExpectedValue {
  std::string quantity;
  int power = 1;
  /// "q", "f2", ... or "any" for field-independent quantities.
  std::string field;
  long value = 0;
  /// "published" for values stated in the literature, "derived" for values
  /// obtained by an independent computation.
  std::string source;
  std::string citation;
  Json params = Json::object();
};

struct Scenario {
  std::string name;
  std::string summary;
  /// "graph" or "ideal"
  std::string payload_kind;
  /// Path under data/.
  std::string payload_file;
  bool slow = false;
  std::vector<ExpectedValue> expected;
};

/// Text of an embedded data file; InputError when absent.
std::string_view fixture_text(std::string_view path);

Scenario scenario_from_json(const Json& j);
Json scenario_to_json(const Scenario& s);

/// Built-in scenarios sorted by name.
const std::vector<Scenario>& registry();
/// InputError for unknown names.
const Scenario& find_scenario(std::string_view name);

/// The payload as an ideal (edge ideal for graph payloads).
MonomialIdeal scenario_ideal(const Scenario& s);
/// InputError unless the payload is a graph.
Graph scenario_graph(const Scenario& s);

struct Check {
  ExpectedValue expected;
  long computed = 0;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string scenario;
  std::vector<Check> checks;
  bool pass = true;
  double seconds = 0;
};

/// Recomputes every expected value whose field is "any" or matches
/// `field` (all when nullopt). InputError for slow scenarios without
/// `allow_slow` and for unsupported quantities.
Report verify(const Scenario& s, std::optional<FieldSpec> field, const RegOptions& options, bool allow_slow);

/// Deterministic: wall time is left out.
Json report_to_json(const Report& r);
std::string report_to_table(const Report& r);

}  // namespace edgereg
