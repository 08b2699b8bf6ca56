#include "edgereg/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "edgereg/closure.hpp"
#include "edgereg/error.hpp"
#include "edgereg/fixtures.hpp"
#include "edgereg/simplicial.hpp"

namespace edgereg {

std::string_view fixture_text(std::string_view path) {
  for (const auto& f : embedded_fixtures()) {
    if (f.path == path) return f.text;
  }
  throw InputError("no embedded fixture " + std::string(path));
}

Scenario scenario_from_json(const Json& j) {
  try {
    Scenario s;
    s.name = j.at("name").get<std::string>();
    s.summary = j.at("summary").get<std::string>();
    s.payload_kind = j.at("payload").at("kind").get<std::string>();
    s.payload_file = j.at("payload").at("file").get<std::string>();
    s.slow = j.at("slow").get<bool>();
    if (s.payload_kind != "graph" && s.payload_kind != "ideal") throw InputError("unknown payload kind " + s.payload_kind);
    for (const auto& e : j.at("expected")) {
      ExpectedValue v;
      v.quantity = e.at("quantity").get<std::string>();
      v.power = e.at("power").get<int>();
      v.field = e.at("field").get<std::string>();
      v.value = e.at("value").get<long>();
      v.source = e.at("source").get<std::string>();
      v.citation = e.at("citation").get<std::string>();
      if (e.contains("params")) v.params = e.at("params");
      if (v.source != "published" && v.source != "derived") throw InputError("unknown source tag " + v.source);
      if (v.citation.empty()) throw InputError("expected value without citation");
      s.expected.push_back(std::move(v));
    }
    return s;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed scenario: ") + e.what());
  }
}

Json scenario_to_json(const Scenario& s) {
  Json expected = Json::array();
  for (const auto& v : s.expected) {
    Json e{{"quantity", v.quantity}, {"power", v.power},   {"field", v.field},
           {"value", v.value},       {"source", v.source}, {"citation", v.citation}};
    if (!v.params.empty()) e["params"] = v.params;
    expected.push_back(std::move(e));
  }
  return Json{{"name", s.name},
              {"summary", s.summary},
              {"payload", Json{{"kind", s.payload_kind}, {"file", s.payload_file}}},
              {"slow", s.slow},
              {"expected", expected}};
}

const std::vector<Scenario>& registry() {
  static const std::vector<Scenario> scenarios = [] {
    std::vector<Scenario> out;
    for (const auto& f : embedded_fixtures()) {
      if (f.path.starts_with("scenarios/")) out.push_back(scenario_from_json(parse_json(f.text)));
    }
    std::sort(out.begin(), out.end(), [](const Scenario& a, const Scenario& b) { return a.name < b.name; });
    return out;
  }();
  return scenarios;
}

const Scenario& find_scenario(std::string_view name) {
  for (const auto& s : registry()) {
    if (s.name == name) return s;
  }
  throw InputError("unknown scenario " + std::string(name));
}

Graph scenario_graph(const Scenario& s) {
  if (s.payload_kind != "graph") throw InputError("scenario " + s.name + " has no graph payload");
  return graph_from_json(parse_json(fixture_text(s.payload_file)));
}

MonomialIdeal scenario_ideal(const Scenario& s) {
  if (s.payload_kind == "graph") return edge_ideal(scenario_graph(s));
  return ideal_from_json(parse_json(fixture_text(s.payload_file)));
}

namespace {

std::vector<ExponentVec> extra_monomials(const ExpectedValue& e, std::size_t n) {
  std::vector<ExponentVec> out;
  if (!e.params.contains("extra")) throw InputError(e.quantity + " needs params.extra");
  for (const auto& vars : e.params.at("extra"))
    out.push_back(ExponentVec::indicator(n, vertex_set_from_json(vars, static_cast<int>(n))));
  return out;
}

Graph skeleton(const SimplicialComplex& delta) {
  Graph g(delta.ground_size());
  const auto faces = delta.faces_by_size();
  if (faces.size() > 2) {
    for (VertexSet e : faces[2]) g.add_edge(e.min(), VertexSet(e.bits() & (e.bits() - 1)).min());
  }
  return g;
}

std::string join_values(const std::vector<int>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) out += (k ? "," : "") + std::to_string(values[k]);
  return out;
}

class Evaluator {
 public:
  Evaluator(const Scenario& s, const RegOptions& options) : scenario_(s), options_(options), ideal_(scenario_ideal(s)) {}

  long evaluate(const ExpectedValue& e, const FieldSpec& field, std::string& detail) {
    const int s = e.power;
    const std::string& q = e.quantity;
    if (q == "edge_count") return static_cast<long>(graph().edge_count());
    if (q == "complex_dimension") return sr_complex(ideal_).dimension().value_or(-2);
    if (q == "complex_girth") return girth(skeleton(sr_complex(ideal_))).value_or(0);
    if (q == "reg_power") return reg(power(ideal_, s), field);
    if (q == "reg_closure_power") return reg(integral_closure_edge_power(graph(), s), field);
    if (q == "reg_symbolic_power") return reg(symbolic_power(graph(), s), field);
    if (q == "closure_extra_count") return static_cast<long>(closure_generators(graph(), s).extra.size());
    if (q == "reg_power_plus") return reg(sum(power(ideal_, s), extra_monomials(e, ideal_.ambient())), field);
    if (q == "extras_in_closure") return extras_in_closure(e, detail);
    if (q == "reg_intermediate_all") return intermediate_all(e, field, detail);
    if (q == "mixed_sum") return mixed_sum(e, field, detail);
    if (q == "chain_containment") return chain(s, detail);
    throw InputError("unsupported quantity " + q);
  }

 private:
  const Graph& graph() {
    if (!graph_) graph_ = scenario_graph(scenario_);
    return *graph_;
  }

  int reg(const MonomialIdeal& ideal, const FieldSpec& field) {
    return takayama_regularity(ideal, field, options_).reg;
  }

  // Each f lies outside I^s, inside the closure, and no f / x_j does.
  long extras_in_closure(const ExpectedValue& e, std::string& detail) {
    const MonomialIdeal p = power(ideal_, e.power);
    for (const auto& f : extra_monomials(e, ideal_.ambient())) {
      if (contains(p, f) || !newton_membership(p, f)) {
        detail = "a listed monomial is not an extra closure element";
        return 0;
      }
      for (int j : f.support()) {
        ExponentVec smaller = f;
        --smaller[static_cast<std::size_t>(j)];
        if (newton_membership(p, smaller)) {
          detail = "a listed monomial is not a minimal closure generator";
          return 0;
        }
      }
    }
    return 1;
  }

  long intermediate_all(const ExpectedValue& e, const FieldSpec& field, std::string& detail) {
    const std::size_t cap = e.params.value("cap", 64);
    const std::uint64_t seed = e.params.value("seed", 0);
    std::vector<int> regs;
    for (const auto& ideal : enumerate_intermediate_ideals(graph(), e.power, cap, seed))
      regs.push_back(reg(ideal.ideal, field));
    detail = std::to_string(regs.size()) + " ideals, regularities " + join_values(regs);
    const bool same = std::all_of(regs.begin(), regs.end(), [&](int r) { return r == regs.front(); });
    return same ? regs.front() : -1;
  }

  long mixed_sum(const ExpectedValue& e, const FieldSpec& field, std::string& detail) {
    if (!e.params.contains("parts") || e.params.at("parts").size() != 2)
      throw InputError("mixed_sum needs two params.parts");
    std::vector<std::vector<int>> regs;
    for (const auto& part : e.params.at("parts")) {
      const VertexSet v = vertex_set_from_json(part, graph().vertex_count());
      const MonomialIdeal i = edge_ideal(induced_subgraph(graph(), v).graph);
      std::vector<int> r;
      for (int k = 1; k <= e.power; ++k) r.push_back(reg(power(i, k), field));
      regs.push_back(std::move(r));
    }
    detail = "parts [" + join_values(regs[0]) + "] [" + join_values(regs[1]) + "]";
    return mixed_sum_regularity(regs[0], regs[1], e.power);
  }

  long chain(int s, std::string& detail) {
    const ClosureGenerators cg = closure_generators(graph(), s);
    if (!is_subideal(cg.power, cg.closure)) {
      detail = "power not inside closure";
      return 0;
    }
    for (const auto& f : cg.closure.generators()) {
      if (!symbolic_power_contains(graph(), s, f)) {
        detail = "closure not inside symbolic power";
        return 0;
      }
    }
    return 1;
  }

  const Scenario& scenario_;
  RegOptions options_;
  MonomialIdeal ideal_;
  std::optional<Graph> graph_;
};

}  // namespace

Report verify(const Scenario& s, std::optional<FieldSpec> field, const RegOptions& options, bool allow_slow) {
  if (s.slow && !allow_slow) throw InputError("scenario " + s.name + " is slow; pass --allow-slow");
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.scenario = s.name;
  Evaluator eval(s, options);
  for (const auto& e : s.expected) {
    if (e.field != "any" && field && e.field != field->name()) continue;
    Check c;
    c.expected = e;
    const FieldSpec f = e.field == "any" ? FieldSpec::rationals() : FieldSpec::parse(e.field);
    c.computed = eval.evaluate(e, f, c.detail);
    c.pass = c.computed == e.value;
    report.pass = report.pass && c.pass;
    report.checks.push_back(std::move(c));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"quantity", c.expected.quantity}, {"power", c.expected.power}, {"field", c.expected.field},
           {"expected", c.expected.value},    {"computed", c.computed},    {"pass", c.pass},
           {"source", c.expected.source},     {"citation", c.expected.citation}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  return Json{{"scenario", r.scenario}, {"pass", r.pass}, {"checks", checks}};
}

std::string report_to_table(const Report& r) {
  std::ostringstream out;
  out << "scenario " << r.scenario << ": " << (r.pass ? "PASS" : "FAIL") << '\n';
  for (const auto& c : r.checks) {
    out << "  " << (c.pass ? "ok  " : "FAIL") << "  " << c.expected.quantity << " s=" << c.expected.power << " ["
        << c.expected.field << "] expected " << c.expected.value << " computed " << c.computed << "  ("
        << c.expected.source << ": " << c.expected.citation << ")";
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  return out.str();
}

}  // namespace edgereg
