// Command-line front end: regularity, closures, symbolic powers, degree
// complexes, homology and the scenario verifier.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "edgereg/closure.hpp"
#include "edgereg/error.hpp"
#include "edgereg/io.hpp"
#include "edgereg/regularity.hpp"
#include "edgereg/scenario.hpp"
#include "edgereg/simplicial.hpp"

using namespace edgereg;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct Args {
  std::string graph;
  std::string ideal;
  std::string complex;
  std::string field = "q";
  int power = 1;
  std::size_t cap = 64;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string output = "table";
  bool no_prune = false;
  bool allow_slow = false;
  bool with_reg = false;
  std::string exponent;
  std::string scenario;
};

std::string monomial_string(const ExponentVec& a) {
  if (a.is_zero()) return "1";
  std::string out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(j + 1);
    if (a[j] > 1) out += "^" + std::to_string(a[j]);
  }
  return out;
}

std::string vertices_string(VertexSet s) {
  std::string out = "{";
  for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v + 1);
  return out + "}";
}

Json cycle_json(const Cycle& c) {
  Json out = Json::array();
  for (int v : c) out.push_back(v + 1);
  return out;
}

void emit(const Args& args, const Json& json, const std::string& table) {
  if (args.output == "json") {
    std::cout << canonical_dump(json);
  } else {
    std::cout << table;
  }
}

Graph load_graph(const Args& args) {
  if (args.graph.empty()) throw InputError("--graph is required");
  return graph_from_json(read_json_file(args.graph));
}

MonomialIdeal load_base_ideal(const Args& args) {
  if (!args.graph.empty() == !args.ideal.empty()) throw InputError("give exactly one of --graph and --ideal");
  if (!args.graph.empty()) return edge_ideal(load_graph(args));
  return ideal_from_json(read_json_file(args.ideal));
}

MonomialIdeal load_power(const Args& args) {
  if (args.power < 1) throw InputError("--power must be at least 1");
  MonomialIdeal base = load_base_ideal(args);
  if (!base.is_proper_nonzero()) throw InputError("the ideal must be nonzero and proper");
  return power(base, args.power);
}

RegOptions reg_options(const Args& args) {
  RegOptions o;
  o.prune = !args.no_prune;
  o.threads = args.threads;
  return o;
}

int cmd_reg(const Args& args) {
  const MonomialIdeal ideal = load_power(args);
  const RegResult r = takayama_regularity(ideal, FieldSpec::parse(args.field), reg_options(args));
  std::ostringstream t;
  t << "reg " << r.reg << " over " << r.certificate.field.name() << '\n'
    << "certificate a = " << monomial_string(r.certificate.a) << ", i = " << r.certificate.i
    << ", face = " << vertices_string(r.certificate.face) << ", dim H~_" << r.certificate.i - 1 << " = "
    << r.certificate.hom_dim << '\n';
  emit(args, certificate_to_json(r), t.str());
  return 0;
}

int cmd_closure(const Args& args) {
  const Graph g = load_graph(args);
  const ClosureGenerators cg = closure_generators(g, args.power);
  const NormalityVerdict normal = is_normal_edge(g);
  bool chain = is_subideal(cg.power, cg.closure);
  for (const auto& f : cg.closure.generators()) chain = chain && symbolic_power_contains(g, args.power, f);

  Json extra = Json::array();
  std::ostringstream t;
  t << "power " << args.power << ": " << cg.power.size() << " generators of I^s, " << cg.closure.size()
    << " of the closure, " << cg.extra.size() << " extra\n";
  for (const auto& e : cg.extra) {
    Json cycles = Json::array();
    for (const auto& c : e.witness.cycles) cycles.push_back(cycle_json(c));
    Json edges = Json::array();
    for (const auto& [u, v] : e.witness.edges) edges.push_back(Json::array({u + 1, v + 1}));
    extra.push_back(Json{{"f", e.f.entries()}, {"cycles", cycles}, {"edges", edges}});
    t << "  " << monomial_string(e.f) << "  cycles " << cycles.dump() << " edges " << edges.dump() << '\n';
  }
  Json verdict{{"normal", normal.normal}};
  t << "normal: " << (normal.normal ? "yes" : "no");
  if (normal.witness) {
    verdict["witness"] = Json::array({cycle_json(normal.witness->first), cycle_json(normal.witness->second)});
    t << " (induced odd cycles " << verdict["witness"].dump() << ")";
  }
  t << "\nchain I^s <= closure <= symbolic power: " << (chain ? "holds" : "FAILS") << '\n';
  Json closure_gens = Json::array();
  for (const auto& f : cg.closure.generators()) closure_gens.push_back(f.entries());
  emit(args,
       Json{{"power", args.power},
            {"power_generators", cg.power.size()},
            {"closure", Json{{"vars", cg.closure.ambient()}, {"gens", closure_gens}}},
            {"extra", extra},
            {"normality", verdict},
            {"chain", chain}},
       t.str());
  return 0;
}

int cmd_symbolic(const Args& args) {
  const Graph g = load_graph(args);
  const MonomialIdeal sym = symbolic_power(g, args.power);
  std::ostringstream t;
  t << "symbolic power " << args.power << ": " << sym.size() << " generators\n";
  for (const auto& f : sym.generators()) t << "  " << monomial_string(f) << '\n';
  emit(args, ideal_to_json(sym), t.str());
  return 0;
}

int cmd_intermediate(const Args& args) {
  const Graph g = load_graph(args);
  const auto ideals = enumerate_intermediate_ideals(g, args.power, args.cap, args.seed);
  const FieldSpec field = FieldSpec::parse(args.field);
  Json list = Json::array();
  std::ostringstream t;
  t << ideals.size() << " intermediate ideals\n";
  for (const auto& ideal : ideals) {
    Json chosen = Json::array();
    for (auto k : ideal.chosen) chosen.push_back(k + 1);
    Json entry{{"chosen", chosen}, {"generators", ideal.ideal.size()}};
    t << "  extra " << chosen.dump() << ": " << ideal.ideal.size() << " generators";
    if (args.with_reg) {
      const int r = takayama_regularity(ideal.ideal, field, reg_options(args)).reg;
      entry["reg"] = r;
      t << ", reg " << r;
    }
    t << '\n';
    list.push_back(std::move(entry));
  }
  emit(args, Json{{"power", args.power}, {"ideals", list}}, t.str());
  return 0;
}

ExponentVec parse_exponent(const std::string& text, std::size_t n) {
  std::vector<int> entries;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      entries.push_back(std::stoi(item, &used));
      if (used != item.size()) throw InputError("bad exponent entry " + item);
    } catch (const std::logic_error&) {
      throw InputError("bad exponent entry \"" + item + "\"");
    }
  }
  if (entries.empty()) entries.assign(n, 0);
  if (entries.size() != n) throw InputError("--exponent needs " + std::to_string(n) + " entries");
  return ExponentVec(std::move(entries));
}

int cmd_degree_complex(const Args& args) {
  const MonomialIdeal ideal = load_power(args);
  const ExponentVec a = parse_exponent(args.exponent, ideal.ambient());
  const SimplicialComplex c = degree_complex(ideal, a);
  std::ostringstream t;
  t << "degree complex at a = " << monomial_string(a) << ": ";
  if (c.is_void()) {
    t << "void\n";
  } else {
    t << "dim " << *c.dimension() << ", facets";
    for (VertexSet f : c.facets()) t << ' ' << vertices_string(f);
    t << '\n';
  }
  emit(args, complex_to_json(c), t.str());
  return 0;
}

int cmd_homology(const Args& args) {
  if (args.complex.empty()) throw InputError("--complex is required");
  const SimplicialComplex c = complex_from_json(read_json_file(args.complex));
  const FieldSpec field = FieldSpec::parse(args.field);
  const HomologyDims h = reduced_homology_dims(c, field);
  Json dims = Json::object();
  std::ostringstream t;
  t << "reduced homology over " << field.name() << '\n';
  const int top = c.dimension().value_or(-2);
  for (int d = -1; d <= top; ++d) {
    dims[std::to_string(d)] = h.at(d);
    t << "  H~_" << d << " = " << h.at(d) << '\n';
  }
  emit(args, Json{{"field", field.name()}, {"dims", dims}}, t.str());
  return 0;
}

int cmd_verify(const Args& args, bool field_given) {
  const Scenario& s = find_scenario(args.scenario);
  std::optional<FieldSpec> field;
  if (field_given) field = FieldSpec::parse(args.field);
  const Report r = verify(s, field, reg_options(args), args.allow_slow);
  std::fprintf(stderr, "%s: %.2f s\n", r.scenario.c_str(), r.seconds);
  emit(args, report_to_json(r), report_to_table(r));
  return r.pass ? 0 : kExitMismatch;
}

int cmd_list(const Args& args) {
  Json list = Json::array();
  std::ostringstream t;
  for (const auto& s : registry()) {
    list.push_back(Json{{"name", s.name}, {"payload", s.payload_file}, {"slow", s.slow}, {"checks", s.expected.size()}});
    t << s.name << (s.slow ? " (slow)" : "") << "  " << s.summary << '\n';
  }
  emit(args, Json{{"scenarios", list}}, t.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity, integral closure and symbolic powers of monomial and edge ideals"};
  app.require_subcommand(1);
  Args args;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", args.output, "json or table")->check(CLI::IsMember({"json", "table"}));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--graph", args.graph, "graph JSON file");
    sub->add_option("--ideal", args.ideal, "ideal JSON file");
    sub->add_option("--power", args.power, "power s");
  };
  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--threads", args.threads, "worker threads (0 = all cores)");
    sub->add_flag("--no-prune", args.no_prune, "plain sweep without pruning");
  };
  CLI::Option* field_opt = nullptr;
  auto add_field = [&](CLI::App* sub) {
    auto* o = sub->add_option("--field", args.field, "q, f2, f3 or fp:<p>");
    if (sub->get_name() == "verify") field_opt = o;
  };

  auto* reg = app.add_subcommand("reg", "regularity of I^s with a certificate");
  add_input(reg);
  add_field(reg);
  add_engine(reg);
  add_common(reg);

  auto* closure = app.add_subcommand("closure", "integral closure of I(G)^s");
  closure->add_option("--graph", args.graph, "graph JSON file");
  closure->add_option("--power", args.power, "power s");
  add_common(closure);

  auto* symbolic = app.add_subcommand("symbolic", "symbolic power I(G)^(s)");
  symbolic->add_option("--graph", args.graph, "graph JSON file");
  symbolic->add_option("--power", args.power, "power s");
  add_common(symbolic);

  auto* inter = app.add_subcommand("intermediate", "ideals between I^s and its closure");
  inter->add_option("--graph", args.graph, "graph JSON file");
  inter->add_option("--power", args.power, "power s");
  inter->add_option("--cap", args.cap, "largest number of ideals");
  inter->add_option("--seed", args.seed, "sampling seed");
  inter->add_flag("--reg", args.with_reg, "also compute regularities");
  add_field(inter);
  add_engine(inter);
  add_common(inter);

  auto* dc = app.add_subcommand("degree-complex", "degree complex of I^s at an exponent");
  add_input(dc);
  dc->add_option("--exponent", args.exponent, "comma-separated exponent vector (default 0)");
  add_common(dc);

  auto* hom = app.add_subcommand("homology", "reduced homology of a complex");
  hom->add_option("--complex", args.complex, "complex JSON file");
  add_field(hom);
  add_common(hom);

  auto* ver = app.add_subcommand("verify", "recompute a scenario and compare");
  ver->add_option("scenario", args.scenario, "scenario name")->required();
  add_field(ver);
  add_engine(ver);
  ver->add_flag("--allow-slow", args.allow_slow, "run scenarios marked slow");
  add_common(ver);

  auto* list = app.add_subcommand("list-scenarios", "print the scenario registry");
  add_common(list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (reg->parsed()) return cmd_reg(args);
    if (closure->parsed()) return cmd_closure(args);
    if (symbolic->parsed()) return cmd_symbolic(args);
    if (inter->parsed()) return cmd_intermediate(args);
    if (dc->parsed()) return cmd_degree_complex(args);
    if (hom->parsed()) return cmd_homology(args);
    if (ver->parsed()) return cmd_verify(args, field_opt != nullptr && field_opt->count() > 0);
    if (list->parsed()) return cmd_list(args);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
