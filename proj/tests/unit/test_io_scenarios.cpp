#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "edgereg/error.hpp"
#include "edgereg/fixtures.hpp"
#include "edgereg/io.hpp"
#include "edgereg/scenario.hpp"

using namespace edgereg;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("malformed input", "[io]") {
  CHECK_THROWS_AS(parse_json("{\"n\": 3,"), InputError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/graph.json"), InputError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"n": 3, "edges": [[1, 4]]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"n": 3, "edges": [[2, 2]]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"edges": []})")), InputError);
  CHECK_THROWS_AS(ideal_from_json(parse_json(R"({"n": 2, "generators": [[1, -1]]})")), InputError);
  CHECK_THROWS_AS(ideal_from_json(parse_json(R"({"n": 2, "generators": [[1, 1, 1]]})")), InputError);
  CHECK_THROWS_AS(vertex_set_from_json(parse_json("[0]"), 3), InputError);
}

TEST_CASE("objects round trip", "[io]") {
  Graph g(4);
  g.add_edge(2, 3);
  g.add_edge(0, 1);
  const Json gj = graph_to_json(g);
  CHECK(canonical_dump(gj) == "{\n  \"n\": 4,\n  \"edges\": [[1, 2], [3, 4]]\n}\n");
  CHECK(graph_from_json(gj).edges() == g.edges());
  const MonomialIdeal i(3, {ExponentVec{2, 0, 1}, ExponentVec{0, 1, 0}});
  CHECK(ideal_from_json(ideal_to_json(i)) == i);
  for (const auto& c : {SimplicialComplex::void_complex(3), SimplicialComplex::empty_complex(3),
                        SimplicialComplex::from_facets(3, {VertexSet{0, 1}, VertexSet{2}})})
    CHECK(complex_from_json(complex_to_json(c)) == c);
  CHECK(vertex_set_from_json(vertex_set_to_json(VertexSet{0, 4}), 5) == VertexSet{0, 4});
}

TEST_CASE("fixtures are embedded verbatim and in canonical form", "[io]") {
  const auto files = embedded_fixtures();
  REQUIRE(files.size() >= 22);
  for (const auto& f : files) {
    INFO(f.path);
    const std::string text(f.text);
    CHECK(read_file(std::string(EDGEREG_DATA_DIR) + "/" + std::string(f.path)) == text);
    const Json j = parse_json(text);
    std::string again;
    if (f.path.starts_with("graphs/"))
      again = canonical_dump(graph_to_json(graph_from_json(j)));
    else if (f.path.starts_with("complexes/"))
      again = canonical_dump(complex_to_json(complex_from_json(j)));
    else if (f.path.starts_with("ideals/"))
      again = canonical_dump(ideal_to_json(ideal_from_json(j)));
    else
      again = canonical_dump(scenario_to_json(scenario_from_json(j)));
    CHECK(again == text);
  }
}

TEST_CASE("scenario registry", "[scenario]") {
  const auto& reg = registry();
  CHECK(reg.size() >= 6);
  for (std::size_t k = 1; k < reg.size(); ++k) CHECK(reg[k - 1].name < reg[k].name);
  for (const auto& s : reg) {
    INFO(s.name);
    CHECK_FALSE(s.expected.empty());
    for (const auto& e : s.expected) {
      CHECK((e.source == "published" || e.source == "derived"));
      CHECK_FALSE(e.citation.empty());
    }
  }
  CHECK(scenario_graph(find_scenario("dk16")).edge_count() == 30);
  CHECK(scenario_graph(find_scenario("katzman11")).edge_count() == 23);
  CHECK(scenario_graph(find_scenario("char-dependence-s1")).edge_count() == 36);
  CHECK(scenario_ideal(find_scenario("dim1-girth3-s0")).ambient() == 8);
  CHECK_THROWS_AS(find_scenario("no-such-scenario"), InputError);
  CHECK_THROWS_AS(fixture_text("graphs/missing.json"), InputError);
}

TEST_CASE("verification reports", "[scenario]") {
  RegOptions o;
  o.threads = 1;
  const auto& s = find_scenario("katzman11");
  const Report a = verify(s, std::nullopt, o, false);
  const Report b = verify(s, std::nullopt, o, false);
  CHECK(a.pass);
  CHECK(canonical_dump(report_to_json(a)) == canonical_dump(report_to_json(b)));
  const Report q = verify(s, FieldSpec::rationals(), o, false);
  for (const auto& c : q.checks) CHECK((c.expected.field == "q" || c.expected.field == "any"));
  CHECK(q.checks.size() < a.checks.size());
  CHECK(report_to_table(a).find("PASS") != std::string::npos);
  CHECK_THROWS_AS(verify(find_scenario("dk16-square"), std::nullopt, o, false), InputError);
}

TEST_CASE("fast scenarios pass", "[scenario]") {
  RegOptions o;
  for (const char* name : {"rigidity-c3c3-s3", "dk16", "char-dependence-s1", "triangle-symbolic", "bipartite-normal"}) {
    INFO(name);
    const Report r = verify(find_scenario(name), std::nullopt, o, false);
    CHECK(r.pass);
    for (const auto& c : r.checks) CHECK(c.pass);
  }
}
