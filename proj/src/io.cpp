#include "edgereg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "edgereg/error.hpp"

namespace edgereg {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

namespace {

bool is_scalar(const Json& v) { return !v.is_array() && !v.is_object(); }

bool is_scalar_array(const Json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return is_scalar(e); });
}

bool is_inline(const Json& v) {
  if (is_scalar(v) || is_scalar_array(v)) return true;
  if (v.is_array()) return std::all_of(v.begin(), v.end(), [](const Json& e) { return is_scalar_array(e); });
  return std::all_of(v.begin(), v.end(), [](const Json& e) { return is_inline(e); });
}

void write_inline(const Json& v, std::string& out) {
  if (is_scalar(v)) {
    out += v.dump();
    return;
  }
  const bool object = v.is_object();
  out += object ? '{' : '[';
  bool first = true;
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (!first) out += ", ";
    first = false;
    if (object) out += Json(it.key()).dump() + ": ";
    write_inline(*it, out);
  }
  out += object ? '}' : ']';
}

void write(const Json& v, int indent, std::string& out) {
  if (is_inline(v) || v.empty()) {
    write_inline(v, out);
    return;
  }
  const bool object = v.is_object();
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  out += object ? "{\n" : "[\n";
  bool first = true;
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (object) out += Json(it.key()).dump() + ": ";
    write(*it, indent + 2, out);
  }
  out += '\n' + std::string(static_cast<std::size_t>(indent), ' ') + (object ? '}' : ']');
}

int require_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
    throw InputError(std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

const Json& require_array(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_array())
    throw InputError(std::string("missing array field \"") + key + "\"");
  return j[key];
}

}  // namespace

std::string canonical_dump(const Json& value) {
  std::string out;
  if (value.is_object() && !value.empty()) {
    // The top level always spans lines.
    out += "{\n";
    bool first = true;
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += "  " + Json(it.key()).dump() + ": ";
      write(*it, 2, out);
    }
    out += "\n}";
  } else {
    write(value, 0, out);
  }
  out += '\n';
  return out;
}

Json vertex_set_to_json(VertexSet s) {
  Json out = Json::array();
  for (int v : s) out.push_back(v + 1);
  return out;
}

VertexSet vertex_set_from_json(const Json& j, int n) {
  if (!j.is_array()) throw InputError("vertex list must be an array");
  VertexSet out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InputError("vertex must be an integer");
    const int v = e.get<int>();
    if (v < 1 || v > n) throw InputError("vertex " + std::to_string(v) + " out of range");
    out.insert(v - 1);
  }
  return out;
}

Graph graph_from_json(const Json& j) {
  const int n = require_int(j, "n");
  if (n < 0 || n > kMaxVertices) throw InputError("graph size must lie in [0, 64]");
  std::vector<Edge> edges;
  for (const auto& e : require_array(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InputError("edge must be a pair of integers");
    const int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 1 || u > n || v < 1 || v > n) throw InputError("edge vertex out of range");
    edges.emplace_back(u - 1, v - 1);
  }
  return Graph(n, edges);
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u + 1, v + 1}));
  return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

MonomialIdeal ideal_from_json(const Json& j) {
  const int n = require_int(j, "vars");
  if (n < 0 || n > kMaxVertices) throw InputError("ring size must lie in [0, 64]");
  std::vector<ExponentVec> gens;
  for (const auto& g : require_array(j, "gens")) {
    if (!g.is_array() || g.size() != static_cast<std::size_t>(n))
      throw InputError("generator length must equal \"vars\"");
    std::vector<int> entries;
    for (const auto& e : g) {
      if (!e.is_number_integer()) throw InputError("exponent must be an integer");
      entries.push_back(e.get<int>());
    }
    gens.emplace_back(std::move(entries));
  }
  return MonomialIdeal(static_cast<std::size_t>(n), std::move(gens));
}

Json ideal_to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.entries());
  return Json{{"vars", ideal.ambient()}, {"gens", gens}};
}

SimplicialComplex complex_from_json(const Json& j) {
  const int n = require_int(j, "n");
  if (n < 0 || n > kMaxVertices) throw InputError("ground set size must lie in [0, 64]");
  std::string state = "facets";
  if (j.contains("state")) {
    if (!j["state"].is_string()) throw InputError("state must be a string");
    state = j["state"].get<std::string>();
  }
  if (state == "void") return SimplicialComplex::void_complex(n);
  if (state == "empty") return SimplicialComplex::empty_complex(n);
  if (state != "facets") throw InputError("unknown complex state \"" + state + "\"");
  std::vector<VertexSet> facets;
  for (const auto& f : require_array(j, "facets")) facets.push_back(vertex_set_from_json(f, n));
  return SimplicialComplex::from_facets(n, std::move(facets));
}

Json complex_to_json(const SimplicialComplex& c) {
  Json facets = Json::array();
  for (VertexSet f : c.facets()) facets.push_back(vertex_set_to_json(f));
  const char* state = c.is_void() ? "void" : c.is_empty() ? "empty" : "facets";
  return Json{{"n", c.ground_size()}, {"facets", facets}, {"state", state}};
}

Json certificate_to_json(const RegResult& result) {
  const auto& c = result.certificate;
  return Json{{"reg", result.reg},
              {"a", c.a.entries()},
              {"i", c.i},
              {"face", vertex_set_to_json(c.face)},
              {"field", c.field.name()},
              {"hom_dim", c.hom_dim}};
}

}  // namespace edgereg
