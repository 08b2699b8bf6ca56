#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "edgereg/graph.hpp"
#include "edgereg/monomial.hpp"
#include "edgereg/regularity.hpp"
#include "edgereg/simplicial.hpp"

namespace edgereg {

using Json = nlohmann::ordered_json;

/// Parses text; malformed JSON becomes InputError.
Json parse_json(std::string_view text);
/// Reads and parses a file; unreadable or malformed files become InputError.
Json read_json_file(const std::filesystem::path& path);

/// Canonical layout used by every checked-in fixture. Arrays of scalars or
/// of scalar arrays stay on one line, as do objects built only from such
/// values; everything else spans lines with two-space indents.
std::string canonical_dump(const Json& value);

/// {"n": n, "edges": [[u, v], ...]} with 1-based vertices.
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

/// {"vars": n, "gens": [[e_1, ..., e_n], ...]}
MonomialIdeal ideal_from_json(const Json& j);
Json ideal_to_json(const MonomialIdeal& ideal);

/// {"n": n, "facets": [[...], ...], "state": "void"|"empty"|"facets"}, 1-based.
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& c);

/// 1-based vertex list.
Json vertex_set_to_json(VertexSet s);
VertexSet vertex_set_from_json(const Json& j, int n);

/// {"reg", "a", "i", "face", "field", "hom_dim"}; face is 1-based.
Json certificate_to_json(const RegResult& result);

}  // namespace edgereg
