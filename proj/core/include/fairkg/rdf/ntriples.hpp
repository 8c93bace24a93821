#pragma once

#include <string>
#include <string_view>

#include "fairkg/rdf/graph.hpp"

namespace fairkg::rdf {

/// Canonical N-Triples: one triple per line, lines sorted bytewise, xsd:string
/// datatypes omitted, blank node labels kept. Empty graph gives empty text.
std::string serialize_ntriples(const Graph& graph);

/// Parses N-Triples. Blank node labels are preserved. Throws
/// Error{SyntaxError} with the offending line (and column) number.
Graph parse_ntriples(std::string_view text);

}  // namespace fairkg::rdf
