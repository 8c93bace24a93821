#pragma once

#include <optional>
#include <string_view>

#include "fairkg/rdf/graph.hpp"
#include "fairkg/rdf/prefix_map.hpp"

namespace fairkg::rdf {

struct TurtleDocument {
  Graph graph;
  /// Prefixes declared by the document itself.
  PrefixMap prefixes;
};

/// Parses the Turtle subset used by mapping documents: @prefix/@base (and the
/// SPARQL-style PREFIX/BASE), `a`, `;` and `,` lists, `[ ... ]` blank nodes,
/// IRIs, prefixed names, string (short and long), numeric and boolean
/// literals with `^^` datatypes or `@lang` tags, and comments.
///
/// Blank nodes are relabelled `b0`, `b1`, ... per call. Collections are not
/// supported. Throws Error{SyntaxError} with line/column, Error{UnknownPrefix},
/// or Error{RelativeIri} when a relative reference appears without a base.
TurtleDocument parse_turtle(std::string_view text, const std::optional<Iri>& base = std::nullopt);

/// RFC 3986 reference resolution against an absolute base.
std::string resolve_iri(std::string_view base, std::string_view reference);

}  // namespace fairkg::rdf
