#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fairkg/rdf/graph.hpp"
#include "fairkg/rdf/prefix_map.hpp"
#include "fairkg/rdf/term.hpp"

namespace fairkg::r2rml {

inline constexpr std::string_view kRrNamespace = "http://www.w3.org/ns/r2rml#";

/// Parsed `rr:template` value: literal text interleaved with `{column}`
/// references.
struct Template {
  struct Segment {
    bool is_column = false;
    std::string text;
    friend bool operator==(const Segment&, const Segment&) = default;
  };

  std::vector<Segment> segments;

  std::vector<std::string> columns() const;
  /// Template text with braces and backslashes re-escaped.
  std::string render() const;

  friend bool operator==(const Template&, const Template&) = default;
};

/// Throws Error{UnbalancedBraces | EmptyColumnName | NoColumnReference}.
Template parse_template(std::string_view text);

struct ColumnRef {
  std::string name;
  friend bool operator==(const ColumnRef&, const ColumnRef&) = default;
};

enum class TermType { Iri, BlankNode, Literal };

std::string_view to_string(TermType type);

struct TermMap {
  std::variant<ColumnRef, Template, rdf::Term> source;
  TermType term_type = TermType::Iri;
  std::optional<rdf::Iri> datatype;
  std::optional<std::string> language;

  bool is_constant() const { return std::holds_alternative<rdf::Term>(source); }
  /// Columns this map reads, in reference order.
  std::vector<std::string> columns() const;
};

struct JoinCondition {
  std::string child;
  std::string parent;
};

struct RefObjectMap {
  /// Identifier of the parent TriplesMap.
  rdf::Term parent;
  std::vector<JoinCondition> joins;
};

/// One `rr:predicateObjectMap`. Every predicate is combined with every object.
struct PredicateObjectMap {
  std::vector<TermMap> predicate_maps;
  std::vector<TermMap> object_maps;
  std::vector<RefObjectMap> ref_object_maps;
};

struct TriplesMap {
  rdf::Term id;
  /// Human-readable identifier used in diagnostics and reports.
  std::string name;
  std::string logical_table;
  TermMap subject_map;
  std::vector<rdf::Iri> subject_classes;
  std::vector<PredicateObjectMap> predicate_object_maps;
};

struct Diagnostic {
  enum class Severity { Warning, Error };
  Severity severity = Severity::Error;
  std::string map_name;
  std::string message;

  bool is_error() const { return severity == Severity::Error; }
  /// `error|warning <map>: <message>`
  std::string to_string() const;
};

struct MappingDocument {
  std::vector<TriplesMap> triples_maps;
  rdf::PrefixMap prefixes;
  std::string source_name;
  /// Non-fatal findings from parsing (unknown rr: properties, ignored
  /// features).
  std::vector<Diagnostic> warnings;

  const TriplesMap* find(const rdf::Term& id) const;
};

/// Interprets an R2RML mapping graph. Triples maps are ordered by identifier.
///
/// Throws Error with codes MissingSubjectMap, MissingLogicalTable,
/// LiteralSubject, DanglingParentMap, ConflictingSource, UnsupportedFeature
/// (rr:sqlQuery, rr:graphMap) or InvalidMapping, plus the template errors.
MappingDocument parse_mapping(const rdf::Graph& doc, const rdf::PrefixMap& prefixes,
                              std::string source_name = {});

/// Parses Turtle text and interprets it as a mapping. Relative IRIs such as
/// `<#PatientMap>` resolve against `base`.
MappingDocument load_mapping(std::string_view turtle, std::string source_name = {},
                             const std::optional<rdf::Iri>& base = std::nullopt);

using ColumnCatalog = std::map<std::string, std::set<std::string>, std::less<>>;

/// Checks a mapping against the columns each table provides: missing tables,
/// columns and join columns are errors; duplicate classes and unused tables
/// are warnings. No error diagnostics means conversion may proceed.
std::vector<Diagnostic> validate_mapping(const MappingDocument& mapping,
                                         const ColumnCatalog& available_columns);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

}  // namespace fairkg::r2rml
