#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fairkg/etl/table.hpp"
#include "fairkg/r2rml/mapping.hpp"
#include "fairkg/rdf/graph.hpp"

namespace fairkg::etl {

struct SkippedTerm {
  std::string map_name;
  /// 1-based data row within the map's logical table.
  std::size_t row = 0;
  /// Offending column; empty for constant-valued term maps.
  std::string column;
  std::string reason;
};

struct ConversionReport {
  std::size_t rows_read = 0;
  /// Size of the produced graph.
  std::size_t triples_emitted = 0;
  /// Generated triples that were already present.
  std::size_t triples_deduplicated = 0;
  std::vector<SkippedTerm> skipped_terms;

  /// Multi-line human-readable summary.
  std::string summary() const;
  /// One `map TAB row TAB column TAB reason` line per skipped term.
  std::string skipped_log() const;
};

/// Percent-encodes every byte sequence outside `iunreserved` (uppercase hex,
/// UTF-8 based), as required for IRI-valued template substitutions.
std::string iri_safe(std::string_view value);

/// Substitutes row values into `tmpl`. Values are IRI-safe encoded when
/// `kind` is IRI. Returns nullopt when any referenced cell is NULL. Throws
/// Error{MissingColumn}.
std::optional<std::string> expand_template(const r2rml::Template& tmpl, const Row& row,
                                           r2rml::TermType kind);

/// Produces the term for one row, or nullopt when a referenced cell is NULL.
/// Throws Error{LexicalFormMismatch | InvalidIri | MissingColumn}.
std::optional<rdf::Term> generate_term(const r2rml::TermMap& map, const Row& row);

/// Runs one triples map over its logical table, inserting into `graph`.
/// Per-cell failures are recorded in `report` and conversion continues.
/// Throws Error{MissingTable | MissingColumn} when the map does not fit the
/// tables.
void apply_triples_map(const r2rml::TriplesMap& map, const r2rml::MappingDocument& mapping,
                       const TableSet& tables, rdf::Graph& graph, ConversionReport& report);

struct ConversionResult {
  rdf::Graph graph;
  ConversionReport report;
};

/// Converts all tables with every triples map. The graph does not depend on
/// triples-map or row order. Throws Error{ValidationFailed} when
/// validate_mapping reports errors against `tables`.
ConversionResult convert(const r2rml::MappingDocument& mapping, const TableSet& tables);

r2rml::ColumnCatalog column_catalog(const TableSet& tables);

}  // namespace fairkg::etl
