#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fairkg/rdf/graph.hpp"
#include "fairkg/rdf/prefix_map.hpp"
#include "fairkg/rdf/term.hpp"

namespace fairkg::query {

/// Variable name without the leading `?` or `$`. Blank nodes written in a
/// query become variables named `_:label`, which cannot be projected.
struct Variable {
  std::string name;
  bool hidden() const { return name.starts_with("_:"); }
  friend bool operator==(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<Variable, rdf::Term>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

enum class CompareOp { Eq, Ne, Lt, Le, Gt, Ge };

std::string_view to_string(CompareOp op);

/// `?variable op literal`.
///
/// `=` compares numerically when both sides are numeric literals and by term
/// identity otherwise; `!=` is its negation. Ordering operators need a numeric
/// or xsd:date operand and reject rows whose value is not of the same family.
struct FilterExpr {
  std::string variable;
  CompareOp op = CompareOp::Eq;
  rdf::Literal operand{""};
};

/// True when `op` may be used with `operand` (see FilterExpr).
bool is_comparable(CompareOp op, const rdf::Literal& operand);

/// Evaluates the filter for one bound value.
bool filter_accepts(const FilterExpr& filter, const rdf::Term& value);

struct Query {
  /// Projected variables; empty for a COUNT query.
  std::vector<std::string> projection;
  /// Set for `SELECT (COUNT(*) AS ?alias)`.
  std::optional<std::string> count_alias;
  std::vector<TriplePattern> patterns;
  std::vector<FilterExpr> filters;

  bool is_count() const noexcept { return count_alias.has_value(); }
  /// Variables of the patterns in order of first appearance, hidden ones
  /// included.
  std::vector<std::string> variables() const;
};

/// Parses the SELECT subset:
///
///     PREFIX p: <iri> ...
///     SELECT (?v+ | * | (COUNT(*) AS ?c)) WHERE { pattern ('.' pattern)* FILTER(...)* }
///
/// Terms are written as in Turtle. PREFIX declarations override `prefixes`.
/// Throws Error{SyntaxError} with line and column, Error{UnknownPrefix},
/// Error{UnboundProjection} or Error{TypeMismatch} for an ordering filter on
/// a non-comparable literal.
Query parse_query(std::string_view text, const rdf::PrefixMap& prefixes = {});

/// Result table. Rows are distinct and sorted by their N-Triples renderings.
struct Solution {
  std::vector<std::string> variables;
  std::vector<std::vector<rdf::Term>> rows;

  /// Header of `?name` columns, then one line per row, tab separated.
  std::string to_tsv() const;
};

/// Evaluates `query` over `graph`. Throws Error{TypeMismatch} or
/// Error{UnboundProjection} when a hand-built query breaks the parser's rules.
Solution execute(const rdf::Graph& graph, const Query& query);

/// execute over the union of `graphs`.
Solution merge_and_query(const std::vector<const rdf::Graph*>& graphs, const Query& query);

}  // namespace fairkg::query
