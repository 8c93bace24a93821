#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairkg/rdf/graph.hpp"
#include "fairkg/rdf/prefix_map.hpp"
#include "fairkg/rdf/term.hpp"

namespace fairkg::model {

/// What the object of a constrained edge must be.
struct ObjectKind {
  enum class Type { IriOfClass, Literal };
  Type type = Type::IriOfClass;
  /// Required rdf:type of the object node, or the required literal datatype.
  rdf::Iri iri;

  friend bool operator==(const ObjectKind&, const ObjectKind&) = default;
};

struct Constraint {
  rdf::Iri predicate;
  ObjectKind kind;
  std::size_t min = 0;
  /// nullopt means unbounded.
  std::optional<std::size_t> max;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct Shape {
  rdf::Iri target_class;
  std::vector<Constraint> constraints;
};

/// Reads `class TAB predicate TAB kind TAB min TAB max` lines, where kind is
/// `class(CURIE)` or `literal(CURIE)` and max `*` is unbounded. Lines with the
/// same class form one shape, in order of first appearance. Throws
/// Error{InvalidDataFile} with the line number.
std::vector<Shape> load_shapes(std::string_view text, const rdf::PrefixMap& prefixes);

/// The patient-centred shapes shipped in core/data/shapes.tsv.
const std::vector<Shape>& builtin_shapes();

struct Violation {
  enum class Kind { Cardinality, ObjectKind };
  Kind kind = Kind::Cardinality;
  rdf::Term focus;
  rdf::Iri target_class;
  Constraint constraint;
  /// Edge count, for cardinality violations.
  std::size_t observed = 0;
  /// The object that has the wrong kind.
  std::optional<rdf::Term> offending;

  /// One tab-separated line: focus, class, predicate, then details.
  std::string to_string() const;
};

struct ValidationReport {
  /// Sorted by their line form.
  std::vector<Violation> violations;

  bool conforms() const noexcept { return violations.empty(); }
  /// One line per violation, each newline-terminated.
  std::string to_string() const;
};

/// Checks every typed focus node against every constraint of its shapes.
/// A cardinality failure and each wrong-kind object is one violation.
ValidationReport validate_graph(const rdf::Graph& graph, const std::vector<Shape>& shapes);

}  // namespace fairkg::model
