#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "fairkg/error.hpp"

namespace fairkg::rdf {

namespace ns {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kXsdDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kXsdDouble = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view kXsdBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view kXsdDate = "http://www.w3.org/2001/XMLSchema#date";
}  // namespace ns

/// Where and why an IRI string was rejected. `position` is 1-based.
struct IriProblem {
  ErrorCode code;
  std::size_t position;
};

/// Grammar-level check of an absolute IRI; nullopt means valid.
std::optional<IriProblem> check_iri(std::string_view text);

/// An absolute IRI. Construction validates; the text is kept byte-exact.
class Iri {
 public:
  /// Throws Error{RelativeIri | IllegalCharacter}.
  explicit Iri(std::string_view text);

  const std::string& str() const noexcept { return value_; }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

inline Iri make_iri(std::string_view text) { return Iri(text); }

class BlankNode {
 public:
  /// Label without the `_:` prefix. Throws Error{InvalidTerm} when the label
  /// is not a valid N-Triples blank node label.
  explicit BlankNode(std::string_view label);

  const std::string& label() const noexcept { return label_; }

  friend bool operator==(const BlankNode&, const BlankNode&) = default;
  friend auto operator<=>(const BlankNode&, const BlankNode&) = default;

 private:
  std::string label_;
};

/// True when `lexical` is in the lexical space of `datatype`. Datatypes other
/// than integer, decimal, double, boolean and date are unconstrained.
bool is_valid_lexical(std::string_view lexical, std::string_view datatype);

bool is_valid_language_tag(std::string_view tag);

class Literal {
 public:
  /// Plain string literal (xsd:string).
  explicit Literal(std::string lexical);
  /// Typed literal. Throws Error{LexicalFormMismatch} for ill-typed lexical
  /// forms, Error{InvalidTerm} when `datatype` is rdf:langString.
  Literal(std::string lexical, Iri datatype);

  /// Language-tagged string. Throws Error{InvalidTerm} on a malformed tag.
  static Literal with_language(std::string lexical, std::string_view language);

  const std::string& lexical() const noexcept { return lexical_; }
  const Iri& datatype() const noexcept { return datatype_; }
  /// Empty unless the datatype is rdf:langString.
  const std::string& language() const noexcept { return language_; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;

 private:
  Literal(std::string lexical, Iri datatype, std::string language);

  std::string lexical_;
  Iri datatype_;
  std::string language_;
};

enum class TermKind { Iri, BlankNode, Literal };

class Term {
 public:
  Term(Iri iri) : value_(std::move(iri)) {}
  Term(BlankNode node) : value_(std::move(node)) {}
  Term(Literal literal) : value_(std::move(literal)) {}

  TermKind kind() const noexcept { return static_cast<TermKind>(value_.index()); }
  bool is_iri() const noexcept { return kind() == TermKind::Iri; }
  bool is_blank() const noexcept { return kind() == TermKind::BlankNode; }
  bool is_literal() const noexcept { return kind() == TermKind::Literal; }

  const Iri& iri() const { return std::get<Iri>(value_); }
  const BlankNode& blank() const { return std::get<BlankNode>(value_); }
  const Literal& literal() const { return std::get<Literal>(value_); }

  /// Canonical N-Triples rendering of this term.
  std::string to_ntriples() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;

 private:
  std::variant<Iri, BlankNode, Literal> value_;
};

struct Triple {
  /// Throws Error{InvalidTerm} when `subject` is a literal.
  Triple(Term subject, Iri predicate, Term object);

  Term subject;
  Iri predicate;
  Term object;

  /// The canonical line without trailing newline, e.g. `<s> <p> "o" .`
  std::string to_ntriples() const;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Appends the N-Triples string-literal escaping of `text` (no quotes).
void escape_string(std::string& out, std::string_view text);

std::size_t hash_value(const Term& term) noexcept;

}  // namespace fairkg::rdf

template <>
struct std::hash<fairkg::rdf::Term> {
  std::size_t operator()(const fairkg::rdf::Term& t) const noexcept {
    return fairkg::rdf::hash_value(t);
  }
};
