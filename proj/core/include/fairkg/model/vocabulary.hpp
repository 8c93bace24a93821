#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairkg/rdf/prefix_map.hpp"
#include "fairkg/rdf/term.hpp"

namespace fairkg::model {

enum class TermRole { Class, Predicate };

/// The three clinical sections around the patient, plus the patient itself.
enum class Category { Core, Demographic, Tumour, Treatment };

std::string_view to_string(TermRole role);
std::string_view to_string(Category category);

struct VocabularyTerm {
  std::string curie;
  rdf::Iri iri;
  std::string label;
  TermRole role;
  Category category;
};

class Vocabulary {
 public:
  Vocabulary(std::vector<VocabularyTerm> terms, rdf::PrefixMap prefixes);

  const std::vector<VocabularyTerm>& terms() const noexcept { return terms_; }
  const rdf::PrefixMap& prefixes() const noexcept { return prefixes_; }

  const VocabularyTerm* find_label(std::string_view label) const;
  const VocabularyTerm* find_curie(std::string_view curie) const;
  const VocabularyTerm* find(const rdf::Iri& iri) const;

  /// Category of a vocabulary predicate or class; nullopt when unknown.
  std::optional<Category> category_of(const rdf::Iri& iri) const;

 private:
  std::vector<VocabularyTerm> terms_;
  rdf::PrefixMap prefixes_;
};

/// Reads `curie TAB label TAB role TAB category` lines. `@prefix TAB name TAB
/// iri` lines bind namespaces; `#` starts a comment line. Throws
/// Error{InvalidDataFile} with the line number.
Vocabulary load_vocabulary(std::string_view text);

/// The registry vocabulary shipped in core/data/vocabulary.tsv.
const Vocabulary& builtin_vocabulary();

/// The mapping shipped in core/data/protrait_mapping.ttl, as Turtle text.
std::string_view builtin_mapping_text();

}  // namespace fairkg::model
