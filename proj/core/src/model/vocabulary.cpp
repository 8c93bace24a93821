#include "fairkg/model/vocabulary.hpp"

#include <set>

#include "fairkg/error.hpp"

#include "model/embedded_data.hpp"
#include "model/tsv.hpp"

namespace fairkg::model {

std::string_view to_string(TermRole role) {
  return role == TermRole::Class ? "class" : "predicate";
}

std::string_view to_string(Category category) {
  switch (category) {
    case Category::Core: return "core";
    case Category::Demographic: return "demographic";
    case Category::Tumour: return "tumour";
    case Category::Treatment: return "treatment";
  }
  return "?";
}

Vocabulary::Vocabulary(std::vector<VocabularyTerm> terms, rdf::PrefixMap prefixes)
    : terms_(std::move(terms)), prefixes_(std::move(prefixes)) {}

const VocabularyTerm* Vocabulary::find_label(std::string_view label) const {
  for (const auto& t : terms_)
    if (t.label == label) return &t;
  return nullptr;
}

const VocabularyTerm* Vocabulary::find_curie(std::string_view curie) const {
  for (const auto& t : terms_)
    if (t.curie == curie) return &t;
  return nullptr;
}

const VocabularyTerm* Vocabulary::find(const rdf::Iri& iri) const {
  for (const auto& t : terms_)
    if (t.iri == iri) return &t;
  return nullptr;
}

std::optional<Category> Vocabulary::category_of(const rdf::Iri& iri) const {
  const auto* t = find(iri);
  if (t == nullptr) return std::nullopt;
  return t->category;
}

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::InvalidDataFile, "vocabulary: " + message, line);
}

}  // namespace

Vocabulary load_vocabulary(std::string_view text) {
  rdf::PrefixMap prefixes;
  std::vector<VocabularyTerm> terms;
  std::set<std::string> curies;
  for (const auto& line : detail::tsv_lines(text)) {
    const auto n = line.number;
    if (line.fields.front() == "@prefix") {
      if (line.fields.size() != 3) fail(n, "@prefix needs a name and an IRI");
      try {
        prefixes.bind(line.fields[1], rdf::Iri(line.fields[2]));
      } catch (const Error& e) {
        fail(n, e.message());
      }
      continue;
    }
    if (line.fields.size() != 4) fail(n, "expected 4 tab-separated fields");
    const auto& curie = line.fields[0];
    const auto& label = line.fields[1];
    if (label.empty()) fail(n, "empty label for " + curie);
    if (!curies.insert(curie).second) fail(n, "duplicate entry " + curie);

    TermRole role;
    if (line.fields[2] == "class") {
      role = TermRole::Class;
    } else if (line.fields[2] == "predicate") {
      role = TermRole::Predicate;
    } else {
      fail(n, "unknown role '" + line.fields[2] + "'");
    }
    std::optional<Category> category;
    for (auto c : {Category::Core, Category::Demographic, Category::Tumour, Category::Treatment}) {
      if (line.fields[3] == to_string(c)) category = c;
    }
    if (!category) fail(n, "unknown category '" + line.fields[3] + "'");

    try {
      terms.push_back({curie, prefixes.expand(curie), label, role, *category});
    } catch (const Error& e) {
      fail(n, e.message());
    }
  }
  return Vocabulary(std::move(terms), std::move(prefixes));
}

const Vocabulary& builtin_vocabulary() {
  static const Vocabulary vocabulary = load_vocabulary(embedded::kVocabulary);
  return vocabulary;
}

std::string_view builtin_mapping_text() { return embedded::kMapping; }

}  // namespace fairkg::model
