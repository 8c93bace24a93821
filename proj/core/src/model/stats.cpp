#include "fairkg/model/stats.hpp"

#include <unordered_map>

namespace fairkg::model {

GraphStats compute_stats(const rdf::Graph& graph, const Vocabulary& vocabulary) {
  GraphStats stats;
  stats.triples = graph.size();
  for (auto c : {Category::Core, Category::Demographic, Category::Tumour, Category::Treatment}) {
    stats.category_edges[c] = 0;
  }
  const auto type = graph.find(rdf::Term(rdf::Iri(rdf::ns::kRdfType)));

  // Predicate and class lookups are cached per term id.
  std::unordered_map<rdf::TermId, std::optional<Category>> predicate_category;
  std::unordered_map<rdf::TermId, std::size_t> classes;
  graph.for_each([&](const rdf::TripleIds& t) {
    if (type && t.p == *type) {
      ++classes[t.o];
      ++stats.other_edges;
      return;
    }
    auto it = predicate_category.find(t.p);
    if (it == predicate_category.end()) {
      std::optional<Category> category;
      const auto* term = vocabulary.find(graph.term(t.p).iri());
      if (term != nullptr && term->role == TermRole::Predicate) category = term->category;
      it = predicate_category.emplace(t.p, category).first;
    }
    if (it->second) {
      ++stats.category_edges[*it->second];
    } else {
      ++stats.other_edges;
    }
  });
  for (const auto& [id, count] : classes) {
    const auto& term = graph.term(id);
    std::string name = term.to_ntriples();
    if (term.is_iri()) {
      if (auto curie = vocabulary.prefixes().compact(term.iri())) name = *curie;
    }
    stats.class_histogram[name] += count;
  }
  return stats;
}

std::string GraphStats::to_string() const {
  std::string out = "triples\t" + std::to_string(triples) + "\n";
  for (const auto& [name, count] : class_histogram) {
    out += "class\t" + name + "\t" + std::to_string(count) + "\n";
  }
  for (const auto& [category, count] : category_edges) {
    out += "category\t" + std::string(model::to_string(category)) + "\t" + std::to_string(count) +
           "\n";
  }
  out += "category\tother\t" + std::to_string(other_edges) + "\n";
  return out;
}

}  // namespace fairkg::model
