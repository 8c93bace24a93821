#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "fairkg/model/vocabulary.hpp"
#include "fairkg/rdf/graph.hpp"

namespace fairkg::model {

struct GraphStats {
  std::size_t triples = 0;
  /// rdf:type object (CURIE when the vocabulary prefixes compact it) to the
  /// number of typed nodes.
  std::map<std::string, std::size_t> class_histogram;
  /// Edges whose predicate is a vocabulary predicate, per category.
  std::map<Category, std::size_t> category_edges;
  /// rdf:type edges and edges with predicates outside the vocabulary.
  std::size_t other_edges = 0;

  /// Tab-separated report lines.
  std::string to_string() const;
};

GraphStats compute_stats(const rdf::Graph& graph, const Vocabulary& vocabulary);

}  // namespace fairkg::model
