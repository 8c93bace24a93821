#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fairkg/rdf/term.hpp"

namespace fairkg::rdf {

using TermId = std::uint32_t;

struct TripleIds {
  TermId s;
  TermId p;
  TermId o;
  friend bool operator==(const TripleIds&, const TripleIds&) = default;
};

struct TripleIdsHash {
  std::size_t operator()(const TripleIds& t) const noexcept {
    std::uint64_t h = t.s;
    h = h * 0x100000001B3ull ^ t.p;
    h = h * 0x100000001B3ull ^ t.o;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// In-memory triple set with subject, predicate and object indexes.
///
/// Terms are interned to dense ids; every index entry for a term lists exactly
/// the triples holding that term in that position. Single writer; once built a
/// Graph may be shared by any number of readers.
class Graph {
 public:
  /// Returns true iff the triple was not already present.
  bool insert(const Triple& triple);
  /// Returns true iff the triple was present.
  bool erase(const Triple& triple);
  bool contains(const Triple& triple) const;

  /// Inserts every triple of `other`.
  void insert_all(const Graph& other);

  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }

  /// Triples matching all bound positions, in canonical N-Triples order.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Iri>& p,
                            const std::optional<Term>& o) const;

  /// All triples in canonical N-Triples order.
  std::vector<Triple> triples() const { return match(std::nullopt, std::nullopt, std::nullopt); }

  // Id-level access, used by the query evaluator.

  std::optional<TermId> find(const Term& term) const;
  const Term& term(TermId id) const { return terms_[id]; }
  /// Number of interned terms; valid ids are below this.
  std::size_t term_count() const noexcept { return terms_.size(); }
  Triple materialize(const TripleIds& ids) const;

  /// Calls `visit(const TripleIds&)` for every triple matching the bound ids,
  /// in unspecified order.
  template <typename Visitor>
  void for_each_match(std::optional<TermId> s, std::optional<TermId> p,
                      std::optional<TermId> o, Visitor&& visit) const;

  /// Visits every stored triple in unspecified order.
  template <typename Visitor>
  void for_each(Visitor&& visit) const {
    for (const auto& t : triples_) visit(t);
  }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  TermId intern(const Term& term);
  static void remove_from(std::vector<TripleIds>& list, const TripleIds& t);
  const std::vector<TripleIds>* index_for(const std::vector<std::vector<TripleIds>>& index,
                                          TermId id) const;

  std::vector<Term> terms_;
  std::unordered_map<Term, TermId> ids_;
  std::unordered_set<TripleIds, TripleIdsHash> triples_;
  std::vector<std::vector<TripleIds>> by_subject_;
  std::vector<std::vector<TripleIds>> by_predicate_;
  std::vector<std::vector<TripleIds>> by_object_;
};

inline bool graph_insert(Graph& g, const Triple& t) { return g.insert(t); }

inline std::vector<Triple> graph_match(const Graph& g, const std::optional<Term>& s,
                                       const std::optional<Iri>& p,
                                       const std::optional<Term>& o) {
  return g.match(s, p, o);
}

/// Set union; the result does not depend on argument order.
Graph merge_graphs(const std::vector<const Graph*>& graphs);

/// Sorts triples by their canonical N-Triples line.
void sort_canonical(std::vector<Triple>& triples);

template <typename Visitor>
void Graph::for_each_match(std::optional<TermId> s, std::optional<TermId> p,
                           std::optional<TermId> o, Visitor&& visit) const {
  if (!s && !p && !o) {
    for (const auto& t : triples_) visit(t);
    return;
  }
  if (s && p && o) {
    const TripleIds probe{*s, *p, *o};
    if (triples_.count(probe) != 0) visit(probe);
    return;
  }
  const std::vector<TripleIds>* best = nullptr;
  const auto consider = [&](const std::vector<std::vector<TripleIds>>& index,
                            std::optional<TermId> id) {
    if (!id) return true;
    const auto* list = index_for(index, *id);
    if (list == nullptr) return false;
    if (best == nullptr || list->size() < best->size()) best = list;
    return true;
  };
  if (!consider(by_subject_, s) || !consider(by_predicate_, p) || !consider(by_object_, o)) return;
  for (const auto& t : *best) {
    if ((!s || t.s == *s) && (!p || t.p == *p) && (!o || t.o == *o)) visit(t);
  }
}

}  // namespace fairkg::rdf
