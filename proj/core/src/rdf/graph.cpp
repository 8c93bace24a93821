#include "fairkg/rdf/graph.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace fairkg::rdf {

TermId Graph::intern(const Term& term) {
  const auto it = ids_.find(term);
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<TermId>(terms_.size());
  terms_.push_back(term);
  ids_.emplace(term, id);
  by_subject_.emplace_back();
  by_predicate_.emplace_back();
  by_object_.emplace_back();
  return id;
}

std::optional<TermId> Graph::find(const Term& term) const {
  const auto it = ids_.find(term);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::vector<TripleIds>* Graph::index_for(const std::vector<std::vector<TripleIds>>& index,
                                               TermId id) const {
  if (id >= index.size() || index[id].empty()) return nullptr;
  return &index[id];
}

bool Graph::insert(const Triple& triple) {
  const TripleIds ids{intern(triple.subject), intern(Term(triple.predicate)),
                      intern(triple.object)};
  if (!triples_.insert(ids).second) return false;
  by_subject_[ids.s].push_back(ids);
  by_predicate_[ids.p].push_back(ids);
  by_object_[ids.o].push_back(ids);
  return true;
}

void Graph::remove_from(std::vector<TripleIds>& list, const TripleIds& t) {
  const auto it = std::find(list.begin(), list.end(), t);
  if (it == list.end()) return;
  *it = list.back();
  list.pop_back();
}

bool Graph::erase(const Triple& triple) {
  const auto s = find(triple.subject);
  const auto p = find(Term(triple.predicate));
  const auto o = find(triple.object);
  if (!s || !p || !o) return false;
  const TripleIds ids{*s, *p, *o};
  if (triples_.erase(ids) == 0) return false;
  remove_from(by_subject_[ids.s], ids);
  remove_from(by_predicate_[ids.p], ids);
  remove_from(by_object_[ids.o], ids);
  return true;
}

bool Graph::contains(const Triple& triple) const {
  const auto s = find(triple.subject);
  const auto p = find(Term(triple.predicate));
  const auto o = find(triple.object);
  return s && p && o && triples_.count(TripleIds{*s, *p, *o}) != 0;
}

void Graph::insert_all(const Graph& other) {
  std::vector<TermId> remap(other.terms_.size());
  for (std::size_t i = 0; i < other.terms_.size(); ++i) remap[i] = intern(other.terms_[i]);
  for (const auto& t : other.triples_) {
    const TripleIds ids{remap[t.s], remap[t.p], remap[t.o]};
    if (triples_.insert(ids).second) {
      by_subject_[ids.s].push_back(ids);
      by_predicate_[ids.p].push_back(ids);
      by_object_[ids.o].push_back(ids);
    }
  }
}

Triple Graph::materialize(const TripleIds& ids) const {
  return Triple(terms_[ids.s], terms_[ids.p].iri(), terms_[ids.o]);
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Iri>& p,
                                 const std::optional<Term>& o) const {
  std::optional<TermId> sid, pid, oid;
  if (s) {
    sid = find(*s);
    if (!sid) return {};
  }
  if (p) {
    pid = find(Term(*p));
    if (!pid) return {};
  }
  if (o) {
    oid = find(*o);
    if (!oid) return {};
  }
  std::vector<Triple> out;
  for_each_match(sid, pid, oid, [&](const TripleIds& t) { out.push_back(materialize(t)); });
  sort_canonical(out);
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::optional<TermId>> remap(a.terms_.size());
  for (std::size_t i = 0; i < a.terms_.size(); ++i) remap[i] = b.find(a.terms_[i]);
  for (const auto& t : a.triples_) {
    const auto s = remap[t.s], p = remap[t.p], o = remap[t.o];
    if (!s || !p || !o || b.triples_.count(TripleIds{*s, *p, *o}) == 0) return false;
  }
  return true;
}

Graph merge_graphs(const std::vector<const Graph*>& graphs) {
  Graph out;
  for (const Graph* g : graphs) out.insert_all(*g);
  return out;
}

void sort_canonical(std::vector<Triple>& triples) {
  std::vector<std::pair<std::string, std::size_t>> keyed;
  keyed.reserve(triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i) keyed.emplace_back(triples[i].to_ntriples(), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Triple> sorted;
  sorted.reserve(triples.size());
  for (const auto& [line, index] : keyed) sorted.push_back(std::move(triples[index]));
  triples = std::move(sorted);
}

}  // namespace fairkg::rdf
