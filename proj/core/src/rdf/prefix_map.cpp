#include "fairkg/rdf/prefix_map.hpp"

namespace fairkg::rdf {

void PrefixMap::bind(std::string prefix, Iri ns) {
  entries_.insert_or_assign(std::move(prefix), std::move(ns));
}

std::optional<Iri> PrefixMap::lookup(std::string_view prefix) const {
  const auto it = entries_.find(prefix);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Iri PrefixMap::expand(std::string_view curie) const {
  const auto colon = curie.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::MalformedCurie, "'" + std::string(curie) + "' has no prefix separator");
  }
  const auto prefix = curie.substr(0, colon);
  const auto it = entries_.find(prefix);
  if (it == entries_.end()) {
    throw Error(ErrorCode::UnknownPrefix, "prefix '" + std::string(prefix) + "' is not bound");
  }
  std::string text = it->second.str();
  text.append(curie.substr(colon + 1));
  return Iri(text);
}

std::optional<std::string> PrefixMap::compact(const Iri& iri) const {
  std::optional<std::string> best;
  for (const auto& [prefix, ns] : entries_) {
    const auto& base = ns.str();
    if (iri.str().size() > base.size() && iri.str().compare(0, base.size(), base) == 0) {
      std::string candidate = prefix + ":" + iri.str().substr(base.size());
      if (!best || candidate.size() < best->size()) best = std::move(candidate);
    }
  }
  return best;
}

void PrefixMap::merge(const PrefixMap& other) {
  for (const auto& [prefix, ns] : other.entries_) bind(prefix, ns);
}

PrefixMap PrefixMap::standard() {
  PrefixMap map;
  map.bind("rdf", Iri(ns::kRdf));
  map.bind("rdfs", Iri(ns::kRdfs));
  map.bind("xsd", Iri(ns::kXsd));
  return map;
}

}  // namespace fairkg::rdf
