#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "fairkg/rdf/term.hpp"

namespace fairkg::rdf {

/// Prefix to namespace bindings used for CURIE / prefixed-name expansion.
class PrefixMap {
 public:
  /// Binds `prefix`, replacing any previous binding.
  void bind(std::string prefix, Iri ns);

  std::optional<Iri> lookup(std::string_view prefix) const;
  bool contains(std::string_view prefix) const { return lookup(prefix).has_value(); }

  /// Expands `prefix:local`. Throws Error{MalformedCurie} without a colon,
  /// Error{UnknownPrefix}, or the make_iri errors for the concatenation.
  Iri expand(std::string_view curie) const;

  /// Shortest `prefix:local` form of `iri` when some namespace matches and the
  /// local part is non-empty; nullopt otherwise.
  std::optional<std::string> compact(const Iri& iri) const;

  /// Adds every binding of `other`, overriding existing prefixes.
  void merge(const PrefixMap& other);

  const std::map<std::string, Iri, std::less<>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// rdf, rdfs and xsd.
  static PrefixMap standard();

 private:
  std::map<std::string, Iri, std::less<>> entries_;
};

inline Iri expand_curie(const PrefixMap& prefixes, std::string_view curie) {
  return prefixes.expand(curie);
}

}  // namespace fairkg::rdf
