#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fairkg/rdf/graph.hpp"
#include "fairkg/rdf/term.hpp"

namespace fairkg::testing {

/// Random RDF terms that lean on the awkward corners: escapes, control
/// characters, non-ASCII text, language tags and typed literals.
class Fuzzer {
 public:
  explicit Fuzzer(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(rng_) < p; }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

  /// UTF-8 text mixing plain ASCII with characters N-Triples must escape.
  std::string text(std::size_t max_len) {
    static const std::vector<char32_t> pool = {
        'a', 'b', 'Z', '0', '7', ' ', '"', '\\', '\n', '\r', '\t', 0x01, 0x1F, 0x7F,
        '\'', '<', '>', '{', '}', '%', '#', 0xE9, 0x4E2D, 0x1F600, 0xFFFD, 0x80, 0x2028};
    std::string out;
    const std::size_t len = below(max_len + 1);
    for (std::size_t i = 0; i < len; ++i) append(out, pool[below(pool.size())]);
    return out;
  }

  rdf::Iri iri() {
    static const std::vector<std::string> bases = {"http://ex.org/", "https://e.example/a/b#",
                                                   "urn:x-test:", "http://purl.obolibrary.org/obo/NCIT_"};
    static const std::vector<std::string> pieces = {"a", "Z", "0", "-", ".", "_", "~", "%20", "é", "中", "/", "?q=", "😀"};
    std::string s = bases[below(bases.size())];
    const std::size_t n = 1 + below(6);
    for (std::size_t i = 0; i < n; ++i) s += pieces[below(pieces.size())];
    return rdf::Iri(s);
  }

  rdf::BlankNode blank() {
    static const std::vector<std::string> forms = {"b", "node", "_x", "9"};
    std::string label = forms[below(forms.size())] + std::to_string(below(50));
    if (chance(0.2)) label += ".z";
    if (chance(0.2)) label += "-q";
    return rdf::BlankNode(label);
  }

  rdf::Literal literal() {
    switch (below(7)) {
      case 0: return rdf::Literal(text(12));
      case 1: return rdf::Literal::with_language(text(8), pick(languages()));
      case 2:
        return rdf::Literal(std::to_string(static_cast<long long>(rng_() % 2001) - 1000),
                            rdf::Iri(rdf::ns::kXsdInteger));
      case 3: return rdf::Literal(chance(0.5) ? "true" : "false", rdf::Iri(rdf::ns::kXsdBoolean));
      case 4: {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", 1990 + static_cast<int>(below(40)),
                      1 + static_cast<int>(below(12)), 1 + static_cast<int>(below(28)));
        return rdf::Literal(buf, rdf::Iri(rdf::ns::kXsdDate));
      }
      case 5: return rdf::Literal(text(6), rdf::Iri("http://ex.org/dt#custom"));
      default:
        return rdf::Literal(std::to_string(below(100)) + "." + std::to_string(below(100)),
                            rdf::Iri(rdf::ns::kXsdDecimal));
    }
  }

  rdf::Term subject() {
    if (chance(0.25)) return blank();
    return iri();
  }

  rdf::Term object() {
    const auto r = below(10);
    if (r < 3) return iri();
    if (r < 5) return blank();
    return literal();
  }

  /// Up to `max_triples` random triples drawn from a shared term pool, so
  /// subjects and objects repeat.
  rdf::Graph graph(std::size_t max_triples) {
    std::vector<rdf::Term> subjects;
    std::vector<rdf::Iri> predicates;
    std::vector<rdf::Term> objects;
    const std::size_t pool = 4 + below(40);
    for (std::size_t i = 0; i < pool; ++i) {
      subjects.push_back(subject());
      objects.push_back(object());
    }
    for (std::size_t i = 0; i < 1 + below(8); ++i) predicates.push_back(iri());
    rdf::Graph g;
    const std::size_t n = below(max_triples + 1);
    for (std::size_t i = 0; i < n; ++i) {
      const rdf::Term& o = chance(0.2) ? subjects[below(subjects.size())] : objects[below(objects.size())];
      g.insert(rdf::Triple(subjects[below(subjects.size())], predicates[below(predicates.size())], o));
    }
    return g;
  }

 private:
  static const std::vector<std::string>& languages() {
    static const std::vector<std::string> tags = {"en", "nl", "en-GB", "zh-Hant-TW", "x-private"};
    return tags;
  }

  static void append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace fairkg::testing
