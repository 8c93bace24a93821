#include "fairkg/rdf/turtle.hpp"

#include <cctype>
#include <string>
#include <unordered_map>

#include "rdf/text_cursor.hpp"
#include "util/utf8.hpp"

namespace fairkg::rdf {

namespace {

struct IriParts {
  std::optional<std::string> scheme;
  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;
};

IriParts split_iri(std::string_view r) {
  IriParts parts;
  const auto colon = r.find(':');
  if (colon != std::string_view::npos && colon > 0) {
    bool scheme_ok = std::isalpha(static_cast<unsigned char>(r[0])) != 0;
    for (std::size_t i = 1; i < colon && scheme_ok; ++i) {
      const auto c = static_cast<unsigned char>(r[i]);
      scheme_ok = std::isalnum(c) || c == '+' || c == '-' || c == '.';
    }
    if (scheme_ok) {
      parts.scheme = std::string(r.substr(0, colon));
      r.remove_prefix(colon + 1);
    }
  }
  if (r.substr(0, 2) == "//") {
    r.remove_prefix(2);
    const auto end = r.find_first_of("/?#");
    parts.authority = std::string(r.substr(0, end));
    r = end == std::string_view::npos ? std::string_view{} : r.substr(end);
  }
  const auto hash = r.find('#');
  if (hash != std::string_view::npos) {
    parts.fragment = std::string(r.substr(hash + 1));
    r = r.substr(0, hash);
  }
  const auto question = r.find('?');
  if (question != std::string_view::npos) {
    parts.query = std::string(r.substr(question + 1));
    r = r.substr(0, question);
  }
  parts.path = std::string(r);
  return parts;
}

std::string remove_dot_segments(std::string input) {
  std::string output;
  while (!input.empty()) {
    if (input.rfind("../", 0) == 0) {
      input.erase(0, 3);
    } else if (input.rfind("./", 0) == 0) {
      input.erase(0, 2);
    } else if (input.rfind("/./", 0) == 0) {
      input.replace(0, 3, "/");
    } else if (input == "/.") {
      input = "/";
    } else if (input.rfind("/../", 0) == 0 || input == "/..") {
      input = input == "/.." ? "/" : input.substr(3);
      const auto slash = output.rfind('/');
      output.erase(slash == std::string::npos ? 0 : slash);
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      const auto next = input.find('/', input[0] == '/' ? 1 : 0);
      output += input.substr(0, next);
      input.erase(0, next);
    }
  }
  return output;
}

std::string recompose(const IriParts& p) {
  std::string out;
  if (p.scheme) out += *p.scheme + ":";
  if (p.authority) out += "//" + *p.authority;
  out += p.path;
  if (p.query) out += "?" + *p.query;
  if (p.fragment) out += "#" + *p.fragment;
  return out;
}

}  // namespace

std::string resolve_iri(std::string_view base, std::string_view reference) {
  const IriParts b = split_iri(base);
  const IriParts r = split_iri(reference);
  IriParts t;
  if (r.scheme) {
    t = r;
    t.path = remove_dot_segments(r.path);
  } else {
    if (r.authority) {
      t.authority = r.authority;
      t.path = remove_dot_segments(r.path);
      t.query = r.query;
    } else {
      if (r.path.empty()) {
        t.path = b.path;
        t.query = r.query ? r.query : b.query;
      } else {
        if (r.path[0] == '/') {
          t.path = remove_dot_segments(r.path);
        } else {
          std::string merged;
          if (b.authority && b.path.empty()) {
            merged = "/" + r.path;
          } else {
            const auto slash = b.path.rfind('/');
            merged = (slash == std::string::npos ? std::string() : b.path.substr(0, slash + 1)) + r.path;
          }
          t.path = remove_dot_segments(merged);
        }
        t.query = r.query;
      }
      t.authority = b.authority;
    }
    t.scheme = b.scheme;
  }
  t.fragment = r.fragment;
  return recompose(t);
}

namespace {

using detail::TextCursor;

class TurtleParser {
 public:
  TurtleParser(std::string_view text, const std::optional<Iri>& base) : in_(text) {
    if (base) base_ = base->str();
  }

  TurtleDocument parse() {
    if (!util::is_valid_utf8(in_.rest())) {
      throw Error(ErrorCode::SyntaxError, "input is not valid UTF-8",
                  util::first_invalid_utf8_line(in_.rest()));
    }
    while (true) {
      in_.skip_ws();
      if (in_.eof()) break;
      statement();
    }
    return std::move(doc_);
  }

 private:
  void statement() {
    if (in_.peek() == '@') {
      if (in_.consume_word("@prefix", false)) {
        prefix_declaration();
        in_.skip_ws();
        in_.expect('.');
        return;
      }
      if (in_.consume_word("@base", false)) {
        base_declaration();
        in_.skip_ws();
        in_.expect('.');
        return;
      }
      in_.fail("unknown directive");
    }
    if (in_.consume_word("PREFIX", true)) {
      prefix_declaration();
      return;
    }
    if (in_.consume_word("BASE", true)) {
      base_declaration();
      return;
    }
    triples();
    in_.skip_ws();
    in_.expect('.');
  }

  void prefix_declaration() {
    in_.skip_ws();
    std::string prefix;
    if (in_.peek() != ':') {
      const auto name = in_.read_name();
      if (!name.has_colon || !name.local.empty()) in_.fail("expected a prefix name ending in ':'");
      prefix = name.prefix;
    } else {
      in_.get();
    }
    in_.skip_ws();
    doc_.prefixes.bind(std::move(prefix), iri_ref());
  }

  void base_declaration() {
    in_.skip_ws();
    base_ = iri_ref().str();
  }

  void triples() {
    if (in_.peek() == '[') {
      const Term subject = blank_node_property_list();
      in_.skip_ws();
      if (in_.peek() != '.') predicate_object_list(subject);
      return;
    }
    const Term subject = subject_term();
    in_.skip_ws();
    predicate_object_list(subject);
  }

  void predicate_object_list(const Term& subject) {
    while (true) {
      const Iri predicate = verb();
      in_.skip_ws();
      object_list(subject, predicate);
      in_.skip_ws();
      if (!in_.consume(';')) return;
      // Repeated or trailing semicolons are allowed.
      while (true) {
        in_.skip_ws();
        if (!in_.consume(';')) break;
      }
      in_.skip_ws();
      const char c = in_.peek();
      if (c == '.' || c == ']' || in_.eof()) return;
    }
  }

  void object_list(const Term& subject, const Iri& predicate) {
    while (true) {
      Term object = object_term();
      doc_.graph.insert(Triple(subject, predicate, std::move(object)));
      in_.skip_ws();
      if (!in_.consume(',')) return;
      in_.skip_ws();
    }
  }

  Iri verb() {
    if (in_.peek() == 'a') {
      if (in_.consume_word("a", false)) return Iri(ns::kRdfType);
    }
    return iri();
  }

  Term subject_term() {
    const char c = in_.peek();
    if (c == '_' && in_.peek(1) == ':') return labelled_blank();
    if (c == '(') in_.fail("collections are not supported");
    if (c == '"' || c == '\'') in_.fail("a literal cannot be a subject");
    return iri();
  }

  Term object_term() {
    const char c = in_.peek();
    if (c == '_' && in_.peek(1) == ':') return labelled_blank();
    if (c == '[') return blank_node_property_list();
    if (c == '(') in_.fail("collections are not supported");
    if (c == '"' || c == '\'') return string_literal();
    if (c == '+' || c == '-' || c == '.' || (c >= '0' && c <= '9')) return numeric_literal();
    if (in_.consume_word("true", false)) return Literal("true", Iri(ns::kXsdBoolean));
    if (in_.consume_word("false", false)) return Literal("false", Iri(ns::kXsdBoolean));
    return iri();
  }

  Term blank_node_property_list() {
    in_.expect('[');
    const BlankNode node = fresh_blank();
    in_.skip_ws();
    if (in_.consume(']')) return node;
    predicate_object_list(node);
    in_.skip_ws();
    in_.expect(']');
    return node;
  }

  Term labelled_blank() {
    const std::string label = in_.read_blank_label();
    const auto it = blank_labels_.find(label);
    if (it != blank_labels_.end()) return it->second;
    BlankNode node = fresh_blank();
    blank_labels_.emplace(label, node);
    return node;
  }

  BlankNode fresh_blank() { return BlankNode("b" + std::to_string(blank_counter_++)); }

  Term string_literal() {
    const auto line = in_.line();
    const auto column = in_.column();
    std::string lexical = in_.read_string(true);
    try {
      if (in_.peek() == '@') return Literal::with_language(std::move(lexical), in_.read_langtag());
      if (in_.peek() == '^') {
        in_.get();
        in_.expect('^');
        return Literal(std::move(lexical), iri());
      }
      return Literal(std::move(lexical));
    } catch (const Error& e) {
      if (e.line()) throw;
      throw Error(e.code(), e.message(), line, column);
    }
  }

  Term numeric_literal() {
    const std::string text = in_.read_number();
    std::string_view datatype = ns::kXsdInteger;
    if (text.find_first_of("eE") != std::string::npos) {
      datatype = ns::kXsdDouble;
    } else if (text.find('.') != std::string::npos) {
      datatype = ns::kXsdDecimal;
    }
    return Literal(text, Iri(datatype));
  }

  Iri iri() {
    if (in_.peek() == '<') return iri_ref();
    const auto line = in_.line();
    const auto column = in_.column();
    const auto name = in_.read_name();
    if (!name.has_colon) in_.fail_at(line, column, "unexpected token '" + name.prefix + "'");
    try {
      return doc_.prefixes.expand(name.prefix + ":" + name.local);
    } catch (const Error& e) {
      throw Error(e.code(), e.message(), line, column);
    }
  }

  Iri iri_ref() {
    const auto line = in_.line();
    const auto column = in_.column();
    std::string text = in_.read_iriref();
    const auto problem = check_iri(text);
    if (problem && problem->code == ErrorCode::RelativeIri) {
      if (!base_) {
        throw Error(ErrorCode::RelativeIri, "relative IRI <" + text + "> without a base", line, column);
      }
      text = resolve_iri(*base_, text);
    }
    try {
      return Iri(text);
    } catch (const Error& e) {
      throw Error(e.code(), e.message(), line, column);
    }
  }

  TextCursor in_;
  TurtleDocument doc_;
  std::optional<std::string> base_;
  std::unordered_map<std::string, BlankNode> blank_labels_;
  std::size_t blank_counter_ = 0;
};

}  // namespace

TurtleDocument parse_turtle(std::string_view text, const std::optional<Iri>& base) {
  return TurtleParser(text, base).parse();
}

}  // namespace fairkg::rdf
