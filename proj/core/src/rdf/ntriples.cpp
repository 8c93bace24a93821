#include "fairkg/rdf/ntriples.hpp"

#include <algorithm>
#include <vector>

#include "rdf/text_cursor.hpp"
#include "util/utf8.hpp"

namespace fairkg::rdf {

std::string serialize_ntriples(const Graph& graph) {
  // Sized once so references into the cache stay valid.
  std::vector<std::string> rendered(graph.term_count());
  std::vector<bool> have(graph.term_count(), false);
  std::vector<std::string> lines;
  lines.reserve(graph.size());
  const auto text_of = [&](TermId id) -> const std::string& {
    if (!have[id]) {
      rendered[id] = graph.term(id).to_ntriples();
      have[id] = true;
    }
    return rendered[id];
  };
  graph.for_each([&](const TripleIds& t) {
    std::string line;
    const auto& s = text_of(t.s);
    const auto& p = text_of(t.p);
    const auto& o = text_of(t.o);
    line.reserve(s.size() + p.size() + o.size() + 4);
    line += s;
    line += ' ';
    line += p;
    line += ' ';
    line += o;
    line += " .";
    lines.push_back(std::move(line));
  });
  std::sort(lines.begin(), lines.end());
  std::size_t total = 0;
  for (const auto& l : lines) total += l.size() + 1;
  std::string out;
  out.reserve(total);
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

namespace {

using detail::TextCursor;

Iri read_iri(TextCursor& in) {
  const auto line = in.line();
  const auto column = in.column();
  const std::string text = in.read_iriref();
  try {
    return Iri(text);
  } catch (const Error& e) {
    in.fail_at(line, column, std::string(to_string(e.code())) + ": " + e.message());
  }
}

Term read_subject(TextCursor& in) {
  if (in.peek() == '<') return read_iri(in);
  if (in.peek() == '_') return BlankNode(in.read_blank_label());
  in.fail("expected an IRI or blank node as subject");
}

Term read_object(TextCursor& in) {
  if (in.peek() == '<') return read_iri(in);
  if (in.peek() == '_') return BlankNode(in.read_blank_label());
  if (in.peek() != '"') in.fail("expected an IRI, blank node or literal as object");
  const auto line = in.line();
  const auto column = in.column();
  std::string lexical = in.read_string(false);
  try {
    if (in.peek() == '@') return Literal::with_language(std::move(lexical), in.read_langtag());
    if (in.peek() == '^') {
      in.get();
      in.expect('^');
      return Literal(std::move(lexical), read_iri(in));
    }
    return Literal(std::move(lexical));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SyntaxError) throw;
    in.fail_at(line, column, e.message());
  }
}

}  // namespace

Graph parse_ntriples(std::string_view text) {
  TextCursor in(text);
  if (!util::is_valid_utf8(in.rest())) {
    throw Error(ErrorCode::SyntaxError, "input is not valid UTF-8", util::first_invalid_utf8_line(in.rest()));
  }
  Graph graph;
  while (true) {
    in.skip_blanks();
    if (in.eof()) break;
    const char c = in.peek();
    if (c == '\n' || c == '\r') {
      in.get();
      continue;
    }
    if (c == '#') {
      while (!in.eof() && in.peek() != '\n') in.get();
      continue;
    }
    Term subject = read_subject(in);
    in.skip_blanks();
    if (in.peek() != '<') in.fail("expected an IRI as predicate");
    Iri predicate = read_iri(in);
    in.skip_blanks();
    Term object = read_object(in);
    in.skip_blanks();
    if (in.peek() != '.') in.fail("expected '.' at end of triple");
    in.get();
    in.skip_blanks();
    if (in.peek() == '#') {
      while (!in.eof() && in.peek() != '\n') in.get();
    }
    if (in.peek() == '\r') in.get();
    if (!in.eof() && in.peek() != '\n') in.fail("unexpected content after triple");
    graph.insert(Triple(std::move(subject), std::move(predicate), std::move(object)));
  }
  return graph;
}

}  // namespace fairkg::rdf
