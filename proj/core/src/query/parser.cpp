#include <algorithm>
#include <cctype>

#include "fairkg/error.hpp"
#include "fairkg/query/query.hpp"
#include "rdf/text_cursor.hpp"

namespace fairkg::query {

namespace {

using rdf::detail::TextCursor;

bool is_varname_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         u >= 0x80;
}

class QueryParser {
 public:
  QueryParser(std::string_view text, const rdf::PrefixMap& prefixes)
      : in_(text), prefixes_(prefixes) {}

  Query parse() {
    in_.skip_ws();
    while (in_.consume_word("PREFIX", true)) {
      prefix_declaration();
      in_.skip_ws();
    }
    if (!in_.consume_word("SELECT", true)) in_.fail("expected SELECT");
    in_.skip_ws();
    projection();
    in_.skip_ws();
    in_.consume_word("WHERE", true);
    in_.skip_ws();
    in_.expect('{');
    group();
    in_.skip_ws();
    if (!in_.eof()) in_.fail("unexpected text after '}'");
    check_projection();
    return std::move(query_);
  }

 private:
  struct Position {
    std::size_t line;
    std::size_t column;
  };

  Position here() const { return {in_.line(), in_.column()}; }

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
    prefixes_.bind(std::move(prefix), iri_ref());
  }

  void projection() {
    if (in_.consume('*')) {
      select_all_ = true;
      return;
    }
    if (in_.consume('(')) {
      in_.skip_ws();
      if (!in_.consume_word("COUNT", true)) in_.fail("expected COUNT");
      in_.skip_ws();
      in_.expect('(');
      in_.skip_ws();
      in_.expect('*');
      in_.skip_ws();
      in_.expect(')');
      in_.skip_ws();
      if (!in_.consume_word("AS", true)) in_.fail("expected AS");
      in_.skip_ws();
      query_.count_alias = variable_name();
      in_.skip_ws();
      in_.expect(')');
      return;
    }
    while (in_.peek() == '?' || in_.peek() == '$') {
      projected_at_.push_back(here());
      query_.projection.push_back(variable_name());
      in_.skip_ws();
    }
    if (query_.projection.empty()) in_.fail("expected projected variables, '*' or COUNT(*)");
  }

  std::string variable_name() {
    if (in_.peek() != '?' && in_.peek() != '$') in_.fail("expected a variable");
    in_.get();
    std::string name;
    while (!in_.eof() && is_varname_char(in_.peek())) name += in_.get();
    if (name.empty()) in_.fail("empty variable name");
    return name;
  }

  void group() {
    while (true) {
      in_.skip_ws();
      if (in_.consume('}')) break;
      if (in_.eof()) in_.fail("expected '}'");
      if (in_.consume_word("FILTER", true)) {
        filter();
        continue;
      }
      triples_block();
      in_.skip_ws();
      if (in_.consume('.')) continue;
      if (in_.peek() != '}' && !at_keyword("FILTER")) in_.fail("expected '.' or '}'");
    }
    if (query_.patterns.empty()) in_.fail("WHERE needs at least one triple pattern");
  }

  bool at_keyword(std::string_view word) const {
    const auto rest = in_.rest();
    if (rest.size() < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(rest[i])) != word[i]) return false;
    }
    return true;
  }

  void triples_block() {
    PatternTerm subject = subject_term();
    while (true) {
      in_.skip_ws();
      PatternTerm predicate = predicate_term();
      while (true) {
        in_.skip_ws();
        query_.patterns.push_back({subject, predicate, object_term()});
        in_.skip_ws();
        if (!in_.consume(',')) break;
      }
      if (!in_.consume(';')) return;
      in_.skip_ws();
      if (in_.peek() == '.' || in_.peek() == '}') return;
    }
  }

  PatternTerm subject_term() {
    const char c = in_.peek();
    if (c == '?' || c == '$') return Variable{variable_name()};
    if (c == '_' && in_.peek(1) == ':') return blank_variable();
    if (c == '[') return anonymous_blank();
    if (c == '"' || c == '\'' || c == '+' || c == '-' || (c >= '0' && c <= '9')) {
      in_.fail("a literal cannot be a subject");
    }
    return rdf::Term(iri());
  }

  PatternTerm predicate_term() {
    const char c = in_.peek();
    if (c == '?' || c == '$') return Variable{variable_name()};
    if (c == 'a' && in_.consume_word("a", false)) return rdf::Term(rdf::Iri(rdf::ns::kRdfType));
    if (c == '_' && in_.peek(1) == ':') in_.fail("a blank node cannot be a predicate");
    return rdf::Term(iri());
  }

  PatternTerm object_term() {
    const char c = in_.peek();
    if (c == '?' || c == '$') return Variable{variable_name()};
    if (c == '_' && in_.peek(1) == ':') return blank_variable();
    if (c == '[') return anonymous_blank();
    if (c == '"' || c == '\'' || c == '+' || c == '-' || c == '.' || (c >= '0' && c <= '9') ||
        in_.rest().starts_with("true") || in_.rest().starts_with("false")) {
      if (auto lit = try_literal()) return rdf::Term(std::move(*lit));
    }
    return rdf::Term(iri());
  }

  Variable blank_variable() { return Variable{"_:" + in_.read_blank_label()}; }

  Variable anonymous_blank() {
    in_.expect('[');
    in_.skip_ws();
    in_.expect(']');
    return Variable{"_:anon" + std::to_string(anonymous_++)};
  }

  std::optional<rdf::Literal> try_literal() {
    const auto at = here();
    const char c = in_.peek();
    try {
      if (c == '"' || c == '\'') {
        std::string lexical = in_.read_string(true);
        if (in_.peek() == '@') return rdf::Literal::with_language(std::move(lexical), in_.read_langtag());
        if (in_.peek() == '^') {
          in_.get();
          in_.expect('^');
          return rdf::Literal(std::move(lexical), iri());
        }
        return rdf::Literal(std::move(lexical));
      }
      if (in_.consume_word("true", false)) return rdf::Literal("true", rdf::Iri(rdf::ns::kXsdBoolean));
      if (in_.consume_word("false", false)) return rdf::Literal("false", rdf::Iri(rdf::ns::kXsdBoolean));
      if (c == '+' || c == '-' || c == '.' || (c >= '0' && c <= '9')) {
        const std::string text = in_.read_number();
        std::string_view datatype = rdf::ns::kXsdInteger;
        if (text.find_first_of("eE") != std::string::npos) {
          datatype = rdf::ns::kXsdDouble;
        } else if (text.find('.') != std::string::npos) {
          datatype = rdf::ns::kXsdDecimal;
        }
        return rdf::Literal(text, rdf::Iri(datatype));
      }
    } catch (const Error& e) {
      if (e.line()) throw;
      throw Error(e.code(), e.message(), at.line, at.column);
    }
    return std::nullopt;
  }

  void filter() {
    in_.skip_ws();
    in_.expect('(');
    in_.skip_ws();
    FilterExpr expr;
    Position operand_at{};
    bool variable_first = in_.peek() == '?' || in_.peek() == '$';
    if (variable_first) {
      expr.variable = variable_name();
      in_.skip_ws();
      expr.op = compare_op();
      in_.skip_ws();
      operand_at = here();
      expr.operand = filter_operand();
    } else {
      operand_at = here();
      expr.operand = filter_operand();
      in_.skip_ws();
      expr.op = mirrored(compare_op());
      in_.skip_ws();
      expr.variable = variable_name();
    }
    in_.skip_ws();
    in_.expect(')');
    if (!is_comparable(expr.op, expr.operand)) {
      throw Error(ErrorCode::TypeMismatch,
                  "operator " + std::string(to_string(expr.op)) + " needs a numeric or xsd:date operand, got " +
                      rdf::Term(expr.operand).to_ntriples(),
                  operand_at.line, operand_at.column);
    }
    query_.filters.push_back(std::move(expr));
  }

  rdf::Literal filter_operand() {
    auto lit = try_literal();
    if (!lit) in_.fail("expected a literal in FILTER");
    return std::move(*lit);
  }

  CompareOp compare_op() {
    if (in_.consume('=')) return CompareOp::Eq;
    if (in_.consume('!')) {
      in_.expect('=');
      return CompareOp::Ne;
    }
    if (in_.consume('<')) return in_.consume('=') ? CompareOp::Le : CompareOp::Lt;
    if (in_.consume('>')) return in_.consume('=') ? CompareOp::Ge : CompareOp::Gt;
    in_.fail("expected a comparison operator");
  }

  static CompareOp mirrored(CompareOp op) {
    switch (op) {
      case CompareOp::Lt: return CompareOp::Gt;
      case CompareOp::Le: return CompareOp::Ge;
      case CompareOp::Gt: return CompareOp::Lt;
      case CompareOp::Ge: return CompareOp::Le;
      default: return op;
    }
  }

  rdf::Iri iri() {
    if (in_.peek() == '<') return iri_ref();
    const auto at = here();
    const auto name = in_.read_name();
    if (!name.has_colon) in_.fail_at(at.line, at.column, "unexpected token '" + name.prefix + "'");
    try {
      return prefixes_.expand(name.prefix + ":" + name.local);
    } catch (const Error& e) {
      throw Error(e.code(), e.message(), at.line, at.column);
    }
  }

  rdf::Iri iri_ref() {
    const auto at = here();
    const std::string text = in_.read_iriref();
    try {
      return rdf::Iri(text);
    } catch (const Error& e) {
      throw Error(e.code(), e.message(), at.line, at.column);
    }
  }

  void check_projection() {
    const auto vars = query_.variables();
    if (select_all_) {
      for (const auto& v : vars)
        if (!Variable{v}.hidden()) query_.projection.push_back(v);
      return;
    }
    for (std::size_t i = 0; i < query_.projection.size(); ++i) {
      const auto& name = query_.projection[i];
      if (std::find(vars.begin(), vars.end(), name) == vars.end()) {
        throw Error(ErrorCode::UnboundProjection,
                    "?" + name + " does not appear in any triple pattern",
                    projected_at_[i].line, projected_at_[i].column);
      }
    }
    if (query_.count_alias &&
        std::find(vars.begin(), vars.end(), *query_.count_alias) != vars.end()) {
      in_.fail("COUNT alias ?" + *query_.count_alias + " is already used in the pattern");
    }
  }

  TextCursor in_;
  rdf::PrefixMap prefixes_;
  Query query_;
  std::vector<Position> projected_at_;
  bool select_all_ = false;
  std::size_t anonymous_ = 0;
};

}  // namespace

Query parse_query(std::string_view text, const rdf::PrefixMap& prefixes) {
  return QueryParser(text, prefixes).parse();
}

}  // namespace fairkg::query
