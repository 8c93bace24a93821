#include "fairkg/rdf/term.hpp"

#include <array>
#include <cstdio>

#include "util/utf8.hpp"

namespace fairkg::rdf {

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_hex(char c) {
  return is_digit(c) || (c >= 'A' && c <= 'F') || (c >= 'a' && c <= 'f');
}

bool is_ucschar_or_private(char32_t cp) {
  return (cp >= 0xA0 && cp <= 0xD7FF) || (cp >= 0xE000 && cp <= 0xFDCF) ||
         (cp >= 0xFDF0 && cp <= 0xFFEF) ||
         (cp >= 0x10000 && cp <= 0x10FFFD && (cp & 0xFFFE) != 0xFFFE);
}

bool is_forbidden_ascii(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u <= 0x20 || u == 0x7F) return true;
  switch (c) {
    case '<': case '>': case '"': case '{': case '}':
    case '|': case '\\': case '^': case '`':
      return true;
    default:
      return false;
  }
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_digit(c)) return false;
  return true;
}

std::string_view strip_sign(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return s;
}

bool is_decimal_lexical(std::string_view s) {
  s = strip_sign(s);
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) return all_digits(s);
  const auto whole = s.substr(0, dot);
  const auto frac = s.substr(dot + 1);
  if (whole.empty() && frac.empty()) return false;
  return (whole.empty() || all_digits(whole)) && (frac.empty() || all_digits(frac));
}

bool is_double_lexical(std::string_view s) {
  if (s == "INF" || s == "-INF" || s == "+INF" || s == "NaN") return true;
  const auto e = s.find_first_of("eE");
  if (e == std::string_view::npos) return is_decimal_lexical(s);
  return is_decimal_lexical(s.substr(0, e)) && all_digits(strip_sign(s.substr(e + 1)));
}

int to_int(std::string_view digits) {
  int v = 0;
  for (char c : digits) v = v * 10 + (c - '0');
  return v;
}

bool is_leap_year(std::string_view year_digits) {
  // Only the last four digits matter for divisibility by 4, 100 and 400.
  const auto tail = year_digits.size() > 4 ? year_digits.substr(year_digits.size() - 4) : year_digits;
  const int y = to_int(tail);
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

bool is_timezone(std::string_view tz) {
  if (tz.empty() || tz == "Z") return true;
  if (tz.size() != 6 || (tz[0] != '+' && tz[0] != '-') || tz[3] != ':') return false;
  if (!all_digits(tz.substr(1, 2)) || !all_digits(tz.substr(4, 2))) return false;
  const int hh = to_int(tz.substr(1, 2));
  const int mm = to_int(tz.substr(4, 2));
  return mm <= 59 && (hh < 14 || (hh == 14 && mm == 0));
}

bool is_date_lexical(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  const auto dash = s.find('-');
  if (dash == std::string_view::npos || dash < 4) return false;
  const auto year = s.substr(0, dash);
  if (!all_digits(year) || (year.size() > 4 && year.front() == '0')) return false;
  auto rest = s.substr(dash + 1);
  if (rest.size() < 5 || rest[2] != '-') return false;
  const auto month_text = rest.substr(0, 2);
  const auto day_text = rest.substr(3, 2);
  if (!all_digits(month_text) || !all_digits(day_text)) return false;
  const int month = to_int(month_text);
  const int day = to_int(day_text);
  static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12 || day < 1) return false;
  int limit = kDays[month - 1];
  if (month == 2 && is_leap_year(year)) limit = 29;
  if (day > limit) return false;
  return is_timezone(rest.substr(5));
}

}  // namespace

std::optional<IriProblem> check_iri(std::string_view text) {
  std::size_t i = 0;
  if (text.empty() || !is_alpha(text[0])) return IriProblem{ErrorCode::RelativeIri, 1};
  while (i < text.size() && (is_alpha(text[i]) || is_digit(text[i]) || text[i] == '+' ||
                             text[i] == '-' || text[i] == '.')) {
    ++i;
  }
  if (i == text.size() || text[i] != ':') return IriProblem{ErrorCode::RelativeIri, 1};

  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char c = text[pos];
    if (static_cast<unsigned char>(c) < 0x80) {
      if (is_forbidden_ascii(c)) return IriProblem{ErrorCode::IllegalCharacter, start + 1};
      if (c == '%' && (pos + 2 >= text.size() || !is_hex(text[pos + 1]) || !is_hex(text[pos + 2]))) {
        return IriProblem{ErrorCode::IllegalCharacter, start + 1};
      }
      ++pos;
      continue;
    }
    const auto cp = util::decode_utf8(text, pos);
    if (!cp || !is_ucschar_or_private(*cp)) return IriProblem{ErrorCode::IllegalCharacter, start + 1};
  }
  return std::nullopt;
}

Iri::Iri(std::string_view text) {
  if (const auto problem = check_iri(text)) {
    if (problem->code == ErrorCode::RelativeIri) {
      throw Error(ErrorCode::RelativeIri, "IRI has no scheme: '" + std::string(text) + "'");
    }
    throw Error(ErrorCode::IllegalCharacter,
                "illegal character in IRI '" + std::string(text) + "'", std::nullopt,
                problem->position);
  }
  value_ = std::string(text);
}

namespace {

bool is_blank_label(std::string_view label) {
  if (label.empty() || label.back() == '.') return false;
  std::size_t pos = 0;
  bool first = true;
  while (pos < label.size()) {
    const char c = label[pos];
    if (static_cast<unsigned char>(c) >= 0x80) {
      if (!util::decode_utf8(label, pos)) return false;
    } else {
      const bool ok = is_alpha(c) || is_digit(c) || c == '_' ||
                      (!first && (c == '-' || c == '.'));
      if (!ok) return false;
      ++pos;
    }
    first = false;
  }
  return true;
}

}  // namespace

BlankNode::BlankNode(std::string_view label) : label_(label) {
  if (!is_blank_label(label)) {
    throw Error(ErrorCode::InvalidTerm, "invalid blank node label '" + std::string(label) + "'");
  }
}

bool is_valid_lexical(std::string_view lexical, std::string_view datatype) {
  if (datatype == ns::kXsdInteger) return all_digits(strip_sign(lexical));
  if (datatype == ns::kXsdDecimal) return is_decimal_lexical(lexical);
  if (datatype == ns::kXsdDouble) return is_double_lexical(lexical);
  if (datatype == ns::kXsdBoolean)
    return lexical == "true" || lexical == "false" || lexical == "1" || lexical == "0";
  if (datatype == ns::kXsdDate) return is_date_lexical(lexical);
  return true;
}

bool is_valid_language_tag(std::string_view tag) {
  std::size_t i = 0;
  while (i < tag.size() && is_alpha(tag[i])) ++i;
  if (i == 0) return false;
  while (i < tag.size()) {
    if (tag[i] != '-') return false;
    const std::size_t start = ++i;
    while (i < tag.size() && (is_alpha(tag[i]) || is_digit(tag[i]))) ++i;
    if (i == start) return false;
  }
  return true;
}

Literal::Literal(std::string lexical)
    : lexical_(std::move(lexical)), datatype_(ns::kXsdString) {}

Literal::Literal(std::string lexical, Iri datatype)
    : lexical_(std::move(lexical)), datatype_(std::move(datatype)) {
  if (datatype_.str() == ns::kRdfLangString) {
    throw Error(ErrorCode::InvalidTerm, "rdf:langString literal requires a language tag");
  }
  if (!is_valid_lexical(lexical_, datatype_.str())) {
    throw Error(ErrorCode::LexicalFormMismatch,
                "'" + lexical_ + "' is not a valid lexical form for <" + datatype_.str() + ">");
  }
}

Literal::Literal(std::string lexical, Iri datatype, std::string language)
    : lexical_(std::move(lexical)), datatype_(std::move(datatype)), language_(std::move(language)) {}

Literal Literal::with_language(std::string lexical, std::string_view language) {
  if (!is_valid_language_tag(language)) {
    throw Error(ErrorCode::InvalidTerm, "invalid language tag '" + std::string(language) + "'");
  }
  return Literal(std::move(lexical), Iri(ns::kRdfLangString), std::string(language));
}

void escape_string(std::string& out, std::string_view text) {
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20 || c == 0x7F) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(static_cast<unsigned char>(c)));
          out += buf;
        } else {
          out += c;
        }
    }
  }
}

std::string Term::to_ntriples() const {
  std::string out;
  switch (kind()) {
    case TermKind::Iri:
      out.reserve(iri().str().size() + 2);
      out += '<';
      out += iri().str();
      out += '>';
      break;
    case TermKind::BlankNode:
      out += "_:";
      out += blank().label();
      break;
    case TermKind::Literal: {
      const Literal& lit = literal();
      out += '"';
      escape_string(out, lit.lexical());
      out += '"';
      if (!lit.language().empty()) {
        out += '@';
        out += lit.language();
      } else if (lit.datatype().str() != ns::kXsdString) {
        out += "^^<";
        out += lit.datatype().str();
        out += '>';
      }
      break;
    }
  }
  return out;
}

Triple::Triple(Term s, Iri p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (subject.is_literal()) {
    throw Error(ErrorCode::InvalidTerm, "a literal cannot be the subject of a triple");
  }
}

std::string Triple::to_ntriples() const {
  std::string out = subject.to_ntriples();
  out += " <";
  out += predicate.str();
  out += "> ";
  out += object.to_ntriples();
  out += " .";
  return out;
}

std::size_t hash_value(const Term& term) noexcept {
  const std::hash<std::string> h;
  std::size_t seed = static_cast<std::size_t>(term.kind()) * 0x9E3779B97F4A7C15ull;
  const auto mix = [&seed](std::size_t v) {
    seed ^= v + 0x9E3779B97F4A7C15ull + (seed << 6) + (seed >> 2);
  };
  switch (term.kind()) {
    case TermKind::Iri: mix(h(term.iri().str())); break;
    case TermKind::BlankNode: mix(h(term.blank().label())); break;
    case TermKind::Literal:
      mix(h(term.literal().lexical()));
      mix(h(term.literal().datatype().str()));
      mix(h(term.literal().language()));
      break;
  }
  return seed;
}

}  // namespace fairkg::rdf
