#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>

#include "fairkg/query/query.hpp"

namespace fairkg::query {

namespace {

enum class Family { None, Numeric, Date };

Family family_of(const rdf::Literal& literal) {
  const auto& dt = literal.datatype().str();
  if (dt == rdf::ns::kXsdInteger || dt == rdf::ns::kXsdDecimal || dt == rdf::ns::kXsdDouble) {
    return Family::Numeric;
  }
  if (dt == rdf::ns::kXsdDate) return Family::Date;
  return Family::None;
}

bool is_double(const rdf::Literal& literal) {
  return literal.datatype().str() == rdf::ns::kXsdDouble;
}

// Exact comparison of xsd:integer / xsd:decimal lexical forms.
int compare_decimal(std::string_view a, std::string_view b) {
  struct Parts {
    bool negative = false;
    std::string_view whole;
    std::string_view fraction;
  };
  const auto split = [](std::string_view s) {
    Parts p;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      p.negative = s.front() == '-';
      s.remove_prefix(1);
    }
    const auto dot = s.find('.');
    p.whole = s.substr(0, dot);
    p.fraction = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    while (!p.whole.empty() && p.whole.front() == '0') p.whole.remove_prefix(1);
    while (!p.fraction.empty() && p.fraction.back() == '0') p.fraction.remove_suffix(1);
    if (p.whole.empty() && p.fraction.empty()) p.negative = false;
    return p;
  };
  const Parts x = split(a);
  const Parts y = split(b);
  if (x.negative != y.negative) return x.negative ? -1 : 1;
  int magnitude = 0;
  if (x.whole.size() != y.whole.size()) {
    magnitude = x.whole.size() < y.whole.size() ? -1 : 1;
  } else if (const int c = x.whole.compare(y.whole); c != 0) {
    magnitude = c < 0 ? -1 : 1;
  } else if (const int f = x.fraction.compare(y.fraction); f != 0) {
    // Trailing zeros are stripped, so plain string order is numeric order.
    magnitude = f < 0 ? -1 : 1;
  }
  return x.negative ? -magnitude : magnitude;
}

double to_double(const std::string& lexical) {
  if (lexical == "INF" || lexical == "+INF") return HUGE_VAL;
  if (lexical == "-INF") return -HUGE_VAL;
  if (lexical == "NaN") return std::nan("");
  return std::strtod(lexical.c_str(), nullptr);
}

/// Three-way comparison within one family; nullopt when unordered (NaN).
std::optional<int> compare(const rdf::Literal& a, const rdf::Literal& b, Family family) {
  if (family == Family::Date) {
    const int c = a.lexical().compare(b.lexical());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (!is_double(a) && !is_double(b)) return compare_decimal(a.lexical(), b.lexical());
  const double x = to_double(a.lexical());
  const double y = to_double(b.lexical());
  if (std::isnan(x) || std::isnan(y)) return std::nullopt;
  return x < y ? -1 : (x > y ? 1 : 0);
}

}  // namespace

std::string_view to_string(CompareOp op) {
  switch (op) {
    case CompareOp::Eq: return "=";
    case CompareOp::Ne: return "!=";
    case CompareOp::Lt: return "<";
    case CompareOp::Le: return "<=";
    case CompareOp::Gt: return ">";
    case CompareOp::Ge: return ">=";
  }
  return "?";
}

bool is_comparable(CompareOp op, const rdf::Literal& operand) {
  return op == CompareOp::Eq || op == CompareOp::Ne || family_of(operand) != Family::None;
}

bool filter_accepts(const FilterExpr& filter, const rdf::Term& value) {
  const auto& operand = filter.operand;
  const Family family = family_of(operand);
  if (filter.op == CompareOp::Eq || filter.op == CompareOp::Ne) {
    bool equal = false;
    if (value.is_literal()) {
      const auto& lit = value.literal();
      if (family == Family::Numeric && family_of(lit) == Family::Numeric) {
        const auto c = compare(lit, operand, family);
        equal = c ? *c == 0 : lit == operand;
      } else {
        equal = lit == operand;
      }
    }
    return filter.op == CompareOp::Eq ? equal : !equal;
  }
  if (family == Family::None || !value.is_literal()) return false;
  const auto& lit = value.literal();
  if (family_of(lit) != family) return false;
  const auto c = compare(lit, operand, family);
  if (!c) return false;
  switch (filter.op) {
    case CompareOp::Lt: return *c < 0;
    case CompareOp::Le: return *c <= 0;
    case CompareOp::Gt: return *c > 0;
    case CompareOp::Ge: return *c >= 0;
    default: return false;
  }
}

std::vector<std::string> Query::variables() const {
  std::vector<std::string> out;
  const auto add = [&](const PatternTerm& t) {
    if (const auto* v = std::get_if<Variable>(&t)) {
      if (std::find(out.begin(), out.end(), v->name) == out.end()) out.push_back(v->name);
    }
  };
  for (const auto& p : patterns) {
    add(p.subject);
    add(p.predicate);
    add(p.object);
  }
  return out;
}

std::string Solution::to_tsv() const {
  std::string out;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (i) out += '\t';
    out += '?';
    out += variables[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += '\t';
      out += row[i].to_ntriples();
    }
    out += '\n';
  }
  return out;
}

}  // namespace fairkg::query
