#include "fairkg/model/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>

#include "fairkg/error.hpp"
#include "fairkg/model/vocabulary.hpp"
#include "model/embedded_data.hpp"
#include "model/tsv.hpp"

namespace fairkg::model {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::InvalidDataFile, "shapes: " + message, line);
}

std::size_t parse_count(std::string_view text, std::size_t line) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    fail(line, "bad count '" + std::string(text) + "'");
  }
  return value;
}

ObjectKind parse_kind(std::string_view text, const rdf::PrefixMap& prefixes, std::size_t line) {
  ObjectKind kind{ObjectKind::Type::IriOfClass, rdf::Iri(rdf::ns::kRdfType)};
  std::string_view inner;
  if (text.starts_with("class(")) {
    inner = text.substr(6);
  } else if (text.starts_with("literal(")) {
    kind.type = ObjectKind::Type::Literal;
    inner = text.substr(8);
  } else {
    fail(line, "kind must be class(...) or literal(...)");
  }
  if (!inner.ends_with(')')) fail(line, "missing ')' in kind");
  inner.remove_suffix(1);
  try {
    kind.iri = prefixes.expand(inner);
  } catch (const Error& e) {
    fail(line, e.what());
  }
  return kind;
}

}  // namespace

std::vector<Shape> load_shapes(std::string_view text, const rdf::PrefixMap& prefixes) {
  std::vector<Shape> shapes;
  for (const auto& line : detail::tsv_lines(text)) {
    const auto n = line.number;
    if (line.fields.size() != 5) fail(n, "expected 5 tab-separated fields");
    std::optional<rdf::Iri> target;
    std::optional<rdf::Iri> predicate;
    try {
      target = prefixes.expand(line.fields[0]);
      predicate = prefixes.expand(line.fields[1]);
    } catch (const Error& e) {
      fail(n, e.message());
    }
    Constraint constraint{*predicate, parse_kind(line.fields[2], prefixes, n),
                          parse_count(line.fields[3], n), std::nullopt};
    if (line.fields[4] != "*") {
      constraint.max = parse_count(line.fields[4], n);
      if (*constraint.max < constraint.min) fail(n, "max is below min");
    }
    auto it = std::find_if(shapes.begin(), shapes.end(),
                           [&](const Shape& s) { return s.target_class == *target; });
    if (it == shapes.end()) {
      shapes.push_back({*target, {}});
      it = std::prev(shapes.end());
    }
    it->constraints.push_back(std::move(constraint));
  }
  return shapes;
}

const std::vector<Shape>& builtin_shapes() {
  static const std::vector<Shape> shapes =
      load_shapes(embedded::kShapes, builtin_vocabulary().prefixes());
  return shapes;
}

}  // namespace fairkg::model
