#include <algorithm>

#include "fairkg/model/shapes.hpp"

namespace fairkg::model {

namespace {

std::string describe(const ObjectKind& kind) {
  const char* name = kind.type == ObjectKind::Type::IriOfClass ? "class(" : "literal(";
  return name + rdf::Term(kind.iri).to_ntriples() + ")";
}

class Checker {
 public:
  explicit Checker(const rdf::Graph& graph) : graph_(graph) {
    type_ = graph.find(rdf::Term(rdf::Iri(rdf::ns::kRdfType)));
  }

  bool has_type(rdf::TermId node, const rdf::Iri& cls) const {
    const auto cls_id = graph_.find(rdf::Term(cls));
    if (!type_ || !cls_id) return false;
    bool found = false;
    graph_.for_each_match(node, type_, cls_id, [&](const rdf::TripleIds&) { found = true; });
    return found;
  }

  bool matches(rdf::TermId object, const ObjectKind& kind) const {
    const auto& term = graph_.term(object);
    if (kind.type == ObjectKind::Type::Literal) {
      return term.is_literal() && term.literal().datatype() == kind.iri;
    }
    return !term.is_literal() && has_type(object, kind.iri);
  }

  void check(const Shape& shape, std::vector<Violation>& out) const {
    const auto cls_id = graph_.find(rdf::Term(shape.target_class));
    if (!type_ || !cls_id) return;
    std::vector<rdf::TermId> focus_nodes;
    graph_.for_each_match(std::nullopt, type_, cls_id,
                          [&](const rdf::TripleIds& t) { focus_nodes.push_back(t.s); });
    for (const auto focus : focus_nodes) {
      for (const auto& c : shape.constraints) check(focus, shape, c, out);
    }
  }

 private:
  void check(rdf::TermId focus, const Shape& shape, const Constraint& c,
             std::vector<Violation>& out) const {
    std::vector<rdf::TermId> objects;
    if (const auto p = graph_.find(rdf::Term(c.predicate))) {
      graph_.for_each_match(focus, p, std::nullopt,
                            [&](const rdf::TripleIds& t) { objects.push_back(t.o); });
    }
    const auto& focus_term = graph_.term(focus);
    if (objects.size() < c.min || (c.max && objects.size() > *c.max)) {
      out.push_back({Violation::Kind::Cardinality, focus_term, shape.target_class, c,
                     objects.size(), std::nullopt});
    }
    for (const auto o : objects) {
      if (!matches(o, c.kind)) {
        out.push_back({Violation::Kind::ObjectKind, focus_term, shape.target_class, c,
                       objects.size(), graph_.term(o)});
      }
    }
  }

  const rdf::Graph& graph_;
  std::optional<rdf::TermId> type_;
};

}  // namespace

std::string Violation::to_string() const {
  std::string line = focus.to_ntriples();
  line += '\t';
  line += rdf::Term(target_class).to_ntriples();
  line += '\t';
  line += rdf::Term(constraint.predicate).to_ntriples();
  line += '\t';
  if (kind == Kind::Cardinality) {
    line += "cardinality\tmin=" + std::to_string(constraint.min) + " max=" +
            (constraint.max ? std::to_string(*constraint.max) : std::string("*")) +
            " observed=" + std::to_string(observed);
  } else {
    line += "object-kind\texpected " + describe(constraint.kind) + " got " +
            offending->to_ntriples();
  }
  return line;
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& v : violations) {
    out += v.to_string();
    out += '\n';
  }
  return out;
}

ValidationReport validate_graph(const rdf::Graph& graph, const std::vector<Shape>& shapes) {
  ValidationReport report;
  const Checker checker(graph);
  for (const auto& shape : shapes) checker.check(shape, report.violations);

  std::vector<std::pair<std::string, Violation>> keyed;
  keyed.reserve(report.violations.size());
  for (auto& v : report.violations) keyed.emplace_back(v.to_string(), std::move(v));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  report.violations.clear();
  for (auto& [line, v] : keyed) report.violations.push_back(std::move(v));
  return report;
}

}  // namespace fairkg::model
