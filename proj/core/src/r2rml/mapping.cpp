#include "fairkg/r2rml/mapping.hpp"

#include <algorithm>
#include <set>

#include "fairkg/rdf/turtle.hpp"

namespace fairkg::r2rml {

using rdf::Graph;
using rdf::Iri;
using rdf::Term;

std::string_view to_string(TermType type) {
  switch (type) {
    case TermType::Iri: return "IRI";
    case TermType::BlankNode: return "BlankNode";
    case TermType::Literal: return "Literal";
  }
  return "?";
}

std::vector<std::string> TermMap::columns() const {
  if (const auto* c = std::get_if<ColumnRef>(&source)) return {c->name};
  if (const auto* t = std::get_if<Template>(&source)) return t->columns();
  return {};
}

std::string Diagnostic::to_string() const {
  return std::string(is_error() ? "error " : "warning ") + map_name + ": " + message;
}

const TriplesMap* MappingDocument::find(const Term& id) const {
  for (const auto& tm : triples_maps)
    if (tm.id == id) return &tm;
  return nullptr;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.is_error(); });
}

namespace {

enum class Role { Subject, Predicate, Object };

Iri rr(std::string_view local) {
  std::string text(kRrNamespace);
  text += local;
  return Iri(text);
}

class MappingReader {
 public:
  MappingReader(const Graph& doc, const rdf::PrefixMap& prefixes, std::string source_name)
      : doc_(doc) {
    out_.prefixes = prefixes;
    out_.source_name = std::move(source_name);
  }

  MappingDocument read() {
    std::set<std::string> seen;
    std::vector<Term> ids;
    for (const char* marker : {"subjectMap", "subject", "logicalTable"}) {
      for (const auto& t : doc_.match(std::nullopt, rr(marker), std::nullopt)) {
        if (seen.insert(t.subject.to_ntriples()).second) ids.push_back(t.subject);
      }
    }
    for (const auto& t : doc_.match(std::nullopt, Iri(rdf::ns::kRdfType), Term(rr("TriplesMap")))) {
      if (seen.insert(t.subject.to_ntriples()).second) ids.push_back(t.subject);
    }
    if (ids.empty()) {
      throw Error(ErrorCode::MissingSubjectMap, "no triples maps found in mapping document");
    }
    std::sort(ids.begin(), ids.end(),
              [](const Term& a, const Term& b) { return a.to_ntriples() < b.to_ntriples(); });
    for (const auto& id : ids) out_.triples_maps.push_back(triples_map(id));

    for (const auto& tm : out_.triples_maps) {
      for (const auto& pom : tm.predicate_object_maps) {
        for (const auto& ref : pom.ref_object_maps) {
          if (out_.find(ref.parent) == nullptr) {
            throw Error(ErrorCode::DanglingParentMap,
                        tm.name + ": parent triples map " + ref.parent.to_ntriples() +
                            " is not defined");
          }
        }
      }
    }
    return std::move(out_);
  }

 private:
  std::vector<Term> objects(const Term& node, std::string_view property) const {
    std::vector<Term> out;
    for (const auto& t : doc_.match(node, rr(property), std::nullopt)) out.push_back(t.object);
    return out;
  }

  std::optional<Term> single(const Term& node, std::string_view property,
                             const std::string& context) const {
    auto values = objects(node, property);
    if (values.empty()) return std::nullopt;
    if (values.size() > 1) {
      throw Error(ErrorCode::InvalidMapping,
                  context + ": more than one rr:" + std::string(property) + " value");
    }
    return values.front();
  }

  std::string string_value(const Term& value, std::string_view property,
                           const std::string& context) const {
    if (!value.is_literal()) {
      throw Error(ErrorCode::InvalidMapping,
                  context + ": rr:" + std::string(property) + " must be a literal");
    }
    return value.literal().lexical();
  }

  void warn_unknown(const Term& node, std::initializer_list<std::string_view> known,
                    const std::string& context) {
    for (const auto& t : doc_.match(node, std::nullopt, std::nullopt)) {
      const auto& p = t.predicate.str();
      if (p.rfind(kRrNamespace, 0) != 0) continue;
      const std::string_view local = std::string_view(p).substr(kRrNamespace.size());
      if (std::find(known.begin(), known.end(), local) != known.end()) continue;
      if (local == "inverseExpression") {
        out_.warnings.push_back({Diagnostic::Severity::Warning, context,
                                 "rr:inverseExpression is ignored"});
      } else {
        out_.warnings.push_back({Diagnostic::Severity::Warning, context,
                                 "unknown property rr:" + std::string(local) + " ignored"});
      }
    }
  }

  std::string display_name(const Term& id) const {
    if (id.is_blank()) return "_:" + id.blank().label();
    if (const auto compact = out_.prefixes.compact(id.iri())) return *compact;
    const auto& text = id.iri().str();
    const auto hash = text.rfind('#');
    if (hash != std::string::npos && hash + 1 < text.size()) return text.substr(hash);
    return "<" + text + ">";
  }

  static std::string column_name(std::string name) {
    // SQL delimited identifiers keep their case; the quotes are not part of the name.
    if (name.size() >= 2 && name.front() == '"' && name.back() == '"') {
      name = name.substr(1, name.size() - 2);
    }
    return name;
  }

  TriplesMap triples_map(const Term& id) {
    TriplesMap tm{id, display_name(id), {}, TermMap{}, {}, {}};
    warn_unknown(id, {"logicalTable", "subjectMap", "subject", "predicateObjectMap"}, tm.name);

    const auto table = single(id, "logicalTable", tm.name);
    if (!table) {
      throw Error(ErrorCode::MissingLogicalTable, tm.name + ": no rr:logicalTable");
    }
    if (!objects(*table, "sqlQuery").empty()) {
      throw Error(ErrorCode::UnsupportedFeature,
                  tm.name + ": rr:sqlQuery views are not supported; use rr:tableName");
    }
    const auto table_name = single(*table, "tableName", tm.name);
    if (!table_name) {
      throw Error(ErrorCode::MissingLogicalTable, tm.name + ": logical table has no rr:tableName");
    }
    tm.logical_table = column_name(string_value(*table_name, "tableName", tm.name));
    warn_unknown(*table, {"tableName", "sqlVersion"}, tm.name);

    const auto subject_const = single(id, "subject", tm.name);
    const auto subject_node = single(id, "subjectMap", tm.name);
    if (subject_const && subject_node) {
      throw Error(ErrorCode::ConflictingSource, tm.name + ": both rr:subject and rr:subjectMap");
    }
    if (subject_const) {
      tm.subject_map = constant_map(*subject_const, Role::Subject, tm.name);
    } else if (subject_node) {
      if (!objects(*subject_node, "graphMap").empty() || !objects(*subject_node, "graph").empty()) {
        throw Error(ErrorCode::UnsupportedFeature, tm.name + ": rr:graphMap is not supported");
      }
      tm.subject_map = term_map(*subject_node, Role::Subject, tm.name);
      for (const auto& cls : objects(*subject_node, "class")) {
        if (!cls.is_iri()) throw Error(ErrorCode::InvalidMapping, tm.name + ": rr:class must be an IRI");
        tm.subject_classes.push_back(cls.iri());
      }
    } else {
      throw Error(ErrorCode::MissingSubjectMap, tm.name + ": no rr:subjectMap");
    }

    for (const auto& pom_node : objects(id, "predicateObjectMap")) {
      tm.predicate_object_maps.push_back(predicate_object_map(pom_node, tm.name));
    }
    return tm;
  }

  PredicateObjectMap predicate_object_map(const Term& node, const std::string& context) {
    warn_unknown(node, {"predicate", "predicateMap", "object", "objectMap"}, context);
    if (!objects(node, "graphMap").empty() || !objects(node, "graph").empty()) {
      throw Error(ErrorCode::UnsupportedFeature, context + ": rr:graphMap is not supported");
    }
    PredicateObjectMap pom;
    for (const auto& p : objects(node, "predicate")) {
      pom.predicate_maps.push_back(constant_map(p, Role::Predicate, context));
    }
    for (const auto& p : objects(node, "predicateMap")) {
      pom.predicate_maps.push_back(term_map(p, Role::Predicate, context));
    }
    for (const auto& o : objects(node, "object")) {
      pom.object_maps.push_back(constant_map(o, Role::Object, context));
    }
    for (const auto& o : objects(node, "objectMap")) {
      if (!objects(o, "parentTriplesMap").empty()) {
        pom.ref_object_maps.push_back(ref_object_map(o, context));
      } else {
        pom.object_maps.push_back(term_map(o, Role::Object, context));
      }
    }
    if (pom.predicate_maps.empty()) {
      throw Error(ErrorCode::InvalidMapping, context + ": predicate-object map without a predicate");
    }
    if (pom.object_maps.empty() && pom.ref_object_maps.empty()) {
      throw Error(ErrorCode::InvalidMapping, context + ": predicate-object map without an object");
    }
    return pom;
  }

  RefObjectMap ref_object_map(const Term& node, const std::string& context) {
    warn_unknown(node, {"parentTriplesMap", "joinCondition"}, context);
    const auto parents = objects(node, "parentTriplesMap");
    if (parents.size() > 1) {
      throw Error(ErrorCode::InvalidMapping, context + ": more than one rr:parentTriplesMap");
    }
    RefObjectMap ref{parents.front(), {}};
    for (const auto& jc : objects(node, "joinCondition")) {
      warn_unknown(jc, {"child", "parent"}, context);
      const auto child = single(jc, "child", context);
      const auto parent = single(jc, "parent", context);
      if (!child || !parent) {
        throw Error(ErrorCode::InvalidMapping, context + ": join condition needs rr:child and rr:parent");
      }
      ref.joins.push_back({column_name(string_value(*child, "child", context)),
                           column_name(string_value(*parent, "parent", context))});
    }
    return ref;
  }

  TermMap constant_map(const Term& value, Role role, const std::string& context) const {
    TermMap tm;
    tm.source = value;
    tm.term_type = value.is_iri()       ? TermType::Iri
                   : value.is_literal() ? TermType::Literal
                                        : TermType::BlankNode;
    check_role(tm, role, context);
    return tm;
  }

  TermMap term_map(const Term& node, Role role, const std::string& context) {
    warn_unknown(node,
                 {"constant", "column", "template", "termType", "datatype", "language", "class",
                  "graphMap", "graph"},
                 context);
    const auto constant = single(node, "constant", context);
    const auto column = single(node, "column", context);
    const auto tmpl = single(node, "template", context);
    const int sources = int(constant.has_value()) + int(column.has_value()) + int(tmpl.has_value());
    if (sources > 1) {
      throw Error(ErrorCode::ConflictingSource,
                  context + ": term map has more than one of rr:constant, rr:column, rr:template");
    }
    if (sources == 0) {
      throw Error(ErrorCode::InvalidMapping, context + ": term map has no rr:constant, rr:column or rr:template");
    }
    if (constant) {
      TermMap tm = constant_map(*constant, role, context);
      if (single(node, "termType", context) || single(node, "datatype", context) ||
          single(node, "language", context)) {
        throw Error(ErrorCode::InvalidMapping,
                    context + ": constant term maps cannot declare rr:termType, rr:datatype or rr:language");
      }
      return tm;
    }

    TermMap tm;
    if (column) {
      tm.source = ColumnRef{column_name(string_value(*column, "column", context))};
    } else {
      tm.source = parse_template(string_value(*tmpl, "template", context));
    }

    const auto datatype = single(node, "datatype", context);
    const auto language = single(node, "language", context);
    if (datatype && language) {
      throw Error(ErrorCode::InvalidMapping, context + ": rr:datatype and rr:language are mutually exclusive");
    }
    if (datatype) {
      if (!datatype->is_iri()) throw Error(ErrorCode::InvalidMapping, context + ": rr:datatype must be an IRI");
      tm.datatype = datatype->iri();
    }
    if (language) {
      const auto tag = string_value(*language, "language", context);
      if (!rdf::is_valid_language_tag(tag)) {
        throw Error(ErrorCode::InvalidMapping, context + ": invalid rr:language '" + tag + "'");
      }
      tm.language = tag;
    }

    if (const auto type = single(node, "termType", context)) {
      if (!type->is_iri()) throw Error(ErrorCode::InvalidMapping, context + ": rr:termType must be an IRI");
      if (type->iri() == rr("IRI")) {
        tm.term_type = TermType::Iri;
      } else if (type->iri() == rr("BlankNode")) {
        tm.term_type = TermType::BlankNode;
      } else if (type->iri() == rr("Literal")) {
        tm.term_type = TermType::Literal;
      } else {
        throw Error(ErrorCode::InvalidMapping, context + ": unknown rr:termType " + type->to_ntriples());
      }
    } else if (role == Role::Object && (column || datatype || language)) {
      tm.term_type = TermType::Literal;
    } else {
      tm.term_type = TermType::Iri;
    }

    if ((tm.datatype || tm.language) && tm.term_type != TermType::Literal) {
      throw Error(ErrorCode::InvalidMapping,
                  context + ": rr:datatype and rr:language require term type rr:Literal");
    }
    check_role(tm, role, context);
    return tm;
  }

  static void check_role(const TermMap& tm, Role role, const std::string& context) {
    if (role == Role::Subject && tm.term_type == TermType::Literal) {
      throw Error(ErrorCode::LiteralSubject, context + ": subject map produces literals");
    }
    if (role == Role::Predicate && tm.term_type != TermType::Iri) {
      throw Error(ErrorCode::InvalidMapping, context + ": predicate map must produce IRIs");
    }
  }

  const Graph& doc_;
  MappingDocument out_;
};

}  // namespace

MappingDocument parse_mapping(const Graph& doc, const rdf::PrefixMap& prefixes,
                              std::string source_name) {
  return MappingReader(doc, prefixes, std::move(source_name)).read();
}

MappingDocument load_mapping(std::string_view turtle, std::string source_name,
                             const std::optional<Iri>& base) {
  const Iri fallback("urn:fairkg:mapping");
  auto parsed = rdf::parse_turtle(turtle, base ? base : std::optional<Iri>(fallback));
  return parse_mapping(parsed.graph, parsed.prefixes, std::move(source_name));
}

}  // namespace fairkg::r2rml
