#include <set>

#include "fairkg/r2rml/mapping.hpp"

namespace fairkg::r2rml {

namespace {

void check_columns(const TermMap& tm, const std::string& what, const TriplesMap& owner,
                   const std::set<std::string>& columns, std::vector<Diagnostic>& out) {
  for (const auto& column : tm.columns()) {
    if (columns.count(column) == 0) {
      out.push_back({Diagnostic::Severity::Error, owner.name,
                     what + " references column '" + column + "' absent from table '" +
                         owner.logical_table + "'"});
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate_mapping(const MappingDocument& mapping,
                                         const ColumnCatalog& available_columns) {
  std::vector<Diagnostic> out;
  std::set<std::string> used_tables;
  for (const auto& tm : mapping.triples_maps) {
    used_tables.insert(tm.logical_table);
    const auto table = available_columns.find(tm.logical_table);
    if (table == available_columns.end()) {
      out.push_back({Diagnostic::Severity::Error, tm.name,
                     "logical table '" + tm.logical_table + "' is not available"});
      continue;
    }
    const auto& columns = table->second;
    check_columns(tm.subject_map, "subject map", tm, columns, out);

    std::set<rdf::Iri> classes;
    for (const auto& cls : tm.subject_classes) {
      if (!classes.insert(cls).second) {
        out.push_back({Diagnostic::Severity::Warning, tm.name,
                       "class <" + cls.str() + "> asserted more than once"});
      }
    }

    for (const auto& pom : tm.predicate_object_maps) {
      for (const auto& p : pom.predicate_maps) check_columns(p, "predicate map", tm, columns, out);
      for (const auto& o : pom.object_maps) check_columns(o, "object map", tm, columns, out);
      for (const auto& ref : pom.ref_object_maps) {
        const TriplesMap* parent = mapping.find(ref.parent);
        if (parent == nullptr) {
          out.push_back({Diagnostic::Severity::Error, tm.name,
                         "parent triples map " + ref.parent.to_ntriples() + " is not defined"});
          continue;
        }
        const auto parent_table = available_columns.find(parent->logical_table);
        for (const auto& join : ref.joins) {
          if (columns.count(join.child) == 0) {
            out.push_back({Diagnostic::Severity::Error, tm.name,
                           "join child column '" + join.child + "' absent from table '" +
                               tm.logical_table + "'"});
          }
          if (parent_table != available_columns.end() && parent_table->second.count(join.parent) == 0) {
            out.push_back({Diagnostic::Severity::Error, tm.name,
                           "join parent column '" + join.parent + "' absent from table '" +
                               parent->logical_table + "'"});
          }
        }
      }
    }
  }
  for (const auto& [table, columns] : available_columns) {
    if (used_tables.count(table) == 0) {
      out.push_back({Diagnostic::Severity::Warning, "(mapping)",
                     "table '" + table + "' is not used by any triples map"});
    }
  }
  return out;
}

}  // namespace fairkg::r2rml
