#include "fairkg/etl/convert.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "util/utf8.hpp"

namespace fairkg::etl {

using r2rml::TermMap;
using r2rml::TermType;
using r2rml::TriplesMap;
using rdf::Term;

namespace {

constexpr char kHex[] = "0123456789ABCDEF";

bool is_unreserved_ascii(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' ||
         c == '.' || c == '_' || c == '~';
}

bool is_ucschar(char32_t cp) {
  return (cp >= 0xA0 && cp <= 0xD7FF) || (cp >= 0xF900 && cp <= 0xFDCF) ||
         (cp >= 0xFDF0 && cp <= 0xFFEF) ||
         (cp >= 0x10000 && cp <= 0xEFFFD && (cp & 0xFFFF) <= 0xFFFD && !(cp >= 0xE0000 && cp < 0xE1000));
}

void percent_encode(std::string& out, std::string_view bytes) {
  for (char c : bytes) {
    const auto u = static_cast<unsigned char>(c);
    out += '%';
    out += kHex[u >> 4];
    out += kHex[u & 0xF];
  }
}

std::string blank_label(std::string_view value) {
  std::string label = "v";
  for (char c : value) {
    const auto u = static_cast<unsigned char>(c);
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
      label += c;
    } else {
      label += '_';
      label += kHex[u >> 4];
      label += kHex[u & 0xF];
    }
  }
  return label;
}

std::string one_line(std::string text) {
  std::replace_if(text.begin(), text.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return text;
}

/// A term map with its column references resolved to positions in one table.
struct CompiledTermMap {
  struct Piece {
    bool is_column = false;
    std::string text;
    std::size_t index = 0;
  };

  const TermMap* map = nullptr;
  std::optional<Term> constant;
  std::vector<Piece> pieces;
  std::optional<rdf::Iri> literal_datatype;
};

CompiledTermMap compile(const TermMap& map, const std::vector<std::string>& columns,
                        const std::string& table_name) {
  CompiledTermMap out;
  out.map = &map;
  const auto index_of = [&](const std::string& column) {
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == column) return i;
    throw Error(ErrorCode::MissingColumn,
                "column '" + column + "' not in table '" + table_name + "'");
  };
  if (const auto* constant = std::get_if<Term>(&map.source)) {
    out.constant = *constant;
  } else if (const auto* column = std::get_if<r2rml::ColumnRef>(&map.source)) {
    out.pieces.push_back({true, column->name, index_of(column->name)});
  } else {
    for (const auto& seg : std::get<r2rml::Template>(map.source).segments) {
      out.pieces.push_back({seg.is_column, seg.text, seg.is_column ? index_of(seg.text) : 0});
    }
  }
  if (map.term_type == TermType::Literal && !map.language) {
    out.literal_datatype = map.datatype ? *map.datatype : rdf::Iri(rdf::ns::kXsdString);
  }
  return out;
}

struct Outcome {
  std::optional<Term> term;
  bool null_value = false;
  std::optional<ErrorCode> error;
  std::string column;
  std::string message;
};

Outcome generate(const CompiledTermMap& tm, std::span<const Cell> cells) {
  Outcome out;
  if (tm.constant) {
    out.term = *tm.constant;
    return out;
  }
  const TermMap& map = *tm.map;
  const bool is_column = std::holds_alternative<r2rml::ColumnRef>(map.source);
  std::string value;
  for (const auto& piece : tm.pieces) {
    if (!piece.is_column) {
      value += piece.text;
      continue;
    }
    const Cell& cell = cells[piece.index];
    if (!cell) {
      out.null_value = true;
      out.column = piece.text;
      out.message = "null value";
      return out;
    }
    if (!out.column.empty()) out.column += ',';
    out.column += piece.text;
    if (!is_column && map.term_type == TermType::Iri) {
      value += iri_safe(*cell);
    } else {
      value += *cell;
    }
  }
  switch (map.term_type) {
    case TermType::Iri:
      if (const auto problem = rdf::check_iri(value)) {
        out.error = ErrorCode::InvalidIri;
        out.message = std::string("InvalidIri: '") + value + "' (" +
                      std::string(to_string(problem->code)) + " at " +
                      std::to_string(problem->position) + ")";
        return out;
      }
      out.term = rdf::Iri(value);
      return out;
    case TermType::BlankNode:
      out.term = rdf::BlankNode(blank_label(value));
      return out;
    case TermType::Literal:
      if (map.language) {
        out.term = rdf::Literal::with_language(std::move(value), *map.language);
        return out;
      }
      if (!rdf::is_valid_lexical(value, tm.literal_datatype->str())) {
        out.error = ErrorCode::LexicalFormMismatch;
        out.message = "LexicalFormMismatch: '" + value + "' is not a valid <" +
                      tm.literal_datatype->str() + ">";
        return out;
      }
      out.term = rdf::Literal(std::move(value), *tm.literal_datatype);
      return out;
  }
  return out;
}

const TableSource& table_for(const TriplesMap& map, const TableSet& tables) {
  const auto it = tables.find(map.logical_table);
  if (it == tables.end()) {
    throw Error(ErrorCode::MissingTable,
                map.name + ": table '" + map.logical_table + "' was not provided");
  }
  return it->second;
}

/// Shared state for running triples maps: compiled parent subject maps and
/// join indexes are built once per parent.
class Converter {
 public:
  Converter(const r2rml::MappingDocument& mapping, const TableSet& tables, rdf::Graph& graph,
            ConversionReport& report)
      : mapping_(mapping), tables_(tables), graph_(graph), report_(report) {}

  void run(const TriplesMap& map) {
    const TableSource& table = table_for(map, tables_);
    const auto& columns = table.columns();
    const CompiledTermMap subject = compile(map.subject_map, columns, table.name());

    struct CompiledPom {
      std::vector<CompiledTermMap> predicates;
      std::vector<CompiledTermMap> objects;
      std::vector<const r2rml::RefObjectMap*> refs;
    };
    std::vector<CompiledPom> poms;
    for (const auto& pom : map.predicate_object_maps) {
      CompiledPom c;
      for (const auto& p : pom.predicate_maps) c.predicates.push_back(compile(p, columns, table.name()));
      for (const auto& o : pom.object_maps) c.objects.push_back(compile(o, columns, table.name()));
      for (const auto& r : pom.ref_object_maps) c.refs.push_back(&r);
      poms.push_back(std::move(c));
    }

    const rdf::Iri type(rdf::ns::kRdfType);
    std::vector<rdf::Iri> predicates;
    std::vector<Term> objects;
    for (std::size_t r = 0; r < table.row_count(); ++r) {
      const auto& cells = table.cells(r);
      Outcome s = generate(subject, cells);
      if (!s.term) {
        skip(map, r, s, "subject: ");
        continue;
      }
      for (const auto& cls : map.subject_classes) emit(*s.term, type, Term(cls));

      for (const auto& pom : poms) {
        predicates.clear();
        objects.clear();
        for (const auto& p : pom.predicates) {
          Outcome o = generate(p, cells);
          if (o.term) {
            predicates.push_back(o.term->iri());
          } else {
            skip(map, r, o, "predicate: ");
          }
        }
        if (predicates.empty()) continue;
        for (const auto& om : pom.objects) {
          Outcome o = generate(om, cells);
          if (o.term) {
            objects.push_back(std::move(*o.term));
          } else {
            skip(map, r, o, "");
          }
        }
        for (const auto* ref : pom.refs) parent_subjects(map, table, r, *ref, objects);
        for (const auto& p : predicates)
          for (const auto& o : objects) emit(*s.term, p, o);
      }
    }
    report_.triples_emitted = graph_.size();
  }

 private:
  struct ParentState {
    const TableSource* table = nullptr;
    std::vector<std::optional<Term>> subjects;
    std::map<std::string, std::unordered_map<std::string, std::vector<std::size_t>>> join_indexes;
  };

  static bool join_key(std::span<const Cell> cells, const std::vector<std::size_t>& indexes,
                       std::string& key) {
    key.clear();
    for (auto i : indexes) {
      if (!cells[i]) return false;
      key += std::to_string(cells[i]->size());
      key += ':';
      key += *cells[i];
    }
    return true;
  }

  ParentState& parent_state(const TriplesMap& parent) {
    auto [it, inserted] = parents_.try_emplace(&parent);
    ParentState& state = it->second;
    if (inserted) {
      state.table = &table_for(parent, tables_);
      const CompiledTermMap subject = compile(parent.subject_map, state.table->columns(), state.table->name());
      state.subjects.reserve(state.table->row_count());
      for (std::size_t r = 0; r < state.table->row_count(); ++r) {
        state.subjects.push_back(generate(subject, state.table->cells(r)).term);
      }
    }
    return state;
  }

  void parent_subjects(const TriplesMap& child, const TableSource& child_table, std::size_t row,
                       const r2rml::RefObjectMap& ref, std::vector<Term>& out) {
    const TriplesMap* parent = mapping_.find(ref.parent);
    if (parent == nullptr) {
      throw Error(ErrorCode::DanglingParentMap, child.name + ": unknown parent " + ref.parent.to_ntriples());
    }
    ParentState& state = parent_state(*parent);
    if (ref.joins.empty()) {
      if (state.table == &child_table) {
        if (state.subjects[row]) out.push_back(*state.subjects[row]);
      } else {
        for (const auto& s : state.subjects)
          if (s) out.push_back(*s);
      }
      return;
    }

    std::string signature;
    std::vector<std::size_t> child_indexes;
    std::vector<std::size_t> parent_indexes;
    for (const auto& j : ref.joins) {
      signature += j.parent;
      signature += '\x1F';
      const auto ci = child_table.column_index(j.child);
      const auto pi = state.table->column_index(j.parent);
      if (!ci || !pi) {
        throw Error(ErrorCode::MissingColumn,
                    child.name + ": join columns '" + j.child + "'/'" + j.parent + "' not found");
      }
      child_indexes.push_back(*ci);
      parent_indexes.push_back(*pi);
    }
    auto [it, inserted] = state.join_indexes.try_emplace(signature);
    auto& index = it->second;
    std::string key;
    if (inserted) {
      for (std::size_t r = 0; r < state.table->row_count(); ++r) {
        if (join_key(state.table->cells(r), parent_indexes, key)) index[key].push_back(r);
      }
    }
    if (!join_key(child_table.cells(row), child_indexes, key)) return;
    const auto match = index.find(key);
    if (match == index.end()) return;
    for (auto r : match->second)
      if (state.subjects[r]) out.push_back(*state.subjects[r]);
  }

  void emit(const Term& s, const rdf::Iri& p, const Term& o) {
    if (!graph_.insert(rdf::Triple(s, p, o))) ++report_.triples_deduplicated;
  }

  void skip(const TriplesMap& map, std::size_t row, const Outcome& outcome, const std::string& prefix) {
    report_.skipped_terms.push_back({map.name, row + 1, outcome.column, prefix + outcome.message});
  }

  const r2rml::MappingDocument& mapping_;
  const TableSet& tables_;
  rdf::Graph& graph_;
  ConversionReport& report_;
  std::map<const TriplesMap*, ParentState> parents_;
};

}  // namespace

std::string iri_safe(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  std::size_t pos = 0;
  while (pos < value.size()) {
    const char c = value[pos];
    if (static_cast<unsigned char>(c) < 0x80) {
      if (is_unreserved_ascii(c)) {
        out += c;
      } else {
        percent_encode(out, value.substr(pos, 1));
      }
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    const auto cp = util::decode_utf8(value, pos);
    const auto bytes = value.substr(start, pos - start);
    if (cp && is_ucschar(*cp)) {
      out += bytes;
    } else {
      percent_encode(out, bytes);
    }
  }
  return out;
}

std::optional<std::string> expand_template(const r2rml::Template& tmpl, const Row& row,
                                           TermType kind) {
  std::string out;
  for (const auto& seg : tmpl.segments) {
    if (!seg.is_column) {
      out += seg.text;
      continue;
    }
    const Cell& cell = row.at(seg.text);
    if (!cell) return std::nullopt;
    out += kind == TermType::Iri ? iri_safe(*cell) : *cell;
  }
  return out;
}

std::optional<Term> generate_term(const TermMap& map, const Row& row) {
  const CompiledTermMap compiled = compile(map, row.columns(), "row");
  std::vector<Cell> cells;
  cells.reserve(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) cells.push_back(row[i]);
  Outcome out = generate(compiled, cells);
  if (out.error) throw Error(*out.error, out.message);
  return std::move(out.term);
}

void apply_triples_map(const TriplesMap& map, const r2rml::MappingDocument& mapping,
                       const TableSet& tables, rdf::Graph& graph, ConversionReport& report) {
  Converter(mapping, tables, graph, report).run(map);
}

r2rml::ColumnCatalog column_catalog(const TableSet& tables) {
  r2rml::ColumnCatalog catalog;
  for (const auto& [name, table] : tables) {
    catalog[name] = std::set<std::string>(table.columns().begin(), table.columns().end());
  }
  return catalog;
}

ConversionResult convert(const r2rml::MappingDocument& mapping, const TableSet& tables) {
  const auto diagnostics = r2rml::validate_mapping(mapping, column_catalog(tables));
  if (r2rml::has_errors(diagnostics)) {
    std::string message = "mapping does not fit the input tables:";
    for (const auto& d : diagnostics)
      if (d.is_error()) message += "\n  " + d.to_string();
    throw Error(ErrorCode::ValidationFailed, message);
  }
  ConversionResult result;
  Converter converter(mapping, tables, result.graph, result.report);
  std::set<std::string> used;
  for (const auto& map : mapping.triples_maps) {
    converter.run(map);
    used.insert(map.logical_table);
  }
  for (const auto& name : used) result.report.rows_read += tables.find(name)->second.row_count();
  result.report.triples_emitted = result.graph.size();
  return result;
}

std::string ConversionReport::summary() const {
  std::string out;
  out += "rows read:            " + std::to_string(rows_read) + "\n";
  out += "triples emitted:      " + std::to_string(triples_emitted) + "\n";
  out += "duplicates collapsed: " + std::to_string(triples_deduplicated) + "\n";
  out += "skipped terms:        " + std::to_string(skipped_terms.size()) + "\n";
  return out;
}

std::string ConversionReport::skipped_log() const {
  std::string out;
  for (const auto& s : skipped_terms) {
    out += one_line(s.map_name) + '\t' + std::to_string(s.row) + '\t' + one_line(s.column) + '\t' +
           one_line(s.reason) + '\n';
  }
  return out;
}

}  // namespace fairkg::etl
