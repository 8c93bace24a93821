#include <algorithm>
#include <array>
#include <limits>
#include <unordered_map>

#include "fairkg/error.hpp"
#include "fairkg/query/query.hpp"

namespace fairkg::query {

namespace {

constexpr rdf::TermId kUnbound = std::numeric_limits<rdf::TermId>::max();

// A pattern position after resolution against the graph dictionary.
struct Slot {
  std::optional<std::size_t> variable;
  std::optional<rdf::TermId> constant;
};

using Binding = std::vector<rdf::TermId>;

void check(const Query& query, const std::vector<std::string>& vars) {
  for (const auto& f : query.filters) {
    if (!is_comparable(f.op, f.operand)) {
      throw Error(ErrorCode::TypeMismatch, "operator " + std::string(to_string(f.op)) +
                                               " needs a numeric or xsd:date operand");
    }
  }
  for (const auto& name : query.projection) {
    if (Variable{name}.hidden() || std::find(vars.begin(), vars.end(), name) == vars.end()) {
      throw Error(ErrorCode::UnboundProjection, "?" + name + " does not appear in any triple pattern");
    }
  }
}

class Evaluator {
 public:
  Evaluator(const rdf::Graph& graph, const Query& query)
      : graph_(graph), query_(query), vars_(query.variables()) {
    check(query_, vars_);
  }

  /// Full bindings satisfying every pattern and filter.
  std::vector<Binding> solve() {
    std::vector<Binding> rows{Binding(vars_.size(), kUnbound)};
    for (const auto& pattern : query_.patterns) {
      const std::array<Slot, 3> slots{resolve(pattern.subject), resolve(pattern.predicate),
                                      resolve(pattern.object)};
      for (const auto& s : slots) {
        if (!s.variable && !s.constant) return {};  // constant absent from the graph
      }
      std::vector<Binding> next;
      for (const auto& row : rows) extend(row, slots, next);
      rows = std::move(next);
      if (rows.empty()) return rows;
    }
    std::vector<Binding> kept;
    for (auto& row : rows)
      if (passes(row)) kept.push_back(std::move(row));
    return kept;
  }

  const std::vector<std::string>& variables() const { return vars_; }

  std::size_t index_of(const std::string& name) const {
    return static_cast<std::size_t>(std::find(vars_.begin(), vars_.end(), name) - vars_.begin());
  }

 private:
  Slot resolve(const PatternTerm& term) const {
    if (const auto* v = std::get_if<Variable>(&term)) return {index_of(v->name), std::nullopt};
    return {std::nullopt, graph_.find(std::get<rdf::Term>(term))};
  }

  static std::optional<rdf::TermId> bound(const Slot& slot, const Binding& row) {
    if (slot.constant) return slot.constant;
    const auto id = row[*slot.variable];
    if (id == kUnbound) return std::nullopt;
    return id;
  }

  void extend(const Binding& row, const std::array<Slot, 3>& slots, std::vector<Binding>& out) const {
    graph_.for_each_match(bound(slots[0], row), bound(slots[1], row), bound(slots[2], row),
                          [&](const rdf::TripleIds& t) {
                            Binding next = row;
                            const rdf::TermId ids[3] = {t.s, t.p, t.o};
                            for (int i = 0; i < 3; ++i) {
                              if (!slots[i].variable) continue;
                              auto& cell = next[*slots[i].variable];
                              // A variable repeated within one pattern must bind consistently.
                              if (cell != kUnbound && cell != ids[i]) return;
                              cell = ids[i];
                            }
                            out.push_back(std::move(next));
                          });
  }

  bool passes(const Binding& row) {
    for (std::size_t i = 0; i < query_.filters.size(); ++i) {
      const auto& f = query_.filters[i];
      const auto at = index_of(f.variable);
      // A filter over a variable no pattern binds is an error, hence false.
      if (at == vars_.size()) return false;
      const auto id = row[at];
      auto& cache = filter_cache_[i];
      auto it = cache.find(id);
      if (it == cache.end()) it = cache.emplace(id, filter_accepts(f, graph_.term(id))).first;
      if (!it->second) return false;
    }
    return true;
  }

  const rdf::Graph& graph_;
  const Query& query_;
  std::vector<std::string> vars_;
  std::unordered_map<std::size_t, std::unordered_map<rdf::TermId, bool>> filter_cache_;
};

}  // namespace

Solution execute(const rdf::Graph& graph, const Query& query) {
  Evaluator evaluator(graph, query);
  const auto rows = evaluator.solve();

  Solution solution;
  if (query.is_count()) {
    solution.variables = {*query.count_alias};
    solution.rows.push_back(
        {rdf::Literal(std::to_string(rows.size()), rdf::Iri(rdf::ns::kXsdInteger))});
    return solution;
  }

  solution.variables = query.projection;
  std::vector<std::size_t> columns;
  for (const auto& name : query.projection) columns.push_back(evaluator.index_of(name));

  std::vector<std::vector<rdf::TermId>> projected;
  projected.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<rdf::TermId> p;
    p.reserve(columns.size());
    for (const auto c : columns) p.push_back(row[c]);
    projected.push_back(std::move(p));
  }

  // Canonical order: compare rows column by column on N-Triples text.
  std::unordered_map<rdf::TermId, std::string> text;
  const auto render = [&](rdf::TermId id) -> const std::string& {
    auto it = text.find(id);
    if (it == text.end()) it = text.emplace(id, graph.term(id).to_ntriples()).first;
    return it->second;
  };
  for (const auto& p : projected)
    for (const auto id : p) render(id);
  std::sort(projected.begin(), projected.end(), [&](const auto& a, const auto& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      return text.at(a[i]) < text.at(b[i]);
    }
    return false;
  });
  projected.erase(std::unique(projected.begin(), projected.end()), projected.end());

  solution.rows.reserve(projected.size());
  for (const auto& p : projected) {
    std::vector<rdf::Term> row;
    row.reserve(p.size());
    for (const auto id : p) row.push_back(graph.term(id));
    solution.rows.push_back(std::move(row));
  }
  return solution;
}

Solution merge_and_query(const std::vector<const rdf::Graph*>& graphs, const Query& query) {
  return execute(rdf::merge_graphs(graphs), query);
}

}  // namespace fairkg::query
