#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fairkg/error.hpp"
#include "fairkg/etl/convert.hpp"
#include "fairkg/etl/table.hpp"
#include "fairkg/model/shapes.hpp"
#include "fairkg/model/stats.hpp"
#include "fairkg/model/synthetic.hpp"
#include "fairkg/model/vocabulary.hpp"
#include "fairkg/query/query.hpp"
#include "fairkg/r2rml/mapping.hpp"
#include "fairkg/rdf/ntriples.hpp"
#include "fairkg/rdf/turtle.hpp"

namespace fairkg::cli {

namespace fs = std::filesystem;

namespace {

// Raised for bad command input; the message is printed and the exit code is 2.
struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(data.data(), static_cast<std::streamsize>(data.size()))) {
    throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  }
}

/// Prefixed error text from a library exception, with the file it came from.
std::string describe(const std::string& path, const Error& e) {
  return path.empty() ? e.what() : path + ": " + e.what();
}

rdf::Graph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  try {
    if (fs::path(path).extension() == ".ttl") return rdf::parse_turtle(text).graph;
    return rdf::parse_ntriples(text);
  } catch (const Error& e) {
    throw UsageError{describe(path, e)};
  }
}

rdf::PrefixMap query_prefixes() {
  auto prefixes = rdf::PrefixMap::standard();
  prefixes.merge(model::builtin_vocabulary().prefixes());
  return prefixes;
}

struct ConvertOptions {
  std::string mapping;
  std::string base = "urn:fairkg:mapping";
  std::vector<std::string> inputs;
  std::vector<std::string> tables;
  std::string output;
  std::string log;
  bool strict = false;
};

int cmd_convert(const ConvertOptions& opt, std::ostream& out, std::ostream& err) {
  r2rml::MappingDocument mapping;
  {
    const std::string name = opt.mapping.empty() ? "(bundled mapping)" : opt.mapping;
    const std::string text =
        opt.mapping.empty() ? std::string(model::builtin_mapping_text()) : read_file(opt.mapping);
    try {
      mapping = r2rml::load_mapping(text, name, rdf::Iri(opt.base));
    } catch (const Error& e) {
      throw UsageError{describe(name, e)};
    }
  }

  etl::TableSet tables;
  const auto add_table = [&](std::string name, const std::string& path) {
    if (tables.count(name) != 0) throw UsageError{"table '" + name + "' given twice"};
    try {
      tables.emplace(name, etl::load_csv(read_file(path), name));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Io) throw;
      throw UsageError{describe(path, e)};
    }
  };
  for (const auto& spec : opt.tables) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw UsageError{"--table expects NAME=path, got '" + spec + "'"};
    }
    add_table(spec.substr(0, eq), spec.substr(eq + 1));
  }
  for (const auto& path : opt.inputs) add_table(fs::path(path).stem().string(), path);

  auto diagnostics = mapping.warnings;
  const auto checked = r2rml::validate_mapping(mapping, etl::column_catalog(tables));
  diagnostics.insert(diagnostics.end(), checked.begin(), checked.end());
  for (const auto& d : diagnostics) err << d.to_string() << '\n';
  if (r2rml::has_errors(diagnostics)) return kDataError;

  const auto result = etl::convert(mapping, tables);
  const std::string nt = rdf::serialize_ntriples(result.graph);
  if (opt.output.empty()) {
    out << nt;
  } else {
    write_file(opt.output, nt);
  }
  if (!opt.log.empty()) write_file(opt.log, result.report.skipped_log());
  err << result.report.summary();

  if (opt.strict && !result.report.skipped_terms.empty()) {
    err << "error: " << result.report.skipped_terms.size() << " skipped term(s) in strict mode\n";
    return kDataError;
  }
  return kSuccess;
}

int cmd_validate(const std::string& graph_path, const std::string& shapes_path,
                 std::ostream& out) {
  const auto graph = load_graph(graph_path);
  std::vector<model::Shape> shapes;
  if (shapes_path.empty()) {
    shapes = model::builtin_shapes();
  } else {
    try {
      shapes = model::load_shapes(read_file(shapes_path), query_prefixes());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Io) throw;
      throw UsageError{describe(shapes_path, e)};
    }
  }
  const auto report = model::validate_graph(graph, shapes);
  out << report.to_string();
  return report.conforms() ? kSuccess : kDataError;
}

int cmd_query(const std::vector<std::string>& graph_paths, const std::string& inline_query,
              const std::string& query_file, std::ostream& out) {
  if (inline_query.empty() == query_file.empty()) {
    throw UsageError{"give exactly one of --query or --query-file"};
  }
  const std::string text = query_file.empty() ? inline_query : read_file(query_file);
  query::Query q;
  try {
    q = query::parse_query(text, query_prefixes());
  } catch (const Error& e) {
    throw UsageError{describe(query_file, e)};
  }
  std::vector<rdf::Graph> graphs;
  for (const auto& path : graph_paths) graphs.push_back(load_graph(path));
  std::vector<const rdf::Graph*> pointers;
  for (const auto& g : graphs) pointers.push_back(&g);
  out << query::merge_and_query(pointers, q).to_tsv();
  return kSuccess;
}

int cmd_synth(std::size_t n, std::uint64_t seed, const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create directory '" + dir + "': " + ec.message());
  for (const auto& [name, table] : model::generate_synthetic(n, seed)) {
    write_file((fs::path(dir) / (name + ".csv")).string(), etl::write_csv(table));
  }
  return kSuccess;
}

int cmd_stats(const std::vector<std::string>& graph_paths, std::ostream& out) {
  rdf::Graph merged;
  for (const auto& path : graph_paths) merged.insert_all(load_graph(path));
  out << model::compute_stats(merged, model::builtin_vocabulary()).to_string();
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"FAIR clinical-registry pipeline: CSV to RDF via R2RML, shape validation, queries",
               "fairkg"};
  app.set_version_flag("--version", "fairkg 0.1.0");
  app.require_subcommand(1);

  ConvertOptions convert;
  auto* convert_cmd = app.add_subcommand("convert", "Convert CSV tables to canonical N-Triples");
  convert_cmd->add_option("-m,--mapping", convert.mapping,
                          "R2RML mapping in Turtle (default: bundled registry mapping)");
  convert_cmd->add_option("--base", convert.base, "Base IRI for relative IRIs in the mapping")
      ->capture_default_str();
  convert_cmd->add_option("--table", convert.tables,
                          "Table as NAME=path; overrides the file-stem name")
      ->allow_extra_args(false);
  convert_cmd->add_option("inputs", convert.inputs, "CSV files, named by file stem");
  convert_cmd->add_option("-o,--output", convert.output, "Output file (default: stdout)");
  convert_cmd->add_option("--log", convert.log, "Write the skipped-term log (TSV) here");
  convert_cmd->add_flag("--strict", convert.strict, "Exit 1 when any term was skipped");

  std::string graph_path;
  std::string shapes_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a graph against shape constraints");
  validate_cmd->add_option("graph", graph_path, "N-Triples (or .ttl) graph")->required();
  validate_cmd->add_option("--shapes", shapes_path, "Shapes file (default: bundled shapes)");

  std::vector<std::string> query_graphs;
  std::string inline_query;
  std::string query_file;
  auto* query_cmd = app.add_subcommand("query", "Run a SELECT query over the union of graphs");
  query_cmd->add_option("graphs", query_graphs, "Graph files")->required();
  query_cmd->add_option("-q,--query", inline_query, "Query text");
  query_cmd->add_option("-f,--query-file", query_file, "File holding the query");

  std::size_t synth_n = 0;
  std::uint64_t synth_seed = 1;
  std::string synth_dir;
  auto* synth_cmd = app.add_subcommand("synth", "Write synthetic PATIENT.csv and TREATMENT.csv");
  synth_cmd->add_option("-n,--n", synth_n, "Number of patients")->required();
  synth_cmd->add_option("--seed", synth_seed, "Random seed")->capture_default_str();
  synth_cmd->add_option("-o,--out", synth_dir, "Output directory")->required();

  std::vector<std::string> stats_graphs;
  auto* stats_cmd = app.add_subcommand("stats", "Print triple count, class histogram and category edges");
  stats_cmd->add_option("graphs", stats_graphs, "Graph files")->required();

  std::vector<const char*> argv{"fairkg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*convert_cmd) return cmd_convert(convert, out, err);
    if (*validate_cmd) return cmd_validate(graph_path, shapes_path, out);
    if (*query_cmd) return cmd_query(query_graphs, inline_query, query_file, out);
    if (*synth_cmd) return cmd_synth(synth_n, synth_seed, synth_dir);
    if (*stats_cmd) return cmd_stats(stats_graphs, out);
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::Io ? kUsageError : kDataError;
  }
  return kUsageError;
}

}  // namespace fairkg::cli
