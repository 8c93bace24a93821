#include <set>

#include "fairkg/error.hpp"
#include "fairkg/etl/table.hpp"
#include "util/utf8.hpp"

namespace fairkg::etl {

const Cell& Row::at(std::string_view column) const {
  for (std::size_t i = 0; i < columns_->size(); ++i) {
    if ((*columns_)[i] == column) return cells_[i];
  }
  throw Error(ErrorCode::MissingColumn, "column '" + std::string(column) + "' not in row");
}

TableSource::TableSource(std::string name, std::vector<std::string> columns)
    : name_(std::move(name)), columns_(std::move(columns)) {
  std::set<std::string_view> seen;
  for (const auto& c : columns_) {
    if (!seen.insert(c).second) {
      throw Error(ErrorCode::DuplicateHeader, "duplicate column '" + c + "'", 1);
    }
  }
}

std::optional<std::size_t> TableSource::column_index(std::string_view column) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i] == column) return i;
  return std::nullopt;
}

void TableSource::add_row(std::vector<Cell> cells) {
  if (cells.size() != columns_.size()) {
    throw Error(ErrorCode::RaggedRow, "row " + std::to_string(rows_.size() + 1) + " has " +
                                          std::to_string(cells.size()) + " cells, expected " +
                                          std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(cells));
}

namespace {

struct Record {
  std::vector<Cell> fields;
  std::size_t line = 0;
};

class CsvReader {
 public:
  explicit CsvReader(std::string_view text) : text_(util::strip_bom(text)) {}

  bool next(Record& record) {
    if (pos_ >= text_.size()) return false;
    record.fields.clear();
    record.line = line_;
    while (true) {
      record.fields.push_back(field());
      if (pos_ >= text_.size()) return true;
      const char c = text_[pos_];
      if (c == ',') {
        ++pos_;
        continue;
      }
      if (c == '\r' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\n') ++pos_;
      ++pos_;
      ++line_;
      return true;
    }
  }

 private:
  Cell field() {
    if (pos_ < text_.size() && text_[pos_] == '"') {
      const std::size_t open_line = line_;
      ++pos_;
      std::string value;
      while (true) {
        if (pos_ >= text_.size()) {
          throw Error(ErrorCode::SyntaxError, "unterminated quoted field", open_line);
        }
        const char c = text_[pos_++];
        if (c == '"') {
          if (pos_ < text_.size() && text_[pos_] == '"') {
            value += '"';
            ++pos_;
            continue;
          }
          break;
        }
        if (c == '\n') ++line_;
        value += c;
      }
      if (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '\n' && text_[pos_] != '\r') {
        throw Error(ErrorCode::SyntaxError, "unexpected character after closing quote", line_);
      }
      return value;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '\n' &&
           !(text_[pos_] == '\r' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\n')) {
      if (text_[pos_] == '"') {
        throw Error(ErrorCode::SyntaxError, "quote inside unquoted field", line_);
      }
      ++pos_;
    }
    if (pos_ == start) return std::nullopt;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

bool needs_quotes(const std::string& value) {
  return value.empty() || value.find_first_of(",\"\r\n") != std::string::npos;
}

void write_field(std::string& out, const Cell& cell) {
  if (!cell) return;
  if (!needs_quotes(*cell)) {
    out += *cell;
    return;
  }
  out += '"';
  for (char c : *cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

}  // namespace

TableSource load_csv(std::string_view text, std::string name) {
  CsvReader reader(text);
  Record header;
  if (!reader.next(header)) return TableSource(std::move(name), {});
  std::vector<std::string> columns;
  for (auto& f : header.fields) {
    if (!f) throw Error(ErrorCode::SyntaxError, "empty column name in header", 1);
    columns.push_back(std::move(*f));
  }
  TableSource table(std::move(name), std::move(columns));
  Record record;
  std::size_t row_number = 0;
  while (reader.next(record)) {
    ++row_number;
    if (record.fields.size() != table.columns().size()) {
      throw Error(ErrorCode::RaggedRow,
                  "row " + std::to_string(row_number) + " has " + std::to_string(record.fields.size()) +
                      " cells, expected " + std::to_string(table.columns().size()),
                  record.line);
    }
    table.add_row(std::move(record.fields));
    record.fields = {};
  }
  return table;
}

std::string write_csv(const TableSource& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns().size(); ++i) {
    if (i) out += ',';
    write_field(out, table.columns()[i]);
  }
  out += '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      write_field(out, row[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace fairkg::etl
