#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fairkg::etl {

/// A CSV cell: nullopt is SQL-style NULL, distinct from the empty string.
using Cell = std::optional<std::string>;

/// Read-only view of one row, addressed by column name.
class Row {
 public:
  Row(const std::vector<std::string>& columns, std::span<const Cell> cells)
      : columns_(&columns), cells_(cells) {}

  /// Throws Error{MissingColumn}.
  const Cell& at(std::string_view column) const;
  const Cell& operator[](std::size_t index) const { return cells_[index]; }
  std::size_t size() const noexcept { return cells_.size(); }
  const std::vector<std::string>& columns() const noexcept { return *columns_; }

 private:
  const std::vector<std::string>* columns_;
  std::span<const Cell> cells_;
};

/// Flat table: unique column names, each row has exactly one cell per column.
class TableSource {
 public:
  TableSource() = default;
  /// Throws Error{DuplicateHeader}.
  TableSource(std::string name, std::vector<std::string> columns);

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<std::string>& columns() const noexcept { return columns_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  std::optional<std::size_t> column_index(std::string_view column) const;

  /// Throws Error{RaggedRow} when the cell count differs from the column count.
  void add_row(std::vector<Cell> cells);

  Row row(std::size_t index) const { return Row(columns_, rows_[index]); }
  const std::vector<Cell>& cells(std::size_t index) const { return rows_[index]; }
  std::vector<std::vector<Cell>>& mutable_rows() { return rows_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

 private:
  std::string name_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

using TableSet = std::map<std::string, TableSource, std::less<>>;

/// RFC 4180 reader. The first record is the header; unquoted empty fields are
/// NULL and `""` is the empty string. LF and CRLF line ends are accepted and a
/// UTF-8 byte-order mark is skipped. Throws Error{RaggedRow | DuplicateHeader |
/// SyntaxError}.
TableSource load_csv(std::string_view text, std::string name = {});

/// Writes RFC 4180 CSV with LF line ends. Fields are quoted only when needed
/// and empty strings are written as `""` so they read back as non-NULL.
std::string write_csv(const TableSource& table);

}  // namespace fairkg::etl
