#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fairkg {

enum class ErrorCode {
  // rdf
  RelativeIri,
  IllegalCharacter,
  UnknownPrefix,
  MalformedCurie,
  InvalidTerm,
  LexicalFormMismatch,
  SyntaxError,
  // r2rml
  MissingSubjectMap,
  MissingLogicalTable,
  LiteralSubject,
  DanglingParentMap,
  ConflictingSource,
  UnsupportedFeature,
  InvalidMapping,
  UnbalancedBraces,
  EmptyColumnName,
  NoColumnReference,
  // etl
  RaggedRow,
  DuplicateHeader,
  MissingColumn,
  MissingTable,
  InvalidIri,
  ValidationFailed,
  // query
  UnboundProjection,
  TypeMismatch,
  // model / io
  InvalidDataFile,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a stable error code and, for text inputs, a 1-based
/// source position.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt,
        std::optional<std::size_t> column = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }
  std::optional<std::size_t> column() const noexcept { return column_; }
  /// The message without the code and position prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> column_;
};

}  // namespace fairkg
