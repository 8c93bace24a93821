#include "fairkg/error.hpp"

namespace fairkg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RelativeIri: return "RelativeIri";
    case ErrorCode::IllegalCharacter: return "IllegalCharacter";
    case ErrorCode::UnknownPrefix: return "UnknownPrefix";
    case ErrorCode::MalformedCurie: return "MalformedCurie";
    case ErrorCode::InvalidTerm: return "InvalidTerm";
    case ErrorCode::LexicalFormMismatch: return "LexicalFormMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::MissingSubjectMap: return "MissingSubjectMap";
    case ErrorCode::MissingLogicalTable: return "MissingLogicalTable";
    case ErrorCode::LiteralSubject: return "LiteralSubject";
    case ErrorCode::DanglingParentMap: return "DanglingParentMap";
    case ErrorCode::ConflictingSource: return "ConflictingSource";
    case ErrorCode::UnsupportedFeature: return "UnsupportedFeature";
    case ErrorCode::InvalidMapping: return "InvalidMapping";
    case ErrorCode::UnbalancedBraces: return "UnbalancedBraces";
    case ErrorCode::EmptyColumnName: return "EmptyColumnName";
    case ErrorCode::NoColumnReference: return "NoColumnReference";
    case ErrorCode::RaggedRow: return "RaggedRow";
    case ErrorCode::DuplicateHeader: return "DuplicateHeader";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::MissingTable: return "MissingTable";
    case ErrorCode::InvalidIri: return "InvalidIri";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::UnboundProjection: return "UnboundProjection";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::InvalidDataFile: return "InvalidDataFile";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& message,
                           std::optional<std::size_t> line,
                           std::optional<std::size_t> column) {
  std::string out(to_string(code));
  if (line) {
    out += " at line " + std::to_string(*line);
    if (column) out += ", column " + std::to_string(*column);
  } else if (column) {
    out += " at offset " + std::to_string(*column);
  }
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> line,
             std::optional<std::size_t> column)
    : std::runtime_error(format_message(code, message, line, column)),
      code_(code),
      message_(message),
      line_(line),
      column_(column) {}

}  // namespace fairkg
