#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace fairkg::rdf::detail {

/// A bare word read by TextCursor::read_name: either a prefixed name
/// (`prefix:local`, with `has_colon` set) or a keyword such as `a` or `true`.
struct Name {
  std::string prefix;
  std::string local;
  bool has_colon = false;
};

/// Character cursor shared by the N-Triples, Turtle and SPARQL readers.
/// Tracks 1-based line and byte column; every failure raises SyntaxError at
/// the current position.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text);

  bool eof() const noexcept { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const noexcept {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char get();
  std::size_t offset() const noexcept { return pos_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return pos_ - line_start_ + 1; }
  std::string_view rest() const noexcept { return text_.substr(pos_); }

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(std::size_t line, std::size_t column, const std::string& message) const;

  /// Skips spaces, tabs, line breaks and `#` comments.
  void skip_ws();
  /// Skips spaces and tabs only.
  void skip_blanks();

  bool consume(char c);
  /// Consumes `word` when it matches (ASCII case-insensitive if requested) and
  /// is not followed by a name character.
  bool consume_word(std::string_view word, bool case_insensitive);
  void expect(char c);

  /// Reads `<...>` and returns the decoded content (escapes resolved, not yet
  /// validated as an IRI).
  std::string read_iriref();
  /// Reads a quoted string (`"`, `'`, or their triple-quoted long forms when
  /// `allow_long`) and returns the unescaped value.
  std::string read_string(bool allow_long);
  /// Reads `@tag` and returns the tag.
  std::string read_langtag();
  /// Reads `_:label` and returns the label.
  std::string read_blank_label();
  /// Reads `prefix:local` or a bare keyword.
  Name read_name();
  /// Reads an unsigned-or-signed numeric token; returns the lexical text.
  std::string read_number();

 private:
  void read_echar_or_uchar(std::string& out, bool allow_echar);
  void read_uchar(std::string& out, std::size_t digits);

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

bool is_name_start(char c);

}  // namespace fairkg::rdf::detail
