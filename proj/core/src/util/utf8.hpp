#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace fairkg::util {

// Decodes one scalar value starting at `pos` and advances past it. Returns
// nullopt (advancing one byte) on malformed, overlong or surrogate sequences.
std::optional<char32_t> decode_utf8(std::string_view text, std::size_t& pos);

void append_utf8(std::string& out, char32_t cp);

bool is_valid_utf8(std::string_view text);

// 1-based line holding the first malformed sequence.
std::size_t first_invalid_utf8_line(std::string_view text);

// Drops a leading UTF-8 byte-order mark, if present.
std::string_view strip_bom(std::string_view text);

}  // namespace fairkg::util
