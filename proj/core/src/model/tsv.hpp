#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fairkg::model::detail {

struct TsvLine {
  std::size_t number;
  std::vector<std::string> fields;
};

/// Non-empty, non-comment lines split on tabs. CR before LF is dropped.
inline std::vector<TsvLine> tsv_lines(std::string_view text) {
  std::vector<TsvLine> out;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    TsvLine parsed{number, {}};
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      parsed.fields.emplace_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    out.push_back(std::move(parsed));
  }
  return out;
}

}  // namespace fairkg::model::detail
