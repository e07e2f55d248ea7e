#pragma once

// Line-oriented "key: value" parsing shared by the text formats.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace wordprob::detail {

  struct KeyedLine {
    std::size_t              number;  // 1-based
    std::string              key;
    std::string              value;   // trimmed
  };

  inline std::string_view trim(std::string_view s) {
    auto const ws = " \t\r\n";
    auto       b  = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
      return {};
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  }

  inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream       in{std::string(s)};
    std::string              tok;
    while (in >> tok) {
      out.push_back(tok);
    }
    return out;
  }

  // Skips blank lines and '#' comments. Lines without ':' get an empty key
  // and the whole line as value, for the caller to reject.
  inline std::vector<KeyedLine> keyed_lines(std::string_view text) {
    std::vector<KeyedLine> out;
    std::size_t            number = 0;
    while (!text.empty()) {
      auto             nl   = text.find('\n');
      std::string_view line = text.substr(0, nl);
      text = nl == std::string_view::npos ? std::string_view{}
                                          : text.substr(nl + 1);
      ++number;
      line = trim(line);
      if (line.empty() || line.front() == '#') {
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        out.push_back({number, "", std::string(line)});
      } else {
        out.push_back({number,
                       std::string(trim(line.substr(0, colon))),
                       std::string(trim(line.substr(colon + 1)))});
      }
    }
    return out;
  }

}  // namespace wordprob::detail
