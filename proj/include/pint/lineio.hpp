#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pint::lineio {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// Whitespace-separated tokens; quoted spans (key="a b") stay one token.
inline std::optional<std::vector<std::string>> tokenize(std::string_view line,
                                                        std::string& err) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    std::string tok;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
      if (line[i] == '"') {
        size_t close = line.find('"', i + 1);
        if (close == std::string_view::npos) {
          err = "unterminated quote";
          return std::nullopt;
        }
        tok.append(line, i, close - i + 1);
        i = close + 1;
      } else {
        tok.push_back(line[i++]);
      }
    }
    out.push_back(std::move(tok));
  }
  return out;
}

// key=value split; surrounding quotes on the value are stripped.
inline bool split_field(const std::string& tok, std::string& key,
                        std::string& value) {
  auto eq = tok.find('=');
  if (eq == std::string::npos) return false;
  key = tok.substr(0, eq);
  value = tok.substr(eq + 1);
  if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
    value = value.substr(1, value.size() - 2);
  return true;
}

// Applies f(line_no, trimmed_line) to every non-comment, non-blank line.
template <class F>
void for_each_line(std::string_view text, F&& f) {
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    f(line_no, line);
  }
}

}  // namespace pint::lineio
