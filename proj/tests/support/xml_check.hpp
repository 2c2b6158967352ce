#pragma once

// Minimal XML well-formedness checker for generated SVG: balanced tags,
// quoted attributes, no raw '<' in text or attribute values, and only
// known or numeric entity references.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace xmlcheck {

inline bool valid_entity(std::string_view s, std::size_t& i) {
  // s[i] == '&'
  const auto end = s.find(';', i);
  if (end == std::string_view::npos) return false;
  const auto name = s.substr(i + 1, end - i - 1);
  i = end;
  if (name == "amp" || name == "lt" || name == "gt" || name == "quot" || name == "apos") return true;
  if (name.size() > 1 && name[0] == '#') {
    for (std::size_t k = 1; k < name.size(); ++k)
      if (!std::isalnum(static_cast<unsigned char>(name[k]))) return false;
    return true;
  }
  return false;
}

inline bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' || c == '.';
}

inline bool well_formed(std::string_view s) {
  std::size_t i = 0;
  if (s.substr(0, 5) == "<?xml") {
    i = s.find("?>");
    if (i == std::string_view::npos) return false;
    i += 2;
  }
  std::vector<std::string> open;
  bool seen_root = false;
  while (i < s.size()) {
    if (s[i] == '<') {
      const bool closing = i + 1 < s.size() && s[i + 1] == '/';
      std::size_t j = i + (closing ? 2 : 1);
      std::size_t start = j;
      while (j < s.size() && name_char(s[j])) ++j;
      if (j == start) return false;
      std::string name(s.substr(start, j - start));
      if (closing) {
        while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j >= s.size() || s[j] != '>' || open.empty() || open.back() != name) return false;
        open.pop_back();
        i = j + 1;
        continue;
      }
      if (open.empty() && seen_root) return false;
      seen_root = true;
      // attributes
      while (true) {
        while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j >= s.size()) return false;
        if (s[j] == '>') {
          open.push_back(name);
          i = j + 1;
          break;
        }
        if (s[j] == '/' && j + 1 < s.size() && s[j + 1] == '>') {
          i = j + 2;
          break;
        }
        std::size_t a = j;
        while (j < s.size() && name_char(s[j])) ++j;
        if (j == a || j >= s.size() || s[j] != '=') return false;
        ++j;
        if (j >= s.size() || (s[j] != '"' && s[j] != '\'')) return false;
        const char quote = s[j++];
        while (j < s.size() && s[j] != quote) {
          if (s[j] == '<') return false;
          if (s[j] == '&' && !valid_entity(s, j)) return false;
          ++j;
        }
        if (j >= s.size()) return false;
        ++j;
      }
    } else {
      if (s[i] == '&' && !valid_entity(s, i)) return false;
      if (open.empty() && !std::isspace(static_cast<unsigned char>(s[i]))) return false;
      ++i;
    }
  }
  return open.empty() && seen_root;
}

inline std::size_t count(std::string_view haystack, std::string_view needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string_view::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

} // namespace xmlcheck
