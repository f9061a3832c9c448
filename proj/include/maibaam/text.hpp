#ifndef MAIBAAM_TEXT_HPP
#define MAIBAAM_TEXT_HPP

// Small string helpers shared by the parser, tokenizer and rules.

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace maibaam::text {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

/// Collapses runs of whitespace to one space and drops leading/trailing
/// whitespace.
inline std::string collapse_whitespace(std::string_view s) {
  std::string out;
  bool pending = false;
  for (char c : s) {
    if (is_space(c)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out += ' ';
    pending = false;
    out += c;
  }
  return out;
}

/// Number of bytes of the UTF-8 sequence starting with `lead`.
inline std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

inline std::vector<std::string_view> code_points(std::string_view s) {
  std::vector<std::string_view> out;
  for (std::size_t i = 0; i < s.size();) {
    auto n = std::min(utf8_length(static_cast<unsigned char>(s[i])), s.size() - i);
    out.push_back(s.substr(i, n));
    i += n;
  }
  return out;
}

/// Lowercases ASCII and the Latin-1 supplement capitals (Ä, Ö, Ü, Å, ...).
/// Byte lengths are unchanged, so offsets into the folded string are valid
/// offsets into the original.
inline std::string lowercase(std::string_view s) {
  std::string out(s);
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto c = static_cast<unsigned char>(out[i]);
    if (c >= 'A' && c <= 'Z') {
      out[i] = static_cast<char>(c + 32);
    } else if (c == 0xC3 && i + 1 < out.size()) {
      auto d = static_cast<unsigned char>(out[i + 1]);
      if (d >= 0x80 && d <= 0x9E && d != 0x97) out[i + 1] = static_cast<char>(d + 0x20);
      ++i;
    }
  }
  return out;
}

/// A string rewritten for matching with a map back to byte offsets of the
/// original. `to_original` has `folded.size() + 1` entries.
struct FoldedString {
  std::string folded;
  std::vector<std::size_t> to_original;

  std::string_view original_slice(std::string_view original, std::size_t begin,
                                  std::size_t end) const {
    return original.substr(to_original[begin], to_original[end] - to_original[begin]);
  }
};

/// The apostrophe class: ' ’ ´ ` all fold to '.
inline bool is_apostrophe(std::string_view cp) {
  return cp == "'" || cp == "\xE2\x80\x99" || cp == "\xC2\xB4" || cp == "`";
}

inline FoldedString fold(std::string_view s, bool lower) {
  FoldedString f;
  std::size_t offset = 0;
  for (auto cp : code_points(s)) {
    std::string piece = is_apostrophe(cp) ? std::string("'") : std::string(cp);
    if (lower) piece = lowercase(piece);
    for (std::size_t k = 0; k < piece.size(); ++k) f.to_original.push_back(offset);
    f.folded += piece;
    offset += cp.size();
  }
  f.to_original.push_back(offset);
  return f;
}

inline std::string fold_key(std::string_view s, bool lower) { return fold(s, lower).folded; }

}  // namespace maibaam::text

#endif  // MAIBAAM_TEXT_HPP
