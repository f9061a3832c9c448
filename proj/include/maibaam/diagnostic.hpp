#ifndef MAIBAAM_DIAGNOSTIC_HPP
#define MAIBAAM_DIAGNOSTIC_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace maibaam {

// Ordered by increasing gravity so that `a >= b` reads as "at least as bad".
enum class Severity { review = 0, warning = 1, error = 2 };

inline std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::review: return "review";
    case Severity::warning: return "warning";
    case Severity::error: return "error";
  }
  return "error";
}

inline std::optional<Severity> parse_severity(std::string_view s) {
  if (s == "review") return Severity::review;
  if (s == "warning") return Severity::warning;
  if (s == "error") return Severity::error;
  return std::nullopt;
}

struct Diagnostic {
  std::string rule_id;
  Severity severity = Severity::error;
  std::string file;
  int line = 0;
  std::string sentence_id;
  std::optional<int> token_id;
  std::string message;
  std::optional<std::string> guideline_ref;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Total order used for every report: file, line, token, rule, then the
/// remaining fields so that equal keys never depend on traversal order.
/// Sentence-level findings (no token) sort before token-level ones.
inline bool diagnostic_less(const Diagnostic& a, const Diagnostic& b) {
  using Key = std::tuple<const std::string&, int, bool, int, const std::string&,
                         const std::string&, int, const std::string&>;
  auto key = [](const Diagnostic& d) {
    return Key(d.file, d.line, d.token_id.has_value(), d.token_id.value_or(0), d.rule_id,
               d.message, static_cast<int>(d.severity), d.sentence_id);
  };
  return key(a) < key(b);
}

inline void sort_diagnostics(std::vector<Diagnostic>& ds) {
  std::stable_sort(ds.begin(), ds.end(), diagnostic_less);
}

inline std::optional<Severity> max_severity(const std::vector<Diagnostic>& ds) {
  std::optional<Severity> out;
  for (const auto& d : ds)
    if (!out || d.severity > *out) out = d.severity;
  return out;
}

}  // namespace maibaam

#endif  // MAIBAAM_DIAGNOSTIC_HPP
