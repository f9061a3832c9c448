#ifndef MAIBAAM_VERSION_HPP
#define MAIBAAM_VERSION_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "maibaam/text.hpp"

namespace maibaam {

/// Annotation-guideline version used to gate rules whose behaviour changed.
///
/// Two numbering schemes are accepted: the guideline document's own
/// versions (1.0, 1.1, 1.2) and UD release numbers (2.14, 2.17, ...). Document
/// versions are mapped to the UD release they shipped with, and comparisons
/// happen on the release number.
class GuidelineVersion {
 public:
  static std::optional<GuidelineVersion> parse(std::string_view s) {
    s = text::trim(s);
    auto dot = s.find('.');
    if (dot == std::string_view::npos) return std::nullopt;
    auto a = s.substr(0, dot), b = s.substr(dot + 1);
    if (!text::is_digits(a) || !text::is_digits(b) || a.size() > 4 || b.size() > 4)
      return std::nullopt;
    GuidelineVersion v;
    v.text_ = std::string(s);
    v.major_ = std::stoi(std::string(a));
    v.minor_ = std::stoi(std::string(b));
    return v;
  }

  static GuidelineVersion current() { return *parse("2.17"); }

  const std::string& str() const { return text_; }

  /// UD release this version corresponds to, as (major, minor).
  std::pair<int, int> release() const {
    if (major_ == 1) {
      if (minor_ == 0) return {2, 14};  // 2024-03
      if (minor_ == 1) return {2, 15};  // 2024-10
      return {2, 17};                   // 2025-10
    }
    return {major_, minor_};
  }

  friend std::strong_ordering operator<=>(const GuidelineVersion& a, const GuidelineVersion& b) {
    return a.release() <=> b.release();
  }
  friend bool operator==(const GuidelineVersion& a, const GuidelineVersion& b) {
    return a.release() == b.release();
  }

 private:
  std::string text_;
  int major_ = 2;
  int minor_ = 17;
};

}  // namespace maibaam

#endif  // MAIBAAM_VERSION_HPP
