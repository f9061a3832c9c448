#ifndef MAIBAAM_METADATA_HPP
#define MAIBAAM_METADATA_HPP

#include <algorithm>
#include <map>
#include <regex>
#include <string>
#include <vector>

#include "maibaam/config.hpp"
#include "maibaam/conllu.hpp"
#include "maibaam/rules.hpp"
#include "maibaam/tree.hpp"

namespace maibaam {

namespace detail {

inline int meta_line(const Sentence& s, std::string_view key) {
  for (const auto& c : s.comments)
    if (auto kv = c.metadata(); kv && kv->first == key) return c.line;
  return s.first_line;
}

inline bool absolute_url(std::string_view v) {
  static const std::regex re(R"(^[A-Za-z][A-Za-z0-9+.\-]*://[^\s/?#]+[^\s]*$)");
  return std::regex_match(v.begin(), v.end(), re);
}

}  // namespace detail

inline std::vector<Diagnostic> validate_metadata(const Sentence& s, const MetadataPolicy& p) {
  RuleSink out(s);
  for (const auto& key : p.required_keys)
    if (!s.meta(key)) out.sentence("META.MISSING", s.first_line, "missing metadata '" + key + "'");

  if (auto genre = s.meta("genre"); genre && !p.genre_vocab.contains(*genre))
    out.sentence("META.GENRE", detail::meta_line(s, "genre"), "unknown genre '" + *genre + "'");

  if (auto dialect = s.meta("dialect_group")) {
    const auto& order = p.dialect_order;
    auto rank = [&](std::string_view v) -> int {
      auto it = std::find(order.begin(), order.end(), v);
      return it == order.end() ? -1 : static_cast<int>(it - order.begin());
    };
    int line = detail::meta_line(s, "dialect_group");
    std::string_view v = *dialect;
    if (v == "unk" || rank(v) >= 0) {
      // plain value
    } else if (v.starts_with("unk (") && v.ends_with(")")) {
      auto members = text::split(v.substr(5, v.size() - 6), '/');
      bool known = members.size() >= 2;
      bool sorted = true;
      int prev = -1;
      for (auto m : members) {
        int r = rank(m);
        if (r < 0) known = false;
        else if (r <= prev) sorted = false;
        prev = std::max(prev, r);
      }
      if (!known)
        out.sentence("META.DIALECT", line, "unknown dialect_group '" + *dialect + "'");
      else if (!sorted)
        out.sentence("META.DIALECT_ORDER", line,
                     "dialect_group '" + *dialect + "' not ordered north to south");
    } else {
      out.sentence("META.DIALECT", line, "unknown dialect_group '" + *dialect + "'");
    }
  }

  if (auto genre = s.meta("genre"); genre && p.url_genres.contains(*genre))
    if (auto src = s.meta("source"); src && !detail::absolute_url(*src))
      out.sentence("META.SOURCE", detail::meta_line(s, "source"),
                   "source of a " + *genre + " sentence is not an absolute URL");

  if (auto txt = s.meta("text"); txt && !s.tokens.empty()) {
    auto rebuilt = reconstruct_text(s);
    if (rebuilt != *txt)
      out.sentence("META.TEXT_MISMATCH", detail::meta_line(s, "text"),
                   "words spell '" + rebuilt + "'");
  }
  return std::move(out.out());
}

/// META.DUP_ID over every sentence of a run. All occurrences after the first
/// in (file, line) order are reported, so input order does not matter.
inline std::vector<Diagnostic> duplicate_sentence_ids(const std::vector<const Sentence*>& all) {
  std::map<std::string, std::vector<const Sentence*>> by_id;
  for (const auto* s : all)
    if (auto id = s->meta("sent_id"); id && !id->empty()) by_id[*id].push_back(s);
  std::vector<Diagnostic> out;
  for (auto& [id, list] : by_id) {
    if (list.size() < 2) continue;
    auto pos = [](const Sentence* s) {
      return std::pair<const std::string&, int>(s->file, detail::meta_line(*s, "sent_id"));
    };
    std::sort(list.begin(), list.end(), [&](auto a, auto b) { return pos(a) < pos(b); });
    const auto* first = list.front();
    for (std::size_t i = 1; i < list.size(); ++i) {
      RuleSink sink(*list[i]);
      sink.sentence("META.DUP_ID", detail::meta_line(*list[i], "sent_id"),
                    "sent_id '" + id + "' already used at " + first->file + ":" +
                        std::to_string(detail::meta_line(*first, "sent_id")));
      for (auto& d : sink.out()) out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace maibaam

#endif  // MAIBAAM_METADATA_HPP
