#ifndef MAIBAAM_STATS_HPP
#define MAIBAAM_STATS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "maibaam/conllu.hpp"
#include "maibaam/diagnostic.hpp"

namespace maibaam {

using Counts = std::map<std::string, std::size_t>;

struct CorpusStats {
  std::size_t sentences = 0;
  std::size_t tokens = 0;
  std::size_t mwt_spans = 0;
  Counts by_upos;
  Counts by_deprel;
  Counts by_genre;          // per sentence; "<none>" when absent
  Counts by_dialect_group;  // per sentence; "<none>" when absent
  Counts by_rule;

  std::size_t findings() const {
    std::size_t n = 0;
    for (const auto& [_, c] : by_rule) n += c;
    return n;
  }
};

inline constexpr const char* kNoValue = "<none>";

inline void add_document(CorpusStats& st, const Document& doc) {
  for (const auto& s : doc.sentences) {
    ++st.sentences;
    st.tokens += s.tokens.size();
    st.mwt_spans += s.mwt_spans.size();
    for (const auto& t : s.tokens) {
      ++st.by_upos[t.upos];
      ++st.by_deprel[t.deprel];
    }
    ++st.by_genre[s.meta("genre").value_or(kNoValue)];
    ++st.by_dialect_group[s.meta("dialect_group").value_or(kNoValue)];
  }
}

inline CorpusStats compute_stats(const std::vector<Document>& docs,
                                 const std::vector<Diagnostic>& findings = {}) {
  CorpusStats st;
  for (const auto& d : docs) add_document(st, d);
  for (const auto& f : findings) ++st.by_rule[f.rule_id];
  return st;
}

}  // namespace maibaam

#endif  // MAIBAAM_STATS_HPP
