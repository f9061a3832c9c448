#ifndef MAIBAAM_TREE_HPP
#define MAIBAAM_TREE_HPP

// Tree well-formedness and surface-text reconstruction for one sentence.
// Crossing (non-projective) arcs are legal and never reported.

#include <algorithm>
#include <string>
#include <vector>

#include "maibaam/conllu.hpp"
#include "maibaam/diagnostic.hpp"

namespace maibaam {

namespace detail {

inline Diagnostic structural(const Sentence& s, std::string rule, int line,
                             std::optional<int> token, std::string message) {
  return {std::move(rule), Severity::error, s.file, line, s.sentence_id(), token,
          std::move(message), std::string("structural")};
}

}  // namespace detail

inline std::vector<Diagnostic> validate_structure(const Sentence& s) {
  std::vector<Diagnostic> out;
  const int n = static_cast<int>(s.tokens.size());
  auto tok = [&](int id) -> const Token& { return s.tokens[static_cast<std::size_t>(id - 1)]; };

  int roots = 0;
  for (const auto& t : s.tokens) {
    if (t.head > n) {
      out.push_back(detail::structural(s, "STRUCT.HEAD_RANGE", t.line, t.id,
                                       "head " + std::to_string(t.head) + " outside 0.." +
                                           std::to_string(n)));
      continue;
    }
    if (t.head == 0) {
      if (++roots > 1)
        out.push_back(detail::structural(s, "STRUCT.MULTI_ROOT", t.line, t.id,
                                         "additional word attached to the root"));
      if (t.deprel != "root")
        out.push_back(detail::structural(s, "STRUCT.ROOT_DEPREL", t.line, t.id,
                                         "root word has relation '" + t.deprel + "'"));
      continue;
    }
    if (tok(t.head).upos == "PUNCT")
      out.push_back(detail::structural(s, "STRUCT.PUNCT_CHILD", t.line, t.id,
                                       "attached to punctuation word " + std::to_string(t.head)));
  }
  if (roots == 0 && n > 0)
    out.push_back(detail::structural(s, "STRUCT.NO_ROOT", s.first_line, std::nullopt,
                                     "no word is attached to the root"));

  // 0 = unvisited, 1 = on the current walk, 2 = finished.
  std::vector<int> state(static_cast<std::size_t>(n) + 1, 0);
  for (int start = 1; start <= n; ++start) {
    std::vector<int> path;
    int v = start;
    while (v >= 1 && v <= n && state[static_cast<std::size_t>(v)] == 0) {
      state[static_cast<std::size_t>(v)] = 1;
      path.push_back(v);
      v = tok(v).head;
    }
    if (v >= 1 && v <= n && state[static_cast<std::size_t>(v)] == 1) {
      auto it = std::find(path.begin(), path.end(), v);
      std::vector<int> cycle(it, path.end());
      std::sort(cycle.begin(), cycle.end());
      std::string ids;
      for (int id : cycle) ids += (ids.empty() ? "" : ",") + std::to_string(id);
      const Token& first = tok(cycle.front());
      out.push_back(detail::structural(s, "STRUCT.CYCLE", first.line, first.id,
                                       "head chain loops through words " + ids));
    }
    for (int p : path) state[static_cast<std::size_t>(p)] = 2;
  }

  std::vector<const MwtSpan*> spans;
  for (const auto& sp : s.mwt_spans) spans.push_back(&sp);
  std::sort(spans.begin(), spans.end(), [](auto a, auto b) {
    return std::pair(a->first_id, a->last_id) < std::pair(b->first_id, b->last_id);
  });
  for (std::size_t i = 1; i < spans.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (spans[i]->first_id <= spans[j]->last_id) {
        out.push_back(detail::structural(
            s, "STRUCT.MWT_OVERLAP", spans[i]->line, spans[i]->first_id,
            "range " + std::to_string(spans[i]->first_id) + "-" +
                std::to_string(spans[i]->last_id) + " overlaps " +
                std::to_string(spans[j]->first_id) + "-" + std::to_string(spans[j]->last_id)));
        break;
      }

  sort_diagnostics(out);
  return out;
}

/// Rebuilds the sentence text from surface units (range forms replace the
/// words they cover) and SpaceAfter=No.
inline std::string reconstruct_text(const Sentence& s) {
  std::string out;
  const int n = static_cast<int>(s.tokens.size());
  for (int id = 1; id <= n;) {
    const MwtSpan* span = s.span_starting_at(id);
    bool space = true;
    if (span) {
      out += span->surface_form;
      space = !span->misc.has("SpaceAfter", "No");
      id = std::max(span->last_id, id) + 1;
    } else {
      const Token& t = s.tokens[static_cast<std::size_t>(id - 1)];
      out += t.form;
      space = t.space_after();
      ++id;
    }
    if (space && id <= n) out += ' ';
  }
  return out;
}

}  // namespace maibaam

#endif  // MAIBAAM_TREE_HPP
