#ifndef MAIBAAM_RULES_HPP
#define MAIBAAM_RULES_HPP

// Per-sentence annotation rules. Each function appends findings with the
// catalog's default severity; enabling and severity overrides are applied
// by the lint driver.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maibaam/catalog.hpp"
#include "maibaam/config.hpp"
#include "maibaam/conllu.hpp"
#include "maibaam/diagnostic.hpp"
#include "maibaam/text.hpp"

namespace maibaam {

class RuleSink {
 public:
  explicit RuleSink(const Sentence& s) : s_(s), id_(s.sentence_id()) {}

  void token(const std::string& rule, const Token& t, std::string message) {
    add(rule, t.line, t.id, std::move(message));
  }
  void span(const std::string& rule, const MwtSpan& m, std::string message) {
    add(rule, m.line, m.first_id, std::move(message));
  }
  void sentence(const std::string& rule, int line, std::string message) {
    add(rule, line, std::nullopt, std::move(message));
  }

  std::vector<Diagnostic>& out() { return out_; }

 private:
  void add(const std::string& rule, int line, std::optional<int> token, std::string message) {
    const auto* r = find_rule(rule);
    Diagnostic d;
    d.rule_id = rule;
    d.severity = r ? r->default_severity : Severity::error;
    d.file = s_.file;
    d.line = line;
    d.sentence_id = id_;
    d.token_id = token;
    d.message = std::move(message);
    if (r) d.guideline_ref = r->guideline_ref;
    out_.push_back(std::move(d));
  }

  const Sentence& s_;
  std::string id_;
  std::vector<Diagnostic> out_;
};

namespace detail {

inline bool has_feature(std::string_view column, std::string_view feat) {
  if (column == "_") return false;
  for (auto f : text::split(column, '|'))
    if (f == feat) return true;
  return false;
}

inline bool has_typo(const Token& t) {
  return has_feature(t.feats_col, "Typo=Yes") || t.misc.has("Typo", "Yes");
}

inline std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace detail

namespace rules {

inline void columns(const Sentence& s, const LintConfig&, RuleSink& out) {
  for (const auto& t : s.tokens) {
    std::vector<std::string> bad;
    if (t.lemma_col != "_") bad.push_back("LEMMA");
    if (t.xpos_col != "_") bad.push_back("XPOS");
    if (t.feats_col != "_" && t.feats_col != "Typo=Yes") bad.push_back("FEATS");
    if (!bad.empty())
      out.token("CORE.COLUMNS", t, text::join(bad, ", ") + " column not empty");
    if (t.deps_col != "_")
      out.token("CORE.ENHANCED_UNSUPPORTED", t, "enhanced dependencies in DEPS");
  }
  for (const auto& e : s.empty_nodes)
    out.sentence("CORE.ENHANCED_UNSUPPORTED", e.line, "empty node line");
}

inline void upos_vocabulary(const Sentence& s, const LintConfig& cfg, RuleSink& out) {
  for (const auto& t : s.tokens)
    if (!cfg.upos.contains(t.upos))
      out.token("VOCAB.UPOS", t, "unknown UPOS " + detail::quoted(t.upos));
}

inline void deprel_vocabulary(const Sentence& s, const LintConfig& cfg, RuleSink& out) {
  for (const auto& t : s.tokens) {
    if (!cfg.deprels.contains(t.deprel))
      out.token("VOCAB.DEPREL", t, "unknown relation " + detail::quoted(t.deprel));
    else if (t.deprel == "root" && t.head != 0)
      out.token("VOCAB.DEPREL", t, "relation root on a word with head " + std::to_string(t.head));
  }
}

// Closed classes are keyed on GermanLemma; words without one are left to
// LEMMA.MISSING.
inline void closed_classes(const Sentence& s, const LintConfig& cfg, RuleSink& out) {
  for (const auto& t : s.tokens) {
    auto lemma = t.german_lemma();
    if (!lemma) continue;
    if (t.deprel == "cop" && !cfg.copula_lemmas.contains(*lemma))
      out.token("CLASS.COP", t, "cop with GermanLemma " + detail::quoted(*lemma));
    if (t.upos == "PART" && !cfg.part_lemmas.contains(*lemma))
      out.token("CLASS.PART", t, "PART with GermanLemma " + detail::quoted(*lemma));
    if (t.upos == "AUX" && !cfg.aux_lemmas.contains(*lemma))
      out.token("CLASS.AUX", t, "AUX with GermanLemma " + detail::quoted(*lemma));
  }
}

inline void placeholders(const Sentence& s, const LintConfig& cfg, RuleSink& out) {
  static const WordSet nominal{"NOUN", "PROPN", "ADJ", "NUM", "SYM"};
  for (const auto& t : s.tokens) {
    if (t.form == "USERNAME" && t.upos != "PROPN")
      out.token("CLASS.PLACEHOLDER", t, "USERNAME tagged " + t.upos + ", expected PROPN");
    if (cfg.placeholder_x.contains(t.form) && nominal.contains(t.upos))
      out.token("CLASS.DUMMY", t, "dummy " + detail::quoted(t.form) + " tagged " + t.upos +
                                      ", expected X");
    if (cfg.placeholder_sym.contains(t.form) && t.deprel != "punct" && t.upos != "SYM")
      out.token("CLASS.DUMMY", t, "ellipsis placeholder tagged " + t.upos + ", expected SYM");
  }
}

inline void lemmas(const Sentence& s, const LintConfig& cfg, RuleSink& out) {
  for (const auto& t : s.tokens) {
    auto lemma = t.german_lemma();
    if (!lemma) {
      bool exempt = t.deprel == "goeswith" || (cfg.punct_lemma_exempt && t.upos == "PUNCT");
      if (!exempt) out.token("LEMMA.MISSING", t, "no GermanLemma for " + detail::quoted(t.form));
      continue;
    }
    if (text::lowercase(t.form) == "nimma" && *lemma != "nicht mehr")
      out.token("LEMMA.NIMMA", t, "nimma has GermanLemma " + detail::quoted(*lemma));
  }
  for (const auto& m : s.mwt_spans)
    if (m.misc.get("GermanLemma"))
      out.span("LEMMA.ON_MWT", m, "multi-word token " + detail::quoted(m.surface_form) +
                                      " carries GermanLemma");
}

inline void typos(const Sentence& s, const LintConfig&, RuleSink& out) {
  std::vector<bool> has_goeswith(s.tokens.size() + 1, false);
  for (const auto& t : s.tokens)
    if (t.deprel == "goeswith" && t.head >= 1 && t.head <= static_cast<int>(s.tokens.size()))
      has_goeswith[static_cast<std::size_t>(t.head)] = true;
  for (const auto& t : s.tokens) {
    if (t.misc.has("CorrectSpaceAfter", "Yes") && t.space_after())
      out.token("TYPO.CORRECT_SPACE", t, "CorrectSpaceAfter=Yes without SpaceAfter=No");
    if (detail::has_typo(t) && !has_goeswith[static_cast<std::size_t>(t.id)])
      out.token("TYPO.REVIEW", t, "Typo=Yes on " + detail::quoted(t.form) + " without goeswith parts");
  }
}

inline void goeswith(const Sentence& s, const LintConfig&, RuleSink& out) {
  const int n = static_cast<int>(s.tokens.size());
  for (const auto& t : s.tokens) {
    if (t.deprel != "goeswith" || t.head < 1 || t.head > n) continue;
    const auto& head = s.tokens[static_cast<std::size_t>(t.head - 1)];
    if (t.head > t.id) {
      out.token("REL.GOESWITH", t, "goeswith precedes its head");
    } else {
      for (int k = t.head + 1; k < t.id; ++k) {
        const auto& mid = s.tokens[static_cast<std::size_t>(k - 1)];
        if (mid.deprel != "goeswith" || mid.head != t.head) {
          out.token("REL.GOESWITH", t, "goeswith part not contiguous with its head");
          break;
        }
      }
    }
    if (!detail::has_typo(head))
      out.token("REL.GOESWITH", t, "goeswith head " + std::to_string(head.id) + " lacks Typo=Yes");
    if (t.german_lemma())
      out.token("REL.GOESWITH", t, "goeswith part carries GermanLemma");
  }
}

inline void mwt_shape(const Sentence& s, const LintConfig&, RuleSink& out) {
  const int n = static_cast<int>(s.tokens.size());
  for (const auto& m : s.mwt_spans) {
    if (m.first_id == m.last_id) {
      out.span("MWT.ARITY", m, "multi-word token covers a single word");
      continue;
    }
    if (m.first_id < 1 || m.last_id > n) continue;
    std::string joined;
    for (int id = m.first_id; id <= m.last_id; ++id)
      joined += s.tokens[static_cast<std::size_t>(id - 1)].form;
    if (joined != m.surface_form)
      out.span("MWT.SURFACE", m, "words '" + joined + "' do not spell " +
                                     detail::quoted(m.surface_form));
  }
}

namespace detail_fixed {

inline bool matches(const std::vector<Phrase>& list, const Phrase& p) {
  return std::find(list.begin(), list.end(), p) != list.end();
}

}  // namespace detail_fixed

inline void fixed_expressions(const Sentence& s, const LintConfig& cfg, RuleSink& out) {
  const int n = static_cast<int>(s.tokens.size());
  std::map<int, std::vector<int>> groups;  // head -> fixed dependents
  for (const auto& t : s.tokens)
    if (t.deprel == "fixed" && t.head >= 1 && t.head <= n) groups[t.head].push_back(t.id);

  for (const auto& [h, deps] : groups) {
    const auto& head = s.tokens[static_cast<std::size_t>(h - 1)];
    bool adjacent = true;
    for (std::size_t i = 0; i < deps.size(); ++i)
      if (deps[i] != h + static_cast<int>(i) + 1) adjacent = false;
    if (!adjacent) {
      out.token("REL.FIXED", head, "fixed dependents must directly follow their head");
      continue;
    }
    Phrase by_lemma, by_form;
    for (int id = h; id <= deps.back(); ++id) {
      const auto& t = s.tokens[static_cast<std::size_t>(id - 1)];
      by_form.push_back(text::lowercase(t.form));
      by_lemma.push_back(text::lowercase(t.german_lemma().value_or(t.form)));
    }
    auto in = [&](const std::vector<Phrase>& list) {
      return detail_fixed::matches(list, by_lemma) || detail_fixed::matches(list, by_form);
    };
    if (in(cfg.fixed_expressions)) continue;
    auto words = text::join(by_form, " ");
    if (in(cfg.legacy_fixed_expressions)) {
      if (cfg.guideline_version < cfg.legacy_fixed_until) continue;
      out.token("REL.FIXED", head, detail::quoted(words) + " is no longer fixed as of guideline " +
                                       cfg.guideline_version.str());
      continue;
    }
    out.token("REL.FIXED", head, detail::quoted(words) + " is not a listed fixed expression");
  }
}

inline void relative_markers(const Sentence& s, const LintConfig& cfg, RuleSink& out) {
  for (const auto& t : s.tokens)
    if (t.deprel == "mark" && t.upos != "SCONJ" &&
        cfg.relative_markers.contains(text::lowercase(t.form)))
      out.token("REL.RELMARK", t, "relative marker " + detail::quoted(t.form) + " tagged " +
                                      t.upos + ", expected SCONJ");
}

inline void review_hints(const Sentence& s, const LintConfig& cfg, RuleSink& out) {
  for (const auto& t : s.tokens) {
    if (t.deprel == "iobj")
      out.token("REVIEW.IOBJ", t, "iobj; dative objects are obl:arg");
    if (t.deprel == "appos" && t.head > t.id)
      out.token("REVIEW.APPOS_ORDER", t, "appos precedes its head " + std::to_string(t.head));
    if (t.upos != "INTJ" && cfg.interjections.contains(text::lowercase(t.form)))
      out.token("REVIEW.INTJ", t, "interjection " + detail::quoted(t.form) + " tagged " + t.upos);
  }
}

}  // namespace rules

using RuleFn = void (*)(const Sentence&, const LintConfig&, RuleSink&);

inline const std::vector<RuleFn>& sentence_rules() {
  static const std::vector<RuleFn> all = {
      rules::columns,      rules::upos_vocabulary,   rules::deprel_vocabulary,
      rules::closed_classes, rules::placeholders,    rules::lemmas,
      rules::typos,        rules::goeswith,          rules::mwt_shape,
      rules::fixed_expressions, rules::relative_markers, rules::review_hints};
  return all;
}

}  // namespace maibaam

#endif  // MAIBAAM_RULES_HPP
