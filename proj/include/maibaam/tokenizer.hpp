#ifndef MAIBAAM_TOKENIZER_HPP
#define MAIBAAM_TOKENIZER_HPP

// Bavarian tokenization: whitespace/punctuation units, then lexicon-driven
// splitting of each unit into a multi-word token, SpaceAfter=No pieces, or
// nothing. Split pieces are always byte substrings of the input.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maibaam/conllu.hpp"
#include "maibaam/lexicon.hpp"
#include "maibaam/text.hpp"

namespace maibaam {

enum class SegmentKind { intact, mwt, space_after_no };

/// Which rule produced a segmentation, in priority order.
enum class SegmentRule {
  complementizer_agreement,
  fused_adp_det,
  infinitival_det,
  clitic_onset,
  pronoun_clitic,
  sandhi,
  none,
};

inline std::string_view to_string(SegmentKind k) {
  switch (k) {
    case SegmentKind::intact: return "Intact";
    case SegmentKind::mwt: return "Mwt";
    case SegmentKind::space_after_no: return "SpaceAfterNo";
  }
  return "Intact";
}

struct SegmentPart {
  std::string form;
  std::optional<std::string> upos_hint;
  friend bool operator==(const SegmentPart&, const SegmentPart&) = default;
};

struct SegmentationResult {
  SegmentKind kind = SegmentKind::intact;
  std::vector<SegmentPart> parts;
  std::string surface;
  SegmentRule rule = SegmentRule::none;
  // Agreement ending on a host the lexicon marks for discussion.
  bool needs_review = false;

  std::vector<std::string> forms() const {
    std::vector<std::string> out;
    for (const auto& p : parts) out.push_back(p.form);
    return out;
  }
};

struct SegmentContext {
  std::optional<std::string> next;  // following unit, if any
  bool infinitival = false;         // caller knows zum/zun is infinitival
};

namespace detail {

inline SegmentationResult intact(std::string_view surface, SegmentRule rule = SegmentRule::none) {
  return {SegmentKind::intact, {{std::string(surface), std::nullopt}}, std::string(surface), rule,
          false};
}

/// Cuts `surface` at the folded offsets in `cuts` (exclusive of 0 and end).
inline std::vector<std::string> cut(std::string_view surface, const text::FoldedString& f,
                                    const std::vector<std::size_t>& cuts) {
  std::vector<std::string> out;
  std::size_t prev = 0;
  for (auto c : cuts) {
    out.emplace_back(f.original_slice(surface, prev, c));
    prev = c;
  }
  out.emplace_back(f.original_slice(surface, prev, f.folded.size()));
  return out;
}

inline SegmentationResult split_result(std::string_view surface, SegmentKind kind,
                                       SegmentRule rule, std::vector<std::string> forms,
                                       const std::vector<std::optional<std::string>>& hints) {
  SegmentationResult r{kind, {}, std::string(surface), rule, false};
  for (std::size_t i = 0; i < forms.size(); ++i)
    r.parts.push_back({std::move(forms[i]), i < hints.size() ? hints[i] : std::nullopt});
  return r;
}

/// Splits `rest` into a sequence of pronoun clitics, trying clitics in
/// lexicon order. Returns the cut offsets relative to `rest`.
inline bool decompose_clitics(std::string_view rest, const std::vector<LexEntry>& clitics,
                              bool lower, std::vector<std::size_t>& cuts,
                              std::vector<std::optional<std::string>>& hints) {
  if (rest.empty()) return true;
  for (const auto& c : clitics) {
    auto key = text::fold_key(c.surface, lower);
    if (!rest.starts_with(key)) continue;
    cuts.push_back(key.size());
    hints.push_back(c.hint(0));
    std::vector<std::size_t> sub;
    if (decompose_clitics(rest.substr(key.size()), clitics, lower, sub, hints)) {
      for (auto s : sub) cuts.push_back(key.size() + s);
      return true;
    }
    cuts.pop_back();
    hints.pop_back();
  }
  return false;
}

inline std::vector<bool> fold_passes(const TokenizerLexicon& lex) {
  return lex.case_folding ? std::vector<bool>{false, true} : std::vector<bool>{false};
}

/// Host entries from `table` that prefix the folded surface.
inline std::vector<const LexEntry*> prefixes(const LexTable& table, const std::string& folded,
                                             bool lower) {
  std::vector<const LexEntry*> out;
  for (const auto& [key, entry] : table) {
    auto k = lower ? text::lowercase(key) : key;
    if (folded.size() > k.size() && folded.starts_with(k)) out.push_back(&entry);
  }
  std::stable_sort(out.begin(), out.end(), [](auto a, auto b) {
    return a->surface.size() > b->surface.size();
  });
  return out;
}

inline bool agreement_on(const LexTable& hosts, std::string_view surface,
                         const TokenizerLexicon& lex, const std::optional<std::string>& next) {
  for (bool lower : fold_passes(lex)) {
    auto f = text::fold(surface, lower);
    for (const LexEntry* host : prefixes(hosts, f.folded, lower)) {
      std::string_view rest(f.folded);
      rest.remove_prefix(text::fold_key(host->surface, lower).size());
      if (rest.starts_with("'")) rest.remove_prefix(1);
      const LexEntry* suffix = lex.find(lex.agreement_suffixes, rest);
      if (!suffix) continue;
      auto person = suffix->hint(0).value_or("");
      if (person == "2sg" || person == "2pl") return true;
      if (person == "1pl" && next && lex.contains(lex.pronouns_1pl, *next)) return true;
    }
  }
  return false;
}

}  // namespace detail

/// True when `surface` is a complementizer inflected for 2sg/2pl (or a
/// doubly marked 1pl -ma, which needs the following full pronoun in `next`).
inline bool is_complementizer_agreement(std::string_view surface, const TokenizerLexicon& lex,
                                        const std::optional<std::string>& next = std::nullopt) {
  return detail::agreement_on(lex.complementizers, surface, lex, next);
}

inline SegmentationResult segment_token(std::string_view surface, const TokenizerLexicon& lex,
                                        const SegmentContext& ctx = {}) {
  using detail::split_result;
  if (surface.empty()) return detail::intact(surface);

  if (is_complementizer_agreement(surface, lex, ctx.next))
    return detail::intact(surface, SegmentRule::complementizer_agreement);
  if (detail::agreement_on(lex.review_hosts, surface, lex, ctx.next)) {
    auto r = detail::intact(surface, SegmentRule::complementizer_agreement);
    r.needs_review = true;
    return r;
  }

  auto table_split = [&](const LexEntry& e, SegmentRule rule) {
    auto f = text::fold(surface, false);
    std::vector<std::size_t> cuts;
    std::size_t offset = 0;
    for (std::size_t i = 0; i + 1 < e.parts.size(); ++i) {
      offset += text::fold_key(e.parts[i], false).size();
      cuts.push_back(offset);
    }
    std::vector<std::optional<std::string>> hints;
    for (std::size_t i = 0; i < e.parts.size(); ++i) hints.push_back(e.hint(i));
    return split_result(surface, SegmentKind::mwt, rule, detail::cut(surface, f, cuts), hints);
  };

  const LexEntry* infinitival = lex.find(lex.infinitival_det, surface);
  bool infinitival_context =
      ctx.infinitival || (ctx.next && lex.contains(lex.nominalized_infinitives, *ctx.next));
  if (infinitival && infinitival_context)
    return table_split(*infinitival, SegmentRule::infinitival_det);
  if (const LexEntry* fused = lex.find(lex.fused_adp_det, surface))
    return table_split(*fused, SegmentRule::fused_adp_det);
  if (infinitival) return table_split(*infinitival, SegmentRule::infinitival_det);

  for (bool lower : detail::fold_passes(lex)) {
    auto f = text::fold(surface, lower);
    for (const auto& onset : lex.clitic_onsets) {
      auto key = text::fold_key(onset.surface, lower);
      if (f.folded.size() > key.size() && f.folded.starts_with(key))
        return split_result(surface, SegmentKind::space_after_no, SegmentRule::clitic_onset,
                            detail::cut(surface, f, {key.size()}), {onset.hint(0), std::nullopt});
    }
  }

  for (bool lower : detail::fold_passes(lex)) {
    auto f = text::fold(surface, lower);
    for (const LexEntry* host : detail::prefixes(lex.pronoun_hosts, f.folded, lower)) {
      auto hlen = text::fold_key(host->surface, lower).size();
      std::vector<std::size_t> cuts;
      std::vector<std::optional<std::string>> hints{host->hint(0)};
      if (!detail::decompose_clitics(std::string_view(f.folded).substr(hlen),
                                     lex.pronoun_clitics, lower, cuts, hints))
        continue;
      std::vector<std::size_t> abs{hlen};
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) abs.push_back(hlen + cuts[i]);
      return split_result(surface, SegmentKind::space_after_no, SegmentRule::pronoun_clitic,
                          detail::cut(surface, f, abs), hints);
    }
  }

  for (bool lower : detail::fold_passes(lex)) {
    auto f = text::fold(surface, lower);
    for (const LexEntry* host : detail::prefixes(lex.sandhi_hosts, f.folded, lower)) {
      auto hlen = text::fold_key(host->surface, lower).size();
      for (const auto& [linker, entry] : lex.linking_consonants) {
        auto lk = lower ? text::lowercase(linker) : linker;
        std::string_view rest = std::string_view(f.folded).substr(hlen);
        if (!rest.starts_with(lk) || rest.size() == lk.size()) continue;
        std::vector<std::size_t> cuts;
        std::vector<std::optional<std::string>> hints{host->hint(0)};
        if (!detail::decompose_clitics(rest.substr(lk.size()), lex.pronoun_clitics, lower, cuts,
                                       hints))
          continue;
        std::size_t base = hlen + lk.size();
        std::vector<std::size_t> abs{base};
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) abs.push_back(base + cuts[i]);
        return split_result(surface, SegmentKind::space_after_no, SegmentRule::sandhi,
                            detail::cut(surface, f, abs), hints);
      }
    }
  }

  return detail::intact(surface);
}

class TokenizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Punctuation peeled off the start or end of a whitespace unit. Apostrophe
// variants are never peeled: they belong to clitics ('S, d’, s´).
inline bool leading_punct(std::string_view cp) {
  static constexpr std::string_view set[] = {
      "(", "[", "{", "\"", "\xE2\x80\x9E" /*„*/, "\xE2\x80\x9C" /*“*/, "\xE2\x80\x9D" /*”*/,
      "\xC2\xAB" /*«*/, "\xC2\xBB" /*»*/, "\xE2\x80\x9A" /*‚*/, "\xE2\x80\x98" /*‘*/,
      "\xC2\xBF" /*¿*/, "\xC2\xA1" /*¡*/};
  for (auto s : set)
    if (cp == s) return true;
  return false;
}

inline bool trailing_punct(std::string_view cp) {
  static constexpr std::string_view set[] = {
      ".", ",", ";", ":", "!", "?", ")", "]", "}", "\"", "\xE2\x80\x9C" /*“*/,
      "\xE2\x80\x9D" /*”*/, "\xC2\xAB" /*«*/, "\xC2\xBB" /*»*/, "\xE2\x80\x98" /*‘*/,
      "\xE2\x80\xA6" /*…*/};
  for (auto s : set)
    if (cp == s) return true;
  return false;
}

inline bool is_dash(std::string_view s) {
  return s == "-" || s == "--" || s == "\xE2\x80\x93" /*–*/ || s == "\xE2\x80\x94" /*—*/;
}

struct Piece {
  std::string form;
  bool core = false;  // eligible for segment_token
  std::optional<std::string> hint;
};

/// Leading digits (with an optional decimal part) of `s`.
inline std::size_t number_prefix(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == 0) return 0;
  if (i + 1 < s.size() && (s[i] == '.' || s[i] == ',') && s[i + 1] >= '0' && s[i + 1] <= '9') {
    ++i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  }
  return i;
}

inline void split_core(std::string_view core, const TokenizerLexicon& lex,
                       std::vector<Piece>& out) {
  if (core.empty()) return;
  if (auto n = number_prefix(core); n > 0 && n < core.size()) {
    auto rest = core.substr(n);
    if (const LexEntry* unit = lex.find(lex.units, rest)) {
      out.push_back({std::string(core.substr(0, n)), false, "NUM"});
      out.push_back({std::string(rest), false, unit->hint(0)});
      return;
    }
    for (std::size_t d = 1; d <= std::min<std::size_t>(3, rest.size()); ++d) {
      auto dash = rest.substr(0, d);
      auto tail = rest.substr(d);
      if (is_dash(dash) && !tail.empty() && number_prefix(tail) == tail.size()) {
        out.push_back({std::string(core.substr(0, n)), false, "NUM"});
        out.push_back({std::string(dash), false, "ADP"});
        out.push_back({std::string(tail), false, "NUM"});
        return;
      }
    }
  }
  if (const LexEntry* abbr = lex.find(lex.abbreviations, core)) {
    if (abbr->parts.size() >= 2) {
      auto f = text::fold(core, false);
      std::vector<std::size_t> cuts;
      std::size_t offset = 0;
      for (std::size_t i = 0; i + 1 < abbr->parts.size(); ++i) {
        offset += text::fold_key(abbr->parts[i], false).size();
        cuts.push_back(offset);
      }
      auto forms = cut(core, f, cuts);
      for (std::size_t i = 0; i < forms.size(); ++i)
        out.push_back({std::move(forms[i]), false, abbr->hint(i)});
    } else {
      out.push_back({std::string(core), false, abbr->hint(0)});
    }
    return;
  }
  out.push_back({std::string(core), true, std::nullopt});
}

/// Splits one whitespace-delimited unit into punctuation and core pieces.
inline std::vector<Piece> split_unit(std::string_view unit, const TokenizerLexicon& lex) {
  std::vector<Piece> front, back;
  auto cps = text::code_points(unit);
  std::size_t b = 0, e = cps.size();

  auto join_cps = [&](std::size_t from, std::size_t to) {
    std::string s;
    for (std::size_t i = from; i < to; ++i) s += cps[i];
    return s;
  };

  // Bracketed or slashed phonetic transcription: only the outer marks split.
  if (e >= 3 && (cps[0] == "[" || cps[0] == "/")) {
    std::string_view close = cps[0] == "[" ? "]" : "/";
    std::size_t last = e;
    for (std::size_t i = e - 1; i > 0; --i)
      if (cps[i] == close) {
        last = i;
        break;
      }
    if (last != e && last > 1) {
      front.push_back({std::string(cps[0]), false, "PUNCT"});
      front.push_back({join_cps(1, last), false, "X"});
      front.push_back({std::string(cps[last]), false, "PUNCT"});
      b = last + 1;
      // Anything after the closing mark is trailing punctuation.
      for (std::size_t i = b; i < e; ++i) front.push_back({std::string(cps[i]), false, "PUNCT"});
      return front;
    }
  }

  while (b < e && leading_punct(cps[b])) {
    front.push_back({std::string(cps[b]), false, "PUNCT"});
    ++b;
  }
  while (e > b) {
    const auto& cp = cps[e - 1];
    if (!trailing_punct(cp)) break;
    if (cp == ".") {
      if (lex.contains(lex.abbreviations, join_cps(b, e))) break;
      std::size_t run = e;
      while (run > b && cps[run - 1] == ".") --run;
      if (e - run >= 2) {
        back.push_back({join_cps(run, e), false, "PUNCT"});
        e = run;
        continue;
      }
    }
    back.push_back({std::string(cp), false, "PUNCT"});
    --e;
  }

  std::vector<Piece> out = std::move(front);
  split_core(join_cps(b, e), lex, out);
  for (auto it = back.rbegin(); it != back.rend(); ++it) out.push_back(std::move(*it));
  return out;
}

}  // namespace detail

/// Tokenizes one sentence of plain text into a skeleton: forms, POS hints
/// (UPOS "_" when unknown), multi-word tokens and SpaceAfter=No. Heads and
/// relations are left unset (head 0, deprel "_"). Sets the `text` metadata.
inline Sentence tokenize_sentence(std::string_view raw, const TokenizerLexicon& lex,
                                  std::vector<SegmentationResult>* segments = nullptr) {
  if (text::trim(raw).empty()) throw TokenizeError("EMPTY_INPUT: sentence is empty");

  std::vector<std::vector<detail::Piece>> units;
  {
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && text::is_space(raw[i])) ++i;
      std::size_t j = i;
      while (j < raw.size() && !text::is_space(raw[j])) ++j;
      if (j > i) units.push_back(detail::split_unit(raw.substr(i, j - i), lex));
      i = j;
    }
  }

  Sentence s;
  s.set_meta("text", text::collapse_whitespace(raw));

  auto next_core = [&](std::size_t ui, std::size_t pi) -> std::optional<std::string> {
    for (std::size_t u = ui; u < units.size(); ++u)
      for (std::size_t p = (u == ui ? pi + 1 : 0); p < units[u].size(); ++p)
        if (!units[u][p].form.empty()) {
          const auto& pc = units[u][p];
          if (pc.hint && *pc.hint == "PUNCT") return std::nullopt;
          return pc.form;
        }
    return std::nullopt;
  };

  auto add_token = [&](std::string form, std::optional<std::string> hint) -> Token& {
    Token t;
    t.id = static_cast<int>(s.tokens.size()) + 1;
    t.form = std::move(form);
    t.upos = hint.value_or("_");
    s.tokens.push_back(std::move(t));
    return s.tokens.back();
  };

  for (std::size_t u = 0; u < units.size(); ++u) {
    for (std::size_t p = 0; p < units[u].size(); ++p) {
      const auto& piece = units[u][p];
      bool glued = p + 1 < units[u].size();  // next piece follows without space
      if (!piece.core) {
        Token& t = add_token(piece.form, piece.hint);
        if (glued) t.misc.set("SpaceAfter", "No");
        continue;
      }
      auto seg = segment_token(piece.form, lex, SegmentContext{next_core(u, p), false});
      if (seg.kind == SegmentKind::mwt) {
        MwtSpan span;
        span.first_id = static_cast<int>(s.tokens.size()) + 1;
        span.last_id = span.first_id + static_cast<int>(seg.parts.size()) - 1;
        span.surface_form = seg.surface;
        if (glued) span.misc.set("SpaceAfter", "No");
        for (const auto& part : seg.parts) add_token(part.form, part.upos_hint);
        s.mwt_spans.push_back(std::move(span));
      } else {
        for (std::size_t k = 0; k < seg.parts.size(); ++k) {
          Token& t = add_token(seg.parts[k].form, seg.parts[k].upos_hint);
          if (k + 1 < seg.parts.size() || glued) t.misc.set("SpaceAfter", "No");
        }
      }
      if (segments) segments->push_back(std::move(seg));
    }
  }
  return s;
}

}  // namespace maibaam

#endif  // MAIBAAM_TOKENIZER_HPP
