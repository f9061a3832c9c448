#ifndef MAIBAAM_LEXICON_HPP
#define MAIBAAM_LEXICON_HPP

// Splitting lexicon for the Bavarian tokenizer. The rules are lexical, so the
// data lives in a tab-separated file (see data/bavarian_lexicon.tsv for the
// format); the shipped file is compiled in as the default.

#include <algorithm>
#include <fstream>
#include <istream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maibaam/default_lexicon_data.hpp"
#include "maibaam/text.hpp"

namespace maibaam {

class LexiconError : public std::runtime_error {
 public:
  LexiconError(const std::string& source, int line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what) {}
};

struct LexEntry {
  std::string surface;
  std::vector<std::string> parts;
  std::vector<std::string> hints;
  int line = 0;

  std::optional<std::string> hint(std::size_t i) const {
    if (i < hints.size() && hints[i] != "_") return hints[i];
    return std::nullopt;
  }
};

/// Keyed tables use the apostrophe-folded surface, case preserved.
using LexTable = std::map<std::string, LexEntry, std::less<>>;

struct TokenizerLexicon {
  LexTable fused_adp_det;
  LexTable infinitival_det;
  std::vector<LexEntry> clitic_onsets;
  LexTable pronoun_hosts;
  std::vector<LexEntry> pronoun_clitics;
  LexTable complementizers;
  LexTable agreement_suffixes;
  LexTable pronouns_1pl;
  LexTable review_hosts;
  LexTable infinitive_markers;
  LexTable linking_consonants;
  LexTable sandhi_hosts;
  LexTable nominalized_infinitives;
  LexTable abbreviations;
  LexTable units;
  bool case_folding = true;

  /// Exact lookup, then a single lowercased retry.
  const LexEntry* find(const LexTable& table, std::string_view surface) const {
    if (auto it = table.find(text::fold_key(surface, false)); it != table.end()) return &it->second;
    if (!case_folding) return nullptr;
    if (auto it = table.find(text::fold_key(surface, true)); it != table.end()) return &it->second;
    return nullptr;
  }

  bool contains(const LexTable& table, std::string_view surface) const {
    return find(table, surface) != nullptr;
  }

  static TokenizerLexicon load(std::istream& in, const std::string& source = "<lexicon>") {
    TokenizerLexicon lex;
    lex.merge(in, source);
    return lex;
  }

  static TokenizerLexicon load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LexiconError(path, 0, "cannot open lexicon file");
    return load(in, path);
  }

  static const TokenizerLexicon& builtin() {
    static const TokenizerLexicon lex = [] {
      std::istringstream in{std::string(default_lexicon_tsv)};
      return load(in, "<builtin lexicon>");
    }();
    return lex;
  }

  /// Adds the entries of another lexicon file on top of this one.
  void merge(std::istream& in, const std::string& source) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto trimmed = text::trim(line);
      if (trimmed.empty() || trimmed.front() == '#') continue;
      auto cols = text::split(line, '\t');
      if (cols.size() < 2 || cols.size() > 4)
        throw LexiconError(source, lineno, "expected 2 to 4 tab-separated fields");
      LexEntry e;
      e.surface = std::string(cols[0]);
      e.line = lineno;
      if (e.surface.empty()) throw LexiconError(source, lineno, "empty surface");
      if (cols.size() > 2 && cols[2] != "_")
        for (auto p : text::split(cols[2], '|')) e.parts.emplace_back(p);
      if (cols.size() > 3 && cols[3] != "_")
        for (auto h : text::split(cols[3], '|')) e.hints.emplace_back(h);
      add(std::string(cols[1]), std::move(e), source);
    }
  }

 private:
  void add(const std::string& kind, LexEntry e, const std::string& source) {
    auto require_split = [&](std::size_t min_parts) {
      if (e.parts.size() < min_parts)
        throw LexiconError(source, e.line, kind + " entry needs at least " +
                                               std::to_string(min_parts) + " parts");
      std::string joined;
      for (const auto& p : e.parts) joined += p;
      if (joined != e.surface)
        throw LexiconError(source, e.line,
                           "parts of '" + e.surface + "' do not concatenate to the surface");
    };
    auto key = text::fold_key(e.surface, false);
    auto put = [&](LexTable& t) { t.insert_or_assign(key, std::move(e)); };
    if (kind == "fused_adp_det") {
      require_split(2);
      put(fused_adp_det);
    } else if (kind == "infinitival_det") {
      require_split(2);
      put(infinitival_det);
    } else if (kind == "clitic_onset") {
      clitic_onsets.push_back(std::move(e));
      std::stable_sort(clitic_onsets.begin(), clitic_onsets.end(),
                       [](const LexEntry& a, const LexEntry& b) {
                         return a.surface.size() > b.surface.size();
                       });
    } else if (kind == "pronoun_host") {
      put(pronoun_hosts);
    } else if (kind == "pronoun_clitic") {
      pronoun_clitics.push_back(std::move(e));
    } else if (kind == "complementizer") {
      put(complementizers);
    } else if (kind == "agreement_suffix") {
      auto person = e.hint(0).value_or("");
      if (person != "2sg" && person != "2pl" && person != "1pl")
        throw LexiconError(source, e.line, "agreement_suffix hint must be 2sg, 2pl or 1pl");
      put(agreement_suffixes);
    } else if (kind == "pronoun_1pl") {
      put(pronouns_1pl);
    } else if (kind == "review_host") {
      put(review_hosts);
    } else if (kind == "infinitive_marker") {
      put(infinitive_markers);
    } else if (kind == "linking_consonant") {
      put(linking_consonants);
    } else if (kind == "sandhi_host") {
      put(sandhi_hosts);
    } else if (kind == "nominalized_infinitive") {
      put(nominalized_infinitives);
    } else if (kind == "abbreviation") {
      if (!e.parts.empty()) require_split(2);
      put(abbreviations);
    } else if (kind == "unit") {
      put(units);
    } else {
      throw LexiconError(source, e.line, "unknown kind '" + kind + "'");
    }
  }
};

}  // namespace maibaam

#endif  // MAIBAAM_LEXICON_HPP
