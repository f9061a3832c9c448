#ifndef MAIBAAM_CONFIG_HPP
#define MAIBAAM_CONFIG_HPP

// Lint configuration and metadata policy.
//
// Config files are flat `key = value` lines ('#' starts a comment):
//
//   guideline_version = 2.17
//   rule.CLASS.COP.severity = warning
//   rule.REVIEW.*.enabled = false
//   lexicon.aux.path = aux_lemmas.txt      (one entry per line)
//   lexicon.copula = sein                  (inline, comma-separated)
//   lemma.punct_exempt = true
//   metadata.required = sent_id, text
//   metadata.optional = text_en, author
//
// Relative paths resolve against the config file's directory.

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maibaam/catalog.hpp"
#include "maibaam/diagnostic.hpp"
#include "maibaam/text.hpp"
#include "maibaam/version.hpp"

namespace maibaam {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using WordSet = std::set<std::string, std::less<>>;
using Phrase = std::vector<std::string>;

struct MetadataPolicy {
  std::vector<std::string> required_keys{"sent_id", "text",     "genre",
                                         "dialect_group", "location", "source"};
  std::vector<std::string> optional_keys{"text_en", "author"};
  WordSet genre_vocab{"wiki", "social", "fiction", "grammar examples", "non-fiction"};
  // North to south; "unk" is accepted on its own and as "unk (a/b/...)".
  std::vector<std::string> dialect_order{"north", "northcentral", "central", "southcentral",
                                         "south"};
  // Genres whose `source` must be an absolute URL.
  WordSet url_genres{"wiki", "social"};
};

struct LintConfig {
  GuidelineVersion guideline_version = GuidelineVersion::current();
  std::map<std::string, Severity, std::less<>> severity_overrides;
  WordSet disabled;
  WordSet enabled;  // re-enables rules whose enabled_default is false

  WordSet upos{"ADJ", "ADP", "ADV",  "AUX",   "CCONJ", "DET", "INTJ", "NOUN", "NUM",
               "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X"};
  WordSet deprels{"root",      "nsubj",     "nsubj:pass", "nsubj:outer", "obj",
                  "iobj",      "obl",       "obl:arg",    "obl:agent",   "expl",
                  "expl:pv",   "vocative",  "csubj",      "csubj:pass",  "ccomp",
                  "xcomp",     "advcl",     "advcl:relcl", "aux",        "aux:pass",
                  "cop",       "mark",      "compound",   "compound:prt", "dislocated",
                  "discourse", "nmod",      "nmod:poss",  "appos",       "acl",
                  "acl:relcl", "det",       "det:poss",   "case",        "amod",
                  "nummod",    "flat",      "conj",       "cc",          "punct",
                  "advmod",    "fixed",     "parataxis",  "goeswith",    "orphan",
                  "reparandum", "list",     "dep"};
  WordSet copula_lemmas{"sein"};
  WordSet part_lemmas{"nicht", "zu"};
  WordSet aux_lemmas{"sein", "haben", "werden", "tun", "können", "müssen",
                     "sollen", "wollen", "dürfen", "mögen"};
  std::vector<Phrase> fixed_expressions{
      {"ein", "paar"},  {"ein", "wenig"},        {"ein", "bisschen"}, {"und", "zwar"},
      {"mehr", "als"},  {"mehr", "wie"},         {"weniger", "als"},  {"weniger", "wie"},
      {"ein", "und", "derselbe"}, {"bis", "zu"}, {"gäin", "s"},       {"als", "auch"}};
  // Accepted as fixed only before the release that un-fixed them.
  std::vector<Phrase> legacy_fixed_expressions{
      {"durch", "das"}, {"durch", "des"}, {"duach", "des"}, {"für", "das"}, {"fir", "des"}};
  GuidelineVersion legacy_fixed_until = *GuidelineVersion::parse("2.17");
  WordSet interjections{"gäi", "gell", "gäins", "gäh", "gö", "mei", "sowas"};
  WordSet placeholder_x{"A", "B", "X", "Y", "XZY", "XYZ"};
  WordSet placeholder_sym{"...", "\xE2\x80\xA6"};
  WordSet relative_markers{"wo", "was", "wie", "wej"};
  bool punct_lemma_exempt = true;
  MetadataPolicy metadata;
  std::optional<std::string> tokenizer_lexicon_path;

  bool is_enabled(std::string_view rule_id) const {
    auto family = std::string(rule_family(rule_id)) + ".*";
    if (disabled.contains(rule_id) || disabled.contains(family)) return false;
    if (const auto* r = find_rule(rule_id); r && !r->enabled_default)
      return enabled.contains(rule_id) || enabled.contains(family);
    return true;
  }

  Severity severity_of(std::string_view rule_id) const {
    if (auto it = severity_overrides.find(rule_id); it != severity_overrides.end())
      return it->second;
    auto family = std::string(rule_family(rule_id)) + ".*";
    if (auto it = severity_overrides.find(family); it != severity_overrides.end())
      return it->second;
    if (const auto* r = find_rule(rule_id)) return r->default_severity;
    return Severity::error;
  }

  std::optional<std::string> guideline_ref(std::string_view rule_id) const {
    if (const auto* r = find_rule(rule_id)) return r->guideline_ref;
    return std::nullopt;
  }
};

namespace detail {

inline bool known_rule_pattern(std::string_view pattern) {
  if (find_rule(pattern)) return true;
  if (pattern.ends_with(".*")) {
    auto family = pattern.substr(0, pattern.size() - 2);
    for (const auto& r : rule_catalog())
      if (rule_family(r.rule_id) == family) return true;
  }
  return false;
}

inline std::vector<std::string> split_list(std::string_view v) {
  std::vector<std::string> out;
  for (auto item : text::split(v, ','))
    if (auto t = text::trim(item); !t.empty()) out.emplace_back(t);
  return out;
}

inline std::vector<std::string> read_list_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ConfigError("cannot open lexicon file '" + p.string() + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(t);
  }
  return out;
}

inline Phrase words_of(std::string_view s) {
  Phrase out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(text::lowercase(w));
  return out;
}

inline bool parse_bool(std::string_view v, const std::string& key) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw ConfigError("'" + key + "' expects true or false, got '" + std::string(v) + "'");
}

inline void set_lexicon(LintConfig& cfg, const std::string& name,
                        const std::vector<std::string>& items) {
  auto as_set = [&] { return WordSet(items.begin(), items.end()); };
  auto as_phrases = [&] {
    std::vector<Phrase> out;
    for (const auto& i : items) out.push_back(words_of(i));
    return out;
  };
  if (name == "copula") cfg.copula_lemmas = as_set();
  else if (name == "part") cfg.part_lemmas = as_set();
  else if (name == "aux") cfg.aux_lemmas = as_set();
  else if (name == "fixed") cfg.fixed_expressions = as_phrases();
  else if (name == "fixed_legacy") cfg.legacy_fixed_expressions = as_phrases();
  else if (name == "interjection") cfg.interjections = as_set();
  else if (name == "placeholder_x") cfg.placeholder_x = as_set();
  else if (name == "placeholder_sym") cfg.placeholder_sym = as_set();
  else if (name == "relative_marker") cfg.relative_markers = as_set();
  else if (name == "upos") cfg.upos = as_set();
  else if (name == "deprel") cfg.deprels = as_set();
  else if (name == "genre") cfg.metadata.genre_vocab = as_set();
  else if (name == "dialect") cfg.metadata.dialect_order = items;
  else throw ConfigError("unknown lexicon '" + name + "'");
}

}  // namespace detail

/// Applies config lines from `in` on top of `cfg`. `base_dir` resolves
/// relative lexicon paths.
inline void apply_config(LintConfig& cfg, std::istream& in, const std::string& source,
                         const std::filesystem::path& base_dir = {}) {
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw ConfigError(source + ":" + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string_view::npos) fail("expected key = value");
    std::string key(text::trim(t.substr(0, eq)));
    std::string value(text::trim(t.substr(eq + 1)));

    try {
      if (key == "guideline_version") {
        auto v = GuidelineVersion::parse(value);
        if (!v) fail("bad guideline_version '" + value + "'");
        cfg.guideline_version = *v;
      } else if (key.starts_with("rule.") &&
                 (key.ends_with(".severity") || key.ends_with(".enabled"))) {
        bool sev = key.ends_with(".severity");
        auto id = key.substr(5, key.size() - 5 - (sev ? 9 : 8));
        if (!detail::known_rule_pattern(id)) fail("unknown rule '" + id + "'");
        if (sev) {
          auto s = parse_severity(value);
          if (!s) fail("bad severity '" + value + "'");
          cfg.severity_overrides[id] = *s;
        } else if (detail::parse_bool(value, key)) {
          cfg.disabled.erase(id);
          cfg.enabled.insert(id);
        } else {
          cfg.enabled.erase(id);
          cfg.disabled.insert(id);
        }
      } else if (key.starts_with("lexicon.") && key.ends_with(".path")) {
        auto name = key.substr(8, key.size() - 8 - 5);
        std::filesystem::path p(value);
        if (p.is_relative()) p = base_dir / p;
        if (name == "tokenizer") {
          cfg.tokenizer_lexicon_path = p.string();
        } else {
          detail::set_lexicon(cfg, name, detail::read_list_file(p));
        }
      } else if (key.starts_with("lexicon.")) {
        detail::set_lexicon(cfg, key.substr(8), detail::split_list(value));
      } else if (key == "lemma.punct_exempt") {
        cfg.punct_lemma_exempt = detail::parse_bool(value, key);
      } else if (key == "metadata.required") {
        cfg.metadata.required_keys = detail::split_list(value);
      } else if (key == "metadata.optional") {
        cfg.metadata.optional_keys = detail::split_list(value);
      } else if (key == "metadata.url_genres") {
        auto v = detail::split_list(value);
        cfg.metadata.url_genres = WordSet(v.begin(), v.end());
      } else {
        fail("unknown key '" + key + "'");
      }
    } catch (const ConfigError& e) {
      std::string what = e.what();
      if (what.starts_with(source + ":")) throw;
      fail(what);
    }
  }
  for (const auto& k : cfg.metadata.required_keys)
    for (const auto& o : cfg.metadata.optional_keys)
      if (k == o) throw ConfigError(source + ": metadata key '" + k + "' is both required and optional");
}

inline LintConfig load_config_file(const std::string& path, LintConfig base = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  apply_config(base, in, path, std::filesystem::path(path).parent_path());
  return base;
}

inline LintConfig parse_config(std::string_view text_, LintConfig base = {}) {
  std::istringstream in{std::string(text_)};
  apply_config(base, in, "<config>");
  return base;
}

}  // namespace maibaam

#endif  // MAIBAAM_CONFIG_HPP
