#ifndef MAIBAAM_CATALOG_HPP
#define MAIBAAM_CATALOG_HPP

// The shipped rule catalog. Guideline references name the section of the
// MaiBaam annotation guidelines a rule enforces; "structural" marks plain
// CoNLL-U well-formedness.

#include <string>
#include <string_view>
#include <vector>

#include "maibaam/diagnostic.hpp"

namespace maibaam {

struct RuleDescriptor {
  std::string rule_id;
  Severity default_severity;
  std::string guideline_ref;
  std::string description;
  bool enabled_default = true;
};

inline const std::vector<RuleDescriptor>& rule_catalog() {
  using S = Severity;
  static const std::vector<RuleDescriptor> rules = {
      {"CLASS.AUX", S::error, "Auxiliary tua", "AUX requires an auxiliary GermanLemma"},
      {"CLASS.COP", S::error, "Copula", "cop requires the GermanLemma sein"},
      {"CLASS.DUMMY", S::review, "Dummy names",
       "dummy placeholder should be X, ellipsis placeholder SYM"},
      {"CLASS.PART", S::error, "Modal particles", "PART is reserved for nicht and zu"},
      {"CLASS.PLACEHOLDER", S::error, "Anonymized names", "USERNAME is tagged PROPN"},
      {"CORE.BOM", S::warning, "structural", "byte-order mark at start of file"},
      {"CORE.COLUMNS", S::warning, "General remarks",
       "LEMMA, XPOS and FEATS stay empty (FEATS may carry Typo=Yes)"},
      {"CORE.ENHANCED_UNSUPPORTED", S::warning, "General remarks",
       "empty nodes and enhanced dependencies are not annotated"},
      {"LEMMA.MISSING", S::warning, "Lemmas", "word lacks GermanLemma in MISC"},
      {"LEMMA.NIMMA", S::error, "Lemmas", "nimma takes the GermanLemma 'nicht mehr'"},
      {"LEMMA.ON_MWT", S::error, "Lemmas", "multi-word token lines carry no GermanLemma"},
      {"META.DIALECT", S::error, "Metadata", "dialect_group outside the allowed values"},
      {"META.DIALECT_ORDER", S::error, "Metadata",
       "unk (...) elaboration not sorted from north to south"},
      {"META.DUP_ID", S::error, "Metadata", "sent_id repeated within the run"},
      {"META.GENRE", S::error, "Metadata", "genre outside the allowed values"},
      {"META.MISSING", S::warning, "Metadata", "required metadata key absent"},
      {"META.SOURCE", S::warning, "Metadata", "wiki/social source is not an absolute URL"},
      {"META.TEXT_MISMATCH", S::error, "Metadata",
       "text differs from the text rebuilt from the words"},
      {"MWT.ARITY", S::error, "Multi-word tokens", "multi-word token covers a single word"},
      {"MWT.SURFACE", S::error, "Multi-word tokens",
       "word forms do not concatenate to the multi-word token"},
      {"REL.FIXED", S::error, "Fixed expressions",
       "fixed only for whitelisted expressions, dependents right after the head"},
      {"REL.GOESWITH", S::error, "Typos",
       "goeswith follows a Typo=Yes head; only the head has a GermanLemma"},
      {"REL.RELMARK", S::error, "Relative pronouns and particles",
       "relative marker with mark is SCONJ, never PRON"},
      {"REVIEW.APPOS_ORDER", S::review, "Parataxis or apposition",
       "appos dependent precedes its head"},
      {"REVIEW.INTJ", S::review, "Interjections", "interjection word not tagged INTJ"},
      {"REVIEW.IOBJ", S::review, "Notes on specific dependency relations",
       "iobj is reserved for a second accusative object"},
      {"STRUCT.CYCLE", S::error, "structural", "head chain contains a cycle"},
      {"STRUCT.HEAD_RANGE", S::error, "structural", "head outside the sentence"},
      {"STRUCT.MULTI_ROOT", S::error, "structural", "more than one word attached to the root"},
      {"STRUCT.MWT_OVERLAP", S::error, "structural", "multi-word token ranges overlap"},
      {"STRUCT.NO_ROOT", S::error, "structural", "no word attached to the root"},
      {"STRUCT.PUNCT_CHILD", S::error, "structural", "word attached to punctuation"},
      {"STRUCT.ROOT_DEPREL", S::error, "structural", "root word without the relation root"},
      {"TYPO.CORRECT_SPACE", S::error, "Typos",
       "CorrectSpaceAfter=Yes requires SpaceAfter=No"},
      {"TYPO.REVIEW", S::review, "Typos", "Typo=Yes on a word without goeswith parts"},
      {"VOCAB.DEPREL", S::error, "Syntactic dependencies",
       "relation outside the closed set, or root below the root"},
      {"VOCAB.UPOS", S::error, "POS tags", "UPOS outside the 17 universal tags"},
  };
  return rules;
}

inline const RuleDescriptor* find_rule(std::string_view id) {
  for (const auto& r : rule_catalog())
    if (r.rule_id == id) return &r;
  return nullptr;
}

/// "LEMMA" for "LEMMA.MISSING".
inline std::string_view rule_family(std::string_view id) {
  auto dot = id.find('.');
  return dot == std::string_view::npos ? id : id.substr(0, dot);
}

}  // namespace maibaam

#endif  // MAIBAAM_CATALOG_HPP
