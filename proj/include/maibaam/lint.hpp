#ifndef MAIBAAM_LINT_HPP
#define MAIBAAM_LINT_HPP

#include <vector>

#include "maibaam/config.hpp"
#include "maibaam/conllu.hpp"
#include "maibaam/metadata.hpp"
#include "maibaam/rules.hpp"
#include "maibaam/tree.hpp"

namespace maibaam {

/// Drops disabled rules, applies severity overrides and sorts.
inline void finalize_findings(std::vector<Diagnostic>& ds, const LintConfig& cfg) {
  std::erase_if(ds, [&](const Diagnostic& d) { return !cfg.is_enabled(d.rule_id); });
  for (auto& d : ds) d.severity = cfg.severity_of(d.rule_id);
  sort_diagnostics(ds);
}

namespace detail {

inline void collect_sentence(const Sentence& s, const LintConfig& cfg,
                             std::vector<Diagnostic>& out) {
  for (auto& d : validate_structure(s)) out.push_back(std::move(d));
  RuleSink sink(s);
  for (auto rule : sentence_rules()) rule(s, cfg, sink);
  for (auto& d : sink.out()) out.push_back(std::move(d));
  for (auto& d : validate_metadata(s, cfg.metadata)) out.push_back(std::move(d));
}

}  // namespace detail

inline std::vector<Diagnostic> lint_sentence(const Sentence& s, const LintConfig& cfg = {}) {
  std::vector<Diagnostic> out;
  detail::collect_sentence(s, cfg, out);
  finalize_findings(out, cfg);
  return out;
}

/// Findings for one file, without the cross-file sent_id check.
inline std::vector<Diagnostic> lint_document(const Document& doc, const LintConfig& cfg = {}) {
  std::vector<Diagnostic> out = doc.notices;
  for (const auto& s : doc.sentences) detail::collect_sentence(s, cfg, out);
  finalize_findings(out, cfg);
  return out;
}

/// Run-level findings: duplicate sent_ids across all documents.
inline std::vector<Diagnostic> lint_run(const std::vector<const Document*>& docs,
                                        const LintConfig& cfg = {}) {
  std::vector<const Sentence*> all;
  for (const auto* d : docs)
    for (const auto& s : d->sentences) all.push_back(&s);
  auto out = duplicate_sentence_ids(all);
  finalize_findings(out, cfg);
  return out;
}

inline std::vector<Diagnostic> lint_documents(const std::vector<Document>& docs,
                                              const LintConfig& cfg = {}) {
  std::vector<Diagnostic> out;
  std::vector<const Document*> ptrs;
  for (const auto& d : docs) {
    for (auto& x : lint_document(d, cfg)) out.push_back(std::move(x));
    ptrs.push_back(&d);
  }
  for (auto& x : lint_run(ptrs, cfg)) out.push_back(std::move(x));
  sort_diagnostics(out);
  return out;
}

}  // namespace maibaam

#endif  // MAIBAAM_LINT_HPP
