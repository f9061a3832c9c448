#ifndef MAIBAAM_REPORT_HPP
#define MAIBAAM_REPORT_HPP

// Report writers. All output is a pure function of the (sorted) findings.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"  // vendored nlohmann/json

#include "maibaam/catalog.hpp"
#include "maibaam/diagnostic.hpp"
#include "maibaam/stats.hpp"

namespace maibaam {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { human, json, tsv };

inline std::optional<ReportFormat> parse_report_format(std::string_view s) {
  if (s == "human") return ReportFormat::human;
  if (s == "json") return ReportFormat::json;
  if (s == "tsv") return ReportFormat::tsv;
  return std::nullopt;
}

namespace detail {

// TSV cells never contain tabs or newlines.
inline std::string cell(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return out;
}

inline nlohmann::ordered_json counts_json(const Counts& c) {
  auto j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c) j[k] = v;
  return j;
}

}  // namespace detail

inline std::string format_human(const std::vector<Diagnostic>& ds) {
  std::string out;
  for (const auto& d : ds) {
    out += d.file + ":" + std::to_string(d.line) + ": [" + std::string(to_string(d.severity)) +
           "] " + d.rule_id + " " + d.message;
    if (d.guideline_ref) out += " (guideline: " + *d.guideline_ref + ")";
    out += '\n';
  }
  return out;
}

inline nlohmann::ordered_json diagnostic_json(const Diagnostic& d) {
  nlohmann::ordered_json j;
  j["rule_id"] = d.rule_id;
  j["severity"] = to_string(d.severity);
  j["file"] = d.file;
  j["line"] = d.line;
  j["sentence_id"] = d.sentence_id;
  j["token_id"] = d.token_id ? nlohmann::ordered_json(*d.token_id) : nullptr;
  j["message"] = d.message;
  j["guideline_ref"] = d.guideline_ref ? nlohmann::ordered_json(*d.guideline_ref) : nullptr;
  return j;
}

inline std::string format_json(const std::vector<Diagnostic>& ds) {
  nlohmann::ordered_json root;
  root["version"] = kReportSchemaVersion;
  root["findings"] = nlohmann::ordered_json::array();
  Counts by_rule;
  std::size_t per_sev[3] = {0, 0, 0};
  for (const auto& d : ds) {
    root["findings"].push_back(diagnostic_json(d));
    ++by_rule[d.rule_id];
    ++per_sev[static_cast<int>(d.severity)];
  }
  auto& sum = root["summary"];
  sum["total"] = ds.size();
  sum["error"] = per_sev[2];
  sum["warning"] = per_sev[1];
  sum["review"] = per_sev[0];
  sum["by_rule"] = detail::counts_json(by_rule);
  return root.dump(2) + "\n";
}

inline std::string format_tsv(const std::vector<Diagnostic>& ds) {
  std::string out = "file\tline\tsentence_id\ttoken_id\tseverity\trule_id\tmessage\tguideline_ref\n";
  for (const auto& d : ds) {
    out += detail::cell(d.file) + '\t' + std::to_string(d.line) + '\t' +
           detail::cell(d.sentence_id) + '\t' +
           (d.token_id ? std::to_string(*d.token_id) : std::string("_")) + '\t' +
           std::string(to_string(d.severity)) + '\t' + d.rule_id + '\t' +
           detail::cell(d.message) + '\t' + detail::cell(d.guideline_ref.value_or("_")) + '\n';
  }
  return out;
}

inline std::string format_findings(const std::vector<Diagnostic>& ds, ReportFormat f) {
  switch (f) {
    case ReportFormat::json: return format_json(ds);
    case ReportFormat::tsv: return format_tsv(ds);
    case ReportFormat::human: break;
  }
  return format_human(ds);
}

inline std::string format_rule_catalog() {
  std::string out = "rule_id\tseverity\tguideline_ref\tdescription\n";
  for (const auto& r : rule_catalog())
    out += r.rule_id + '\t' + std::string(to_string(r.default_severity)) + '\t' +
           r.guideline_ref + '\t' + r.description + '\n';
  return out;
}

inline std::string format_stats(const CorpusStats& st, ReportFormat f) {
  if (f == ReportFormat::json) {
    nlohmann::ordered_json j;
    j["version"] = kReportSchemaVersion;
    j["sentences"] = st.sentences;
    j["tokens"] = st.tokens;
    j["mwt_spans"] = st.mwt_spans;
    j["findings"] = st.findings();
    j["upos"] = detail::counts_json(st.by_upos);
    j["deprel"] = detail::counts_json(st.by_deprel);
    j["genre"] = detail::counts_json(st.by_genre);
    j["dialect_group"] = detail::counts_json(st.by_dialect_group);
    j["rules"] = detail::counts_json(st.by_rule);
    return j.dump(2) + "\n";
  }
  // human and tsv share the section\tkey\tcount layout
  std::string out = "section\tkey\tcount\n";
  auto row = [&](std::string_view sec, std::string_view key, std::size_t n) {
    out += std::string(sec) + '\t' + detail::cell(key) + '\t' + std::to_string(n) + '\n';
  };
  row("total", "sentences", st.sentences);
  row("total", "tokens", st.tokens);
  row("total", "mwt_spans", st.mwt_spans);
  row("total", "findings", st.findings());
  for (const auto& [k, v] : st.by_upos) row("upos", k, v);
  for (const auto& [k, v] : st.by_deprel) row("deprel", k, v);
  for (const auto& [k, v] : st.by_genre) row("genre", k, v);
  for (const auto& [k, v] : st.by_dialect_group) row("dialect_group", k, v);
  for (const auto& [k, v] : st.by_rule) row("rule", k, v);
  return out;
}

}  // namespace maibaam

#endif  // MAIBAAM_REPORT_HPP
