#ifndef MAIBAAM_CLI_HPP
#define MAIBAAM_CLI_HPP

// Command driver behind the maibaam-lint executable. Argument parsing lives
// in the executable; everything here takes explicit streams so it can be
// exercised from tests.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "maibaam/config.hpp"
#include "maibaam/conllu.hpp"
#include "maibaam/lexicon.hpp"
#include "maibaam/lint.hpp"
#include "maibaam/report.hpp"
#include "maibaam/stats.hpp"
#include "maibaam/tokenizer.hpp"

namespace maibaam {

enum class Subcommand { lint, tokenize, stats, list_rules };

struct RunOptions {
  Subcommand subcommand = Subcommand::lint;
  std::vector<std::string> inputs;  // "-" reads standard input
  ReportFormat format = ReportFormat::human;
  std::optional<std::string> config_path;
  Severity fail_level = Severity::error;
  std::optional<std::string> guideline_version;
  std::optional<std::string> lexicon_path;
  unsigned jobs = 0;  // 0 = hardware concurrency
  bool use_env_config = true;
};

inline constexpr int kExitClean = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitFailure = 2;

namespace detail {

inline constexpr const char* kStdinName = "<stdin>";

struct Loaded {
  std::string name;
  std::optional<Document> doc;
  std::vector<Diagnostic> findings;
  std::string error;
};

inline std::optional<std::string> read_input(const std::string& path, std::istream& in,
                                             std::string& error) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream f(path, std::ios::binary);
  if (!f || std::filesystem::is_directory(path)) {
    error = "cannot read '" + path + "'";
    return std::nullopt;
  }
  std::string data(std::istreambuf_iterator<char>(f), {});
  if (f.bad()) {
    error = "cannot read '" + path + "'";
    return std::nullopt;
  }
  return data;
}

inline std::string display_name(const std::string& path) {
  return path == "-" ? kStdinName : path;
}

/// Reads, parses and lints every input on a small worker pool. Results are
/// indexed by input position, so scheduling never affects the output.
inline std::vector<Loaded> load_all(const RunOptions& opt, const LintConfig& cfg,
                                    std::istream& in, bool lint) {
  std::vector<Loaded> out(opt.inputs.size());
  std::vector<std::optional<std::string>> data(opt.inputs.size());
  // Standard input is read up front on the calling thread.
  for (std::size_t i = 0; i < opt.inputs.size(); ++i) {
    out[i].name = display_name(opt.inputs[i]);
    if (opt.inputs[i] == "-") data[i] = read_input("-", in, out[i].error);
  }
  auto work = [&](std::size_t i) {
    auto& r = out[i];
    if (opt.inputs[i] != "-") data[i] = read_input(opt.inputs[i], in, r.error);
    if (!data[i]) return;
    try {
      r.doc = parse_document(std::string_view(*data[i]), r.name);
      if (lint) r.findings = lint_document(*r.doc, cfg);
    } catch (const ParseError& e) {
      r.error = e.what();
    }
    data[i].reset();
  };
  unsigned workers = opt.jobs ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, opt.inputs.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < out.size(); ++i) work(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < out.size();) work(i);
    });
  for (auto& t : pool) t.join();
  return out;
}

inline LintConfig resolve_config(const RunOptions& opt) {
  LintConfig cfg;
  std::optional<std::string> path = opt.config_path;
  if (!path && opt.use_env_config)
    if (const char* env = std::getenv("MAIBAAM_LINT_CONFIG"); env && *env) path = env;
  if (path) cfg = load_config_file(*path);
  if (opt.guideline_version) {
    auto v = GuidelineVersion::parse(*opt.guideline_version);
    if (!v) throw ConfigError("bad guideline version '" + *opt.guideline_version + "'");
    cfg.guideline_version = *v;
  }
  return cfg;
}

inline TokenizerLexicon resolve_lexicon(const RunOptions& opt, const LintConfig& cfg) {
  TokenizerLexicon lex = TokenizerLexicon::builtin();
  for (const auto& p : {cfg.tokenizer_lexicon_path, opt.lexicon_path}) {
    if (!p) continue;
    std::ifstream f(*p, std::ios::binary);
    if (!f) throw LexiconError(*p, 0, "cannot open lexicon file");
    lex.merge(f, *p);
  }
  return lex;
}

/// Placeholder tree for a tokenizer skeleton: the first non-punctuation word
/// is the root, every other word hangs off the closest preceding
/// non-punctuation word (or the root).
inline void attach_skeleton(Sentence& s) {
  int root = 1;
  for (const auto& t : s.tokens)
    if (t.upos != "PUNCT") {
      root = t.id;
      break;
    }
  int last_word = 0;
  for (auto& t : s.tokens) {
    if (t.upos == "_") t.upos = "X";
    if (t.id == root) {
      t.head = 0;
      t.deprel = "root";
    } else {
      t.head = last_word ? last_word : root;
      t.deprel = t.upos == "PUNCT" ? "punct" : "dep";
    }
    if (t.upos != "PUNCT" || t.id == root) last_word = t.id;
  }
}

inline std::string id_stem(const std::string& name) {
  if (name == kStdinName) return "stdin";
  auto stem = std::filesystem::path(name).stem().string();
  return stem.empty() ? "s" : stem;
}

}  // namespace detail

inline int run_tokenize(const RunOptions& opt, std::istream& in, std::ostream& out,
                        std::ostream& err) {
  LintConfig cfg = detail::resolve_config(opt);
  TokenizerLexicon lex = detail::resolve_lexicon(opt, cfg);
  std::string result;
  int status = kExitClean;
  for (const auto& path : opt.inputs) {
    std::string error;
    auto data = detail::read_input(path, in, error);
    if (!data) {
      err << "maibaam-lint: " << error << '\n';
      status = kExitFailure;
      continue;
    }
    auto name = detail::display_name(path);
    std::istringstream lines(*data);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (text::trim(line).empty()) continue;
      Sentence s = tokenize_sentence(line, lex);
      detail::attach_skeleton(s);
      s.comments.insert(s.comments.begin(),
                        {"# sent_id = " + detail::id_stem(name) + "-" + std::to_string(++n), 0});
      result += serialize_sentence(s);
    }
  }
  out << result;
  return status;
}

inline int run(const RunOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (opt.subcommand == Subcommand::list_rules) {
      out << format_rule_catalog();
      return kExitClean;
    }
    if (opt.inputs.empty()) {
      err << "maibaam-lint: no input files\n";
      return kExitFailure;
    }
    if (opt.subcommand == Subcommand::tokenize) return run_tokenize(opt, in, out, err);

    LintConfig cfg = detail::resolve_config(opt);
    auto loaded = detail::load_all(opt, cfg, in, true);

    bool failed = false;
    std::vector<Diagnostic> findings;
    std::vector<Document> docs;
    for (auto& r : loaded) {
      if (!r.error.empty()) {
        err << "maibaam-lint: " << r.error << '\n';
        failed = true;
        continue;
      }
      for (auto& d : r.findings) findings.push_back(std::move(d));
      docs.push_back(std::move(*r.doc));
    }
    std::vector<const Document*> ptrs;
    for (const auto& d : docs) ptrs.push_back(&d);
    for (auto& d : lint_run(ptrs, cfg)) findings.push_back(std::move(d));
    sort_diagnostics(findings);

    if (opt.subcommand == Subcommand::stats) {
      out << format_stats(compute_stats(docs, findings), opt.format);
      return failed ? kExitFailure : kExitClean;
    }

    out << format_findings(findings, opt.format);
    if (failed) return kExitFailure;
    auto worst = max_severity(findings);
    return worst && *worst >= opt.fail_level ? kExitFindings : kExitClean;
  } catch (const ConfigError& e) {
    err << "maibaam-lint: " << e.what() << '\n';
  } catch (const LexiconError& e) {
    err << "maibaam-lint: " << e.what() << '\n';
  } catch (const TokenizeError& e) {
    err << "maibaam-lint: " << e.what() << '\n';
  }
  return kExitFailure;
}

}  // namespace maibaam

#endif  // MAIBAAM_CLI_HPP
