#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "maibaam/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Lint MaiBaam-style CoNLL-U treebanks and tokenize Bavarian text"};
  app.set_version_flag("--version", maibaam::kToolVersion);
  app.require_subcommand(0, 1);
  app.fallthrough();

  maibaam::RunOptions opt;
  std::string format = "human";
  std::string fail_level = "error";
  std::string config, version, lexicon;
  bool list_rules = false;

  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"human", "json", "tsv"}));
  app.add_option("--config", config, "Config file (fallback: $MAIBAAM_LINT_CONFIG)");
  app.add_option("--fail-level", fail_level, "Lowest severity that makes the exit code 1")
      ->check(CLI::IsMember({"error", "warning", "review"}));
  app.add_option("--guideline-version", version, "Guideline version, e.g. 2.17 or 1.1");
  app.add_option("--lexicon", lexicon, "Extra tokenizer lexicon (TSV)");
  app.add_option("-j,--jobs", opt.jobs, "Worker threads (0 = all cores)");
  app.add_flag("--list-rules", list_rules, "Print the rule catalog and exit");

  std::vector<std::string> files;
  auto* lint = app.add_subcommand("lint", "Check CoNLL-U files");
  lint->add_option("files", files, "Input files, '-' for standard input")->required();
  auto* tokenize = app.add_subcommand("tokenize", "Split plain text into CoNLL-U skeletons");
  tokenize->add_option("files", files, "Text files, one sentence per line")->required();
  auto* stats = app.add_subcommand("stats", "Count tags, relations and findings");
  stats->add_option("files", files, "Input files")->required();
  auto* rules = app.add_subcommand("list-rules", "Print the rule catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : maibaam::kExitFailure;
  }

  if (list_rules || rules->parsed())
    opt.subcommand = maibaam::Subcommand::list_rules;
  else if (tokenize->parsed())
    opt.subcommand = maibaam::Subcommand::tokenize;
  else if (stats->parsed())
    opt.subcommand = maibaam::Subcommand::stats;
  else if (lint->parsed())
    opt.subcommand = maibaam::Subcommand::lint;
  else {
    std::cerr << app.help();
    return maibaam::kExitFailure;
  }

  opt.inputs = files;
  opt.format = *maibaam::parse_report_format(format);
  opt.fail_level = *maibaam::parse_severity(fail_level);
  if (!config.empty()) opt.config_path = config;
  if (!version.empty()) opt.guideline_version = version;
  if (!lexicon.empty()) opt.lexicon_path = lexicon;

  std::ios::sync_with_stdio(false);
  return maibaam::run(opt, std::cin, std::cout, std::cerr);
}
