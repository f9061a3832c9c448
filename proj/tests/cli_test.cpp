#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "test_support.hpp"

using namespace maibaam;
using testing_support::fixture_path;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(RunOptions opt, const std::string& input = "") {
  opt.use_env_config = false;
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run(opt, in, out, err);
  return {code, out.str(), err.str()};
}

RunOptions lint_of(std::vector<std::string> inputs, ReportFormat f = ReportFormat::json) {
  RunOptions o;
  o.inputs = std::move(inputs);
  o.format = f;
  return o;
}

std::string golden() { return fixture_path("golden.conllu"); }
std::string durch() { return fixture_path("durch_des_fixed.conllu"); }

}  // namespace

TEST(Cli, CleanGoldenExitsZero) {
  auto r = run_cli(lint_of({golden()}, ReportFormat::human));
  EXPECT_EQ(r.code, kExitClean);
  EXPECT_EQ(r.out, "");
}

TEST(Cli, FindingsExitOneAndFailLevel) {
  auto r = run_cli(lint_of({durch()}, ReportFormat::human));
  EXPECT_EQ(r.code, kExitFindings);
  EXPECT_NE(r.out.find(":7: [error] REL.FIXED"), std::string::npos) << r.out;

  auto o = lint_of({durch()});
  o.guideline_version = "1.1";
  EXPECT_EQ(run_cli(o).code, kExitClean);

  // A review-only finding only fails at --fail-level review.
  auto input = testing_support::read_file(golden());
  auto pos = input.find("\tobj\t");
  ASSERT_NE(pos, std::string::npos);
  input.replace(pos, 5, "\tiobj\t");
  auto review = lint_of({"-"});
  EXPECT_EQ(run_cli(review, input).code, kExitClean);
  review.fail_level = Severity::review;
  EXPECT_EQ(run_cli(review, input).code, kExitFindings);
}

TEST(Cli, FailuresExitTwo) {
  EXPECT_EQ(run_cli(lint_of({"/nonexistent/x.conllu"})).code, kExitFailure);
  auto bad = run_cli(lint_of({"-"}), "1\tA\t_\tX\n\n");
  EXPECT_EQ(bad.code, kExitFailure);
  EXPECT_NE(bad.err.find("<stdin>"), std::string::npos);
  auto o = lint_of({golden()});
  o.config_path = "/nonexistent/lint.cfg";
  EXPECT_EQ(run_cli(o).code, kExitFailure);
  o.config_path.reset();
  o.guideline_version = "3.x";
  EXPECT_EQ(run_cli(o).code, kExitFailure);
  EXPECT_EQ(run_cli(lint_of({})).code, kExitFailure);
}

TEST(Cli, JsonReportShapeAndDeterminism) {
  auto a = run_cli(lint_of({durch(), golden()}));
  auto o = lint_of({golden(), durch()});
  o.jobs = 4;
  auto b = run_cli(o);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["version"], kReportSchemaVersion);
  ASSERT_EQ(j["findings"].size(), 1u);
  const auto& f = j["findings"][0];
  EXPECT_EQ(f["rule_id"], "REL.FIXED");
  EXPECT_EQ(f["severity"], "error");
  EXPECT_EQ(f["sentence_id"], "durch-des-1");
  EXPECT_EQ(f["line"], 7);
  EXPECT_EQ(f["token_id"], 1);
  EXPECT_EQ(j["summary"]["total"], 1);
  EXPECT_EQ(j["summary"]["error"], 1);
  EXPECT_EQ(j["summary"]["by_rule"]["REL.FIXED"], 1);
}

TEST(Cli, TsvReport) {
  auto r = run_cli(lint_of({durch()}, ReportFormat::tsv));
  std::istringstream lines(r.out);
  std::string header, row, extra;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header.rfind("file\tline\tsentence_id", 0), 0u);
  EXPECT_NE(row.find("\tREL.FIXED\t"), std::string::npos);
  EXPECT_FALSE(std::getline(lines, extra));
}

TEST(Cli, DuplicateIdsAcrossFiles) {
  auto r = run_cli(lint_of({golden(), golden()}));
  auto j = nlohmann::json::parse(r.out);
  std::size_t dups = 0;
  for (const auto& f : j["findings"]) {
    EXPECT_EQ(f["rule_id"], "META.DUP_ID");
    ++dups;
  }
  EXPECT_EQ(dups, 21u);
  EXPECT_EQ(r.code, kExitFindings);
}

TEST(Cli, StatsPartitionFindings) {
  auto o = lint_of({golden(), durch()});
  o.subcommand = Subcommand::stats;
  auto r = run_cli(o);
  EXPECT_EQ(r.code, kExitClean);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["sentences"], 22);
  std::size_t upos = 0, deprel = 0, genre = 0;
  for (auto& [k, v] : j["upos"].items()) upos += v.get<std::size_t>();
  for (auto& [k, v] : j["deprel"].items()) deprel += v.get<std::size_t>();
  for (auto& [k, v] : j["genre"].items()) genre += v.get<std::size_t>();
  EXPECT_EQ(upos, j["tokens"].get<std::size_t>());
  EXPECT_EQ(deprel, j["tokens"].get<std::size_t>());
  EXPECT_EQ(genre, 22u);
  EXPECT_EQ(j["findings"], 1);
}

TEST(Cli, TokenizeThenLint) {
  RunOptions t;
  t.subcommand = Subcommand::tokenize;
  t.inputs = {"-"};
  auto tok = run_cli(t, "Er gibts zum Bahnhof.\n\nWiera kimmt, dassd woaßt.\n");
  ASSERT_EQ(tok.code, kExitClean) << tok.err;
  EXPECT_NE(tok.out.find("# sent_id = stdin-1\n"), std::string::npos);
  EXPECT_NE(tok.out.find("# sent_id = stdin-2\n"), std::string::npos);
  EXPECT_NE(tok.out.find("4-5\tzum"), std::string::npos);

  auto lint = run_cli(lint_of({"-"}), tok.out);
  EXPECT_EQ(lint.code, kExitClean) << lint.out;
  auto j = nlohmann::json::parse(lint.out);
  for (const auto& f : j["findings"]) {
    auto id = f["rule_id"].get<std::string>();
    EXPECT_TRUE(id == "LEMMA.MISSING" || id == "META.MISSING") << id;
  }
}

TEST(Cli, ExtraLexiconFile) {
  auto path = std::filesystem::temp_directory_path() / "maibaam_extra_lex.tsv";
  std::ofstream(path) << "dahoam\tabbreviation\tda|hoam\tADV|ADV\n";
  RunOptions t;
  t.subcommand = Subcommand::tokenize;
  t.inputs = {"-"};
  t.lexicon_path = path.string();
  auto r = run_cli(t, "dahoam\n");
  EXPECT_NE(r.out.find("\tda\t"), std::string::npos) << r.out;
  t.lexicon_path = "/nonexistent.tsv";
  EXPECT_EQ(run_cli(t, "dahoam\n").code, kExitFailure);
  std::filesystem::remove(path);
}

TEST(Cli, RuleCatalogListsEveryRule) {
  RunOptions o;
  o.subcommand = Subcommand::list_rules;
  auto r = run_cli(o);
  EXPECT_EQ(r.code, kExitClean);
  for (const auto& rule : rule_catalog())
    EXPECT_NE(r.out.find(rule.rule_id + "\t"), std::string::npos) << rule.rule_id;
}
