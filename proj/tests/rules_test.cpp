#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace maibaam;
using testing_support::make_sentence;
using testing_support::Row;
using testing_support::rule_ids;
using V = std::vector<std::string>;

namespace {

LintConfig no_meta() {
  LintConfig cfg;
  cfg.disabled.insert("META.*");
  return cfg;
}

V lint_ids(const Sentence& s, const LintConfig& cfg = no_meta()) {
  return rule_ids(lint_sentence(s, cfg));
}

Sentence copula(const std::string& lemma) {
  auto s = make_sentence({{"Des", "PRON", 3, "nsubj"}, {"is", "AUX", 3, "cop"},
                          {"schee", "ADJ", 0, "root"}});
  s.tokens[1].misc.set("GermanLemma", lemma);
  return s;
}

}  // namespace

TEST(Rules, CleanSentence) { EXPECT_TRUE(lint_ids(copula("sein")).empty()); }

TEST(Rules, Copula) {
  EXPECT_EQ(lint_ids(copula("werden")), V{"CLASS.COP"});
  auto aux_ok = copula("werden");
  aux_ok.tokens[1].deprel = "aux";
  EXPECT_TRUE(lint_ids(aux_ok).empty());
}

TEST(Rules, ParticleAndAuxiliary) {
  auto s = make_sentence({{"I", "PRON", 2, "nsubj"}, {"geh", "VERB", 0, "root"},
                          {"fei", "PART", 2, "advmod"}, {"ned", "PART", 2, "advmod"}});
  s.tokens[3].misc.set("GermanLemma", "nicht");
  EXPECT_EQ(lint_ids(s), V{"CLASS.PART"});

  auto a = make_sentence({{"I", "PRON", 3, "nsubj"}, {"dad", "AUX", 3, "aux"},
                          {"geh", "VERB", 0, "root"}});
  a.tokens[1].misc.set("GermanLemma", "tun");
  EXPECT_TRUE(lint_ids(a).empty());
  a.tokens[1].misc.set("GermanLemma", "gehen");
  EXPECT_EQ(lint_ids(a), V{"CLASS.AUX"});
}

TEST(Rules, Vocabulary) {
  auto s = make_sentence({{"Haxn", "ADJD", 0, "root"}});
  EXPECT_EQ(lint_ids(s), V{"VOCAB.UPOS"});
  auto d = make_sentence({{"Se", "PRON", 2, "subj"}, {"hom", "VERB", 0, "root"}});
  EXPECT_EQ(lint_ids(d), V{"VOCAB.DEPREL"});
  auto r = make_sentence({{"a", "NOUN", 2, "root"}, {"b", "NOUN", 0, "root"}});
  EXPECT_EQ(lint_ids(r), V{"VOCAB.DEPREL"});
}

TEST(Rules, Placeholders) {
  auto u = make_sentence({{"USERNAME", "NOUN", 0, "root"}});
  EXPECT_EQ(lint_ids(u), V{"CLASS.PLACEHOLDER"});
  auto x = make_sentence({{"Film", "NOUN", 0, "root"}, {"A", "PROPN", 1, "appos"}});
  EXPECT_EQ(lint_ids(x), V{"CLASS.DUMMY"});
  x.tokens[1].upos = "X";
  EXPECT_TRUE(lint_ids(x).empty());
  auto e = make_sentence({{"Buach", "NOUN", 0, "root"}, {"...", "PUNCT", 1, "appos"}});
  EXPECT_EQ(lint_ids(e), V{"CLASS.DUMMY"});
}

TEST(Rules, Lemmas) {
  auto s = make_sentence({{"Des", "PRON", 0, "root"}, {".", "PUNCT", 1, "punct"}});
  s.tokens[0].misc.erase("GermanLemma");
  EXPECT_EQ(lint_ids(s), V{"LEMMA.MISSING"});
  auto n = make_sentence({{"nimma", "ADV", 0, "root"}});
  EXPECT_EQ(lint_ids(n), V{"LEMMA.NIMMA"});
  n.tokens[0].misc.set("GermanLemma", "nicht mehr");
  EXPECT_TRUE(lint_ids(n).empty());
}

TEST(Rules, LemmaOnSpanAndSpanShape) {
  auto s = make_sentence({{"zu", "ADP", 3, "case"}, {"m", "DET", 3, "det"},
                          {"Bahnhof", "NOUN", 0, "root"}});
  MwtSpan span;
  span.surface_form = "zum";
  s.mwt_spans.push_back(span);
  EXPECT_TRUE(lint_ids(s).empty());
  s.mwt_spans[0].misc.set("GermanLemma", "zu dem");
  EXPECT_EQ(lint_ids(s), V{"LEMMA.ON_MWT"});
  s.mwt_spans[0].misc = {};
  s.mwt_spans[0].surface_form = "zun";
  EXPECT_EQ(lint_ids(s), V{"MWT.SURFACE"});
  s.mwt_spans[0].surface_form = "zu";
  s.mwt_spans[0].last_id = 1;
  EXPECT_EQ(lint_ids(s), V{"MWT.ARITY"});
}

TEST(Rules, TyposAndGoeswith) {
  auto s = make_sentence({{"Er", "PRON", 2, "nsubj"}, {"wüll", "VERB", 0, "root"},
                          {"dass", "SCONJ", 5, "mark"}, {"d", "X", 3, "goeswith"},
                          {"redst", "VERB", 2, "ccomp"}});
  s.tokens[2].feats_col = "Typo=Yes";
  s.tokens[3].misc.erase("GermanLemma");
  EXPECT_TRUE(lint_ids(s).empty());

  auto no_typo = s;
  no_typo.tokens[2].feats_col = "_";
  EXPECT_EQ(lint_ids(no_typo), V{"REL.GOESWITH"});

  auto lemma = s;
  lemma.tokens[3].misc.set("GermanLemma", "du");
  EXPECT_EQ(lint_ids(lemma), V{"REL.GOESWITH"});

  auto lonely = s;
  lonely.tokens[3].deprel = "dep";
  lonely.tokens[3].misc.set("GermanLemma", "du");
  EXPECT_EQ(lint_ids(lonely), V{"TYPO.REVIEW"});

  auto space = make_sentence({{"Se", "PRON", 0, "root"}});
  space.tokens[0].misc.set("CorrectSpaceAfter", "Yes");
  EXPECT_EQ(lint_ids(space), V{"TYPO.CORRECT_SPACE"});
  space.tokens[0].misc.set("SpaceAfter", "No");
  EXPECT_TRUE(lint_ids(space).empty());
}

TEST(Rules, FixedWhitelist) {
  auto s = make_sentence({{"a", "DET", 3, "det"}, {"bissl", "ADV", 1, "fixed"},
                          {"Zeit", "NOUN", 0, "root"}});
  s.tokens[0].misc.set("GermanLemma", "ein");
  s.tokens[1].misc.set("GermanLemma", "bisschen");
  EXPECT_TRUE(lint_ids(s).empty());
  s.tokens[1].misc.set("GermanLemma", "bisserl");
  EXPECT_EQ(lint_ids(s), V{"REL.FIXED"});

  auto gap = make_sentence({{"und", "CCONJ", 0, "root"}, {"a", "DET", 1, "dep"},
                            {"zwar", "ADV", 1, "fixed"}});
  EXPECT_EQ(lint_ids(gap), V{"REL.FIXED"});
}

TEST(Rules, LegacyFixedIsVersionGated) {
  auto s = make_sentence({{"fir", "ADP", 3, "mark"}, {"des", "PRON", 1, "fixed"},
                          {"arwat", "VERB", 0, "root"}});
  LintConfig old = no_meta();
  old.guideline_version = *GuidelineVersion::parse("1.1");
  EXPECT_TRUE(lint_ids(s, old).empty());
  EXPECT_EQ(lint_ids(s), V{"REL.FIXED"});
  old.guideline_version = *GuidelineVersion::parse("1.2");
  EXPECT_EQ(lint_ids(s, old), V{"REL.FIXED"});
}

TEST(Rules, RelativeMarker) {
  auto s = make_sentence({{"Junge", "NOUN", 0, "root"}, {"wo", "PRON", 3, "mark"},
                          {"vastenga", "VERB", 1, "acl:relcl"}});
  EXPECT_EQ(lint_ids(s), V{"REL.RELMARK"});
  s.tokens[1].upos = "SCONJ";
  EXPECT_TRUE(lint_ids(s).empty());
  s.tokens[1].upos = "PRON";
  s.tokens[1].deprel = "nsubj";
  EXPECT_TRUE(lint_ids(s).empty());
}

TEST(Rules, ReviewHints) {
  auto s = make_sentence({{"gib", "VERB", 0, "root"}, {"mia", "PRON", 1, "iobj"},
                          {"gell", "PART", 1, "discourse"}});
  s.tokens[2].misc.set("GermanLemma", "nicht");
  EXPECT_EQ(lint_ids(s), (V{"REVIEW.IOBJ", "REVIEW.INTJ"}));
  auto a = make_sentence({{"A", "X", 2, "appos"}, {"Film", "NOUN", 0, "root"}});
  EXPECT_EQ(lint_ids(a), V{"REVIEW.APPOS_ORDER"});
}

TEST(Rules, ColumnsAndEnhanced) {
  auto s = make_sentence({{"Haus", "NOUN", 0, "root"}});
  s.tokens[0].lemma_col = "Haus";
  EXPECT_EQ(lint_ids(s), V{"CORE.COLUMNS"});
  s.tokens[0].lemma_col = "_";
  s.tokens[0].deps_col = "0:root";
  EXPECT_EQ(lint_ids(s), V{"CORE.ENHANCED_UNSUPPORTED"});
}

TEST(Rules, SeverityOverrideAndDisable) {
  auto s = copula("werden");
  auto cfg = no_meta();
  cfg.severity_overrides["CLASS.*"] = Severity::review;
  auto ds = lint_sentence(s, cfg);
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].severity, Severity::review);
  cfg.severity_overrides["CLASS.COP"] = Severity::warning;
  EXPECT_EQ(lint_sentence(s, cfg)[0].severity, Severity::warning);
  cfg.disabled.insert("CLASS.COP");
  EXPECT_TRUE(lint_sentence(s, cfg).empty());
}

TEST(Rules, DiagnosticsCarryLocation) {
  auto s = copula("werden");
  auto ds = lint_sentence(s, no_meta());
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].file, "t.conllu");
  EXPECT_EQ(ds[0].line, 2);
  EXPECT_EQ(ds[0].token_id, 2);
  EXPECT_EQ(ds[0].guideline_ref, "Copula");
}

// Adding a finding-triggering edit to one sentence never removes findings of
// another, and repeating an edit never lowers the count.
TEST(Rules, FindingsAreMonotoneUnderAddedFaults) {
  auto doc = testing_support::load_fixture("golden.conllu");
  LintConfig cfg;
  std::size_t before = lint_document(doc, cfg).size();
  auto& s = testing_support::sentence_by_id(doc, "wiki-fiisch-1");
  testing_support::token_by_form(s, "Haxn").upos = "ADJD";
  std::size_t one = lint_document(doc, cfg).size();
  testing_support::token_by_form(s, "Se").deprel = "subj";
  std::size_t two = lint_document(doc, cfg).size();
  EXPECT_LT(before, one);
  EXPECT_LT(one, two);
}
