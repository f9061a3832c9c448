#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace maibaam;
using testing_support::make_sentence;
using testing_support::rule_ids;

namespace {

Sentence with_heads(const std::vector<int>& heads) {
  std::vector<testing_support::Row> rows;
  for (std::size_t i = 0; i < heads.size(); ++i)
    rows.push_back({"w" + std::to_string(i + 1), "NOUN", heads[i], heads[i] == 0 ? "root" : "dep"});
  return make_sentence(rows);
}

}  // namespace

TEST(Structure, ValidTwoNodeTree) {
  auto s = make_sentence({{"des", "DET", 2, "det"}, {"Haus", "NOUN", 0, "root"}});
  EXPECT_TRUE(validate_structure(s).empty());
}

TEST(Structure, Cycle) {
  auto ids = rule_ids(validate_structure(with_heads({2, 1})));
  EXPECT_NE(std::find(ids.begin(), ids.end(), "STRUCT.CYCLE"), ids.end());
  EXPECT_NE(std::find(ids.begin(), ids.end(), "STRUCT.NO_ROOT"), ids.end());
}

TEST(Structure, MultiRootHeadRangeRootDeprel) {
  EXPECT_EQ(rule_ids(validate_structure(with_heads({0, 0}))),
            std::vector<std::string>{"STRUCT.MULTI_ROOT"});
  auto s = with_heads({0, 5});
  EXPECT_EQ(rule_ids(validate_structure(s)), std::vector<std::string>{"STRUCT.HEAD_RANGE"});
  auto r = make_sentence({{"a", "NOUN", 0, "nsubj"}});
  EXPECT_EQ(rule_ids(validate_structure(r)), std::vector<std::string>{"STRUCT.ROOT_DEPREL"});
}

TEST(Structure, PunctChild) {
  auto s = make_sentence({{"a", "NOUN", 0, "root"}, {",", "PUNCT", 1, "punct"}, {"b", "NOUN", 2, "dep"}});
  EXPECT_EQ(rule_ids(validate_structure(s)), std::vector<std::string>{"STRUCT.PUNCT_CHILD"});
}

TEST(Structure, OverlappingSpans) {
  auto s = with_heads({0, 1, 1});
  MwtSpan a, b;
  a.first_id = 1, a.last_id = 2, a.surface_form = "ab";
  b.first_id = 2, b.last_id = 3, b.surface_form = "bc";
  s.mwt_spans = {a, b};
  EXPECT_EQ(rule_ids(validate_structure(s)), std::vector<std::string>{"STRUCT.MWT_OVERLAP"});
}

TEST(Structure, NonProjectiveIsAllowed) {
  // Frier wor des gonz a normales Wort .
  auto s = make_sentence({{"Frier", "ADV", 7, "advmod"},
                          {"wor", "AUX", 7, "cop"},
                          {"des", "PRON", 7, "nsubj"},
                          {"gonz", "ADV", 6, "advmod"},
                          {"a", "DET", 7, "det"},
                          {"normales", "ADJ", 7, "amod"},
                          {"Wort", "NOUN", 0, "root"},
                          {".", "PUNCT", 7, "punct"}});
  EXPECT_TRUE(validate_structure(s).empty());
}

TEST(Structure, OutputIsSorted) {
  auto ds = validate_structure(with_heads({0, 0, 9, 3}));
  EXPECT_TRUE(std::is_sorted(ds.begin(), ds.end(), diagnostic_less));
}

TEST(Reconstruct, CliticAndSpan) {
  auto s = make_sentence({{"z'", "ADP", 2, "case"}, {"Minga", "PROPN", 0, "root"}});
  s.tokens[0].misc.set("SpaceAfter", "No");
  EXPECT_EQ(reconstruct_text(s), "z'Minga");

  auto m = make_sentence({{"zu", "ADP", 3, "case"}, {"m", "DET", 3, "det"}, {"Beispiel", "NOUN", 0, "root"}});
  MwtSpan span;
  span.surface_form = "zum";
  m.mwt_spans.push_back(span);
  EXPECT_EQ(reconstruct_text(m), "zum Beispiel");

  EXPECT_EQ(reconstruct_text(make_sentence({{"Servus", "INTJ", 0, "root"}})), "Servus");
}
