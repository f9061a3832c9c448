#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_support.hpp"

using namespace maibaam;
using testing_support::make_sentence;
using testing_support::rule_ids;
using V = std::vector<std::string>;

namespace {

Sentence with_meta(std::vector<std::pair<std::string, std::string>> kv) {
  auto s = make_sentence({{"Servus", "INTJ", 0, "root"}});
  for (auto& [k, v] : kv) s.set_meta(k, v);
  return s;
}

Sentence full(const std::string& dialect = "central", const std::string& genre = "fiction") {
  return with_meta({{"sent_id", "m1"}, {"text", "Servus"}, {"genre", genre},
                    {"dialect_group", dialect}, {"location", "Minga"}, {"source", "Buach"}});
}

V check(const Sentence& s) { return rule_ids(validate_metadata(s, MetadataPolicy{})); }

}  // namespace

TEST(Metadata, CompleteRecordIsClean) { EXPECT_TRUE(check(full()).empty()); }

TEST(Metadata, DialectValues) {
  EXPECT_TRUE(check(full("unk")).empty());
  EXPECT_TRUE(check(full("unk (central/south)")).empty());
  EXPECT_TRUE(check(full("unk (southcentral/south)")).empty());
  EXPECT_EQ(check(full("unk (south/central)")), V{"META.DIALECT_ORDER"});
  EXPECT_EQ(check(full("unk (central/central)")), V{"META.DIALECT_ORDER"});
  EXPECT_EQ(check(full("unk (central)")), V{"META.DIALECT"});
  EXPECT_EQ(check(full("unk (central/alpine)")), V{"META.DIALECT"});
  EXPECT_EQ(check(full("Oberbayern")), V{"META.DIALECT"});
  EXPECT_EQ(check(full("unk(central/south)")), V{"META.DIALECT"});
}

TEST(Metadata, Genre) {
  EXPECT_EQ(check(full("central", "poetry")), V{"META.GENRE"});
  EXPECT_TRUE(check(full("central", "grammar examples")).empty());
}

TEST(Metadata, EachMissingKeyIsOneFinding) {
  for (const auto& key : MetadataPolicy{}.required_keys) {
    auto s = full();
    s.erase_meta(key);
    auto ds = validate_metadata(s, MetadataPolicy{});
    ASSERT_EQ(ds.size(), 1u) << key;
    EXPECT_EQ(ds[0].rule_id, "META.MISSING");
    EXPECT_NE(ds[0].message.find(key), std::string::npos);
  }
  auto no_author = full();
  EXPECT_FALSE(no_author.meta("author"));
  EXPECT_TRUE(check(no_author).empty());
}

TEST(Metadata, UrlSourceForWebGenres) {
  auto s = full("central", "wiki");
  EXPECT_EQ(check(s), V{"META.SOURCE"});
  s.set_meta("source", "https://bar.wikipedia.org/wiki/Minga");
  EXPECT_TRUE(check(s).empty());
  s.set_meta("source", "bar.wikipedia.org/wiki/Minga");
  EXPECT_EQ(check(s), V{"META.SOURCE"});
}

TEST(Metadata, TextMismatch) {
  auto s = full();
  s.set_meta("text", "Servus!");
  EXPECT_EQ(check(s), V{"META.TEXT_MISMATCH"});
}

TEST(Metadata, DuplicateIdsIndependentOfOrder) {
  std::vector<Sentence> all;
  for (int i = 0; i < 6; ++i) {
    auto s = full();
    s.set_meta("sent_id", i % 2 ? "dup" : "u" + std::to_string(i));
    s.file = i < 3 ? "a.conllu" : "b.conllu";
    for (auto& c : s.comments) c.line = 10 * i + 1;
    s.first_line = 10 * i + 1;
    all.push_back(s);
  }
  std::vector<const Sentence*> ptrs;
  for (const auto& s : all) ptrs.push_back(&s);
  auto base = duplicate_sentence_ids(ptrs);
  sort_diagnostics(base);
  ASSERT_EQ(base.size(), 2u);
  EXPECT_EQ(base[0].file, "b.conllu");
  EXPECT_EQ(base[0].line, 31);
  EXPECT_NE(base[0].message.find("a.conllu:11"), std::string::npos);
  EXPECT_EQ(base[1].line, 51);
  std::mt19937 rng(7);
  for (int round = 0; round < 10; ++round) {
    std::shuffle(ptrs.begin(), ptrs.end(), rng);
    auto again = duplicate_sentence_ids(ptrs);
    sort_diagnostics(again);
    EXPECT_EQ(again, base);
  }
}

TEST(Metadata, GoldenCorpusMetadataIsClean) {
  auto doc = testing_support::load_fixture("golden.conllu");
  for (const auto& s : doc.sentences)
    EXPECT_TRUE(validate_metadata(s, MetadataPolicy{}).empty()) << s.sentence_id();
}
