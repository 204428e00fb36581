#include <gtest/gtest.h>

#include <string>

#include "bidouble/document.hpp"
#include "bidouble/report.hpp"

using namespace bidouble;

namespace {

const ReportEntry& find(const ReferenceExampleReport& r, const std::string& field) {
  for (const auto& e : r.entries) {
    if (e.field == field) return e;
  }
  throw std::runtime_error("missing entry " + field);
}

}  // namespace

TEST(ReferenceReport, MultFive) {
  const std::vector<std::int64_t> mults{5};
  const auto r = verify_reference_example(mults);
  EXPECT_TRUE(r.conforms());
  EXPECT_EQ(r.entries.size(), 7u);

  EXPECT_TRUE(find(r, "kk").match);
  EXPECT_EQ(find(r, "kk").computed, "10368");
  EXPECT_TRUE(find(r, "r_first").match);
  EXPECT_TRUE(find(r, "r_second").match);
  EXPECT_EQ(find(r, "deg_b_m5").computed, "829440");
  EXPECT_TRUE(find(r, "deg_b_m5").match);
  EXPECT_EQ(find(r, "genus_m5").computed, "1410049");
  EXPECT_TRUE(find(r, "genus_m5").match);

  const auto& chi = find(r, "chi");
  EXPECT_FALSE(chi.match);
  EXPECT_EQ(chi.printed, "1456");
  EXPECT_EQ(chi.computed, "1856");
  EXPECT_NE(chi.note.find("= 400"), std::string::npos);

  const auto& cusps = find(r, "cusps_m5");
  EXPECT_FALSE(cusps.match);
  EXPECT_EQ(cusps.printed, "3563328");
  EXPECT_EQ(cusps.computed, "3585792");
  EXPECT_NE(cusps.note.find("= 22464"), std::string::npos);
}

TEST(ReferenceReport, NoMults) {
  const auto r = verify_reference_example(std::vector<std::int64_t>{});
  ASSERT_EQ(r.entries.size(), 4u);
  EXPECT_EQ(r.entries[0].field, "kk");
  EXPECT_EQ(r.entries[1].field, "chi");
  EXPECT_EQ(r.entries[2].field, "r_first");
  EXPECT_EQ(r.entries[3].field, "r_second");
  EXPECT_TRUE(r.conforms());
}

TEST(ReferenceReport, SeveralMults) {
  const std::vector<std::int64_t> mults{5, 6, 7};
  const auto r = verify_reference_example(mults);
  EXPECT_TRUE(r.conforms());
  for (const auto m : mults) {
    EXPECT_TRUE(find(r, "deg_b_m" + std::to_string(m)).match);
    EXPECT_TRUE(find(r, "genus_m" + std::to_string(m)).match);
    EXPECT_FALSE(find(r, "cusps_m" + std::to_string(m)).match);
  }
}

TEST(ReferenceReport, ConformanceDetectsDrift) {
  auto r = verify_reference_example(std::vector<std::int64_t>{5});
  r.entries[1].match = true;  // chi silently "fixed"
  EXPECT_FALSE(r.conforms());
}

TEST(Document, CsvEscaping) {
  EXPECT_EQ(csv_escape("plain"), "plain");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Document, InvariantsRenders) {
  const auto doc = invariants_document({16, 22, 52, 4});
  EXPECT_EQ(doc.json["invariants"]["kk"], 10368);
  EXPECT_EQ(doc.json["invariants"]["r"], 18);
  EXPECT_EQ(doc.records.size(), 1u);
  const auto csv = doc.render(Format::Csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "a,b,m2,n2,u,v,w,z,kk,chi,euler,sigma,b2,b_plus,b_minus,p_g,r");
  EXPECT_NE(csv.find("16,22,52,4,18,72,12,30,10368,1856,11904,-4480,"), std::string::npos);
}

TEST(Document, ErrorPayload) {
  try {
    invariants_document({16, 22, 52, 5});
    FAIL();
  } catch (const Error& e) {
    const auto doc = error_document(e);
    EXPECT_EQ(doc.json["error"], "ConstraintViolation");
    EXPECT_EQ(doc.json["details"].size(), 1u);
  }
}

TEST(Document, CheckPairNotComparable) {
  const auto doc = check_pair_document({16, 22, 52, 4}, {7, 3, 7, 3});
  EXPECT_EQ(doc.json["homeomorphic"], false);
  EXPECT_TRUE(doc.json["diffeo_verdict"].is_null());
  const auto pair = check_pair_document({16, 22, 52, 4}, {28, 10, 28, 10});
  EXPECT_EQ(pair.json["diffeo_verdict"], "NOT_DIFFEOMORPHIC");
}

TEST(Document, TupleRecordsOnlyForCatanese) {
  TupleVerdict v;
  const std::vector<CoverType> bad{{7, 3, 7, 3}, {9, 3, 9, 3}};
  EXPECT_TRUE(check_tuple_document(bad, &v).records.empty());
  EXPECT_FALSE(v.is_catanese);
  const std::vector<CoverType> good{{28, 10, 28, 10}, {52, 4, 16, 22}};
  const auto doc = check_tuple_document(good, &v);
  EXPECT_TRUE(v.is_catanese);
  ASSERT_EQ(doc.records.size(), 1u);
  EXPECT_EQ(doc.records[0].second["members"][1]["a"], 16);
}
