#include <gtest/gtest.h>

#include <algorithm>

#include "graphent/error.h"
#include "graphent/report.h"

using namespace graphent;

namespace {

QmReport star_report() {
    return q_profile(parse_edge_list("4: 1-2, 1-3, 1-4"), QmRequest{});
}

}  // namespace

TEST(format, round12) {
    EXPECT_EQ(format12(2.0 / 3.0), "0.666666666667");
    EXPECT_EQ(format12(1.0), "1");
    EXPECT_EQ(round12(0.1 + 0.2), 0.3);
    EXPECT_THROW(parse_format("yaml"), Error);
    EXPECT_EQ(parse_format("csv"), Format::kCsv);
}

TEST(json, fields) {
    nlohmann::ordered_json j = report_to_json(star_report());
    EXPECT_EQ(j["version"], kReportSchemaVersion);
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(j["engine"], "both");
    EXPECT_EQ(j["exact_values"]["2"], "2/3");
    ASSERT_EQ(j["purities"].size(), 10u);
    EXPECT_EQ(j["purities"][0]["subset"], nlohmann::ordered_json::array({1}));
    EXPECT_EQ(j["purities"][0]["exact"], "1/2^1");
}

TEST(json, output_is_byte_deterministic) {
    EXPECT_EQ(emit_report(star_report(), Format::kJson), emit_report(star_report(), Format::kJson));
    EXPECT_EQ(emit_report(star_report(), Format::kCsv, "g"), emit_report(star_report(), Format::kCsv, "g"));
    EXPECT_EQ(emit_report(star_report(), Format::kText), emit_report(star_report(), Format::kText));
}

TEST(json, round_trip) {
    QmReport original = q_profile(parse_edge_list("5: 1-2, 2-3, 3-4, 4-5"), QmRequest{});
    nlohmann::ordered_json j = report_to_json(original);
    QmReport back = report_from_json(j);
    EXPECT_EQ(back.n, original.n);
    EXPECT_EQ(back.engine, original.engine);
    EXPECT_EQ(back.values.size(), original.values.size());
    for (const auto &[m, q] : original.values) {
        EXPECT_NEAR(back.values.at(m), q, 1e-12);
    }
    EXPECT_EQ(back.exact_values, original.exact_values);
    ASSERT_EQ(back.purities.size(), original.purities.size());
    for (size_t i = 0; i < back.purities.size(); i++) {
        EXPECT_EQ(back.purities[i].subset, original.purities[i].subset);
        EXPECT_EQ(back.purities[i].exact, original.purities[i].exact);
    }
    EXPECT_EQ(report_to_json(back).dump(), j.dump());
}

TEST(csv, one_row_per_subset) {
    const std::string csv = emit_report(star_report(), Format::kCsv, "star");
    EXPECT_EQ(csv.rfind(csv_header(), 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 4 + 6);
}

TEST(text, mentions_values) {
    const std::string text = report_to_text(star_report());
    EXPECT_NE(text.find("2/3"), std::string::npos);
}

TEST(claims, all_pass_with_default_options) {
    std::vector<ClaimRecord> claims = verify_paper(VerifyOptions{});
    ASSERT_EQ(claims.size(), 8u);
    for (const ClaimRecord &c : claims) {
        if (c.id == "R1") {
            EXPECT_NE(c.status, ClaimStatus::kFail);
        } else {
            EXPECT_EQ(c.status, ClaimStatus::kPass) << c.id << " " << c.evidence.dump();
        }
    }
    EXPECT_FALSE(any_failed(claims));
    EXPECT_EQ(emit_claims(claims, Format::kJson), emit_claims(verify_paper(VerifyOptions{}), Format::kJson));
}
