#include <gtest/gtest.h>

#include "axb/suites.hpp"

using namespace axb;

TEST(Report, SummaryMatchesRecords) {
    Report r("demo");
    r.check("a", true);
    r.check("b", false, "k<=3", "(1,1)");
    r.add({"c", Status::skipped, "", "", "not applicable"});
    auto s = r.summary();
    EXPECT_EQ(s.passed, 1u);
    EXPECT_EQ(s.failed, 1u);
    EXPECT_EQ(s.skipped, 1u);
    EXPECT_EQ(r.exit_code(), 1);
}

TEST(Report, JsonAndTextCarryTheSameRecords) {
    auto r = *run_suite("nica-pair");
    auto j = r.to_json();
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["suite"], "nica-pair");
    ASSERT_EQ(j["records"].size(), r.records().size());
    auto text = r.to_text();
    for (auto& rec : j["records"]) {
        std::string line = "[" + rec["status"].get<std::string>() + "] " + rec["name"].get<std::string>();
        EXPECT_NE(text.find(line), std::string::npos) << line;
    }
    EXPECT_EQ(j["summary"]["passed"].get<std::size_t>() + j["summary"]["failed"].get<std::size_t>() +
                  j["summary"]["skipped"].get<std::size_t>(),
              r.records().size());
}

TEST(Suites, RegistryHasEverySuite) {
    std::vector<std::string> names;
    for (auto& s : suite_registry()) names.push_back(s.name);
    std::vector<std::string> expected{"lub-oracle",         "spectrum-hereditary", "action-closed-forms",
                                      "topological-freeness", "relations-toeplitz", "relations-ex39",
                                      "faithfulness",       "lemma65",             "transfer-identities",
                                      "k-oracle",           "modules-orthonormal", "lemma62",
                                      "nica-pair",          "morphism-rho",        "kms-phase",
                                      "cube"};
    EXPECT_EQ(names, expected);
    EXPECT_FALSE(run_suite("no-such-suite"));
}

TEST(Suites, RelationsBilateralPassesWithDefaults) {
    auto r = *run_suite("relations-ex39");
    EXPECT_TRUE(r.ok()) << r.to_text();
}

TEST(Suites, LubOracleOnSmallWindow) {
    SuiteOptions o;
    o.window = 5;
    auto r = *run_suite("lub-oracle", o);
    EXPECT_TRUE(r.ok()) << r.to_text();
    for (auto& rec : r.records())
        if (rec.name == "CRT lub equals search oracle") {
            EXPECT_EQ(rec.window, "m,n<=5,a,b<=5");
        }
}

TEST(Suites, KmsPhaseReportsBetaTwo) {
    SuiteOptions o;
    o.beta = Rational(2);
    auto r = *run_suite("kms-phase", o);
    EXPECT_TRUE(r.ok());
    bool found = false;
    for (auto& rec : r.records())
        if (rec.name == "q_mult factoring at beta=2 reported false") found = rec.status == Status::pass;
    EXPECT_TRUE(found);
}

TEST(Suites, SeedIsRecorded) {
    SuiteOptions o;
    o.seed = 99;
    auto r = *run_suite("transfer-identities", o);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.records().front().detail, "seed 99");
}
