#include <gtest/gtest.h>

#include <algorithm>

#include "thetakit/catalog.hpp"
#include "thetakit/generators.hpp"
#include "thetakit/isomorphism.hpp"
#include "thetakit/report.hpp"
#include "thetakit/srg.hpp"

using namespace thetakit;

TEST(GeneratorSpec, Parses) {
    EXPECT_EQ(from_generator_spec("kneser:5:2"), kneser(5, 2));
    EXPECT_EQ(from_generator_spec("paley:13"), paley(13));
    EXPECT_EQ(from_generator_spec("complete_bipartite:2:3"), complete_bipartite(2, 3));
    EXPECT_EQ(from_generator_spec("copies:3:complete:2").n(), 6);
    EXPECT_EQ(from_generator_spec("sc_extend:cycle:5").n(), 9);
    EXPECT_EQ(from_generator_spec("random_regular:20:3:7"), random_regular(20, 3, 7));
    EXPECT_EQ(from_generator_spec("random_gnp:20:0.25:7"), random_gnp(20, 0.25, 7));
    EXPECT_EQ(from_generator_spec("fixture:petersen").n(), 10);
    EXPECT_EQ(from_generator_spec("paley:13").meta().self_complementary, true);
}

TEST(GeneratorSpec, RejectsBadSpecs) {
    for (const char* bad : {"", "nope", "cycle", "cycle:x", "cycle:5:6", "kneser:5", "paley:7", "random_gnp:5:1.5",
                            "fixture:nope", "copies:0:cycle:5"})
        EXPECT_ANY_THROW(from_generator_spec(bad)) << bad;
}

TEST(GeneratorCatalog, ListsCoreGenerators) {
    const auto& cat = generator_catalog();
    for (const char* name : {"petersen", "shrikhande", "paley", "kneser"})
        EXPECT_TRUE(std::any_of(cat.begin(), cat.end(), [&](const GeneratorInfo& g) { return g.name == name; }))
            << name;
}

TEST(Manifest, FixturesMatchTheirRecords) {
    const auto fixtures = load_manifest();
    EXPECT_GE(fixtures.size(), 14u);
    for (const auto& f : fixtures) {
        const Graph g = load_fixture(f.name);
        EXPECT_EQ(g.n(), f.n) << f.name;
        EXPECT_EQ(g.edge_count(), f.edges) << f.name;
        if (f.srg) EXPECT_EQ(srg_check(g), f.srg) << f.name;
        EXPECT_EQ(g.meta().vertex_transitive, f.meta.vertex_transitive);
    }
    const auto hj = find_fixture("hall_janko");
    ASSERT_TRUE(hj);
    EXPECT_EQ(hj->file.filename(), "hall_janko.g6");
    EXPECT_EQ(hj->theta, 10);
    EXPECT_EQ(hj->alpha, 10);
    EXPECT_FALSE(find_fixture("nope"));
}

TEST(Manifest, PetersenFixtureIsThePetersenGraph) {
    EXPECT_TRUE(isomorphic(load_fixture("petersen"), petersen()));
}

TEST(ReportJson, NumbersAreStable) {
    EXPECT_EQ(number_json(0.1 + 0.2).dump(), "0.3");
    EXPECT_EQ(number_json(-0.0).dump(), "0.0");
    EXPECT_TRUE(number_json(std::nan("")).is_null());
    EXPECT_EQ(number_json(2.23606797749979).dump(), "2.2360679775");
}

TEST(ReportJson, RoundTrip) {
    const std::vector<BoundReport> reps = {make_report("a", 1.5, Relation::LessEq, 2.25),
                                           make_report("b", 4, Relation::Equal, 4),
                                           make_report("c", 3, Relation::GreaterEq, 7.125),
                                           inapplicable("d", Relation::GreaterEq, "not regular")};
    for (const auto& r : reps) {
        const Json j = to_json(r);
        const BoundReport back = bound_report_from_json(Json::parse(j.dump()));
        EXPECT_EQ(back.name, r.name);
        EXPECT_EQ(back.relation, r.relation);
        EXPECT_EQ(back.applicable, r.applicable);
        EXPECT_EQ(to_json(back).dump(), j.dump());
        if (r.applicable) {
            EXPECT_DOUBLE_EQ(back.lhs, r.lhs);
            EXPECT_DOUBLE_EQ(back.rhs, r.rhs);
            EXPECT_EQ(back.equality, r.equality);
        } else {
            EXPECT_EQ(back.reason, r.reason);
        }
    }
    EXPECT_THROW(bound_report_from_json(Json::parse(R"({"name":"x"})")), std::invalid_argument);
    EXPECT_THROW(bound_report_from_json(Json::parse(R"({"name":"x","lhs":1,"rhs":2,"relation":"<","applicable":true})")),
                 std::invalid_argument);
}
