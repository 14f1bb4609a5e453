#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "thetakit/analysis.hpp"
#include "thetakit/catalog.hpp"
#include "thetakit/generators.hpp"

using namespace thetakit;

namespace {

const AnalysisSection& section(const AnalysisReport& r, const std::string& task) {
    for (const auto& s : r.sections)
        if (s.task == task) return s;
    throw std::runtime_error("missing section " + task);
}

AnalysisOptions all_tasks() {
    AnalysisOptions o;
    o.tasks = analysis_tasks();
    return o;
}

struct CliRun {
    int code;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(THETAKIT_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t k = std::fread(buf, 1, sizeof buf, p)) out.append(buf, k);
    const int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST(Analyze, PetersenThetaAndCapacity) {
    AnalysisOptions o;
    o.tasks = {"theta", "capacity"};
    const auto r = analyze(petersen(), o);
    ASSERT_EQ(r.sections.size(), 2u);
    EXPECT_EQ(section(r, "theta").values["theta"].get<double>(), 4);
    const auto& cap = section(r, "capacity").values;
    EXPECT_EQ(cap["alpha"]["value"], 4);
    EXPECT_EQ(cap["status"], "determined");
    EXPECT_EQ(cap["capacity"], 4);
    EXPECT_TRUE(r.violations().empty());
}

TEST(Analyze, PentagonK0) {
    AnalysisOptions o;
    o.tasks = {"k0"};
    const auto r = analyze(cycle(5), o);
    EXPECT_EQ(section(r, "k0").values["k0"], 5);
}

TEST(Analyze, HallJankoSrgAndTheta) {
    AnalysisOptions o;
    o.tasks = {"srg", "theta"};
    const auto r = analyze(load_fixture("hall_janko"), o);
    EXPECT_EQ(section(r, "srg").values["params"], Json::parse("[100,36,14,12]"));
    EXPECT_EQ(section(r, "srg").values["tight"], true);
    EXPECT_EQ(section(r, "theta").values["theta"].get<double>(), 10);
    EXPECT_EQ(section(r, "theta").values["theta_rational"], "10");
}

TEST(Analyze, NoViolationsAcrossGraphFamilies) {
    for (const char* spec : {"petersen", "cycle:5", "cycle:6", "paley:13", "complete:4", "empty:3", "path:1",
                             "random_gnp:11:0.4:2", "random_regular:14:3:5", "sc_extend:cycle:5", "hypercube:3",
                             "copies:3:complete:2", "fixture:frucht", "fixture:schlaefli"}) {
        const auto r = analyze(from_generator_spec(spec), all_tasks());
        EXPECT_EQ(r.sections.size(), analysis_tasks().size());
        for (const auto* v : r.violations()) ADD_FAILURE() << spec << ": " << v->name;
    }
}

TEST(Analyze, InapplicableBlocksCarryReasons) {
    const auto r = analyze(path(5), all_tasks());
    bool saw = false;
    for (const auto& s : r.sections)
        for (const auto& b : s.reports)
            if (!b.applicable) {
                saw = true;
                EXPECT_FALSE(b.reason.empty()) << b.name;
            }
    EXPECT_TRUE(saw);
}

TEST(Analyze, RejectsBadTaskLists) {
    AnalysisOptions o;
    EXPECT_THROW(analyze(petersen(), o), std::invalid_argument);
    o.tasks = {"theta", "bogus"};
    EXPECT_THROW(analyze(petersen(), o), std::invalid_argument);
}

TEST(Analyze, JsonReportsRoundTrip) {
    const auto r = analyze(kneser(6, 2), all_tasks());
    const Json j = Json::parse(r.to_json().dump());
    for (const auto& s : j["sections"])
        for (const auto& b : s["reports"]) EXPECT_NO_THROW(bound_report_from_json(b)) << b.dump();
}

TEST(PowerTable, PentagonColumns) {
    const auto t = power_table(cycle(5), 5);
    const double l2[] = {0.6180, 3.8541, 13.5623, 42.6869, 130.0608};
    const double lb[] = {0.6180, 3.0000, 8.6264, 21.6667, 51.4938};
    ASSERT_EQ(t.rows.size(), 5u);
    for (int k = 0; k < 5; ++k) {
        EXPECT_NEAR(t.rows[k].lambda2, l2[k], 5e-5);
        ASSERT_TRUE(t.rows[k].lambda2_lower);
        EXPECT_NEAR(*t.rows[k].lambda2_lower, lb[k], 5e-5);
    }
    EXPECT_EQ(t.rows[1].ramanujan, true);
    EXPECT_EQ(t.rows[2].ramanujan, false);
}

TEST(PowerTable, PetersenSquareAndCompleteGraphs) {
    const auto p = power_table(petersen(), 2);
    EXPECT_NEAR(p.rows[1].lambda2, 7, 1e-9);
    EXPECT_NEAR(*p.rows[1].lambda2_lower, 4.6, 1e-9);
    const auto k = power_table(complete(4), 3);
    for (const auto& row : k.rows) {
        EXPECT_NEAR(row.degree, row.order - 1, 1e-9);
        EXPECT_NEAR(row.lambda_min, -1, 1e-9);
        EXPECT_FALSE(row.lambda2_lower);
    }
    for (const auto& b : k.reports()) EXPECT_FALSE(b.violated());
}

TEST(Cli, ExitCodesAndDeterminism) {
    const CliRun ok = run_cli("analyze --gen petersen --tasks theta,capacity --json");
    EXPECT_EQ(ok.code, 0);
    const Json j = Json::parse(ok.out);
    EXPECT_EQ(j["sections"][1]["values"]["status"], "determined");
    EXPECT_EQ(run_cli("analyze --gen petersen --tasks theta,capacity --json").out, ok.out);

    EXPECT_EQ(run_cli("analyze --gen nope").code, 1);
    EXPECT_EQ(run_cli("analyze --g6 /nonexistent.g6").code, 1);
    EXPECT_EQ(run_cli("analyze --gen petersen --tasks bogus").code, 1);
    EXPECT_EQ(run_cli("analyze --gen petersen --g6 x.g6").code, 1);
    EXPECT_EQ(run_cli("frobnicate").code, 1);
}

TEST(Cli, FixtureByPathAndPowerAndCatalog) {
    const CliRun hj = run_cli("analyze --g6 " + (fixture_dir() / "hall_janko.g6").string() + " --tasks srg,theta --json");
    EXPECT_EQ(hj.code, 0);
    const Json j = Json::parse(hj.out);
    EXPECT_EQ(j["sections"][0]["values"]["theta"].get<double>(), 10);
    EXPECT_EQ(j["sections"][1]["values"]["params"], Json::parse("[100,36,14,12]"));

    const CliRun pw = run_cli("power --gen cycle:5 --k 5 --json");
    EXPECT_EQ(pw.code, 0);
    EXPECT_EQ(Json::parse(pw.out)["rows"].size(), 5u);

    const CliRun cat = run_cli("catalog --json");
    EXPECT_EQ(cat.code, 0);
    const Json c = Json::parse(cat.out);
    bool found = false;
    for (const auto& f : c["fixtures"])
        if (f["name"] == "hall_janko") {
            found = true;
            EXPECT_EQ(f["theta"].get<double>(), 10);
            EXPECT_EQ(f["alpha"], 10);
        }
    EXPECT_TRUE(found);
}

TEST(Cli, EdgeListInputAndOutFile) {
    const std::string in = testing::TempDir() + "c5.txt";
    const std::string out = testing::TempDir() + "c5.json";
    std::ofstream(in) << "5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
    EXPECT_EQ(run_cli("analyze --edges " + in + " --tasks theta --json --out " + out).code, 0);
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    const Json j = Json::parse(ss.str());
    EXPECT_NEAR(j["sections"][0]["values"]["theta"].get<double>(), 2.2360679775, 1e-9);
}
