#include <fanograph/cli.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace fanograph;

namespace {

struct Run {
    int code = -1;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string data(const std::string& name) { return std::string(FANOGRAPH_DATA_DIR) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, SmoothHeadline) {
    auto r = run({"classify", data("quadrilateral.txt")});
    EXPECT_EQ(r.code, exit_ok) << r.err;
    EXPECT_TRUE(contains(r.out, "smooth Fano, dim 2, 4 vertices, 4 facets")) << r.out;
    EXPECT_TRUE(contains(r.out, "graph criteria and geometry agree"));
}

TEST(Cli, ObstructionHeadline) {
    auto r = run({"classify", data("symmetric_4cycle.txt")});
    EXPECT_EQ(r.code, exit_ok) << r.err;
    EXPECT_TRUE(contains(r.out, "not simplicial; obstruction cycle (1,2,3,4); witness x1+x3=1")) << r.out;
    EXPECT_TRUE(contains(r.out, "witness in Z^3: x1+x3=1")) << r.out;
}

TEST(Cli, Quiet) {
    auto r = run({"--quiet", "classify", data("directed_triangle.txt")});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "smooth Fano, dim 2, 3 vertices, 3 facets\n");
}

TEST(Cli, PendantArrowIsReportedNotRejected) {
    auto r = run({"classify", data("pendant_arrow.txt")});
    EXPECT_EQ(r.code, exit_ok) << r.err;
    EXPECT_TRUE(contains(r.out, "arrows on no directed cycle: (3,4)")) << r.out;
    EXPECT_TRUE(contains(r.out, "not Fano")) << r.out;
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"classify", data("malformed.txt")}).code, exit_usage);
    EXPECT_EQ(run({"classify", data("disconnected.txt")}).code, exit_disconnected);
    EXPECT_EQ(run({"classify", "/nonexistent/graph.txt"}).code, exit_usage);
    EXPECT_EQ(run({"sweep", "9"}).code, exit_limit);
    EXPECT_EQ(run({"sweep", "6"}).code, exit_limit);
    EXPECT_EQ(run({"family", "gmpq:1,x,0"}).code, exit_usage);
    EXPECT_EQ(run({"family", "nosuch:1"}).code, exit_usage);
    EXPECT_EQ(run({"frobnicate"}).code, exit_usage);
    EXPECT_EQ(run({}).code, exit_usage);
    EXPECT_EQ(run({"sweep", "3", "--chunk", "4/3"}).code, exit_usage);
    EXPECT_EQ(run({"--help"}).code, exit_ok);
}

TEST(Cli, FamilyPredictions) {
    auto a = run({"family", "gmpq:1,2,1"});
    EXPECT_EQ(a.code, exit_ok) << a.err;
    EXPECT_TRUE(contains(a.out, "prediction matches")) << a.out;
    auto b = run({"family", "gmpq:1,2,0"});
    EXPECT_TRUE(contains(b.out, "predicted not smooth, computed not smooth: prediction matches")) << b.out;
    auto c = run({"family", "gmpq:1,1,1"});
    EXPECT_TRUE(contains(c.out, "PREDICTION MISMATCH")) << c.out;
    auto d = run({"family", "symcycle:5"});
    EXPECT_TRUE(contains(d.out, "smooth Fano, dim 4, 10 vertices")) << d.out;
    auto e = run({"classify", "--family", "cycle:4"});
    EXPECT_TRUE(contains(e.out, "smooth Fano, dim 3, 4 vertices, 4 facets")) << e.out;
}

TEST(Cli, Facets) {
    auto r = run({"facets", data("symmetric_4cycle.txt")});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_TRUE(contains(r.out, "NOT SIMPLICIAL")) << r.out;
    auto t = run({"facets", "--family", "cycle:3"});
    EXPECT_TRUE(contains(t.out, "3 facets, dim 2, 0 not simplicial")) << t.out;
    EXPECT_TRUE(contains(t.out, "|det| 1")) << t.out;
}

TEST(Cli, JsonParses) {
    auto r = run({"--json", "classify", data("symmetric_4cycle.txt")});
    ASSERT_EQ(r.code, exit_ok);
    auto doc = Json::parse(r.out);
    EXPECT_EQ(doc.at("kind"), "classify");
    auto back = read_document<GraphReport>(doc, "classify");
    EXPECT_FALSE(back.geometric.is_simplicial);

    auto f = run({"--json", "facets", "--family", "symcycle:3"});
    EXPECT_EQ(Json::parse(f.out).at("kind"), "facets");

    auto s = run({"--json", "sweep", "3"});
    auto sr = read_document<SweepReport>(Json::parse(s.out), "sweep");
    EXPECT_EQ(sr.graphs_enumerated, 68u);
}

TEST(Cli, SweepText) {
    auto r = run({"sweep", "3", "--chunk", "2/2"});
    EXPECT_EQ(r.code, exit_ok) << r.err;
    EXPECT_TRUE(contains(r.out, "sweep d<=3 (fano, chunk 2/2): 0 discrepancies")) << r.out;
    auto c = run({"sweep", "4", "--connected", "--stride", "5", "--threads", "2"});
    EXPECT_TRUE(contains(c.out, "stride 5")) << c.out;
    EXPECT_TRUE(contains(c.out, "0 discrepancies")) << c.out;
}

TEST(Cli, SweepOutputFile) {
    const std::string path = testing::TempDir() + "fanograph_sweep.json";
    auto r = run({"--json", "sweep", "2", "--output", path});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    auto doc = Json::parse(in);
    EXPECT_EQ(doc.at("graphs_classified"), 1);
    std::remove(path.c_str());
}
