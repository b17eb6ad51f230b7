#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>

#include "digitopo/digitopo.hpp"

using namespace digitopo;
namespace fs = std::filesystem;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
    return n;
}

class Scratch {
public:
    Scratch() : dir_(fs::temp_directory_path() / ("digitopo_test_" + std::to_string(std::random_device{}()))) {
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }
    fs::path write(const std::string& name, const std::string& text) const {
        std::ofstream(dir_ / name) << text;
        return dir_ / name;
    }
    fs::path path(const std::string& name) const { return dir_ / name; }

private:
    fs::path dir_;
};

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(const Scratch& s, const std::string& args) {
    const fs::path out = s.path("stdout.txt");
    std::string cmd = std::string(DIGITOPO_CLI) + " " + args + " > " + out.string() + " 2>&1";
    int raw = std::system(cmd.c_str());
    std::ifstream in(out);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return {WEXITSTATUS(raw), text};
}

std::string fixture(const std::string& name) { return (io::fixture_dir() / name).string(); }

}  // namespace

TEST(Io, ImageRoundTrip) {
    for (const auto& X : {diamond(), io::fixture_image("C"), subdivide(diamond(), 3), product(interval(1), interval(2))}) {
        std::string text = io::serialize_image(X);
        EXPECT_EQ(io::parse_image(text), X);
        EXPECT_EQ(io::serialize_image(io::parse_image(text)), text);
        EXPECT_EQ(io::resolve_image(io::inline_ref(X), "."), X);
    }
}

TEST(Io, ReferenceForms) {
    EXPECT_EQ(io::resolve_image("interval(3)", "."), interval(3));
    EXPECT_EQ(io::resolve_image("subdivide(@D,2)", "."), subdivide(diamond(), 2));
    EXPECT_EQ(io::resolve_image("subdivide(interval(2),3,origin)", "."), subdivide(interval(2), 3, BasepointRule::block_origin));
    EXPECT_EQ(io::resolve_image("product(@D,interval(1))", "."), product(diamond(), interval(1)));
    EXPECT_THROW(io::resolve_image("subdivide(@D)", "."), Error);
    EXPECT_THROW(io::resolve_image("subdivide(@D,2,sideways)", "."), Error);
}

TEST(Io, PathMapGridWitnessRoundTrips) {
    DigitalImage D = diamond();
    const std::string ref = "@D";
    std::string p = io::serialize_path(ref, diamond_generator());
    EXPECT_EQ(io::serialize_path(ref, io::parse_path_file(p, ".").path), p);

    auto f = io::fixture_map("f");
    std::string m = io::serialize_map(f.domain_ref, f.codomain_ref, f.map);
    EXPECT_EQ(io::parse_map_file(m, ".").map, f.map);
    EXPECT_EQ(io::serialize_map(f.domain_ref, f.codomain_ref, io::parse_map_file(m, ".").map), m);

    HomotopyGrid G = reparam_homotopy(D, diamond_generator(), 3);
    std::string g = io::serialize_grid(ref, G);
    EXPECT_EQ(io::parse_grid_file(g, ".").grid, G);

    EquivalenceWitness w = right_identity_witness(D, diamond_generator());
    std::string wt = io::serialize_witness(ref, w);
    auto back = io::parse_witness_file(wt, ".").witness;
    EXPECT_TRUE(verify_witness(back).empty());
    EXPECT_EQ(io::serialize_witness(ref, back), wt);

    auto lam = io::fixture_map_homotopy("lambda");
    std::string lt = io::serialize_map_homotopy(lam.domain_ref, lam.codomain_ref, lam.homotopy);
    EXPECT_EQ(io::serialize_map_homotopy(lam.domain_ref, lam.codomain_ref, io::parse_map_homotopy_file(lt, ".").homotopy), lt);
}

TEST(Io, CommentsAndBlankLinesIgnored) {
    auto X = io::parse_image("# header\ndim=1\n\nbasepoint=0\n0  # origin\n1\n");
    EXPECT_EQ(X, interval(1));
}

TEST(Io, MalformedInputsRejected) {
    EXPECT_THROW(io::parse_image("dim=2\n1,2,3\n"), Error);
    EXPECT_THROW(io::parse_image("1,2\n"), Error);
    EXPECT_THROW(io::parse_path_file("image=@D\n1,x\n", "."), Error);
    EXPECT_THROW(io::parse_map_file("domain=@D\ncodomain=@D\n1,0 -> 1,0\n1,0 -> 0,1\n", "."), Error);
    EXPECT_THROW(io::parse_grid_file("image=@D\nwidth=1 height=0 kind=sideways\n1,0;1,0\n", "."), Error);
    try {
        io::parse_image("dim=x\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), Error::Kind::parse);
    }
}

TEST(Io, ShippedGprimeRepairsTheDuplicate) {
    auto gp = io::fixture_map("gprime").map;
    EXPECT_EQ(gp({-1, -1}), (Point{-1, 0}));
    EXPECT_TRUE(is_continuous(gp));
}

TEST(Circles, LiteralStepwiseContractionHasDisagreeingBranches) {
    EXPECT_EQ(step_toward(-2, 0), -1);
    EXPECT_EQ(step_toward(0, 0), 0);
    EXPECT_EQ(step_toward(2, 0), 1);
    DigitalImage C = io::fixture_image("C"), U = io::fixture_image("U");
    try {
        stepwise_contraction(U, C, 0);
        FAIL() << "expected a branch error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), Error::Kind::branch);
    }
}

TEST(Circles, CentringContractionVerifies) {
    DigitalImage C = io::fixture_image("C"), U = io::fixture_image("U");
    MapHomotopy H = centring_contraction(U, C, 2);
    EXPECT_TRUE(verify_map_homotopy(H).empty());
    EXPECT_EQ(H.stages, io::fixture_map_homotopy("lambda").homotopy.stages);
    // Moving every point one step per stage toward 2 breaks the diagonal.
    MapHomotopy fast = stepwise_contraction(U, C, 2);
    EXPECT_FALSE(verify_map_homotopy(fast).empty());
}

TEST(Circles, CorruptedFIsRejectedNamingTheSquare) {
    DigitalImage D = diamond(), C = io::fixture_image("C");
    DigitalMap f = io::fixture_map("f").map, g = io::fixture_map("g").map, gp = io::fixture_map("gprime").map;
    SubdivisionEquivalence e = circle_equivalence(D, C, f, g, gp);
    EXPECT_TRUE(verify_subdivision_equivalence(e).empty());
    std::vector<Point> vals = e.F.values();
    vals[0] = vals[0] == Point{2, 0} ? Point{1, 1} : Point{2, 0};
    e.F = DigitalMap(e.F.domain(), e.F.codomain(), vals);
    auto probs = verify_subdivision_equivalence(e);
    ASSERT_FALSE(probs.empty());
    bool named = false;
    for (const auto& p : probs) named = named || p.find("rho_l∘F = f∘rho_l") != std::string::npos;
    EXPECT_TRUE(named) << probs.front();
}

TEST(Circles, CensusOfBasedMaps) {
    DigitalImage D = diamond(), C = io::fixture_image("C");
    auto all = based_map_census(D, C);
    // (1,0) -> (2,0); (0,1) and (0,-1) each go to one of three points next to (2,0);
    // (-1,0) must then be next to both images.
    std::size_t oracle = 0;
    const std::vector<Point> near = {{2, 0}, {1, 1}, {1, -1}};
    for (const auto& a : near)
        for (const auto& b : near)
            for (const auto& y : C.points())
                if (adjacent(a, y) && adjacent(b, y)) ++oracle;
    EXPECT_EQ(all.size(), oracle);
    for (const auto& m : all) EXPECT_TRUE(is_continuous(m));
}

TEST(Svg, NodeAndEdgeCounts) {
    std::string d = svg::render_image(diamond());
    EXPECT_EQ(count_of(d, "<circle"), 4u);
    EXPECT_EQ(count_of(d, "<line"), 4u);
    std::string c = svg::render_image(io::fixture_image("C"));
    EXPECT_EQ(count_of(c, "<circle"), 8u);
    EXPECT_EQ(count_of(c, "<line"), 8u);
    EXPECT_EQ(svg::render_image(diamond(), diamond_generator()), svg::render_image(diamond(), diamond_generator()));
    EXPECT_THROW(svg::render_image(box({0, 0, 0}, {1, 1, 1})), Error);
}

TEST(Svg, ConstantGridIsUniform) {
    std::string g = svg::render_grid(still(diamond(), constant_path({1, 0}, 3), 2));
    EXPECT_EQ(count_of(g, "<rect"), 12u);
    EXPECT_EQ(count_of(g, "rgb(128,128,128)"), 12u);
}

TEST(Cli, ExitCodes) {
    Scratch s;
    EXPECT_EQ(cli(s, "check-map " + fixture("f.map")).code, 0);
    EXPECT_EQ(cli(s, "winding " + fixture("generator.loop")).out, "w=4 h=1\n");
    EXPECT_EQ(cli(s, "verify-grid " + fixture("diamond_graph_contraction.grid")).code, 1);
    EXPECT_EQ(cli(s, "no-such-command").code, 2);
    EXPECT_EQ(cli(s, "winding " + s.path("missing.loop").string()).code, 2);
    auto bad = s.write("bad.map", "domain=@D\ncodomain=@D\n1,0 -> 1,0\n0,1 -> -1,0\n-1,0 -> 1,0\n0,-1 -> 1,0\n");
    CliRun r = cli(s, "check-map " + bad.string());
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("discontinuous"), std::string::npos);
    EXPECT_EQ(cli(s, "cover " + fixture("generator.loop") + " 2").code, 2);
}

TEST(Cli, CoverAndHomotopyFilesVerify) {
    Scratch s;
    CliRun r = cli(s, "cover " + fixture("generator.loop") + " 3 --out " + s.path("up.loop").string());
    ASSERT_EQ(r.code, 0) << r.out;
    auto up = io::load_path(s.path("up.loop"));
    EXPECT_TRUE(is_loop(up.image, up.path));
    EXPECT_EQ(up.path, standard_cover(diamond_generator(), 1));

    r = cli(s, "cover-homotopy " + s.path("up.loop").string() + " 3 --out " + s.path("h.grid").string());
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(cli(s, "verify-grid " + s.path("h.grid").string()).code, 0);

    for (const std::string kind : {"reparam -k 3", "inverse", "inverse --star"}) {
        std::string out = s.path("m.grid").string();
        r = cli(s, "make-homotopy " + kind + " " + fixture("generator.loop") + " --out " + out);
        ASSERT_EQ(r.code, 0) << kind << ": " << r.out;
        EXPECT_EQ(cli(s, "verify-grid " + out).code, 0) << kind;
    }
    r = cli(s, "make-homotopy cube 3 --symmetric --out " + s.path("c.grid").string());
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(cli(s, "verify-grid " + s.path("c.grid").string()).code, 0);
}

TEST(Cli, EquivWritesAReplayableWitness) {
    Scratch s;
    auto b = s.write("b.loop", "image=@D\n1,0\n0,1\n0,1\n-1,0\n-1,0\n-1,0\n0,-1\n1,0\n1,0\n1,0\n");
    CliRun r = cli(s, "equiv " + fixture("generator.loop") + " " + b.string() + " --out " + s.path("w.txt").string());
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.rfind("equivalent", 0), 0u);
    EXPECT_EQ(cli(s, "verify-witness " + s.path("w.txt").string()).code, 0);
    auto c = s.write("c.loop", "image=@D\n1,0\n1,0\n1,0\n1,0\n1,0\n");
    r = cli(s, "equiv " + fixture("generator.loop") + " " + c.string());
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.rfind("separated-by-invariant", 0), 0u);
}

TEST(Cli, Pi1SubdivideRenderAndSuite) {
    Scratch s;
    CliRun r = cli(s, "pi1 @D --max-len 4");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("3 classes"), std::string::npos) << r.out;
    r = cli(s, "subdivide @D 2");
    EXPECT_EQ(io::parse_image(r.out), subdivide(diamond(), 2));
    r = cli(s, "render " + fixture("C.img"));
    EXPECT_EQ(count_of(r.out, "<circle"), 8u);
    r = cli(s, "render " + fixture("diamond_graph_contraction.grid"));
    EXPECT_EQ(count_of(r.out, "<rect"), 15u);
    r = cli(s, "dc-example");
    EXPECT_EQ(r.code, 0) << r.out;
    r = cli(s, "verify-paper-suite --only 6");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("[PASS] 6", 0), 0u) << r.out;
}

TEST(Cli, FixtureDirectoryOverride) {
    Scratch s;
    s.write("D.img", "dim=2\nbasepoint=0,1\n1,0\n0,1\n-1,0\n0,-1\n");
    std::string cmd = "DIGITOPO_FIXTURES=" + s.path("").string() + " " + std::string(DIGITOPO_CLI) + " subdivide @D 1 > " +
                      s.path("o.txt").string();
    ASSERT_EQ(std::system(cmd.c_str()), 0);
    std::ifstream in(s.path("o.txt"));
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_NE(text.find("basepoint=0,1"), std::string::npos);
}
