#include <cmath>
#include <string>

#include "config.hpp"
#include "doctest.h"
#include "scenarios.hpp"
#include "table.hpp"

using namespace adslen;
using namespace adslen::cli;

namespace {

Config::Section section(const std::string& text, const std::string& name) { return Config::parse(text).section(name); }

// Message of the ConfigError thrown by f, or "" when nothing is thrown.
std::string config_error(auto&& f) {
    try {
        f();
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

Outcome run(const std::string& name, const std::string& text, const Overrides& ov = {}) {
    return run_scenario(name, Config::parse(text).section(name), ov);
}

}  // namespace

TEST_CASE("config sections and comments") {
    auto cfg = Config::parse("# head\n[a]\nx = 1 ; trailing\n\n[b]\ny=two words\n");
    CHECK(cfg.has_section("a"));
    CHECK(cfg.has_section("b"));
    CHECK_FALSE(cfg.has_section("c"));
    CHECK(cfg.section("a").integer("x") == 1);
    CHECK(cfg.section("b").str("y") == "two words");
    CHECK(cfg.section("b").line("y") == 6);
}

TEST_CASE("config syntax errors carry line numbers") {
    CHECK(config_error([] { Config::parse("[a]\nx = 1\nx = 2\n"); }) == "config:3: duplicate key 'x'");
    CHECK(config_error([] { Config::parse("x = 1\n"); }) == "config:1: key outside of any section");
    CHECK(config_error([] { Config::parse("[a]\njunk\n"); }) == "config:2: expected key = value");
    CHECK(config_error([] { Config::parse("[a\n"); }) == "config:1: unterminated section header");
    CHECK(config_error([] { Config::parse("[a]\n[a]\n"); }) == "config:2: duplicate section [a]");
    CHECK(config_error([] { Config::parse("[a]\n").section("b"); }).find("no [b] section") != std::string::npos);
}

TEST_CASE("typed values") {
    auto s = section(
        "[s]\nr = 2.5\nn = 7\nf = yes\nl = a, b ,c\nv = 1, -2.5e-1\ng = 0:1:5\nz = 1, -1, 0\nc = -1/2\n"
        "cs = 0/1, 1/0\nw = ab, aBB\nww = a:1, aab:2\nlt = triangulation\nls = spin 1/1 0.5\n",
        "s");
    CHECK(s.real("r") == 2.5);
    CHECK(s.real("missing", 4) == 4);
    CHECK(s.integer("n") == 7);
    CHECK(s.flag("f", false));
    CHECK(s.list("l") == std::vector<std::string>{"a", "b", "c"});
    CHECK(s.reals("v") == std::vector<double>{1, -0.25});
    CHECK(s.grid("g") == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
    CHECK(s.grid("v") == std::vector<double>{1, -0.25});
    auto z = s.shear("z");
    CHECK((z.x == 1 && z.y == -1 && z.z == 0));
    CHECK(s.slope("c") == Slope::make(-1, 2));
    CHECK(s.slopes("cs").size() == 2);
    CHECK(s.words("w")[1].str() == "aBB");
    auto ww = s.weighted_words("ww");
    CHECK(ww[1].first.str() == "aab");
    CHECK(ww[1].second == 2);
    CHECK(s.lamination("lt").kind == FiniteLamination::Kind::Triangulation);
    auto spin = s.lamination("ls");
    CHECK(spin.kind == FiniteLamination::Kind::Spin);
    CHECK(spin.leaf() == Slope::make(1, 1));
    CHECK(spin.weight() == 0.5);
}

TEST_CASE("bad values are reported at their line") {
    auto s = section("[s]\nr = abc\nn = 1.5\nz = 1, 1, 1\nc = 2/4\nw = abc\ng = 0:1:x\nf = maybe\n", "s");
    CHECK(config_error([&] { s.real("r"); }).rfind("config:2:", 0) == 0);
    CHECK(config_error([&] { s.integer("n"); }).rfind("config:3:", 0) == 0);
    CHECK(config_error([&] { s.shear("z"); }).rfind("config:4:", 0) == 0);
    CHECK(config_error([&] { s.slope("c"); }).rfind("config:5:", 0) == 0);
    CHECK(config_error([&] { s.words("w"); }).rfind("config:6:", 0) == 0);
    CHECK(config_error([&] { s.grid("g"); }).rfind("config:7:", 0) == 0);
    CHECK(config_error([&] { s.flag("f", false); }).rfind("config:8:", 0) == 0);
    // a missing key points at the section header
    CHECK(config_error([&] { s.slopes("slopes"); }).rfind("config:1:", 0) == 0);
}

TEST_CASE("slope parsing") {
    CHECK(parse_slope("3/2") == Slope::make(3, 2));
    CHECK(parse_slope(" -1/3 ") == Slope::make(-1, 3));
    CHECK_THROWS(parse_slope("1/"));
    CHECK_THROWS(parse_slope("0/0"));
    CHECK_THROWS(parse_slope("2/4"));
}

TEST_CASE("csv output") {
    Table t;
    t.columns = {"x", "n", "label"};
    t.add({0.1, 3L, std::string("a,b")});
    t.add({1.0 / 3, -1L, std::string("plain")});
    CHECK(to_csv(t) == "x,n,label\n0.10000000000000001,3,\"a,b\"\n0.33333333333333331,-1,plain\n");
    CHECK(std::stod(format_cell(1.0 / 3)) == 1.0 / 3);
    CHECK(std::stod(format_cell(-2.4e-300)) == -2.4e-300);
    CHECK(t.column("n") == 1);
    CHECK(t.column("y") == -1);
    CHECK_THROWS(t.add({1.0}));
}

TEST_CASE("svg output") {
    Table t;
    t.columns = {"s", "L", "word"};
    for (int i = 0; i < 5; ++i) {
        t.add({i / 4.0, i * i * 1.0, std::string("a")});
        t.add({i / 4.0, i * 1.0, std::string("b")});
    }
    auto svg = to_svg(t, "s", "L", "word");
    CHECK(svg.rfind("<svg", 0) == 0);
    std::size_t lines = 0;
    for (auto p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1)) ++lines;
    CHECK(lines == 2);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("convexity scenario on the example segment") {
    auto out = run("convexity", "[convexity]\nX = 1, -1, 0\nY = 0, 0, 0\nwords = ab\nn = 33\n");
    CHECK(out.failures.empty());
    REQUIRE(out.table.rows.size() == 33);
    int m = out.table.column("margin");
    for (const auto& r : out.table.rows) CHECK(std::get<double>(r[m]) >= -1e-9);
}

TEST_CASE("earthquake scenario with a non-crossing word") {
    auto out = run("earthquake", "[earthquake]\nZ = 0.3, -0.5, 0.2\nslopes = 0/1\nwords = a\nt = -0.5:0.5:11\n");
    CHECK(out.failures.empty());
    CHECK(out.table.rows.size() == 11);  // t = 0 is the base row
    int sl = out.table.column("slack");
    for (const auto& r : out.table.rows) CHECK(std::get<double>(r[sl]) >= -1e-4);
}

TEST_CASE("scenario config errors") {
    CHECK(config_error([] { run("earthquake", "[earthquake]\nwords = b\n"); }).find("slopes") != std::string::npos);
    CHECK(config_error([] { run("earthquake", "[earthquake]\nslopes = 0/1\nwords = b\nh = 1\n"); }).rfind("config:4:", 0) ==
          0);
    CHECK(config_error([] { run("convexity", "[convexity]\nwords = ab\nX = 1, 1, 0\nY = 0, 0, 0\n"); }).rfind("config:3:", 0) == 0);
    CHECK(config_error([] { run("minimize", "[minimize]\nobjective = a:-1\n"); }) != "");
    CHECK_THROWS(run("nonsense", "[nonsense]\n"));
}

TEST_CASE("seeded runs are reproducible") {
    std::string text = "[convexity]\npairs = 3\nwords = aab\nn = 9\nseed = 5\n";
    auto a = to_csv(run("convexity", text).table);
    auto b = to_csv(run("convexity", text).table);
    CHECK(a == b);
    Overrides ov;
    ov.seed = 6;
    CHECK(to_csv(run("convexity", text, ov).table) != a);
}

TEST_CASE("assertion failures are reported per row") {
    // a flat expectation on a segment that bends the word
    auto out = run("convexity", "[convexity]\nX = 1, -1, 0\nY = 0, 0, 0\nwords = aab\nn = 9\nexpect = flat\n");
    CHECK_FALSE(out.failures.empty());
    CHECK(out.failures.front().find("segment 0 word aab row") == 0);
}
