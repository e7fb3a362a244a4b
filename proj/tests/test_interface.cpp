#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cycdec/cli.hpp"
#include "cycdec/decomposition.hpp"
#include "cycdec/four_phase.hpp"
#include "cycdec/small_cases.hpp"
#include "cycdec/svg.hpp"
#include "cycdec/textio.hpp"
#include "cycdec/three_cycles.hpp"

using namespace cycdec;

namespace {

int count_occurrences(const std::string& hay, const std::string& needle) {
    int count = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++count;
    return count;
}

// Independent census of edges that cross the torus border: the canonical
// representative of a wrapping edge always starts at the last row (vertical)
// or last column (horizontal).
bool edge_wraps(const Edge& e, TorusDims d) {
    return e.o == Orient::Vertical ? e.u.i == d.m - 1 : e.u.j == d.n - 1;
}

int class_wrap_count(const CycleWalk& w) {
    int count = 0;
    for (const Edge& e : walk_edges(w))
        if (edge_wraps(e, w.dims)) ++count;
    return count;
}

int total_wrap_count(const Decomposition& d) {
    int count = 0;
    for (const auto& w : d.classes) count += class_wrap_count(w);
    return count;
}

// Body of <g id="class-c" ...>...</g>.
std::string class_group(const std::string& svg, int c) {
    const std::string open = "<g id=\"class-" + std::to_string(c) + "\"";
    const size_t begin = svg.find(open);
    REQUIRE(begin != std::string::npos);
    const size_t end = svg.find("</g>", begin);
    REQUIRE(end != std::string::npos);
    return svg.substr(begin, end - begin);
}

struct CliRun {
    int rc = 0;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun r;
    r.rc = cli_main(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::filesystem::path tmp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void spit(const std::filesystem::path& p, const std::string& text) {
    std::ofstream os(p, std::ios::binary);
    REQUIRE(os.good());
    os << text;
}

} // namespace

TEST_SUITE("interface") {

TEST_CASE("svg line and circle counts match a direct edge census") {
    const auto d = checkerboard({4, 4});
    const std::string svg = render_svg(d);

    const int wraps = total_wrap_count(d);
    CHECK(wraps == 8); // one vertical per column + one horizontal per row

    // Every plain edge is one segment, every wrapping edge two stubs.
    CHECK(count_occurrences(svg, "<line") == 2 * 4 * 4 + wraps);
    CHECK(count_occurrences(svg, "<circle") == 4 * 4);

    // One group per class plus the vertex group, properly closed.
    CHECK(count_occurrences(svg, "<g id=") ==
          static_cast<int>(d.classes.size()) + 1);
    CHECK(count_occurrences(svg, "</g>") ==
          static_cast<int>(d.classes.size()) + 1);
    CHECK(svg.find("<g id=\"vertices\"") != std::string::npos);

    // Every labeled class advertises its label on the group.
    CHECK(count_occurrences(svg, "data-label=\"C4(") ==
          static_cast<int>(d.classes.size()));

    // Without labels the attribute disappears entirely.
    auto unlabeled = d;
    unlabeled.labels.clear();
    CHECK(render_svg(unlabeled).find("data-label") == std::string::npos);
}

TEST_CASE("svg groups carry one segment per edge plus one per wrapping edge") {
    const auto d = decompose_three_cycles({4, 15});
    const std::string svg = render_svg(d);

    int expected_total = 0;
    for (size_t c = 0; c < d.classes.size(); ++c) {
        const std::string group = class_group(svg, static_cast<int>(c));
        const int expect =
            d.classes[c].length() + class_wrap_count(d.classes[c]);
        CHECK(count_occurrences(group, "<line") == expect);
        expected_total += expect;
    }
    CHECK(count_occurrences(svg, "<line") == expected_total);
    CHECK(expected_total == 2 * 4 * 15 + total_wrap_count(d));
}

TEST_CASE("svg styles default by class index and override by label") {
    const auto d = decompose_three_cycles({3, 3});
    REQUIRE(d.labels == std::vector<std::string>{"red", "yellow", "blue"});

    const std::string svg = render_svg(d);
    const std::string g0 = class_group(svg, 0);
    const std::string g1 = class_group(svg, 1);
    const std::string g2 = class_group(svg, 2);

    CHECK(g0.find("data-label=\"red\"") != std::string::npos);
    CHECK(g0.find("stroke=\"red\"") != std::string::npos);
    CHECK(g0.find("stroke-dasharray=\"8,4\"") != std::string::npos);

    CHECK(g1.find("stroke=\"yellow\"") != std::string::npos);
    CHECK(g1.find("stroke-dasharray=\"none\"") != std::string::npos);

    CHECK(g2.find("stroke=\"blue\"") != std::string::npos);
    CHECK(g2.find("stroke-dasharray=\"2,4\"") != std::string::npos);

    CHECK(count_occurrences(svg, "stroke-width=\"3\"") == 3);

    RenderStyle style;
    style.palette["yellow"] = {"#112233", "1,2"};
    const std::string overridden = render_svg(d, style);
    const std::string o1 = class_group(overridden, 1);
    CHECK(o1.find("stroke=\"#112233\"") != std::string::npos);
    CHECK(o1.find("stroke-dasharray=\"1,2\"") != std::string::npos);
    // Classes without a palette entry keep their defaults.
    CHECK(class_group(overridden, 0).find("stroke=\"red\"") !=
          std::string::npos);
}

TEST_CASE("svg output is byte-stable and geometry follows the style") {
    const auto d = decompose_three_cycles({4, 15});
    CHECK(render_svg(d) == render_svg(d));

    // margin 20 each side, 0.4-cell stubs each side, n-1 cells across.
    CHECK(render_svg(d).find("width=\"632\" height=\"192\"") !=
          std::string::npos);

    RenderStyle small;
    small.cell_size = 10;
    const std::string svg = render_svg(checkerboard({4, 4}), small);
    CHECK(svg.find("width=\"78\" height=\"78\"") != std::string::npos);
    CHECK(svg.find("viewBox=\"0 0 78 78\"") != std::string::npos);
}

TEST_CASE("svg refuses a broken decomposition and carries the report") {
    auto d = checkerboard({4, 4});
    d.classes.pop_back(); // leaves one square's edges uncovered
    bool thrown = false;
    try {
        render_svg(d);
    } catch (const RenderError& e) {
        thrown = true;
        CHECK(std::string(e.what()).find("refusing to render") !=
              std::string::npos);
        CHECK_FALSE(e.report.pass);
        CHECK(e.report.first_missing_edge.has_value());
    }
    CHECK(thrown);
}

TEST_CASE("cli decompose writes a file that verify accepts") {
    const auto path = tmp_file("cycdec_iface_roundtrip.txt");
    const auto dec = run_cli({"decompose", "--three-cycles", "--m", "4", "--n",
                              "15", "-o", path.string()});
    CHECK(dec.rc == 0);
    CHECK(dec.err.empty());

    const auto ver = run_cli({"verify", path.string()});
    CHECK(ver.rc == 0);
    CHECK(ver.out.find("PASS") != std::string::npos);
    CHECK(ver.out.find("lengths {40x3}") != std::string::npos);

    // The file holds the canonical serialization.
    const auto d = parse(slurp(path));
    CHECK(validate(d).pass);
    CHECK(equivalent(d, decompose_three_cycles({4, 15})));
    std::filesystem::remove(path);
}

TEST_CASE("cli decompose streams the serialization when no output file") {
    const auto r = run_cli({"decompose", "--checkerboard", "--m", "4", "--n",
                            "6"});
    CHECK(r.rc == 0);
    CHECK(r.out.rfind("torus 4 6\n", 0) == 0);
    CHECK(equivalent(parse(r.out), checkerboard({4, 6})));
}

TEST_CASE("cli search reports found, impossible and inconclusive") {
    const auto found = run_cli({"search", "--m", "3", "--n", "3", "--k", "6"});
    CHECK(found.rc == 0);
    const auto d = parse(found.out);
    const auto report = validate(d);
    CHECK(report.pass);
    CHECK(report.length_histogram == std::map<int, int>{{6, 3}});

    const auto impossible =
        run_cli({"search", "--m", "3", "--n", "4", "--k", "6"});
    CHECK(impossible.rc == 1);
    CHECK(impossible.out.rfind("IMPOSSIBLE (tree exhausted, ", 0) == 0);
    CHECK(impossible.out.find(" nodes)\n") != std::string::npos);

    const auto limited = run_cli({"search", "--m", "4", "--n", "4", "--k", "4",
                                  "--node-limit", "1"});
    CHECK(limited.rc == 1);
    CHECK(limited.out.rfind("INCONCLUSIVE (node limit reached, ", 0) == 0);

    // Byte-for-byte determinism across runs.
    const auto again = run_cli({"search", "--m", "3", "--n", "3", "--k", "6"});
    CHECK(again.out == found.out);
    const auto impossible_again =
        run_cli({"search", "--m", "3", "--n", "4", "--k", "6"});
    CHECK(impossible_again.out == impossible.out);
}

TEST_CASE("cli search -o writes the file and reports the node count") {
    const auto path = tmp_file("cycdec_iface_search.txt");
    const auto r = run_cli({"search", "--m", "3", "--n", "3", "--k", "6", "-o",
                            path.string()});
    CHECK(r.rc == 0);
    CHECK(r.out.rfind("FOUND (", 0) == 0);
    CHECK(validate(parse(slurp(path))).pass);
    std::filesystem::remove(path);
}

TEST_CASE("cli feasible prints the verdict and encodes it in the exit code") {
    const auto yes =
        run_cli({"feasible", "--m", "8", "--n", "8", "--k", "16"});
    CHECK(yes.rc == 0);
    CHECK(yes.out.rfind("constructible [four-phase]", 0) == 0);

    const auto no = run_cli({"feasible", "--m", "8", "--n", "8", "--k", "6"});
    CHECK(no.rc == 1);
    CHECK(no.out.rfind("impossible [c6-characterization]", 0) == 0);

    const auto open =
        run_cli({"feasible", "--m", "10", "--n", "10", "--k", "10"});
    CHECK(open.rc == 1);
    CHECK(open.out.rfind("unknown", 0) == 0);
}

TEST_CASE("cli auto dispatches constructions and falls back to search") {
    const auto direct =
        run_cli({"decompose", "--auto", "--m", "6", "--n", "6", "--k", "4"});
    CHECK(direct.rc == 0);
    CHECK(equivalent(parse(direct.out), checkerboard({6, 6})));

    const auto searched =
        run_cli({"decompose", "--auto", "--m", "4", "--n", "5", "--k", "10"});
    CHECK(searched.rc == 0);
    const auto report = validate(parse(searched.out));
    CHECK(report.pass);
    CHECK(report.length_histogram == std::map<int, int>{{10, 4}});

    const auto refuted =
        run_cli({"decompose", "--auto", "--m", "3", "--n", "6", "--k", "9"});
    CHECK(refuted.rc == 1);
    CHECK(refuted.err.rfind("IMPOSSIBLE (tree exhausted, ", 0) == 0);

    const auto too_big = run_cli(
        {"decompose", "--auto", "--m", "10", "--n", "10", "--k", "10"});
    CHECK(too_big.rc == 1);
    CHECK(too_big.err.find("torus too large to search") != std::string::npos);
}

TEST_CASE("cli usage errors exit 2 with a message") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"bogus"},
             {"decompose", "--m", "4", "--n", "4"},
             {"decompose", "--three-cycles", "--checkerboard", "--m", "6",
              "--n", "6"},
             {"decompose", "--four-phase", "--m", "4", "--n", "4"},
             {"decompose", "--auto", "--m", "4", "--n", "4"},
             {"decompose", "--four-phase", "--m", "4", "--n", "4", "--k", "8",
              "--g", "2"},
             {"decompose", "--checkerboard", "--m", "4", "--n", "4", "--g",
              "1", "--h", "4"},
             {"search", "--m", "3", "--n", "3"},
             {"verify"},
             {"render", "in.txt"},
             {"feasible", "--m", "3", "--k", "6", "--wat", "1"},
         }) {
        const auto r = run_cli(args);
        CHECK(r.rc == 2);
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("cli domain failures exit 1 with a diagnostic") {
    const auto wrong_shape =
        run_cli({"decompose", "--c6", "--m", "5", "--n", "5"});
    CHECK(wrong_shape.rc == 1);
    CHECK_FALSE(wrong_shape.err.empty());

    const auto missing = run_cli({"verify", tmp_file("nope.txt").string()});
    CHECK(missing.rc == 1);

    const auto garbled = tmp_file("cycdec_iface_garbled.txt");
    spit(garbled, "torus 4\n");
    const auto bad_parse = run_cli({"verify", garbled.string()});
    CHECK(bad_parse.rc == 1);
    CHECK(bad_parse.err.find("invalid decomposition file") !=
          std::string::npos);
    std::filesystem::remove(garbled);

    // Syntactically fine but not an edge partition: verify prints the
    // report and signals failure.
    const auto overlap = tmp_file("cycdec_iface_overlap.txt");
    spit(overlap, "torus 3 3\ncycles 2\n"
                  "cycle 0 3: (0,0) (0,1) (0,2)\n"
                  "cycle 1 3: (0,0) (0,1) (0,2)\n");
    const auto not_cover = run_cli({"verify", overlap.string()});
    CHECK(not_cover.rc == 1);
    CHECK(not_cover.out.find("FAIL") != std::string::npos);
    std::filesystem::remove(overlap);
}

TEST_CASE("cli render writes deterministic svg matching the library") {
    const auto data = tmp_file("cycdec_iface_render_in.txt");
    const auto svg1 = tmp_file("cycdec_iface_render1.svg");
    const auto svg2 = tmp_file("cycdec_iface_render2.svg");
    REQUIRE(run_cli({"decompose", "--checkerboard", "--m", "4", "--n", "4",
                     "-o", data.string()})
                .rc == 0);

    const auto r1 = run_cli({"render", data.string(), "-o", svg1.string()});
    CHECK(r1.rc == 0);
    CHECK(r1.out == "wrote " + svg1.string() + "\n");
    const auto r2 = run_cli({"render", data.string(), "-o", svg2.string()});
    CHECK(r2.rc == 0);

    const std::string bytes = slurp(svg1);
    CHECK(bytes == slurp(svg2));
    CHECK(bytes == render_svg(parse(slurp(data))));
    CHECK(bytes.rfind("<?xml", 0) == 0);

    // Invalid input file: the validation report reaches the user.
    const auto broken = tmp_file("cycdec_iface_render_bad.txt");
    spit(broken, "torus 3 3\ncycles 1\ncycle 0 3: (0,0) (0,1) (0,2)\n");
    const auto bad =
        run_cli({"render", broken.string(), "-o", svg1.string()});
    CHECK(bad.rc == 1);
    CHECK(bad.err.find("refusing to render") != std::string::npos);
    CHECK(bad.err.find("FAIL") != std::string::npos);

    for (const auto& p : {data, svg1, svg2, broken})
        std::filesystem::remove(p);
}

TEST_CASE("cli help exits zero and names the subcommands") {
    const auto top = run_cli({"--help"});
    CHECK(top.rc == 0);
    for (const char* name :
         {"decompose", "search", "feasible", "verify", "render"})
        CHECK(top.out.find(name) != std::string::npos);

    const auto sub = run_cli({"decompose", "--help"});
    CHECK(sub.rc == 0);
    CHECK(sub.out.find("--three-cycles") != std::string::npos);
    CHECK(sub.out.find("--four-phase") != std::string::npos);
}

TEST_CASE("cli four-phase honors an explicit factor split") {
    const auto r = run_cli({"decompose", "--four-phase", "--m", "12", "--n",
                            "24", "--k", "48", "--g", "3", "--h", "4"});
    CHECK(r.rc == 0);
    const auto report = validate(parse(r.out));
    CHECK(report.pass);
    CHECK(report.length_histogram == std::map<int, int>{{48, 12}});

    const auto bad_split = run_cli({"decompose", "--four-phase", "--m", "12",
                                    "--n", "24", "--k", "48", "--g", "5",
                                    "--h", "12"});
    CHECK(bad_split.rc == 1);
    CHECK_FALSE(bad_split.err.empty());
}

} // TEST_SUITE
