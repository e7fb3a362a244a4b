#include "cycdec/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cycdec/errors.hpp"
#include "cycdec/feasibility.hpp"
#include "cycdec/four_phase.hpp"
#include "cycdec/search.hpp"
#include "cycdec/small_cases.hpp"
#include "cycdec/svg.hpp"
#include "cycdec/textio.hpp"
#include "cycdec/three_cycles.hpp"

namespace cycdec {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << text;
    if (!os) throw std::runtime_error("cannot write " + path);
}

// Serialized decomposition to the -o file when given, else to stdout.
void deliver(const Decomposition& d, const std::string& out_path,
             std::ostream& out) {
    const std::string text = serialize(d);
    if (out_path.empty())
        out << text;
    else
        write_file(out_path, text);
}

struct DecomposeArgs {
    int m = 0, n = 0;
    long long k = 0;
    bool three_cycles = false, four_phase = false, c6 = false, odd = false,
         checkerboard_flag = false, auto_flag = false;
    int g = 0, h = 0;
    std::string out_path;
};

struct SearchArgs {
    int m = 0, n = 0, k = 0;
    long long node_limit = SearchConfig{}.node_limit;
    std::string out_path;
};

struct FeasibleArgs {
    int m = 0, n = 0;
    long long k = 0;
};

struct VerifyArgs {
    std::string file;
};

struct RenderArgs {
    std::string file;
    std::string out_path;
    double cell_size = RenderStyle{}.cell_size;
};

int run_decompose(const DecomposeArgs& a, std::ostream& out,
                  std::ostream& err) {
    const TorusDims dims{a.m, a.n};
    const int picked = int(a.three_cycles) + int(a.four_phase) + int(a.c6) +
                       int(a.odd) + int(a.checkerboard_flag) +
                       int(a.auto_flag);
    if (picked != 1) {
        err << "usage error: pick exactly one of --three-cycles, "
               "--four-phase, --c6, --odd, --checkerboard, --auto\n";
        return 2;
    }
    if ((a.four_phase || a.auto_flag) && a.k == 0) {
        err << "usage error: --four-phase and --auto require --k\n";
        return 2;
    }
    if ((a.g != 0) != (a.h != 0)) {
        err << "usage error: --g and --h must be given together\n";
        return 2;
    }
    if ((a.g != 0) && !a.four_phase) {
        err << "usage error: --g/--h apply only to --four-phase\n";
        return 2;
    }

    if (a.three_cycles) {
        deliver(decompose_three_cycles(dims), a.out_path, out);
        return 0;
    }
    if (a.checkerboard_flag) {
        deliver(checkerboard(dims), a.out_path, out);
        return 0;
    }
    if (a.c6) {
        deliver(c6_decompose(dims), a.out_path, out);
        return 0;
    }
    if (a.odd) {
        deliver(run_method(Method::Odd, dims, std::max(a.m, a.n)), a.out_path,
                out);
        return 0;
    }
    if (a.four_phase) {
        if (a.m % 4 != 0 || a.n % 4 != 0 || a.k % 4 != 0)
            throw PreconditionError(
                "--four-phase needs m, n and k all divisible by 4");
        std::optional<FactorSplit> split;
        if (a.g != 0) split = FactorSplit{a.g, a.h};
        deliver(decompose_4k(a.m / 4, a.n / 4, static_cast<int>(a.k / 4),
                             split),
                a.out_path, out);
        return 0;
    }

    // --auto
    const auto verdict = feasibility(a.k, dims);
    using Kind = FeasibilityVerdict::Kind;
    switch (verdict.kind) {
    case Kind::ConstructibleHere:
        deliver(run_method(*verdict.method, dims, a.k), a.out_path, out);
        return 0;
    case Kind::KnownImpossible:
    case Kind::NecessaryConditionsFail:
        err << verdict.to_string() << "\n";
        return 1;
    case Kind::OpenUnknown:
        break;
    }
    if (2LL * a.m * a.n > 96) {
        err << verdict.to_string() << " (torus too large to search)\n";
        return 1;
    }
    const auto result = search(dims, static_cast<int>(a.k));
    switch (result.kind) {
    case SearchOutcome::Kind::Found:
        deliver(*result.decomposition, a.out_path, out);
        return 0;
    case SearchOutcome::Kind::ProvedImpossible:
        err << "IMPOSSIBLE (tree exhausted, " << result.nodes << " nodes)\n";
        return 1;
    case SearchOutcome::Kind::Inconclusive:
        err << "INCONCLUSIVE (node limit reached, " << result.nodes
            << " nodes)\n";
        return 1;
    }
    return 1;
}

int run_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
    SearchConfig cfg;
    cfg.node_limit = a.node_limit;
    const auto result = search({a.m, a.n}, a.k, cfg);
    switch (result.kind) {
    case SearchOutcome::Kind::Found:
        deliver(*result.decomposition, a.out_path, out);
        if (!a.out_path.empty())
            out << "FOUND (" << result.nodes << " nodes)\n";
        return 0;
    case SearchOutcome::Kind::ProvedImpossible:
        out << "IMPOSSIBLE (tree exhausted, " << result.nodes << " nodes)\n";
        return 1;
    case SearchOutcome::Kind::Inconclusive:
        out << "INCONCLUSIVE (node limit reached, " << result.nodes
            << " nodes)\n";
        return 1;
    }
    err << "internal error: unreachable search outcome\n";
    return 1;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
    const auto d = parse(read_file(a.file));
    const auto report = validate(d);
    out << report.summary() << "\n";
    return report.pass ? 0 : 1;
}

int run_feasible(const FeasibleArgs& a, std::ostream& out) {
    const auto verdict = feasibility(a.k, {a.m, a.n});
    out << verdict.to_string() << "\n";
    return verdict.kind == FeasibilityVerdict::Kind::ConstructibleHere ? 0 : 1;
}

int run_render(const RenderArgs& a, std::ostream& out) {
    const auto d = parse(read_file(a.file));
    RenderStyle style;
    style.cell_size = a.cell_size;
    write_file(a.out_path, render_svg(d, style));
    out << "wrote " << a.out_path << "\n";
    return 0;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"cycle decompositions of the torus graph C_m x C_n"};
    app.name("cycdec");
    app.require_subcommand(1);

    DecomposeArgs da;
    auto* dec = app.add_subcommand(
        "decompose", "build a decomposition with a named construction");
    // frees the short -h for the four-phase split factor
    dec->set_help_flag("--help", "print this help message and exit");
    dec->add_option("-m,--m", da.m, "rows (vertical cycle length)")
        ->required();
    dec->add_option("-n,--n", da.n, "columns (horizontal cycle length)")
        ->required();
    dec->add_option("-k,--k", da.k, "cycle length (for --four-phase, --auto)");
    dec->add_flag("--three-cycles", da.three_cycles,
                  "three equal cycles of length 2mn/3");
    dec->add_flag("--four-phase", da.four_phase,
                  "length-k cycles on a 4x4-divisible torus (requires --k)");
    dec->add_flag("--c6", da.c6, "six-cycles on (3,3), (6,6) or {6,4N}");
    dec->add_flag("--odd", da.odd, "length-max(m,n) cycles, both sides odd");
    dec->add_flag("--checkerboard", da.checkerboard_flag,
                  "unit squares, both sides even");
    dec->add_flag("--auto", da.auto_flag,
                  "pick a construction for --k, searching small toruses");
    dec->add_option("--g", da.g, "four-phase split factor g (with --h)");
    dec->add_option("--h", da.h, "four-phase split factor h (with --g)");
    dec->add_option("-o,--output", da.out_path, "write result to file");

    SearchArgs sa;
    auto* sea = app.add_subcommand(
        "search", "exhaustive exact-cover search for a k-cycle decomposition");
    sea->add_option("-m,--m", sa.m, "rows")->required();
    sea->add_option("-n,--n", sa.n, "columns")->required();
    sea->add_option("-k,--k", sa.k, "cycle length")->required();
    sea->add_option("--node-limit", sa.node_limit,
                    "backtracking node budget");
    sea->add_option("-o,--output", sa.out_path, "write decomposition to file");

    FeasibleArgs fa;
    auto* fea = app.add_subcommand(
        "feasible", "report what is known about C_k decomposing C_m x C_n");
    fea->add_option("-m,--m", fa.m, "rows")->required();
    fea->add_option("-n,--n", fa.n, "columns")->required();
    fea->add_option("-k,--k", fa.k, "cycle length")->required();

    VerifyArgs va;
    auto* ver = app.add_subcommand(
        "verify", "validate a decomposition file (coverage, disjointness)");
    ver->add_option("file", va.file, "decomposition file")->required();

    RenderArgs ra;
    auto* ren = app.add_subcommand("render", "render a decomposition to SVG");
    ren->add_option("file", ra.file, "decomposition file")->required();
    ren->add_option("-o,--output", ra.out_path, "output SVG path")->required();
    ren->add_option("--cell-size", ra.cell_size, "pixels per grid step");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(dec)) return run_decompose(da, out, err);
        if (app.got_subcommand(sea)) return run_search(sa, out, err);
        if (app.got_subcommand(fea)) return run_feasible(fa, out);
        if (app.got_subcommand(ver)) return run_verify(va, out);
        if (app.got_subcommand(ren)) return run_render(ra, out);
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        err << "invalid decomposition file";
        if (e.line > 0) err << " (line " << e.line << ")";
        err << ": " << e.what() << "\n";
        return 1;
    } catch (const RenderError& e) {
        err << e.what() << "\n" << e.report.summary() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
}

} // namespace cycdec
