// edgebetti: Betti tables, extremal Betti numbers and bouquet certificates of
// edge ideals from the command line.
//
// Exit status: 0 success, 1 verification failure or field mismatch, 2 usage
// or input error.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgebetti/betti_analysis.hpp"
#include "edgebetti/betti_table.hpp"
#include "edgebetti/bouquets.hpp"
#include "edgebetti/families.hpp"
#include "edgebetti/graph_enumeration.hpp"
#include "edgebetti/graph_io.hpp"
#include "edgebetti/verify.hpp"

namespace {

using namespace edgebetti;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxCliBettiVertices = 16;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputSource {
    std::string path;
    std::string family;
};

Graph load_graph(const InputSource& src)
{
    if (!src.path.empty() && !src.family.empty())
        throw UsageError("give either an input file or --family, not both");
    if (!src.family.empty())
        return family_from_spec(src.family);
    if (src.path.empty())
        throw UsageError("no input graph (pass a file, '-' for stdin, or --family NAME:PARAMS)");
    if (src.path == "-") {
        std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
        return parse_graph(text);
    }
    return read_graph_file(src.path);
}

void add_input_options(CLI::App* cmd, InputSource& src)
{
    cmd->add_option("input", src.path, "Graph file (text or JSON), '-' for stdin");
    cmd->add_option("--family", src.family, "Inline family, e.g. grb:5,3, path-star:4, gpr1:4,2");
}

/// "a..b" or "a"; an upper bound of "r" is replaced by r_value when given.
std::pair<int, int> parse_range(const std::string& text, std::optional<int> r_value = std::nullopt)
{
    auto number = [&](const std::string& piece) {
        if (piece == "r" && r_value)
            return *r_value;
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(piece, &used);
        } catch (const std::exception&) {
            throw UsageError("bad range \"" + text + "\"");
        }
        if (used != piece.size())
            throw UsageError("bad range \"" + text + "\"");
        return value;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = number(text);
        return {v, v};
    }
    return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

int cmd_gen(const std::string& family, const std::vector<int>& params, const std::string& format)
{
    std::string spec = family + ":";
    for (std::size_t k = 0; k < params.size(); ++k)
        spec += (k ? "," : "") + std::to_string(params[k]);
    const Graph g = family_from_spec(spec);
    std::cout << (format == "json" ? format_graph_json(g) : format_graph_text(g));
    return kExitOk;
}

int cmd_convert(const InputSource& src, const std::string& format)
{
    const Graph g = load_graph(src);
    std::cout << (format == "json" ? format_graph_json(g) : format_graph_text(g));
    return kExitOk;
}

struct BettiArgs {
    InputSource src;
    std::string field = "rational";
    std::string compare_field;
    std::string format = "grid";
    bool json = false;
    std::vector<int> cell;
    unsigned threads = 1;
    bool extremal = false;
};

int cmd_betti(const BettiArgs& args)
{
    const Graph g = load_graph(args.src);
    if (g.vertex_count() > kMaxCliBettiVertices)
        throw UsageError("graph has " + std::to_string(g.vertex_count()) + " vertices; betti is limited to " +
                         std::to_string(kMaxCliBettiVertices));
    const FieldSpec field = FieldSpec::parse(args.field);
    if (!args.cell.empty()) {
        const BettiCell cell = betti_single(g, args.cell[0], args.cell[1], field);
        if (cell.beyond_vertex_count)
            std::cerr << "note: i + j exceeds the vertex count; the entry is zero\n";
        std::cout << cell.value << '\n';
        return kExitOk;
    }
    SweepOptions options;
    options.threads = args.threads;
    const BettiTable table = betti_table(g, field, options);
    std::cout << render_table(table, args.json ? TableFormat::json : parse_table_format(args.format));
    if (args.extremal) {
        const ExtremalReport report = extremal_positions(table);
        std::cerr << "reg " << report.regularity << ", projdim " << report.projective_dimension
                  << ", extremal";
        for (const ExtremalEntry& e : report.entries)
            std::cerr << " (" << e.i << "," << e.j << "):" << e.value;
        std::cerr << '\n';
    }
    if (!args.compare_field.empty()) {
        const FieldSpec other = FieldSpec::parse(args.compare_field);
        const BettiTable second = betti_table(g, other, options);
        if (second != table) {
            std::cerr << "field mismatch: Betti tables over " << field.name() << " and " << other.name()
                      << " differ\n"
                      << render_table(second, TableFormat::grid);
            return kExitFailure;
        }
        std::cerr << "tables over " << field.name() << " and " << other.name() << " agree\n";
    }
    return kExitOk;
}

void warn_if_not_chordal(const Graph& g)
{
    if (!is_chordal(g))
        std::cerr << "warning: graph is not chordal; certificates need not match nonzero Betti numbers\n";
}

int cmd_cert(const InputSource& src, int i, int j)
{
    const Graph g = load_graph(src);
    warn_if_not_chordal(g);
    const auto cert = find_certificate(g, i, j);
    std::cout << (cert ? format_certificate_json(*cert) : std::string("none")) << '\n';
    return kExitOk;
}

int cmd_positions(const InputSource& src)
{
    const Graph g = load_graph(src);
    warn_if_not_chordal(g);
    for (const auto& [i, j] : certified_positions(g))
        std::cout << i << ' ' << j << '\n';
    return kExitOk;
}

struct VerifyArgs {
    std::string scope;
    std::string r_range;
    std::string b_range;
    std::string p_range;
    std::vector<std::string> families;
    std::string path;
    int chordal_upto = 0;
    int trees_upto = 0;
    int random_count = 0;
    int random_max_n = 8;
    std::uint64_t seed = 1;
    std::string field = "rational";
    bool timing = false;
};

std::vector<std::pair<Graph, nlohmann::json>> verify_graphs(const VerifyArgs& args, int cap)
{
    std::vector<std::pair<Graph, nlohmann::json>> out;
    for (const std::string& spec : args.families)
        out.emplace_back(family_from_spec(spec), nlohmann::json{{"family", spec}});
    if (!args.path.empty())
        out.emplace_back(load_graph({args.path, ""}), nlohmann::json{{"input", args.path}});
    if (args.chordal_upto > 0) {
        if (args.chordal_upto > 8)
            throw UsageError("--all-chordal-upto is limited to 8");
        for (int n = 1; n <= args.chordal_upto; ++n) {
            int index = 0;
            for (Graph& g : enumerate_chordal_graphs(n))
                out.emplace_back(std::move(g), nlohmann::json{{"chordal_class", {n, index++}}});
        }
    }
    if (args.trees_upto > 0) {
        if (args.trees_upto > 11)
            throw UsageError("--trees-upto is limited to 11");
        for (int n = 1; n <= args.trees_upto; ++n) {
            int index = 0;
            for (Graph& g : enumerate_trees(n))
                out.emplace_back(std::move(g), nlohmann::json{{"tree_class", {n, index++}}});
        }
    }
    if (args.random_count > 0) {
        if (args.random_max_n < 1 || args.random_max_n > cap)
            throw UsageError("--max-n must be in 1.." + std::to_string(cap));
        for (int k = 0; k < args.random_count; ++k) {
            const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(k);
            const int n = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(args.random_max_n));
            out.emplace_back(random_chordal_graph(n, seed), nlohmann::json{{"random_chordal", {n, seed}}});
        }
    }
    for (const auto& [g, origin] : out)
        if (g.vertex_count() > cap)
            throw UsageError("graph " + origin.dump() + " exceeds the " + std::to_string(cap) + "-vertex cap");
    if (out.empty())
        throw UsageError("no graphs selected (use --family, an input file, --all-chordal-upto, --trees-upto or --random)");
    return out;
}

int cmd_verify(const VerifyArgs& args)
{
    const FieldSpec field = FieldSpec::parse(args.field);
    std::vector<std::function<VerificationReport()>> jobs;

    if (args.scope == "first-step") {
        const auto [lo, hi] = parse_range(args.r_range.empty() ? "1..6" : args.r_range);
        for (int r = lo; r <= hi; ++r) {
            if (r < 1 || 2 * r + 1 > kMaxVerifyVertices)
                throw UsageError("first-step needs 1 <= r <= 6");
            jobs.emplace_back([r, field] { return verify_first_step(r, field); });
        }
    } else if (args.scope == "theorem") {
        const auto [rlo, rhi] = parse_range(args.r_range.empty() ? "2..5" : args.r_range);
        for (int r = rlo; r <= rhi; ++r) {
            const bool defaulted = args.b_range.empty();
            const auto [blo, bhi] = parse_range(defaulted ? "2..r" : args.b_range, r);
            for (int b = blo; b <= bhi; ++b) {
                if (defaulted && 2 * r + b > kMaxVerifyVertices)
                    continue;
                if (b < 2 || b > r)
                    throw UsageError("theorem needs 2 <= b <= r (got r=" + std::to_string(r) +
                                     ", b=" + std::to_string(b) + ")");
                if (2 * r + b > kMaxVerifyVertices)
                    throw UsageError("theorem needs 2r + b <= 13 (got r=" + std::to_string(r) +
                                     ", b=" + std::to_string(b) + ")");
                jobs.emplace_back([r, b, field] { return verify_theorem(r, b, field); });
            }
        }
    } else if (args.scope == "gpr1") {
        const auto [plo, phi] = parse_range(args.p_range.empty() ? "2..12" : args.p_range);
        for (int p = plo; p <= phi; ++p) {
            const bool defaulted = args.r_range.empty();
            const auto [rlo, rhi] = parse_range(defaulted ? "1..12" : args.r_range);
            for (int r = rlo; r <= rhi; ++r) {
                if (defaulted && (r >= p || p + r > kMaxVerifyVertices))
                    continue;
                if (r < 1 || r >= p || p + r > kMaxVerifyVertices)
                    throw UsageError("gpr1 needs 1 <= r < p and p + r <= 13");
                jobs.emplace_back([p, r, field] { return verify_g_pr1(p, r, field); });
            }
        }
    } else if (args.scope == "support" || args.scope == "reg-indmatch") {
        const bool support = args.scope == "support";
        for (auto& [g, origin] : verify_graphs(args, support ? kMaxSupportVertices : kMaxVerifyVertices))
            jobs.emplace_back([g = g, origin = origin, support, field] {
                VerificationReport report = support ? verify_certified_support(g, field) : verify_reg_eq_indmatch(g, field);
                report.params["source"] = origin;
                return report;
            });
    } else {
        throw UsageError("unknown verify scope \"" + args.scope +
                         "\" (expected first-step, theorem, support, gpr1, reg-indmatch)");
    }

    bool all_passed = true;
    for (const auto& job : jobs) {
        const VerificationReport report = job();
        all_passed = all_passed && report.passed();
        std::cout << report.to_json_line(args.timing) << '\n';
    }
    return all_passed ? kExitOk : kExitFailure;
}

unsigned default_threads()
{
    if (const char* env = std::getenv("EDGEBETTI_THREADS")) {
        try {
            return static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring EDGEBETTI_THREADS=" << env << '\n';
        }
    }
    return 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Graded Betti numbers, extremal Betti numbers and bouquet certificates of edge ideals"};
    app.require_subcommand(1);

    std::string gen_family;
    std::vector<int> gen_params;
    std::string gen_format = "text";
    auto* gen = app.add_subcommand("gen", "Write a family graph (path-star, star-triangle, grb, gpr1)");
    gen->add_option("family", gen_family, "Family name")->required();
    gen->add_option("params", gen_params, "Family parameters")->required();
    gen->add_option("--format", gen_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    InputSource convert_src;
    std::string convert_format = "json";
    auto* convert = app.add_subcommand("convert", "Rewrite a graph in text or JSON form");
    add_input_options(convert, convert_src);
    convert->add_option("--to", convert_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    BettiArgs betti_args;
    betti_args.threads = default_threads();
    auto* betti = app.add_subcommand("betti", "Betti table of S/I(G)");
    add_input_options(betti, betti_args.src);
    betti->add_option("--field", betti_args.field, "rational, gf2 or gfp:<p>");
    betti->add_option("--compare-field", betti_args.compare_field,
                      "Also compute over this field and fail on any difference");
    betti->add_option("--format", betti_args.format, "grid, json or csv")
        ->check(CLI::IsMember({"grid", "json", "csv"}));
    betti->add_flag("--json", betti_args.json, "Same as --format json");
    betti->add_option("--cell", betti_args.cell, "Only the entry beta_{i,i+j}")->expected(2);
    betti->add_option("--threads", betti_args.threads, "Worker threads (default $EDGEBETTI_THREADS or 1)");
    betti->add_flag("--extremal", betti_args.extremal, "Summarize reg, projdim and extremal numbers on stderr");

    InputSource cert_src;
    int cert_i = 0;
    int cert_j = 0;
    auto* cert = app.add_subcommand("cert", "Strongly disjoint bouquet certificate of type (i, j)");
    cert->add_option("i", cert_i, "Homological degree")->required();
    cert->add_option("j", cert_j, "Strand")->required();
    add_input_options(cert, cert_src);

    InputSource positions_src;
    auto* positions = app.add_subcommand("positions", "All (i, j) with a bouquet certificate");
    add_input_options(positions, positions_src);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Replay the family claims; JSON lines, exit 1 on failure");
    verify->add_option("scope", verify_args.scope, "first-step, theorem, support, gpr1, reg-indmatch")->required();
    verify->add_option("--r", verify_args.r_range, "Range a..b");
    verify->add_option("--b", verify_args.b_range, "Range a..b; the bound may be 'r'");
    verify->add_option("--p", verify_args.p_range, "Range a..b");
    verify->add_option("--family", verify_args.families, "Family graph(s) for support / reg-indmatch");
    verify->add_option("input", verify_args.path, "Graph file for support / reg-indmatch");
    verify->add_option("--all-chordal-upto", verify_args.chordal_upto, "Every chordal graph up to n vertices");
    verify->add_option("--trees-upto", verify_args.trees_upto, "Every tree up to n vertices");
    verify->add_option("--random", verify_args.random_count, "Number of random chordal graphs");
    verify->add_option("--max-n", verify_args.random_max_n, "Largest random graph");
    verify->add_option("--seed", verify_args.seed, "First seed of the random sweep");
    verify->add_option("--field", verify_args.field, "rational, gf2 or gfp:<p>");
    verify->add_flag("--timing", verify_args.timing, "Include runtime_ms in each report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen)
            return cmd_gen(gen_family, gen_params, gen_format);
        if (*convert)
            return cmd_convert(convert_src, convert_format);
        if (*betti)
            return cmd_betti(betti_args);
        if (*cert)
            return cmd_cert(cert_src, cert_i, cert_j);
        if (*positions)
            return cmd_positions(positions_src);
        if (*verify)
            return cmd_verify(verify_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
