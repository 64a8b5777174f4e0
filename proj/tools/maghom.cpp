// maghom: command-line front end for magnitude homology of graphs.
//
//   maghom compute --graph sq2 --l 4
//   maghom check --trials 50 --seed 7
//   maghom export --graph sq2 --pair a,d --l 4 --out figs/ad

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <maghom/maghom.hpp>

namespace {

using namespace maghom;

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,
    exit_mismatch = 3,
    exit_internal = 4,
};

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& spec)
{
    if (std::filesystem::is_regular_file(spec)) {
        std::ifstream in(spec);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_graph(buf.str());
    }
    return generate(spec);
}

std::vector<unsigned> parse_lengths(const std::string& text)
{
    auto to_uint = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return static_cast<unsigned>(v);
        } catch (const std::exception&) {
            throw usage_error("--l expects an integer or a range lo..hi, got '" + text + "'");
        }
    };
    for (const std::string sep : {"..", "-", ":"}) {
        if (auto pos = text.find(sep); pos != std::string::npos && pos > 0) {
            unsigned lo = to_uint(text.substr(0, pos));
            unsigned hi = to_uint(text.substr(pos + sep.size()));
            if (lo > hi) throw usage_error("--l range is empty: '" + text + "'");
            std::vector<unsigned> out;
            for (unsigned l = lo; l <= hi; ++l) out.push_back(l);
            return out;
        }
    }
    return {to_uint(text)};
}

std::pair<vertex_t, vertex_t> parse_pair(const Graph& g, const std::string& text)
{
    auto comma = text.find(',');
    if (comma == std::string::npos) throw usage_error("--pair expects u,v, got '" + text + "'");
    return {g.index_of(text.substr(0, comma)), g.index_of(text.substr(comma + 1))};
}

struct ComputeOptions {
    std::string graph;
    std::string lengths = "4";
    std::optional<std::size_t> kmax;
    std::string method = "auto";
    std::string pair;
    std::string types;
    std::string out;
    std::string format = "table";
};

std::string resolve_method(const std::string& requested, const Graph& g, unsigned length)
{
    if (requested == "auto") {
        if (length >= 3 && g.is_tree()) return "tree";
        return length >= 3 ? "geometric" : "direct";
    }
    if (requested == "geometric" && length < 3) {
        throw usage_error("method geometric needs l >= 3 (got " + std::to_string(length) + ")");
    }
    if (requested == "tree") {
        if (!g.is_tree()) throw usage_error("method tree needs a tree input");
        if (length < 3) throw usage_error("method tree needs l >= 3 (got " + std::to_string(length) + ")");
    }
    return requested;
}

int run_compute(const ComputeOptions& opt)
{
    Graph g = load_graph(opt.graph);
    auto lengths = parse_lengths(opt.lengths);

    ReportContext ctx;
    ctx.graph_descriptor = opt.graph;
    if (!opt.pair.empty()) ctx.pair_filter = parse_pair(g, opt.pair);
    std::optional<PairLabeling> labeling;
    if (!opt.types.empty()) {
        std::ifstream in(opt.types);
        if (!in) throw usage_error("cannot open labeling file '" + opt.types + "'");
        labeling = PairLabeling::parse(in, g);
        ctx.labeling = &*labeling;
    }

    std::vector<MagnitudeTable> tables;
    std::vector<std::string> methods;
    for (unsigned length : lengths) {
        const std::size_t kmax = opt.kmax.value_or(length);
        const std::string method = resolve_method(opt.method, g, length);
        methods.push_back(method);
        MagnitudeTable t;
        if (method == "direct") {
            t = magnitude_homology_graph(g, length, kmax);
        } else if (method == "geometric") {
            t = magnitude_homology_graph_geometric(g, length, kmax);
        } else {
            t = magnitude_homology_graph_tree(g, length, kmax);
            for (std::size_t k = 3; k <= kmax; ++k) {
                if (t.totals[k] != tree_magnitude_closed_form(g, length, k)) {
                    std::cerr << "internal: tree decomposition disagrees with the closed form at k=" << k
                              << ", l=" << length << '\n';
                    return exit_internal;
                }
            }
        }
        tables.push_back(std::move(t));
    }
    ctx.method = methods.front();
    for (const auto& m : methods)
        if (m != ctx.method) ctx.method = "mixed";

    auto json = tables_to_json(g, tables, ctx);
    if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        if (!f) throw usage_error("cannot write '" + opt.out + "'");
        f << json.dump(2) << '\n';
    }
    if (opt.format == "structured") {
        std::cout << json.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < tables.size(); ++i) {
            ReportContext one = ctx;
            one.method = methods[i];
            if (i) std::cout << '\n';
            write_text_table(std::cout, g, tables[i], one);
        }
    }
    return exit_ok;
}

struct CheckOptions {
    std::string graph;
    std::string lengths;
    std::size_t trials = 50;
    std::uint64_t seed = 1;
    std::size_t max_vertices = 6;
    unsigned max_length = 5;
    bool inject_sign_fault = false;
};

int report_failure(const Graph& g, const CrossValidationReport& r)
{
    std::cout << "FAIL " << key_to_string(g, r.mismatch->key) << " degree " << r.mismatch->degree << ": "
              << r.mismatch->reason << '\n';
    std::cout << mismatch_to_json(g, *r.mismatch).dump(2) << '\n';
    return exit_mismatch;
}

int run_check(const CheckOptions& opt)
{
    ChainMapOptions chain_opts;
    chain_opts.inject_sign_fault = opt.inject_sign_fault;

    if (!opt.graph.empty()) {
        Graph g = load_graph(opt.graph);
        for (unsigned length : parse_lengths(opt.lengths.empty() ? "3..4" : opt.lengths)) {
            if (length < 3) throw usage_error("check needs l >= 3");
            auto r = cross_validate(g, length, length, chain_opts);
            if (!r.ok()) return report_failure(g, r);
            std::cout << opt.graph << " l=" << length << ": ok (" << r.components_checked << " components)\n";
        }
        return exit_ok;
    }

    if (opt.max_length < 3) throw usage_error("--max-l must be >= 3");
    if (opt.max_vertices < 1) throw usage_error("--max-vertices must be >= 1");
    if (opt.trials == 0) {
        std::cerr << "warning: 0 trials requested, nothing checked\n";
        std::cout << "PASS (vacuous): 0 trials\n";
        return exit_ok;
    }
    std::mt19937_64 rng(opt.seed);
    std::size_t components = 0;
    for (std::size_t trial = 0; trial < opt.trials; ++trial) {
        std::uniform_int_distribution<std::size_t> pick_n(1, opt.max_vertices);
        std::uniform_int_distribution<unsigned> pick_l(3, opt.max_length);
        const std::size_t n = pick_n(rng);
        const unsigned length = pick_l(rng);
        Graph g = random_connected_graph(n, rng);
        auto r = cross_validate(g, length, length, chain_opts);
        if (!r.ok()) {
            std::cout << "trial " << trial << ": ";
            return report_failure(g, r);
        }
        components += r.components_checked;
        std::cout << "trial " << trial << ": n=" << n << " edges=" << g.num_edges() << " l=" << length << " ok\n";
    }
    std::cout << "PASS: " << opt.trials << " trials, " << components << " components, seed " << opt.seed << '\n';
    return exit_ok;
}

struct ExportOptions {
    std::string graph;
    std::string pair;
    unsigned length = 4;
    std::string out;
};

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path);
    if (!f) throw usage_error("cannot write '" + path + "'");
    f << content;
}

int run_export(const ExportOptions& opt)
{
    Graph g = load_graph(opt.graph);
    if (opt.length < 3) throw usage_error("export needs l >= 3");
    auto [a, b] = parse_pair(g, opt.pair);
    ComponentKey key{a, b, opt.length};
    if (g.distance(a, b) > opt.length) {
        std::cerr << "notice: d(" << g.label(a) << "," << g.label(b) << ") = " << g.distance(a, b) << " > l; "
                  << "writing the empty complex\n";
    }
    auto kp = build_k_pair(g, key);
    if (auto parent = std::filesystem::path(opt.out).parent_path(); !parent.empty())
        std::filesystem::create_directories(parent);

    write_file(opt.out + ".kpair.json", kpair_to_json(g, kp).dump(2) + "\n");
    std::vector<std::string> written{opt.out + ".kpair.json"};
    if (kp.total().dimension() <= 3) {
        auto layer = [](const PositionedVertex& pv) { return static_cast<int>(pv.position); };
        std::ostringstream total, sub;
        write_off(total, kp.total(), layer);
        write_off(sub, kp.sub(), layer);
        write_file(opt.out + ".total.off", total.str());
        write_file(opt.out + ".sub.off", sub.str());
        written.push_back(opt.out + ".total.off");
        written.push_back(opt.out + ".sub.off");
    } else {
        std::cerr << "notice: complex has dimension " << kp.total().dimension() << "; OFF export skipped\n";
    }
    if (g.is_tree()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& comp : decompose_tree_component(g, key))
            arr.push_back(delta_pair_to_json(g, comp, build_delta_pair(comp, opt.length)));
        write_file(opt.out + ".delta.json", arr.dump(2) + "\n");
        written.push_back(opt.out + ".delta.json");
    }
    std::cout << "K: " << kp.total().size() << " simplices (" << kp.total().maximal_simplices().size()
              << " maximal), K': " << kp.sub().size() << " simplices\n";
    for (const auto& w : written) std::cout << "wrote " << w << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Magnitude homology of finite connected graphs"};
    app.require_subcommand(1);

    ComputeOptions compute;
    auto* cmd_compute = app.add_subcommand("compute", "Tabulate MH_{k,l} for every vertex pair");
    cmd_compute->add_option("--graph", compute.graph, "Builtin spec (sq2, path:n, ...) or graph file")->required();
    cmd_compute->add_option("--l", compute.lengths, "Length l or range lo..hi");
    cmd_compute->add_option("--kmax", compute.kmax, "Highest degree (default l)");
    cmd_compute->add_option("--method", compute.method)
        ->check(CLI::IsMember({"auto", "geometric", "direct", "tree"}));
    cmd_compute->add_option("--pair", compute.pair, "Only report the row u,v");
    cmd_compute->add_option("--types", compute.types, "Pair labeling file: 'u v type' per line");
    cmd_compute->add_option("--out", compute.out, "Write the structured report here");
    cmd_compute->add_option("--format", compute.format)->check(CLI::IsMember({"table", "structured"}));

    CheckOptions check;
    auto* cmd_check = app.add_subcommand("check", "Cross-validate the geometric and direct methods");
    cmd_check->add_option("--graph", check.graph, "Check this graph instead of random ones");
    cmd_check->add_option("--l", check.lengths, "Lengths for --graph (default 3..4)");
    cmd_check->add_option("--trials", check.trials);
    cmd_check->add_option("--seed", check.seed);
    cmd_check->add_option("--max-vertices", check.max_vertices);
    cmd_check->add_option("--max-l", check.max_length);
#ifndef NDEBUG
    cmd_check->add_flag("--inject-sign-fault", check.inject_sign_fault, "Debug: flip the chain map sign");
#endif

    ExportOptions exp;
    auto* cmd_export = app.add_subcommand("export", "Write K_l(a,b), K'_l(a,b) as JSON and OFF");
    cmd_export->add_option("--graph", exp.graph)->required();
    cmd_export->add_option("--pair", exp.pair, "u,v")->required();
    cmd_export->add_option("--l", exp.length);
    cmd_export->add_option("--out", exp.out, "Output path prefix")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*cmd_compute) return run_compute(compute);
        if (*cmd_check) return run_check(check);
        if (*cmd_export) return run_export(exp);
    } catch (const consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return exit_internal;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const graph_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_usage;
}
