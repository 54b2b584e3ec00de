// ssc: decide, construct and verify strong set-colorings.
//
// Exit codes: 0 success/colorable/accepted, 1 not colorable/rejected/failed,
// 2 malformed input, 3 inconclusive (node limit reached).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ssc/coloring.hpp"
#include "ssc/search.hpp"
#include "ssc/steiner.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kBadInput = 2;
constexpr int kInconclusive = 3;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ssc::InputError("cannot read " + path);
    return in;
}

ssc::Graph load_graph(const std::string& path) {
    auto in = open_input(path);
    try {
        return ssc::parse_graph(in);
    } catch (const ssc::InputError& e) {
        throw ssc::InputError(path + ": " + e.what());
    }
}

template <typename Fn>
auto load_with(const std::string& path, const ssc::Graph& g, Fn parse) {
    auto in = open_input(path);
    try {
        return parse(in, g);
    } catch (const ssc::InputError& e) {
        throw ssc::InputError(path + ": " + e.what());
    }
}

// Writes through `write` to `path`, or to stdout when path is empty.
template <typename Fn>
void emit(const std::string& path, Fn write) {
    if (path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw ssc::InputError("cannot write " + path);
    write(out);
}

struct Options {
    unsigned n = 0;
    std::string graph, coloring, realization, out;
    bool all = false, symmetry = false, connected = false;
    std::optional<std::uint64_t> node_limit;
    int threads = 1;
};

int gen_sts(const Options& o) {
    const auto ts = ssc::generate_sts(ssc::Dimension(o.n));
    emit(o.out, [&](std::ostream& s) { ssc::write_sts(s, ts); });
    (o.out.empty() ? std::cerr : std::cout) << "blocks " << ts.blocks.size() << '\n';
    return kOk;
}

int verify(const Options& o) {
    const auto g = load_graph(o.graph);
    const auto c = load_with(o.coloring, g, ssc::parse_coloring);
    const auto verdict = ssc::verify_coloring(g, c);
    if (verdict.accepted()) {
        std::cout << "accept\n";
        return kOk;
    }
    std::cout << "reject\n";
    std::cerr << verdict.detail << '\n';
    return kNo;
}

int color(const Options& o) {
    const auto g = load_graph(o.graph);
    const auto pr = load_with(o.realization, g, ssc::parse_realization);
    const auto result = ssc::color_from_packing(g, pr);
    if (const auto* failure = std::get_if<ssc::ColoringFailure>(&result)) {
        std::cout << "failed " << ssc::failure_code(failure->kind) << '\n';
        std::cerr << ssc::failure_code(failure->kind) << ": " << failure->element << ": "
                  << failure->detail << '\n';
        return kNo;
    }
    const auto& c = std::get<ssc::Coloring>(result);
    emit(o.out, [&](std::ostream& s) { ssc::write_coloring(s, g, c); });
    return kOk;
}

int solve(const Options& o) {
    const auto g = load_graph(o.graph);
    ssc::SearchConfig cfg;
    cfg.find_all = o.all;
    cfg.use_symmetry = o.symmetry;
    cfg.node_limit = o.node_limit;
    cfg.threads = o.threads;
    const auto r = ssc::solve(g, cfg);
    std::cout << ssc::outcome_name(r.outcome) << '\n';
    if (o.all && r.outcome != ssc::Outcome::inconclusive)
        std::cout << "colorings " << (r.count_saturated ? ">=" : "") << r.count << '\n';
    std::cerr << "nodes " << r.nodes << '\n';
    switch (r.outcome) {
        case ssc::Outcome::colorable:
            emit(o.out, [&](std::ostream& s) { ssc::write_coloring(s, g, *r.coloring); });
            return kOk;
        case ssc::Outcome::inconclusive: return kInconclusive;
        default: return kNo;
    }
}

int enumerate(const Options& o) {
    const auto graphs = ssc::enumerate_colorable(ssc::Dimension(o.n), o.connected, o.threads);
    for (const auto& g : graphs) std::cout << ssc::graph_line(g) << '\n';
    std::cout << "# " << graphs.size() << " colorable graph" << (graphs.size() == 1 ? "" : "s")
              << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strong set-colorings of graphs via Steiner triple systems"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen-sts", "Write S(2,3,2^n-1) in the projective model");
    gen->add_option("--n", o.n, "Dimension")->required()->check(CLI::Range(1u, 30u));
    gen->add_option("--out", o.out, "Output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "Check a coloring certificate");
    ver->add_option("--graph", o.graph)->required();
    ver->add_option("--coloring", o.coloring)->required();

    auto* col = app.add_subcommand("color", "Build a coloring from a packing realization");
    col->add_option("--graph", o.graph)->required();
    col->add_option("--realization", o.realization)->required();
    col->add_option("--out", o.out, "Certificate file (default stdout)");

    auto* sol = app.add_subcommand("solve", "Decide colorability by exhaustive search");
    sol->add_option("--graph", o.graph)->required();
    sol->add_flag("--all", o.all, "Count every coloring");
    sol->add_flag("--symmetry", o.symmetry, "Pin the first vertex label to 1");
    sol->add_option("--node-limit", o.node_limit, "Give up after this many nodes")
        ->check(CLI::PositiveNumber);
    sol->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1, 1024));
    sol->add_option("--out", o.out, "Certificate file (default stdout)");

    auto* en = app.add_subcommand("enumerate", "List colorable graphs with |V|+|E| = 2^n-1");
    en->add_option("--n", o.n)->required()->check(CLI::Range(1u, 4u));
    en->add_flag("--connected", o.connected, "Connected graphs only");
    en->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1, 1024));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*gen) return gen_sts(o);
        if (*ver) return verify(o);
        if (*col) return color(o);
        if (*sol) return solve(o);
        if (*en) return enumerate(o);
    } catch (const ssc::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const ssc::Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}
