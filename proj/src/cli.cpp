#include "tsplit/cli.hpp"

#include "tsplit/certifier.hpp"
#include "tsplit/construction.hpp"
#include "tsplit/errors.hpp"
#include "tsplit/experiments.hpp"
#include "tsplit/search.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>

namespace tsplit::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

auto load_digraph(const std::string& path, std::istream& in) -> Digraph {
    if (path == "-")
        return read_digraph(in);
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open '" + path + "'");
    return read_digraph(file);
}

auto parse_ids(const std::string& text, std::size_t owner_n) -> VertexSet {
    VertexSet x(owner_n);
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find(',', start);
        if (end == std::string::npos)
            end = text.size();
        std::uint64_t id = 0;
        const char* first = text.data() + start;
        const char* last = text.data() + end;
        const auto [ptr, ec] = std::from_chars(first, last, id);
        if (first == last || ec != std::errc{} || ptr != last)
            throw UsageError("bad vertex id '" + text.substr(start, end - start) + "'");
        if (id >= owner_n)
            throw UsageError("vertex id " + std::to_string(id) + " out of range for " + std::to_string(owner_n) +
                             " vertices");
        x.insert(static_cast<Vertex>(id));
        start = end + 1;
    }
    return x;
}

auto ids_csv(const VertexSet& x) -> std::string {
    std::string out;
    for (Vertex v : x.ids()) {
        if (!out.empty())
            out += ',';
        out += std::to_string(v);
    }
    return out;
}

auto seconds(std::chrono::nanoseconds d) -> double {
    return std::chrono::duration<double>(d).count();
}

void print_report(std::ostream& out, const SearchReport& r) {
    out << std::left << std::setw(16) << "max min-outdeg" << r.best_value << '\n'
        << std::setw(16) << "witness" << to_string(r.best_set) << '\n'
        << std::setw(16) << "visited" << r.nodes_visited << '\n'
        << std::setw(16) << "pruned" << r.pruned << '\n'
        << std::setw(16) << "exact" << (r.exact ? "true" : "false") << '\n'
        << std::setw(16) << "elapsed" << std::fixed << std::setprecision(3) << seconds(r.elapsed) << " s\n"
        << std::defaultfloat << std::right;
}

void print_result_line(std::ostream& out, const SearchReport& r) {
    out << "RESULT max=" << r.best_value << " set=" << ids_csv(r.best_set) << " exact=" << (r.exact ? "true" : "false")
        << " visited=" << r.nodes_visited << '\n';
}

auto with_output(const RunConfig& cfg, std::ostream& out, const std::function<void(std::ostream&)>& write) -> int {
    if (cfg.output.empty() || cfg.output == "-") {
        write(out);
        return exit_ok;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file)
        throw UsageError("cannot write '" + cfg.output + "'");
    write(file);
    return exit_ok;
}

auto cmd_generate(const RunConfig& cfg, std::ostream& out) -> int {
    const Digraph d = cfg.delete_vertex ? build_D(cfg.k) : build_T_recursive(cfg.k);
    return with_output(cfg, out, [&](std::ostream& o) { write_digraph(o, d); });
}

auto cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) -> int {
    SearchOptions options;
    options.budget = cfg.budget;
    options.threads = cfg.threads;
    const auto check = verify_theorem2(cfg.k, options);
    const auto& p = check.params;
    const auto hi = cfg.k == 0 ? 0 : p.reg_degree;
    const auto lo = cfg.k == 0 ? 0 : 1;
    if (!check.passed) {
        const SizeRange sizes{static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
        const auto estimate = subset_count(static_cast<std::size_t>(p.order), sizes);
        err << "refused: verifying level " << cfg.k << " needs about " << std::setprecision(4) << estimate
            << " subsets, budget is " << cfg.budget << '\n';
        return exit_usage;
    }
    out << std::left << std::setw(16) << "level" << p.k << '\n'
        << std::setw(16) << "vertices" << p.order << '\n'
        << std::setw(16) << "subset sizes" << lo << ".." << hi << '\n'
        << std::setw(16) << "bound" << p.bound << '\n'
        << std::right;
    print_report(out, check.report);
    out << std::left << std::setw(16) << "verdict" << (*check.passed ? "pass" : "FAIL") << '\n' << std::right;
    print_result_line(out, check.report);
    return *check.passed ? exit_ok : exit_failed;
}

auto cmd_certify(const RunConfig& cfg, std::ostream& out) -> int {
    const auto t = build_T_recursive(cfg.k);
    const auto x = parse_ids(cfg.set, t.n());
    const auto cert = certify_bound(cfg.k, x);
    const Degree actual = min_out_degree(t, x);
    const bool sound = actual <= cert.claimed_bound && replay(cert);
    out << "bound  " << cert.claimed_bound << '\n'
        << "actual " << actual << '\n'
        << "cap    " << level_params(cfg.k).bound << '\n'
        << render(cert);
    return sound ? exit_ok : exit_failed;
}

auto cmd_search(const RunConfig& cfg, std::istream& in, std::ostream& out) -> int {
    const auto d = load_digraph(cfg.input, in);
    SearchOptions options;
    options.budget = cfg.budget;
    options.threads = cfg.threads;
    SearchReport report;
    if (cfg.method == "enumerate")
        report = enumerate_max(d, {cfg.size, cfg.size}, options);
    else
        report = branch_bound_max(d, cfg.size, options);
    out << std::left << std::setw(16) << "vertices" << d.n() << '\n'
        << std::setw(16) << "subset size" << cfg.size << '\n'
        << std::setw(16) << "method" << cfg.method << '\n'
        << std::right;
    print_report(out, report);
    print_result_line(out, report);
    return exit_ok;
}

auto cmd_split(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) -> int {
    const auto d = load_digraph(cfg.input, in);
    const auto summary = split_experiment(d, cfg.trials, cfg.seed, cfg.threads);
    with_output(cfg, out, [&](std::ostream& o) { write_split_csv(o, summary); });
    err << "trials=" << cfg.trials << " max_of_max=" << summary.max_of_max << " mean_of_max=" << summary.mean_of_max
        << '\n';
    return exit_ok;
}

auto cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) -> int {
    const auto rows = gap_table(cfg.k_max);
    with_output(cfg, out, [&](std::ostream& o) { write_gap_csv(o, rows); });
    if (cfg.reference) {
        err << "# reference shape only (constants unknown): k,log_s,sqrt_s_log_s\n";
        for (const auto& r : rows) {
            const auto c = reference_curves(r.s);
            err << "# " << r.k << ',' << c.log_s << ',' << c.sqrt_s_log_s << '\n';
        }
    }
    return exit_ok;
}

} // namespace

auto run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) -> int {
    RunConfig cfg;
    cfg.budget = default_budget;

    CLI::App app{"Recursive tournaments T_k, their min-out-degree bound, and split experiments", "tsplit"};
    app.require_subcommand(1, 1);

    auto* generate = app.add_subcommand("generate", "Write T_k (or D_k) in the text digraph format");
    generate->add_option("--k", cfg.k, "Level")->required();
    generate->add_flag("--delete-vertex", cfg.delete_vertex, "Emit D_k = T_k minus vertex 0");
    generate->add_option("--output", cfg.output, "Output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Exhaustively check the bound on T_k");
    verify->add_option("--k", cfg.k, "Level")->required();
    verify->add_option("--budget", cfg.budget, "Maximum number of subsets to visit");
    verify->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* certify = app.add_subcommand("certify", "Print a bound certificate for X in T_k");
    certify->add_option("--k", cfg.k, "Level")->required();
    certify->add_option("--set", cfg.set, "Comma-separated vertex ids")->required();

    auto* search = app.add_subcommand("search", "Maximise min out-degree over subsets of one size");
    search->add_option("--input", cfg.input, "Digraph file, or - for stdin")->required();
    search->add_option("--size", cfg.size, "Subset size")->required();
    search->add_option("--method", cfg.method, "bb or enumerate")->check(CLI::IsMember({"bb", "enumerate"}));
    search->add_option("--budget", cfg.budget, "Maximum number of subsets to visit (enumerate)");
    search->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* split = app.add_subcommand("split", "Random balanced splits as CSV");
    split->add_option("--input", cfg.input, "Digraph file, or - for stdin")->required();
    split->add_option("--trials", cfg.trials, "Number of trials")->required()->check(CLI::PositiveNumber);
    split->add_option("--seed", cfg.seed, "Base seed")->required();
    split->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    split->add_option("--output", cfg.output, "Output file (default stdout)");

    auto* table = app.add_subcommand("table", "Exact gap table as CSV");
    table->add_option("--kmax", cfg.k_max, "Largest level")->required();
    table->add_flag("--reference", cfg.reference, "Also print reference curve shapes to stderr");
    table->add_option("--output", cfg.output, "Output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return exit_usage;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    try {
        if (cfg.subcommand == "generate")
            return cmd_generate(cfg, out);
        if (cfg.subcommand == "verify")
            return cmd_verify(cfg, out, err);
        if (cfg.subcommand == "certify")
            return cmd_certify(cfg, out);
        if (cfg.subcommand == "search")
            return cmd_search(cfg, in, out);
        if (cfg.subcommand == "split")
            return cmd_split(cfg, in, out, err);
        if (cfg.subcommand == "table")
            return cmd_table(cfg, out, err);
    } catch (const BudgetExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        err << "malformed digraph: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace tsplit::cli
