// Command-line front end: instance generation, LP / OPT queries, single runs
// and batch experiments.
//
// Exit codes: 0 success, 1 target missed, 2 usage error, 3 instance error.

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "wvc/exact.hpp"
#include "wvc/experiment.hpp"
#include "wvc/graph.hpp"
#include "wvc/lp.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_missed = 1;
constexpr int exit_usage = 2;
constexpr int exit_instance = 3;

std::atomic<bool> interrupted{false};

extern "C" void on_sigint(int) { interrupted.store(true); }

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InstanceOptions {
    std::string file;
    std::string kind;
    std::size_t n{0};
    double p{0.5};
    std::size_t k{0};
    std::size_t a{0};
    std::size_t b{0};
    long long w_max{1};
    std::uint64_t graph_seed{1};
};

void add_generator_flags(CLI::App* cmd, InstanceOptions& o)
{
    cmd->add_option("--kind", o.kind, "gnp | path | star | complete-bipartite");
    cmd->add_option("--n", o.n, "vertex count (gnp, path)");
    cmd->add_option("--p", o.p, "edge probability (gnp)");
    cmd->add_option("--k", o.k, "leaf count (star)");
    cmd->add_option("--a", o.a, "left side size (complete-bipartite)");
    cmd->add_option("--b", o.b, "right side size (complete-bipartite)");
    cmd->add_option("--wmax", o.w_max, "weights drawn uniformly from [1, wmax]");
}

void add_instance_flags(CLI::App* cmd, InstanceOptions& o)
{
    cmd->add_option("--instance", o.file, "instance file");
    add_generator_flags(cmd, o);
    cmd->add_option("--graph-seed", o.graph_seed, "generator seed when no --instance is given");
}

auto generator_spec(InstanceOptions const& o) -> wvc::GeneratorSpec
{
    wvc::GeneratorSpec spec;
    try {
        spec.kind = wvc::parse_graph_kind(o.kind);
    } catch (std::invalid_argument const& e) {
        throw UsageError(e.what());
    }
    spec.n = o.n;
    spec.p = o.p;
    spec.k = o.k;
    spec.a = o.a;
    spec.b = o.b;
    spec.w_max = o.w_max;
    return spec;
}

auto generate(InstanceOptions const& o, std::uint64_t seed) -> wvc::WeightedGraph
{
    try {
        return wvc::gen_instance(generator_spec(o), seed);
    } catch (wvc::InstanceError const&) {
        throw;
    } catch (std::invalid_argument const& e) {
        throw UsageError(e.what());
    }
}

auto load_instance(InstanceOptions const& o) -> wvc::WeightedGraph
{
    if (!o.file.empty()) { return wvc::read_graph_file(o.file); }
    if (o.kind.empty()) { throw UsageError("need --instance FILE or a generator --kind"); }
    return generate(o, o.graph_seed);
}

void emit(std::string const& text, std::string const& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) { throw std::runtime_error("cannot write '" + path + "'"); }
    out << text;
}

auto half_units(wvc::Weight v2) -> std::string
{
    return std::to_string(v2 / 2) + (v2 % 2 ? ".5" : "");
}

struct RunOptions {
    std::string algo{"gsemo"};
    std::optional<std::uint64_t> budget;
    std::optional<double> target_ratio;
    std::optional<double> epsilon;
    std::uint64_t seed{1};
    std::optional<long long> opt;
    bool check_bounds{false};
    bool require_zero_string{false};
    std::string format;
    std::string out;
    std::uint64_t trials{1};
    unsigned threads{0};
};

void add_run_flags(CLI::App* cmd, RunOptions& r)
{
    cmd->add_option("--algo", r.algo, "gsemo | gsemo-alt | demo | dpbea");
    cmd->add_option("--budget", r.budget, "iteration budget");
    cmd->add_option("--target-ratio", r.target_ratio, "stop at a cover of cost <= R * OPT");
    cmd->add_option("--epsilon", r.epsilon, "target ratio 1 + E");
    cmd->add_option("--seed", r.seed, "run seed (experiments: base seed, trial t uses seed + t)");
    cmd->add_option("--opt", r.opt, "known optimum (skips the exact solver)");
    cmd->add_flag("--check-bounds", r.check_bounds, "monitor the population bound every iteration");
    cmd->add_flag("--require-zero-string", r.require_zero_string,
                  "keep running after the target until 0^n has entered the population");
    cmd->add_option("--out", r.out, "output path (default stdout)");
}

auto experiment_config(RunOptions const& r) -> wvc::ExperimentConfig
{
    wvc::ExperimentConfig c;
    try {
        c.algorithm = wvc::parse_algorithm(r.algo);
    } catch (std::invalid_argument const& e) {
        throw UsageError(e.what());
    }
    c.trials = r.trials;
    c.seed = r.seed;
    c.budget = r.budget;
    c.target_ratio = r.target_ratio;
    c.epsilon = r.epsilon;
    c.check_bounds = r.check_bounds;
    c.require_zero_string = r.require_zero_string;
    c.threads = r.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : r.threads;
    return c;
}

auto resolve_opt(wvc::WeightedGraph const& g, RunOptions const& r, wvc::ExperimentConfig const& c)
    -> std::optional<wvc::Weight>
{
    if (r.opt) { return *r.opt; }
    try {
        return wvc::opt(g).opt_cost;
    } catch (wvc::BudgetExceeded const&) {
        if (c.target_ratio || c.epsilon) { throw; }
        return std::nullopt;
    }
}

auto check_config(wvc::ExperimentConfig const& c, std::optional<wvc::Weight> opt)
{
    try {
        wvc::validate(c, opt);
    } catch (std::invalid_argument const& e) {
        throw UsageError(e.what());
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Evolutionary multi-objective algorithms for weighted vertex cover"};
    app.require_subcommand(1);

    InstanceOptions gen_opts;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("generate", "write a generated instance");
    add_generator_flags(gen_cmd, gen_opts);
    gen_cmd->add_option("--seed", gen_seed, "generator seed");
    gen_cmd->add_option("--out", gen_out, "output path (default stdout)");

    InstanceOptions lp_inst;
    std::string lp_select;
    auto* lp_cmd = app.add_subcommand("lp", "LP relaxation value of G(x)");
    add_instance_flags(lp_cmd, lp_inst);
    lp_cmd->add_option("--select", lp_select, "selection bitstring x (default 0^n)");

    InstanceOptions exact_inst;
    std::uint64_t node_limit = wvc::BranchBoundOptions{}.node_limit;
    auto* exact_cmd = app.add_subcommand("exact", "minimum-weight vertex cover");
    add_instance_flags(exact_cmd, exact_inst);
    exact_cmd->add_option("--node-limit", node_limit, "branch-and-bound node budget");

    InstanceOptions run_inst;
    RunOptions run_opts;
    run_opts.format = "text";
    auto* run_cmd = app.add_subcommand("run", "single run");
    add_instance_flags(run_cmd, run_inst);
    add_run_flags(run_cmd, run_opts);
    run_cmd->add_option("--format", run_opts.format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    InstanceOptions exp_inst;
    RunOptions exp_opts;
    exp_opts.format = "csv";
    auto* exp_cmd = app.add_subcommand("experiment", "batch of independent trials");
    add_instance_flags(exp_cmd, exp_inst);
    add_run_flags(exp_cmd, exp_opts);
    exp_cmd->add_option("--trials", exp_opts.trials, "number of trials");
    exp_cmd->add_option("--threads", exp_opts.threads, "worker threads (0 = hardware concurrency)");
    exp_cmd->add_option("--format", exp_opts.format, "csv (rows; summary to OUT.summary.json) | json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        auto const code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen_cmd) {
            if (gen_opts.kind.empty()) { throw UsageError("generate needs --kind"); }
            emit(wvc::serialize_graph(generate(gen_opts, gen_seed)), gen_out);
            return exit_ok;
        }
        if (*lp_cmd) {
            auto const g = load_instance(lp_inst);
            auto x = lp_select.empty() ? wvc::Genotype(g.n()) : wvc::Genotype::from_string(lp_select);
            if (x.size() != g.n()) { throw UsageError("--select must have exactly n characters"); }
            auto const rg = wvc::residual(g, x);
            auto const lp = wvc::solve_lp(rg, g.weights());
            std::string assign2(g.n(), '-');
            std::string y;
            std::size_t local = 0;
            for (wvc::Vertex v = 0; v < g.n(); ++v) {
                if (!y.empty()) { y += ' '; }
                if (local < rg.size() && rg.kept[local] == v) {
                    auto const a = lp.assign2[local++];
                    assign2[v] = static_cast<char>('0' + a);
                    y += a == 0 ? "0" : a == 1 ? "0.5" : "1";
                } else {
                    y += "-";
                }
            }
            std::cout << "value2 " << lp.value2 << '\n'
                      << "LP " << half_units(lp.value2) << '\n'
                      << "assign2 " << assign2 << '\n'
                      << "y " << y << '\n';
            return exit_ok;
        }
        if (*exact_cmd) {
            auto const g = load_instance(exact_inst);
            auto const r = wvc::opt(g, {node_limit});
            std::cout << "opt " << r.opt_cost << '\n' << "witness " << r.witness.to_string() << '\n';
            return exit_ok;
        }
        if (*run_cmd) {
            auto const g = load_instance(run_inst);
            auto const config = experiment_config(run_opts);
            auto const opt = resolve_opt(g, run_opts, config);
            check_config(config, opt);
            auto const trial = wvc::run_trial(g, config, opt, config.seed);
            if (run_opts.format == "json") {
                emit(wvc::run_report(g, config, opt, trial).dump(2) + "\n", run_opts.out);
            } else if (run_opts.format == "csv") {
                emit(wvc::to_csv({trial.record}), run_opts.out);
            } else {
                emit(wvc::run_report_text(g, config, trial), run_opts.out);
            }
            return trial.record.censored ? exit_missed : exit_ok;
        }
        if (*exp_cmd) {
            auto const g = load_instance(exp_inst);
            auto const config = experiment_config(exp_opts);
            auto const opt = resolve_opt(g, exp_opts, config);
            check_config(config, opt);
            std::signal(SIGINT, on_sigint);
            auto const result = wvc::run_experiment(g, config, opt, &interrupted);
            auto const summary = wvc::summarize(g, config, opt, result);
            if (exp_opts.format == "json") {
                nlohmann::ordered_json doc;
                doc["summary"] = summary;
                doc["trials"] = nlohmann::ordered_json::array();
                for (auto const& r : result.records) { doc["trials"].push_back(wvc::to_json(r)); }
                emit(doc.dump(2) + "\n", exp_opts.out);
            } else {
                emit(wvc::to_csv(result.records), exp_opts.out);
                if (exp_opts.out.empty() || exp_opts.out == "-") {
                    std::cerr << summary.dump(2) << '\n';
                } else {
                    emit(summary.dump(2) + "\n", exp_opts.out + ".summary.json");
                }
            }
            return result.interrupted ? exit_missed : exit_ok;
        }
    } catch (UsageError const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (wvc::InstanceError const& e) {
        std::cerr << "instance error: " << e.what() << '\n';
        return exit_instance;
    } catch (wvc::TooLarge const& e) {
        std::cerr << "instance error: " << e.what() << '\n';
        return exit_instance;
    } catch (wvc::BudgetExceeded const& e) {
        std::cerr << "instance error: " << e.what() << '\n';
        return exit_instance;
    } catch (std::invalid_argument const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_instance;
    }
    return exit_usage;
}
