#include "wvc/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace wvc {

auto approximation_ratio(Weight best, Weight opt) -> double
{
    if (opt == 0) { return best == 0 ? 1.0 : std::numeric_limits<double>::infinity(); }
    return static_cast<double>(best) / static_cast<double>(opt);
}

auto termination_of(ExperimentConfig const& config) -> Termination
{
    Termination t;
    t.budget = config.budget;
    t.require_zero_string = config.require_zero_string;
    if (config.epsilon) {
        t.target = TargetKind::ratio;
        t.ratio = 1.0 + *config.epsilon;
    } else if (config.target_ratio) {
        t.target = TargetKind::ratio;
        t.ratio = *config.target_ratio;
    } else {
        t.target = TargetKind::any_cover;
    }
    return t;
}

void validate(ExperimentConfig const& config, std::optional<Weight> opt)
{
    if (config.trials < 1) { throw std::invalid_argument("trials must be at least 1"); }
    if (config.threads < 1) { throw std::invalid_argument("threads must be at least 1"); }
    if (config.epsilon && config.target_ratio) {
        throw std::invalid_argument("give either a target ratio or epsilon, not both");
    }
    if (config.epsilon && !(*config.epsilon > 0.0 && *config.epsilon <= 1.0)) {
        throw std::invalid_argument("epsilon must lie in (0, 1]");
    }
    validate(termination_of(config), opt);
}

auto make_record(RunTrace const& trace, std::optional<Weight> opt) -> TrialRecord
{
    TrialRecord r;
    r.seed = trace.seed;
    r.iters_to_zero_string = trace.hit_zero_string;
    r.iters_to_cover = trace.hit_cover;
    r.iters_to_target = trace.hit_target;
    r.max_archive = trace.max_archive_size;
    r.best_cost = trace.best_cover_cost;
    r.opt = opt;
    if (opt) {
        r.ratio = trace.best_cover_cost ? approximation_ratio(*trace.best_cover_cost, *opt)
                                        : std::numeric_limits<double>::infinity();
    }
    r.censored = !trace.hit_target.has_value();
    return r;
}

auto run_trial(WeightedGraph const& g, ExperimentConfig const& config, std::optional<Weight> opt,
               std::uint64_t seed, std::atomic<bool> const* cancel) -> TrialResult
{
    RunConfig rc;
    rc.termination = termination_of(config);
    rc.opt = opt;
    rc.check_bounds = config.check_bounds;
    rc.record_history = false;
    rc.cancel = cancel;
    Rng rng(seed);
    auto trace = run(config.algorithm, g, rng, rc);
    auto record = make_record(trace, opt);
    return {std::move(record), std::move(trace)};
}

// ---------------------------------------------------------------------------
// CSV

namespace {

auto format_double(double v) -> std::string
{
    if (std::isinf(v)) { return v > 0 ? "inf" : "-inf"; }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

template <typename T>
auto format_or(std::optional<T> const& v, std::string_view missing) -> std::string
{
    return v ? std::to_string(*v) : std::string(missing);
}

template <typename T>
auto parse_number(std::string_view tok, char const* column) -> T
{
    T value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument(std::string("bad value '") + std::string(tok) + "' in column " + column);
    }
    return value;
}

template <typename T>
auto parse_optional(std::string_view tok, std::string_view missing, char const* column) -> std::optional<T>
{
    if (tok == missing) { return std::nullopt; }
    return parse_number<T>(tok, column);
}

auto parse_ratio(std::string_view tok) -> std::optional<double>
{
    if (tok == "NA") { return std::nullopt; }
    if (tok == "inf") { return std::numeric_limits<double>::infinity(); }
    return parse_number<double>(tok, "ratio");
}

auto split_commas(std::string_view row) -> std::vector<std::string_view>
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto const comma = row.find(',', start);
        out.push_back(row.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) { break; }
        start = comma + 1;
    }
    return out;
}

} // namespace

auto to_csv_row(TrialRecord const& r) -> std::string
{
    std::string row;
    row += std::to_string(r.seed);
    row += ',' + format_or(r.iters_to_zero_string, "inf");
    row += ',' + format_or(r.iters_to_cover, "inf");
    row += ',' + format_or(r.iters_to_target, "inf");
    row += ',' + std::to_string(r.max_archive);
    row += ',' + format_or(r.best_cost, "inf");
    row += ',' + format_or(r.opt, "NA");
    row += ',' + (r.ratio ? format_double(*r.ratio) : std::string("NA"));
    row += r.censored ? ",1" : ",0";
    return row;
}

auto parse_csv_row(std::string_view row) -> TrialRecord
{
    if (row.ends_with('\r')) { row.remove_suffix(1); }
    auto const f = split_commas(row);
    if (f.size() != 9) { throw std::invalid_argument("expected 9 CSV fields, got " + std::to_string(f.size())); }
    TrialRecord r;
    r.seed = parse_number<std::uint64_t>(f[0], "seed");
    r.iters_to_zero_string = parse_optional<std::uint64_t>(f[1], "inf", "iters_to_zero_string");
    r.iters_to_cover = parse_optional<std::uint64_t>(f[2], "inf", "iters_to_cover");
    r.iters_to_target = parse_optional<std::uint64_t>(f[3], "inf", "iters_to_target");
    r.max_archive = parse_number<std::uint64_t>(f[4], "max_archive");
    r.best_cost = parse_optional<Weight>(f[5], "inf", "best_cost");
    r.opt = parse_optional<Weight>(f[6], "NA", "opt");
    r.ratio = parse_ratio(f[7]);
    if (f[8] != "0" && f[8] != "1") { throw std::invalid_argument("censored must be 0 or 1"); }
    r.censored = f[8] == "1";
    return r;
}

auto to_csv(std::vector<TrialRecord> const& rows) -> std::string
{
    std::string out(csv_header);
    out += '\n';
    for (auto const& r : rows) {
        out += to_csv_row(r);
        out += '\n';
    }
    return out;
}

auto parse_csv(std::string_view text) -> std::vector<TrialRecord>
{
    std::vector<TrialRecord> rows;
    bool header = true;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto const eol = std::min(text.find('\n', pos), text.size());
        auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.ends_with('\r')) { line.remove_suffix(1); }
        if (line.empty()) { continue; }
        if (header) {
            if (line != csv_header) { throw std::invalid_argument("unexpected CSV header"); }
            header = false;
            continue;
        }
        rows.push_back(parse_csv_row(line));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

template <typename T>
auto json_or_null(std::optional<T> const& v) -> nlohmann::ordered_json
{
    if (!v) { return nullptr; }
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(*v)) { return "inf"; }
    }
    return *v;
}

auto instance_json(WeightedGraph const& g) -> nlohmann::ordered_json
{
    return {{"n", g.n()}, {"m", g.m()}, {"w_max", g.max_weight()}, {"total_weight", g.total_weight()}};
}

auto config_json(ExperimentConfig const& config) -> nlohmann::ordered_json
{
    auto const t = termination_of(config);
    nlohmann::ordered_json j;
    j["algorithm"] = std::string(to_string(config.algorithm));
    j["seed"] = config.seed;
    j["budget"] = json_or_null(config.budget);
    j["target"] = t.target == TargetKind::ratio ? nlohmann::ordered_json(t.ratio) : nlohmann::ordered_json("cover");
    j["epsilon"] = json_or_null(config.epsilon);
    j["require_zero_string"] = config.require_zero_string;
    j["check_bounds"] = config.check_bounds;
    return j;
}

} // namespace

auto to_json(TrialRecord const& r) -> nlohmann::ordered_json
{
    nlohmann::ordered_json j;
    j["seed"] = r.seed;
    j["iters_to_zero_string"] = json_or_null(r.iters_to_zero_string);
    j["iters_to_cover"] = json_or_null(r.iters_to_cover);
    j["iters_to_target"] = json_or_null(r.iters_to_target);
    j["max_archive"] = r.max_archive;
    j["best_cost"] = json_or_null(r.best_cost);
    j["opt"] = json_or_null(r.opt);
    j["ratio"] = json_or_null(r.ratio);
    j["censored"] = r.censored;
    return j;
}

auto quantile(std::vector<std::uint64_t> sorted, double q) -> std::uint64_t
{
    if (sorted.empty()) { throw std::invalid_argument("quantile of an empty sample"); }
    std::ranges::sort(sorted);
    auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    return sorted[rank - 1];
}

auto theorem_bound(Algorithm a, WeightedGraph const& g, std::optional<Weight> opt, std::optional<double> epsilon)
    -> BoundReference
{
    auto const n = static_cast<double>(g.n());
    auto const lw = std::log2(static_cast<double>(g.max_weight()));
    auto const ln = std::log2(n);
    auto const o = static_cast<double>(opt.value_or(0));
    auto const eps = std::clamp(epsilon.value_or(1.0), 0.0, 1.0);
    auto const expo = std::min(n, 2.0 * (1.0 - eps) * o);
    switch (a) {
    case Algorithm::gsemo:
        return {"OPT*n*(log2(Wmax)+log2(n))", o * n * (lw + ln)};
    case Algorithm::gsemo_alt:
        return {"OPT*2^min(n,2(1-eps)OPT) + OPT*n*(log2(Wmax)+log2(n)+OPT)",
                o * std::exp2(expo) + o * n * (lw + ln + o)};
    case Algorithm::demo:
        return {"n^3*(log2(n)+log2(Wmax))^2", n * n * n * (ln + lw) * (ln + lw)};
    case Algorithm::dpbea:
        return {"n*2^min(n,2(1-eps)OPT) + n^3", n * std::exp2(expo) + n * n * n};
    }
    return {};
}

auto run_experiment(WeightedGraph const& g, ExperimentConfig const& config, std::optional<Weight> opt,
                    std::atomic<bool> const* cancel) -> ExperimentResult
{
    validate(config, opt);
    std::vector<std::optional<TrialResult>> slots(config.trials);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        while (true) {
            if (cancel && cancel->load(std::memory_order_relaxed)) { return; }
            auto const t = next.fetch_add(1);
            if (t >= config.trials) { return; }
            auto result = run_trial(g, config, opt, config.seed + t, cancel);
            if (!result.trace.cancelled) { slots[t] = std::move(result); }
        }
    };
    {
        std::vector<std::jthread> pool;
        auto const workers = std::min<std::uint64_t>(config.threads, config.trials);
        for (std::uint64_t i = 1; i < workers; ++i) { pool.emplace_back(worker); }
        worker();
    }

    ExperimentResult out;
    for (auto& s : slots) {
        if (!s) {
            out.interrupted = true;
            continue;
        }
        out.bound_violations += s->trace.bound_violations;
        out.records.push_back(std::move(s->record));
    }
    std::ranges::sort(out.records, {}, &TrialRecord::seed);
    return out;
}

auto summarize(WeightedGraph const& g, ExperimentConfig const& config, std::optional<Weight> opt,
               ExperimentResult const& result) -> nlohmann::ordered_json
{
    auto const& rows = result.records;
    nlohmann::ordered_json j = config_json(config);
    j["instance"] = instance_json(g);
    j["opt"] = json_or_null(opt);
    j["trials"] = rows.size();
    j["requested_trials"] = config.trials;
    j["interrupted"] = result.interrupted;

    auto const successes = std::ranges::count_if(rows, [](auto const& r) { return !r.censored; });
    j["successes"] = successes;
    j["success_rate"] = rows.empty() ? 0.0 : static_cast<double>(successes) / static_cast<double>(rows.size());

    auto stats = [&](auto member) {
        std::vector<std::uint64_t> v;
        for (auto const& r : rows) {
            if (auto const& x = r.*member) { v.push_back(*x); }
        }
        nlohmann::ordered_json s;
        s["count"] = v.size();
        if (v.empty()) { return s; }
        s["min"] = quantile(v, 0.0);
        s["q25"] = quantile(v, 0.25);
        s["median"] = quantile(v, 0.5);
        s["q75"] = quantile(v, 0.75);
        s["max"] = quantile(v, 1.0);
        return s;
    };
    j["hitting_times"] = {{"iters_to_zero_string", stats(&TrialRecord::iters_to_zero_string)},
                          {"iters_to_cover", stats(&TrialRecord::iters_to_cover)},
                          {"iters_to_target", stats(&TrialRecord::iters_to_target)}};

    std::vector<double> ratios;
    for (auto const& r : rows) {
        if (r.ratio) { ratios.push_back(*r.ratio); }
    }
    if (ratios.empty()) {
        j["ratio"] = {{"count", 0}};
    } else {
        double sum = 0.0;
        for (auto x : ratios) { sum += x; }
        auto const mean = sum / static_cast<double>(ratios.size());
        auto const max = std::ranges::max(ratios);
        j["ratio"] = {{"count", ratios.size()},
                      {"mean", json_or_null(std::optional<double>(mean))},
                      {"max", json_or_null(std::optional<double>(max))}};
    }
    std::uint64_t max_archive = 0;
    for (auto const& r : rows) { max_archive = std::max(max_archive, r.max_archive); }
    j["max_archive"] = max_archive;
    j["bound_violations"] = result.bound_violations;
    auto const bound = theorem_bound(config.algorithm, g, opt, config.epsilon);
    j["bound_reference"] = {{"expression", bound.expression}, {"value", bound.value}};
    return j;
}

auto run_report(WeightedGraph const& g, ExperimentConfig const& config, std::optional<Weight> opt,
                TrialResult const& trial) -> nlohmann::ordered_json
{
    nlohmann::ordered_json j = config_json(config);
    j["seed"] = trial.record.seed;
    j["instance"] = instance_json(g);
    j["record"] = to_json(trial.record);
    j["iterations"] = trial.trace.iterations;
    j["final_archive_size"] = trial.trace.final_archive_size;
    j["lp_evaluations"] = trial.trace.lp_evaluations;
    j["bound_violations"] = trial.trace.bound_violations;
    j["best_cover"] = trial.trace.best_cover ? nlohmann::ordered_json(trial.trace.best_cover->to_string())
                                             : nlohmann::ordered_json(nullptr);
    j["target_met"] = !trial.record.censored;
    auto const bound = theorem_bound(config.algorithm, g, opt, config.epsilon);
    j["bound_reference"] = {{"expression", bound.expression}, {"value", bound.value}};
    return j;
}

auto run_report_text(WeightedGraph const& g, ExperimentConfig const& config, TrialResult const& trial)
    -> std::string
{
    auto const& r = trial.record;
    auto const& t = trial.trace;
    auto hit = [](std::optional<std::uint64_t> v) { return v ? std::to_string(*v) : std::string("not reached"); };
    std::ostringstream out;
    out << "algorithm        " << to_string(config.algorithm) << '\n'
        << "instance         n=" << g.n() << " m=" << g.m() << " w_max=" << g.max_weight() << '\n'
        << "seed             " << r.seed << '\n'
        << "iterations       " << t.iterations << '\n'
        << "0^n entered      " << hit(r.iters_to_zero_string) << '\n'
        << "first cover      " << hit(r.iters_to_cover) << '\n'
        << "target reached   " << hit(r.iters_to_target) << '\n'
        << "best cover cost  " << (r.best_cost ? std::to_string(*r.best_cost) : std::string("none")) << '\n'
        << "opt              " << (r.opt ? std::to_string(*r.opt) : std::string("unknown")) << '\n'
        << "ratio            " << (r.ratio ? format_double(*r.ratio) : std::string("n/a")) << '\n'
        << "max archive      " << r.max_archive << '\n'
        << "bound violations " << t.bound_violations << '\n'
        << "status           " << (r.censored ? "censored" : "target met") << '\n';
    return out.str();
}

} // namespace wvc
