/*
 * Copyright 2026 The ppmetrics Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
// ppmetrics command-line tool.
//
// Exit codes: 0 success, 2 usage error, 3 data or parse error, 4 numeric
// domain error.

#include <CLI11.hpp>
#include <json.hpp>
#include <tbb/global_control.h>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pattern_io.hpp"
#include "ppmetrics/bounds.hpp"
#include "ppmetrics/error.hpp"
#include "ppmetrics/metrics.hpp"
#include "ppmetrics/processes.hpp"
#include "ppmetrics/statistics.hpp"

namespace {

using nlohmann::json;
using namespace ppm;

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitDomain = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

json document(const std::string& command, json parameters, std::optional<std::uint64_t> seed, json result,
              Clock::time_point start) {
    json doc;
    doc["command"] = command;
    doc["parameters"] = std::move(parameters);
    doc["seed"] = seed ? json(*seed) : json(nullptr);
    doc["result"] = std::move(result);
    doc["wall_time_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
    return doc;
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

PatternDistance parse_distance(const std::string& s) { return s == "d1" ? PatternDistance::d1 : PatternDistance::dbar1; }

// "inf" or a nonnegative integer.
PatternSize parse_size(const std::string& s) {
    if (s == "inf" || s == "infinity") return std::nullopt;
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw UsageError("--n expects a nonnegative integer or 'inf', got '" + s + "'");
    }
    if (used != s.size() || v < 0) throw UsageError("--n expects a nonnegative integer or 'inf', got '" + s + "'");
    return std::size_t(v);
}

json size_json(PatternSize n) { return n ? json(*n) : json("inf"); }

PointPattern single_pattern(const std::string& path) {
    PatternCollection ps = io::read_patterns_from(path);
    if (ps.size() != 1) {
        throw ParseError(path + ": expected exactly one pattern, found " + std::to_string(ps.size()), 0);
    }
    return std::move(ps.front());
}

// ---------------------------------------------------------------- dist

struct DistOptions {
    std::string file_a, file_b, metric = "dbar1";
    double order = 1.0, cutoff = 1.0;
    bool show_assignment = false;
};

int run_dist(const DistOptions& o) {
    const auto start = Clock::now();
    const PointPattern a = single_pattern(o.file_a), b = single_pattern(o.file_b);
    PatternMetric metric;
    metric.kind = parse_distance(o.metric);
    metric.params = {o.order, o.cutoff};
    metric.ground.cap = std::max(1.0, o.cutoff);
    metric.validate();
    json params{{"file_a", o.file_a}, {"file_b", o.file_b}, {"metric", o.metric}, {"order", o.order},
                {"cutoff", o.cutoff}, {"show_assignment", o.show_assignment}};
    json result;
    if (auto w = theory_warning(metric.params)) {
        std::cerr << "warning: " << *w << '\n';
        result["warning"] = *w;
    }
    const PatternMatching m = match_patterns(a, b, metric);
    result["value"] = m.value;
    result["size_a"] = a.size();
    result["size_b"] = b.size();
    if (o.show_assignment) {
        json pairs = json::array();
        for (std::size_t i = 0; i < a.size(); ++i) {
            pairs.push_back({i, m.partner_of_xi[i] ? json(*m.partner_of_xi[i]) : json("unmatched")});
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!m.partner_of_eta[j]) pairs.push_back({"unmatched", j});
        }
        result["assignment"] = std::move(pairs);
    }
    emit(document("dist", std::move(params), std::nullopt, std::move(result), start));
    return 0;
}

// ------------------------------------------------------------ simulate

struct SimulateOptions {
    std::string model = "poisson";
    double lambda = 30.0, kappa = 1.0, p = 0.5;
    std::size_t n = 100, n_patterns = 1;
    std::uint64_t seed = 1;
};

int run_simulate(const SimulateOptions& o) {
    PatternCollection out;
    const RngStream root(o.seed);
    for (std::size_t i = 0; i < o.n_patterns; ++i) {
        RngStream rng = root.substream(i);
        if (o.model == "poisson") {
            out.push_back(sample_poisson_homogeneous(o.lambda, Window(), rng));
        } else if (o.model == "fkappa") {
            out.push_back(sample_poisson_fkappa(o.lambda, o.kappa, rng));
        } else if (o.model == "bernoulli") {
            out.push_back(sample_bernoulli_process(o.n, o.p, rng));
        } else {
            out.push_back(sample_binomial_process(o.n, o.p, rng));
        }
    }
    io::write_patterns(std::cout, out);
    return 0;
}

// ---------------------------------------------------------------- test

struct TestOptions {
    std::string data, dir, metric = "dbar1";
    std::optional<double> lambda;
    double cutoff = 1.0, order = 1.0, alpha = 0.05;
    std::size_t n_null = 99;
    std::uint64_t seed = 1;
    bool redraw = false;
};

int run_test(const TestOptions& o) {
    const auto start = Clock::now();
    if (o.data.empty() == o.dir.empty()) throw UsageError("give either a data file or --dir");
    const std::string source = o.dir.empty() ? o.data : o.dir;
    const PatternCollection data = o.dir.empty() ? io::read_patterns_from(o.data) : io::read_pattern_dir(o.dir);
    if (data.size() < 2) {
        throw ParseError(source + ": the test needs at least two patterns, found " + std::to_string(data.size()), 0);
    }
    HomogeneityConfig cfg;
    cfg.lambda = o.lambda;
    cfg.metric.kind = parse_distance(o.metric);
    cfg.metric.params = {o.order, o.cutoff};
    cfg.metric.ground.cap = std::max(1.0, o.cutoff);
    cfg.n_null = o.n_null;
    cfg.alpha = o.alpha;
    cfg.redraw_comparison = o.redraw;
    const TestResult r = homogeneity_test(data, cfg, RngStream(o.seed));

    json params{{"data", source},   {"metric", o.metric},     {"order", o.order},
                {"cutoff", o.cutoff}, {"n_null", o.n_null},   {"alpha", o.alpha},
                {"lambda", o.lambda ? json(*o.lambda) : json(nullptr)}, {"redraw_comparison", o.redraw},
                {"n_patterns", data.size()}};
    json result{{"statistic", r.statistic}, {"null_statistics", r.null_statistics}, {"rank", r.rank},
                {"p_value", r.p_value},     {"reject", r.reject},                   {"lambda", r.lambda}};
    emit(document("test", std::move(params), o.seed, std::move(result), start));
    return 0;
}

// --------------------------------------------------------------- power

struct PowerOptions {
    std::vector<double> kappas{1.0, 2.0, 3.0, 4.0}, cutoffs{1.0, 0.3};
    std::size_t reps = 100, n_null = 99, n_patterns = 12;
    double lambda = 30.0, alpha = 0.05;
    std::string metric = "dbar1";
    std::uint64_t seed = 1;
    bool csv = false, estimate_lambda = false, redraw = false;
};

int run_power(const PowerOptions& o) {
    const auto start = Clock::now();
    json rows = json::array();
    std::ostringstream csv;
    csv << "kappa,cutoff,power,se\n";
    std::size_t cell = 0;
    for (double c : o.cutoffs) {
        for (double k : o.kappas) {
            PowerConfig cfg;
            cfg.kappa = k;
            cfg.cutoff = c;
            cfg.reps = o.reps;
            cfg.n_null = o.n_null;
            cfg.n_patterns = o.n_patterns;
            cfg.lambda = o.lambda;
            cfg.alpha = o.alpha;
            cfg.distance = parse_distance(o.metric);
            cfg.estimate_lambda = o.estimate_lambda;
            cfg.redraw_comparison = o.redraw;
            // Every cell gets its own stream so adding cells leaves the others unchanged.
            const PowerEstimate e = power_study(cfg, RngStream(o.seed).substream(cell++));
            rows.push_back({{"kappa", e.kappa}, {"cutoff", e.cutoff}, {"reps", e.reps},
                            {"rejections", e.rejections}, {"power", e.power}, {"se", e.standard_error}});
            csv << std::setprecision(17) << e.kappa << ',' << e.cutoff << ',' << e.power << ',' << e.standard_error
                << '\n';
        }
    }
    if (o.csv) {
        std::cout << csv.str();
        return 0;
    }
    json params{{"kappa", o.kappas}, {"cutoff", o.cutoffs}, {"reps", o.reps},           {"n_null", o.n_null},
                {"n_patterns", o.n_patterns}, {"lambda", o.lambda}, {"alpha", o.alpha}, {"metric", o.metric},
                {"estimate_lambda", o.estimate_lambda}, {"redraw_comparison", o.redraw}};
    emit(document("power", std::move(params), o.seed, json{{"rows", std::move(rows)}}, start));
    return 0;
}

// -------------------------------------------------------------- bounds

struct BoundsOptions {
    std::string which;
    std::string n = "inf";
    double lambda = 1.0, p = 0.1, dw = 0.0, mu_total = 1.0, nu_total = 1.0, cap = 1.0;
    std::size_t trials = 100;
    std::vector<double> mu, nu;
};

int run_bounds(const BoundsOptions& o, const CLI::App& sub) {
    const auto start = Clock::now();
    auto given = [&](const char* name) { return sub.get_option(name)->count() > 0; };
    auto need = [&](std::initializer_list<const char*> names) {
        for (const char* name : names)
            if (!given(name)) throw UsageError(std::string("--which ") + o.which + " requires " + name);
    };
    json params{{"which", o.which}};
    json result;
    if (o.which == "stein1" || o.which == "stein2") {
        need({"--lambda"});
        const PatternSize n = parse_size(o.n);
        params["n"] = size_json(n);
        params["lambda"] = o.lambda;
        result["value"] = o.which == "stein1" ? stein_factor_delta1(n, o.lambda) : stein_factor_delta2(n, o.lambda);
        if (o.which == "stein1") {
            const double m = n ? std::min(double(*n), o.lambda) : o.lambda;
            result["third_term"] = m == 0.0 ? 1.0 : -std::expm1(-m) / m;
        }
    } else if (o.which == "bernoulli-poisson") {
        need({"--trials", "--p"});
        params["trials"] = o.trials;
        params["p"] = o.p;
        result["bernoulli_binomial"] = bernoulli_binomial_bound(o.trials, o.p);
        result["binomial_poisson"] = binomial_poisson_bound(o.trials, o.p);
        result["value"] = bernoulli_poisson_bound(o.trials, o.p);
    } else if (o.which == "iid") {
        need({"--mu", "--nu", "--dw"});
        params["mu"] = o.mu;
        params["nu"] = o.nu;
        params["dw"] = o.dw;
        params["cap"] = o.cap;
        const IidBoundsResult r =
            iid_bounds(CountDistribution::from_pmf(o.mu), CountDistribution::from_pmf(o.nu), o.dw, o.cap);
        json plan = json::array();
        for (std::size_t i = 0; i < r.coupling.plan.rows(); ++i) {
            const auto row = r.coupling.plan.row(i);
            plan.push_back(std::vector<double>(row.begin(), row.end()));
        }
        result = {{"lower", r.lower}, {"upper", r.upper}, {"c1", r.c1},
                  {"c2", r.c2},       {"dRW", r.dRW_value}, {"coupling", std::move(plan)}};
    } else if (o.which == "poisson-poisson") {
        need({"--mu-total", "--nu-total"});
        params["mu_total"] = o.mu_total;
        params["nu_total"] = o.nu_total;
        params["dw"] = o.dw;
        result["value"] = poisson_poisson_bound(o.mu_total, o.nu_total, o.dw);
        result["dRW_truncated"] = dRW_poisson(o.mu_total, o.nu_total);
    } else {
        need({"--lambda"});
        params["lambda"] = o.lambda;
        const CounterexampleIntegrals r = counterexample_integrals(o.lambda);
        result = {{"delta1_value", r.delta1_value},
                  {"delta2_value", r.delta2_value},
                  {"stated_lower_bound", r.stated_lower_bound},
                  {"delta2_lower_bound", r.delta2_lower_bound},
                  {"quadrature_error", r.quadrature_error},
                  {"stein_delta1", stein_factor_delta1(std::nullopt, o.lambda)},
                  {"stein_delta2", stein_factor_delta2(std::nullopt, o.lambda)}};
    }
    emit(document("bounds", std::move(params), std::nullopt, std::move(result), start));
    return 0;
}

std::optional<tbb::global_control> thread_limit() {
    const char* env = std::getenv("PPMETRICS_THREADS");
    if (!env || !*env) return std::nullopt;
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 0) throw UsageError(std::string("PPMETRICS_THREADS must be a nonnegative integer, got '") + env + "'");
    if (n == 0) return std::nullopt;
    return std::optional<tbb::global_control>(std::in_place, tbb::global_control::max_allowed_parallelism,
                                              std::size_t(n));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distances, bounds and homogeneity tests for finite point patterns."};
    app.require_subcommand(1);
    const std::vector<std::string> metrics{"d1", "dbar1"};

    DistOptions dist;
    auto* cmd_dist = app.add_subcommand("dist", "Distance between the patterns in two files.");
    cmd_dist->add_option("file_a", dist.file_a, "First pattern file")->required();
    cmd_dist->add_option("file_b", dist.file_b, "Second pattern file")->required();
    cmd_dist->add_option("--metric", dist.metric, "d1 or dbar1")->check(CLI::IsMember(metrics))->capture_default_str();
    cmd_dist->add_option("--order,-p", dist.order, "Order p >= 1")->capture_default_str();
    cmd_dist->add_option("--cutoff,-c", dist.cutoff, "Cut-off c > 0")->capture_default_str();
    cmd_dist->add_flag("--show-assignment", dist.show_assignment, "Print the optimal pairing");

    SimulateOptions sim;
    auto* cmd_sim = app.add_subcommand("simulate", "Write simulated patterns to standard output.");
    cmd_sim->add_option("--model", sim.model, "poisson, fkappa, bernoulli or binomial")
        ->check(CLI::IsMember({"poisson", "fkappa", "bernoulli", "binomial"}))
        ->capture_default_str();
    cmd_sim->add_option("--lambda", sim.lambda, "Expected number of points (poisson, fkappa)")->capture_default_str();
    cmd_sim->add_option("--kappa", sim.kappa, "Intensity slope (fkappa)")->capture_default_str();
    cmd_sim->add_option("--n", sim.n, "Number of trials (bernoulli, binomial)")->capture_default_str();
    cmd_sim->add_option("--p", sim.p, "Success probability (bernoulli, binomial)")->capture_default_str();
    cmd_sim->add_option("--n-patterns", sim.n_patterns, "Number of patterns")->capture_default_str();
    cmd_sim->add_option("--seed", sim.seed, "Random seed")->capture_default_str();

    TestOptions test;
    auto* cmd_test = app.add_subcommand("test", "Monte Carlo test of homogeneous Poisson data on [0,1]^2.");
    cmd_test->add_option("data", test.data, "Multi-pattern file (or directory of single-pattern files)");
    cmd_test->add_option("--dir", test.dir, "Directory of single-pattern files");
    cmd_test->add_option("--lambda", test.lambda, "Known intensity (default: mean pattern size)");
    cmd_test->add_option("--cutoff,-c", test.cutoff, "Cut-off c")->capture_default_str();
    cmd_test->add_option("--order,-p", test.order, "Order p")->capture_default_str();
    cmd_test->add_option("--metric", test.metric, "d1 or dbar1")->check(CLI::IsMember(metrics))->capture_default_str();
    cmd_test->add_option("--null", test.n_null, "Number of null statistics")->capture_default_str();
    cmd_test->add_option("--alpha", test.alpha, "Level")->capture_default_str();
    cmd_test->add_option("--seed", test.seed, "Random seed")->capture_default_str();
    cmd_test->add_flag("--redraw-comparison", test.redraw, "Fresh comparison collection for every null statistic");

    PowerOptions power;
    auto* cmd_power = app.add_subcommand("power", "Power of the test against f_kappa alternatives.");
    cmd_power->add_option("--kappa", power.kappas, "kappa values (0 = homogeneous)")->capture_default_str();
    cmd_power->add_option("--cutoff", power.cutoffs, "cut-off values")->capture_default_str();
    cmd_power->add_option("--reps", power.reps, "Tests per cell")->capture_default_str();
    cmd_power->add_option("--null", power.n_null, "Null statistics per test")->capture_default_str();
    cmd_power->add_option("--n-patterns", power.n_patterns, "Patterns per data set")->capture_default_str();
    cmd_power->add_option("--lambda", power.lambda, "Expected points per pattern")->capture_default_str();
    cmd_power->add_option("--alpha", power.alpha, "Level")->capture_default_str();
    cmd_power->add_option("--metric", power.metric, "d1 or dbar1")->check(CLI::IsMember(metrics))->capture_default_str();
    cmd_power->add_option("--seed", power.seed, "Random seed")->capture_default_str();
    cmd_power->add_flag("--estimate-lambda", power.estimate_lambda, "Estimate lambda from the data");
    cmd_power->add_flag("--redraw-comparison", power.redraw, "Fresh comparison collection for every null statistic");
    cmd_power->add_flag("--csv", power.csv, "Plain CSV: kappa,cutoff,power,se");

    BoundsOptions bounds;
    auto* cmd_bounds = app.add_subcommand("bounds", "Evaluate the approximation bounds.");
    cmd_bounds->add_option("--which", bounds.which, "Bound to evaluate")
        ->required()
        ->check(CLI::IsMember({"stein1", "stein2", "bernoulli-poisson", "iid", "poisson-poisson", "counterexample"}));
    cmd_bounds->add_option("--n", bounds.n, "Pattern size or 'inf' (stein1, stein2)")->capture_default_str();
    cmd_bounds->add_option("--lambda", bounds.lambda, "Total intensity");
    cmd_bounds->add_option("--trials", bounds.trials, "Grid size n (bernoulli-poisson)");
    cmd_bounds->add_option("--p", bounds.p, "Success probability (bernoulli-poisson)");
    cmd_bounds->add_option("--mu", bounds.mu, "Count pmf P[M=0], P[M=1], ... (iid)")->delimiter(',');
    cmd_bounds->add_option("--nu", bounds.nu, "Count pmf P[N=0], P[N=1], ... (iid)")->delimiter(',');
    cmd_bounds->add_option("--dw", bounds.dw, "Location Wasserstein distance");
    cmd_bounds->add_option("--cap", bounds.cap, "Ground metric cap (iid)")->capture_default_str();
    cmd_bounds->add_option("--mu-total", bounds.mu_total, "Poisson total mu (poisson-poisson)");
    cmd_bounds->add_option("--nu-total", bounds.nu_total, "Poisson total nu (poisson-poisson)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const auto limit = thread_limit();
        if (*cmd_dist) return run_dist(dist);
        if (*cmd_sim) return run_simulate(sim);
        if (*cmd_test) return run_test(test);
        if (*cmd_power) return run_power(power);
        return run_bounds(bounds, *cmd_bounds);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const ppm::Error& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    }
}
