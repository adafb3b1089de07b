// Experiment runner for the order-discrimination pipelines. Every
// subcommand prints a JSON report to stdout (or --out) and a short
// human summary to stderr. Reports are reproducible: identical
// arguments and seed give identical bodies except wall_time_ms.
//
// Exit codes: 0 success, 1 invariant violation, 2 invalid arguments,
// 3 resource budget exceeded.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "switchsim/circuit.hpp"
#include "switchsim/errors.hpp"
#include "switchsim/periodic.hpp"
#include "switchsim/protocol.hpp"
#include "switchsim/router.hpp"
#include "switchsim/set_io.hpp"
#include "switchsim/supersequence.hpp"
#include "switchsim/unitary_set.hpp"

namespace {

using nlohmann::ordered_json;
using namespace switchsim;

// RNG role ids; construct-module internals use small roles, so CLI
// streams start at 1000 to stay disjoint.
constexpr std::uint64_t kRolePsi = 1000;
constexpr std::uint64_t kRoleTrials = 1001;

struct GlobalOptions {
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    std::size_t dense_budget = 4096;
    std::string format = "json";
    std::string out;
};

Budget make_budget(const GlobalOptions& options) {
    Budget budget;
    budget.dense_dim = options.dense_budget;
    return budget;
}

ordered_json distribution_json(const OutcomeDistribution& dist) {
    ordered_json probs = ordered_json::array();
    for (double p : dist.probs) probs.push_back(p);
    return probs;
}

std::string distribution_csv(const OutcomeDistribution& dist) {
    std::ostringstream csv;
    csv << "outcome,probability\n";
    csv.precision(17);
    for (std::size_t s = 0; s < dist.probs.size(); ++s) csv << s << ',' << dist.probs[s] << '\n';
    return csv.str();
}

bool all_verdicts_pass(const ordered_json& verdicts) {
    for (const auto& [name, value] : verdicts.items()) {
        (void)name;
        if (value.is_boolean() && !value.get<bool>()) return false;
    }
    return true;
}

/// Writes the report and summary; returns the process exit code.
int emit_report(ordered_json report, const std::string& summary, const GlobalOptions& options,
                const std::optional<std::string>& csv_body, double wall_ms) {
    report["wall_time_ms"] = wall_ms;
    std::string body;
    if (options.format == "csv") {
        if (!csv_body)
            throw std::invalid_argument("--format csv applies only to distribution reports "
                                        "(discriminate, period)");
        body = *csv_body;
    } else {
        body = report.dump(2) + "\n";
    }
    if (options.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(options.out);
        if (!out) throw std::invalid_argument("cannot open --out path " + options.out);
        out << body;
    }
    std::cerr << summary << '\n';
    return all_verdicts_pass(report["verdicts"]) ? 0 : 1;
}

StateVector parse_psi(const std::string& spec, std::size_t dim, std::uint64_t seed) {
    StateVector psi(std::vector<std::size_t>{dim});
    if (spec.rfind("basis:", 0) == 0) {
        const std::size_t k = std::stoull(spec.substr(6));
        if (k >= dim) throw std::invalid_argument("--psi basis index out of range");
        psi.amps[k] = Complex{1.0, 0.0};
        return psi;
    }
    if (spec == "random") {
        Rng rng = Rng::stream(seed, kRolePsi);
        return random_pure_state(dim, rng);
    }
    // comma-separated real amplitudes, normalized here
    std::stringstream stream(spec);
    std::string item;
    std::size_t index = 0;
    while (std::getline(stream, item, ',')) {
        if (index >= dim) throw std::invalid_argument("--psi has more amplitudes than d");
        psi.amps[index++] = Complex{std::stod(item), 0.0};
    }
    if (index != dim) throw std::invalid_argument("--psi has fewer amplitudes than d");
    const double norm_sq = psi.norm_sq();
    if (norm_sq <= tol::support) throw std::invalid_argument("--psi is the zero vector");
    for (auto& a : psi.amps) a /= std::sqrt(norm_sq);
    return psi;
}

UnitarySet to_dense_set(const UnitarySet& set, const Budget& budget) {
    if (set.dim > budget.dense_dim)
        throw BudgetError("dense representation of dimension " + std::to_string(set.dim) +
                          " exceeds budget " + std::to_string(budget.dense_dim));
    UnitarySet out = set;
    for (auto& u : out.unitaries) u = unitary_to_dense(u);
    return out;
}

/// d = n!^(n-1) without building anything; saturates at cap + 1.
std::size_t standard_dimension(std::size_t n, std::size_t cap) {
    const std::uint64_t m = factorial(n);
    std::size_t d = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (d > cap / m) return cap + 1;
        d *= static_cast<std::size_t>(m);
    }
    return d;
}

struct DiscriminateArgs {
    std::size_t n = 3;
    std::uint64_t y = 1;
    std::string mode = "exact";
    std::string input = "mixed";
    std::string psi_spec = "basis:0";
    std::string representation = "monomial";
    std::string set_file;
    double epsilon = 0.0;
    std::size_t repetitions = 1;
};

int cmd_discriminate(const DiscriminateArgs& args, const GlobalOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const Budget budget = make_budget(options);

    UnitarySet set;
    if (!args.set_file.empty()) {
        set = load_set_file(args.set_file);
    } else if (args.mode == "exact") {
        if (args.representation == "dense" &&
            standard_dimension(args.n, budget.dense_dim) > budget.dense_dim)
            throw BudgetError("dense mode refuses n = " + std::to_string(args.n) +
                              ": dimension exceeds --dense-budget");
        set = build_standard_set(args.n, args.y, budget);
    } else if (args.mode == "low-dim") {
        if (args.n != 3) throw std::invalid_argument("--mode low-dim requires n = 3");
        set = build_low_dim_set_n3(args.y);
    } else {  // perturbed
        set = perturb_set(build_standard_set(args.n, args.y, budget), args.epsilon, options.seed,
                          budget);
    }
    if (args.representation == "dense") set = to_dense_set(set, budget);

    OutcomeDistribution dist;
    if (args.input == "mixed") {
        dist = run_algorithm_mixed(set);
    } else {
        dist = run_algorithm_pure(set, parse_psi(args.psi_spec, set.dim, options.seed));
    }
    bool normalized = true;
    try {
        check_distribution(dist);
    } catch (const std::logic_error&) {
        normalized = false;
    }

    const std::optional<std::uint64_t> inferred = infer_property(set);
    const std::uint64_t vote = majority_vote_run(set, args.repetitions, options.seed);

    const std::uint64_t m = factorial(set.n);
    StateVector uniform(std::vector<std::size_t>{m});
    for (auto& a : uniform.amps) a = Complex{1.0 / std::sqrt(static_cast<double>(m)), 0.0};
    const QueryLedger ledger = count_queries_switch(set, uniform);

    ordered_json report;
    report["experiment"] = "discriminate";
    ordered_json params;
    params["n"] = set.n;
    params["d"] = set.dim;
    if (!args.set_file.empty()) {
        params["set_file"] = args.set_file;
        params["claimed_y"] = set.claimed_y ? ordered_json(*set.claimed_y) : ordered_json(nullptr);
    } else {
        params["y"] = args.y;
        params["mode"] = args.mode;
    }
    params["input"] = args.input;
    if (args.input == "pure") params["psi"] = args.psi_spec;
    if (args.mode == "perturbed") params["epsilon"] = args.epsilon;
    params["representation"] = args.representation;
    params["seed"] = options.seed;
    params["repetitions"] = args.repetitions;
    params["tolerance"] = options.tolerance;
    report["parameters"] = std::move(params);
    report["distribution"] = distribution_json(dist);
    report["inferred_y"] = inferred ? ordered_json(*inferred) : ordered_json(nullptr);
    report["majority_vote"] = vote;
    report["promise_violation"] = !inferred.has_value();
    ordered_json queries;
    queries["flags_factorize"] = ledger.flags_factorize;
    queries["total"] = ledger.total_queries;
    report["queries"] = std::move(queries);
    ordered_json verdicts;
    verdicts["distribution_normalized"] = normalized;
    verdicts["flags_factorize"] = ledger.flags_factorize;
    verdicts["query_count_is_n"] = ledger.total_queries == set.n;
    report["verdicts"] = std::move(verdicts);

    std::ostringstream summary;
    summary << "discriminate: n=" << set.n << " d=" << set.dim << " input=" << args.input
            << " -> inferred ";
    if (inferred) {
        summary << *inferred;
    } else {
        summary << "none (promise violation)";
    }
    summary << ", majority vote " << vote << ", switch queries " << ledger.total_queries;

    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return emit_report(std::move(report), summary.str(), options, distribution_csv(dist),
                       wall_ms);
}

struct CompareArgs {
    std::size_t n = 3;
    std::uint64_t y = 1;
    std::size_t trials = 20;
};

int cmd_compare_circuit(const CompareArgs& args, const GlobalOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const Budget budget = make_budget(options);
    // The circuit state spans n^n * d^(n+1) amplitudes, so n = 3 runs on
    // the 6-level set; smaller n use the general construction.
    const UnitarySet set =
        args.n == 3 ? build_low_dim_set_n3(args.y) : build_standard_set(args.n, args.y, budget);
    const std::size_t n = set.n;
    const std::size_t d = set.dim;
    const std::uint64_t m = factorial(n);

    // expected ancilla end state: operator i applied n-1 times to |0>
    std::vector<StateVector> expected_ancillae;
    for (std::size_t i = 0; i < n; ++i) {
        StateVector anc(std::vector<std::size_t>{d});
        anc.amps[0] = Complex{1.0, 0.0};
        for (std::size_t rep = 0; rep + 1 < n; ++rep) apply(set.unitaries[i], anc, 0);
        expected_ancillae.push_back(std::move(anc));
    }

    Rng rng = Rng::stream(options.seed, kRoleTrials);
    double max_deviation = 0.0;
    bool all_disentangled = true;
    for (std::size_t trial = 0; trial < args.trials; ++trial) {
        const StateVector label_control = random_pure_state(m, rng);
        const StateVector psi = random_pure_state(d, rng);

        std::size_t digit_space = 1;
        for (std::size_t i = 0; i < n; ++i) digit_space *= n;
        StateVector digit_control(std::vector<std::size_t>{digit_space});
        for (std::uint64_t x = 0; x < m; ++x)
            digit_control.amps[control_index(label_to_control(x, n))] = label_control.amps[x];

        const CircuitState out = run_fixed_circuit(set, digit_control, psi, budget);
        if (!check_ancilla_disentangled(out).disentangled) all_disentangled = false;
        const JointState labeled =
            digits_to_label_state(project_ancillae(out, expected_ancillae), n, d);
        const JointState direct = n_switch_apply(set, product_state(label_control.amps, psi.amps));
        for (std::size_t i = 0; i < labeled.amps.size(); ++i)
            max_deviation = std::max(max_deviation, std::abs(labeled.amps[i] - direct.amps[i]));
    }

    // entangling / non-entangling fixed superpositions (defined for n = 3)
    ordered_json footnote(nullptr);
    bool footnote_ok = true;
    if (n == 3) {
        StateVector psi0(std::vector<std::size_t>{d});
        psi0.amps[0] = Complex{1.0, 0.0};
        const auto superpose = [&](const std::vector<std::vector<std::size_t>>& tuples) {
            StateVector c(std::vector<std::size_t>{27});
            for (const auto& t : tuples)
                c.amps[control_index(CircuitControl{3, t})] =
                    Complex{1.0 / std::sqrt(static_cast<double>(tuples.size())), 0.0};
            return c;
        };
        const bool good = check_ancilla_disentangled(
            run_fixed_circuit(set, superpose({{0, 0, 2}, {0, 2, 0}, {2, 0, 0}}), psi0, budget))
            .disentangled;
        const bool bad = check_ancilla_disentangled(
            run_fixed_circuit(set, superpose({{0, 0, 2}, {0, 2, 1}}), psi0, budget))
            .disentangled;
        footnote = ordered_json{{"equal_use_superposition_disentangles", good},
                                {"unequal_use_superposition_disentangles", bad}};
        footnote_ok = good && !bad;
    }

    StateVector uniform(std::vector<std::size_t>{m});
    for (auto& a : uniform.amps) a = Complex{1.0 / std::sqrt(static_cast<double>(m)), 0.0};
    const QueryLedger switch_ledger = count_queries_switch(set, uniform);
    const std::uint64_t circuit_queries = circuit_query_count(n);

    ordered_json report;
    report["experiment"] = "compare-circuit";
    report["parameters"] = ordered_json{{"n", n},      {"y", args.y},
                                        {"d", d},      {"trials", args.trials},
                                        {"seed", options.seed}, {"tolerance", options.tolerance}};
    report["max_deviation"] = max_deviation;
    report["ancillae_disentangled"] = all_disentangled;
    report["footnote_cases"] = footnote;
    report["queries"] =
        ordered_json{{"switch", switch_ledger.total_queries}, {"circuit", circuit_queries}};
    ordered_json verdicts;
    verdicts["marginal_matches_switch"] = max_deviation <= options.tolerance;
    verdicts["ancillae_disentangled"] = all_disentangled;
    verdicts["footnote_cases"] = footnote_ok;
    verdicts["query_counts"] =
        switch_ledger.total_queries == n && circuit_queries == static_cast<std::uint64_t>(n) * n;
    report["verdicts"] = std::move(verdicts);

    std::ostringstream summary;
    summary << "compare-circuit: n=" << n << " trials=" << args.trials << " max deviation "
            << max_deviation << ", queries " << switch_ledger.total_queries << " vs "
            << circuit_queries;

    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return emit_report(std::move(report), summary.str(), options, std::nullopt, wall_ms);
}

int cmd_supersequence(std::size_t n, const GlobalOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const SupersequenceResult result = minimal_supersequence_length(n);
    const std::size_t bound = supersequence_upper_bound(n);
    const bool covers = contains_all_permutations(result.witness, n);
    GateSequence trimmed = result.witness;
    trimmed.pop_back();
    const bool last_needed = n == 1 ? trimmed.empty() : !contains_all_permutations(trimmed, n);

    ordered_json report;
    report["experiment"] = "supersequence";
    report["parameters"] = ordered_json{{"n", n}};
    report["minimal_length"] = result.length;
    report["witness"] = result.witness;
    report["upper_bound"] = bound;
    ordered_json verdicts;
    verdicts["witness_contains_all_permutations"] = covers;
    verdicts["within_upper_bound"] = result.length <= bound;
    verdicts["witness_is_minimal_at_tail"] = last_needed;
    report["verdicts"] = std::move(verdicts);

    std::ostringstream summary;
    summary << "supersequence: n=" << n << " -> minimal length " << result.length
            << " (upper bound " << bound << ")";

    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return emit_report(std::move(report), summary.str(), options, std::nullopt, wall_ms);
}

struct RouterArgs {
    std::size_t n = 3;
    std::optional<std::uint64_t> y;
    std::size_t trials = 20;
};

int cmd_router(const RouterArgs& args, const GlobalOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    if (args.n > 8)
        throw BudgetError("router: exhaustive routing check capped at n = 8");
    const Budget budget = make_budget(options);
    const RouterNetwork network = build_router_network(args.n);

    bool routing_exact = true;
    const std::uint64_t m = factorial(args.n);
    for (std::uint64_t x = 0; x < m && routing_exact; ++x) {
        const PermutationLabel perm = label_to_permutation(x, args.n);
        for (std::size_t j = 0; j < args.n; ++j)
            if (route(network, x, j) != perm.sigma[j]) {
                routing_exact = false;
                break;
            }
    }

    const std::uint64_t y = args.y.value_or(m > 1 ? 1 : 0);
    const UnitarySet set = build_standard_set(args.n, y, budget);
    Rng rng = Rng::stream(options.seed, kRoleTrials);
    double max_deviation = 0.0;
    for (std::size_t trial = 0; trial < args.trials; ++trial) {
        const StateVector control = random_pure_state(m, rng);
        const StateVector psi = random_pure_state(set.dim, rng);
        const JointState via = simulate_switch_via_routers(set, control, psi);
        const JointState direct = n_switch_apply(set, product_state(control.amps, psi.amps));
        for (std::size_t i = 0; i < via.amps.size(); ++i)
            max_deviation = std::max(max_deviation, std::abs(via.amps[i] - direct.amps[i]));
    }

    ordered_json report;
    report["experiment"] = "router";
    report["parameters"] = ordered_json{{"n", args.n},
                                        {"y", y},
                                        {"trials", args.trials},
                                        {"seed", options.seed},
                                        {"tolerance", options.tolerance}};
    report["network"] = ordered_json::parse(router_network_to_json(network));
    report["network_size"] = network.swaps.size();
    report["routing_exact"] = routing_exact;
    report["max_deviation"] = max_deviation;
    ordered_json verdicts;
    verdicts["routing_matches_permutations"] = routing_exact;
    verdicts["network_size_is_n_choose_2"] = network.swaps.size() == args.n * (args.n - 1) / 2;
    verdicts["matches_switch"] = max_deviation <= options.tolerance;
    report["verdicts"] = std::move(verdicts);

    std::ostringstream summary;
    summary << "router: n=" << args.n << " swaps=" << network.swaps.size() << " max deviation "
            << max_deviation;

    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return emit_report(std::move(report), summary.str(), options, std::nullopt, wall_ms);
}

struct PeriodArgs {
    std::size_t n = 3;
    std::string function = "identity";
};

int cmd_period(const PeriodArgs& args, const GlobalOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t N = factorial(args.n);

    PhaseFunction pf;
    bool sawtooth = false;
    std::optional<std::uint64_t> linear_y;
    if (args.function.rfind("sawtooth:", 0) == 0) {
        pf = sawtooth_phase_function(args.n, std::stoull(args.function.substr(9)));
        sawtooth = true;
    } else if (args.function.rfind("linear:", 0) == 0) {
        linear_y = std::stoull(args.function.substr(7));
        pf = linear_phase_function(args.n, *linear_y);
    } else if (args.function == "identity") {
        pf = sawtooth_phase_function(args.n, N);
        sawtooth = true;
    } else if (args.function == "constant") {
        pf = sawtooth_phase_function(args.n, 1);
        sawtooth = true;
    } else {
        throw std::invalid_argument(
            "--function must be sawtooth:<r>, linear:<y>, identity, or constant");
    }

    const OutcomeDistribution dist = run_with_phase_function(pf);
    bool normalized = true;
    try {
        check_distribution(dist);
    } catch (const std::logic_error&) {
        normalized = false;
    }

    const std::uint64_t step = N / pf.r;
    double off_support = 0.0;
    for (std::uint64_t s = 0; s < N; ++s)
        if (s % step != 0) off_support = std::max(off_support, dist.probs[s]);

    const OutcomeDistribution uniform = uniform_period_distribution(pf.r, N);
    const double tv = total_variation(dist, uniform);

    ordered_json report;
    report["experiment"] = "period";
    report["parameters"] = ordered_json{{"n", args.n},
                                        {"function", args.function},
                                        {"period", pf.r},
                                        {"tolerance", options.tolerance}};
    report["distribution"] = distribution_json(dist);
    report["off_support_max"] = off_support;
    report["p0"] = dist.probs[0];
    report["analytic_p0"] = sawtooth ? ordered_json(analytic_p0(pf.r, N)) : ordered_json(nullptr);
    report["total_variation_to_uniform"] = tv;
    ordered_json verdicts;
    verdicts["distribution_normalized"] = normalized;
    verdicts["supported_on_period_multiples"] = off_support <= options.tolerance;
    if (sawtooth)
        verdicts["p0_matches_analytic"] =
            std::abs(dist.probs[0] - analytic_p0(pf.r, N)) <= options.tolerance;
    if (linear_y)
        verdicts["delta_at_y"] = std::abs(dist.probs[*linear_y % N] - 1.0) <= options.tolerance;
    report["verdicts"] = std::move(verdicts);

    std::ostringstream summary;
    summary << "period: n=" << args.n << " function=" << args.function << " r=" << pf.r
            << " p0=" << dist.probs[0] << " tv(uniform)=" << tv;

    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return emit_report(std::move(report), summary.str(), options, distribution_csv(dist),
                       wall_ms);
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOptions options;
    CLI::App app{"order-discrimination experiment runner"};
    app.require_subcommand(1);
    app.add_option("--seed", options.seed, "RNG seed shared by all random choices");
    app.add_option("--tolerance", options.tolerance, "verdict tolerance")->check(CLI::PositiveNumber);
    app.add_option("--dense-budget", options.dense_budget, "largest dense dimension allowed");
    app.add_option("--format", options.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", options.out, "write the report to a file instead of stdout");

    DiscriminateArgs disc;
    auto* discriminate =
        app.add_subcommand("discriminate", "build a set and identify its phase property");
    discriminate->add_option("--n", disc.n, "operator count")->check(CLI::Range(1, 20));
    discriminate->add_option("--y", disc.y, "phase exponent to build");
    discriminate->add_option("--mode", disc.mode, "set construction")
        ->check(CLI::IsMember({"exact", "low-dim", "perturbed"}));
    discriminate->add_option("--input", disc.input, "target preparation")
        ->check(CLI::IsMember({"pure", "mixed"}));
    discriminate->add_option("--psi", disc.psi_spec,
                             "pure target: basis:<k>, random, or comma-separated amplitudes");
    discriminate->add_option("--epsilon", disc.epsilon, "perturbation strength")
        ->check(CLI::NonNegativeNumber);
    discriminate->add_option("--repetitions", disc.repetitions, "majority-vote sample count")
        ->check(CLI::PositiveNumber);
    discriminate->add_option("--representation", disc.representation, "operator storage")
        ->check(CLI::IsMember({"monomial", "dense"}));
    discriminate->add_option("--set-file", disc.set_file,
                             "load the unitary set from a JSON fixture instead of building");

    CompareArgs cmp;
    auto* compare = app.add_subcommand("compare-circuit",
                                       "check the fixed-order circuit against the switch");
    compare->add_option("--n", cmp.n, "operator count")->check(CLI::Range(1, 20));
    compare->add_option("--y", cmp.y, "phase exponent");
    compare->add_option("--trials", cmp.trials, "random input pairs")->check(CLI::PositiveNumber);

    std::size_t super_n = 2;
    auto* super = app.add_subcommand("supersequence",
                                     "minimal sequence containing every ordering");
    super->add_option("--n", super_n, "alphabet size")->check(CLI::Range(1, 20));

    RouterArgs rout;
    std::uint64_t router_y = 0;
    auto* router = app.add_subcommand("router", "check the mode-swap network realization");
    router->add_option("--n", rout.n, "operator count")->check(CLI::Range(1, 20));
    auto* router_y_opt = router->add_option("--y", router_y, "phase exponent");
    router->add_option("--trials", rout.trials, "random input pairs")->check(CLI::PositiveNumber);

    PeriodArgs period;
    auto* per = app.add_subcommand("period", "branch-phase interference distributions");
    per->add_option("--n", period.n, "operator count")->check(CLI::Range(1, 20));
    per->add_option("--function", period.function,
                    "sawtooth:<r>, linear:<y>, identity, or constant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*discriminate) return cmd_discriminate(disc, options);
        if (*compare) return cmd_compare_circuit(cmp, options);
        if (*super) return cmd_supersequence(super_n, options);
        if (*router) {
            if (*router_y_opt) rout.y = router_y;
            return cmd_router(rout, options);
        }
        if (*per) return cmd_period(period, options);
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
