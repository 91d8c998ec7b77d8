#include "tbsg/best_response.hpp"
#include "tbsg/generate.hpp"
#include "tbsg/io.hpp"
#include "tbsg/oracle.hpp"
#include "tbsg/solve.hpp"
#include "tbsg/transform.hpp"
#include "tbsg/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBudget = 2;

void write_or_print(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

tbsg::Game load_valid(const std::string& path) {
    tbsg::Game g = tbsg::load_game(path);
    const auto violations = tbsg::validate_game(g);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << path << ": " << violations.front().what;
        if (violations.front().state >= 0) msg << " (state " << violations.front().state << ")";
        if (violations.front().action >= 0) msg << " (action " << violations.front().action << ")";
        throw std::runtime_error(msg.str());
    }
    return g;
}

tbsg::Strategy pick_start(const tbsg::Game& g, bool random_start, std::uint64_t seed) {
    return random_start ? tbsg::random_strategy(g, seed) : tbsg::default_strategy(g);
}

std::string report_text(const tbsg::SolveReport& rep) {
    std::ostringstream out;
    out << "algorithm " << tbsg::to_string(rep.algorithm_tag) << "\n";
    out << "iterations " << rep.iterations << "\n";
    out << "limit_reached " << (rep.limit_reached ? 1 : 0) << "\n";
    out << "strategy";
    for (int a : rep.equilibrium.choice) out << ' ' << a;
    out << "\nvalue";
    for (int s = 0; s < rep.value.size(); ++s) out << ' ' << tbsg::format_double(rep.value(s));
    out << "\n";
    return out.str();
}

double iteration_bound(tbsg::Algorithm alg, int l, int m, double gamma) {
    const double log_term = std::log((double)l / (1.0 - gamma));
    if (alg == tbsg::Algorithm::Strategy) return m / (1.0 - gamma) * log_term;
    return (double)m * l / (1.0 - gamma) * log_term;
}

int cmd_solve(const std::string& input, const std::string& output, const std::string& trace,
              const std::string& algorithm, int max_iters, bool random_start,
              std::uint64_t seed) {
    const tbsg::Game g = load_valid(input);
    const auto rep = tbsg::solve(g, pick_start(g, random_start, seed),
                                 tbsg::algorithm_from_string(algorithm), max_iters);
    write_or_print(output, report_text(rep));
    if (!trace.empty()) write_or_print(trace, tbsg::trace_csv(rep));
    if (rep.limit_reached) return kExitBudget;
    if (!tbsg::is_equilibrium(g, rep.equilibrium, 10 * g.eps())) {
        std::cerr << "error: result failed equilibrium certification\n";
        return kExitError;
    }
    return kExitOk;
}

int cmd_gen(const tbsg::GenSpec& spec, const std::string& output) {
    write_or_print(output, tbsg::serialize_game(tbsg::generate(spec)));
    return kExitOk;
}

int cmd_transform(const std::string& input, const std::string& output,
                  const std::string& map_path) {
    const tbsg::Game g = load_valid(input);
    const tbsg::TransformedGame tg = tbsg::to_binary(g);
    write_or_print(output, tbsg::serialize_game(tg.game));
    if (!map_path.empty()) write_or_print(map_path, tbsg::mapping_sidecar(tg));
    return kExitOk;
}

int cmd_verify(const std::string& input, std::uint64_t seed,
               const std::vector<std::string>& checks) {
    static const std::vector<std::string> known{"validate",   "flux",        "signs",
                                               "algorithms", "contraction", "transform"};
    for (const auto& name : checks)
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw std::runtime_error("unknown check: " + name);
    const tbsg::Game g = tbsg::load_game(input);
    const auto results = tbsg::run_verification(g, seed, checks);
    bool all_pass = true;
    for (const auto& res : results) {
        std::cout << (res.pass ? "PASS" : "FAIL") << "  " << res.name;
        if (!res.detail.empty()) std::cout << "  (" << res.detail << ")";
        std::cout << "\n";
        all_pass = all_pass && res.pass;
    }
    return all_pass ? kExitOk : kExitError;
}

int cmd_bench(const std::vector<int>& sizes, const std::vector<double>& gammas, int num_seeds,
              const std::vector<std::string>& algorithms, int min_actions, int max_actions,
              int max_iters, const std::string& output) {
    std::ostringstream csv;
    csv << "l,m,gamma,seed,algorithm,iterations,wall_ns,certified,bound,ratio\n";
    for (int l : sizes)
        for (double gamma : gammas)
            for (int seed = 0; seed < num_seeds; ++seed)
                for (const auto& name : algorithms) {
                    tbsg::GenSpec spec;
                    spec.num_states = l;
                    spec.min_actions = min_actions;
                    spec.max_actions = max_actions;
                    spec.gamma = gamma;
                    spec.seed = (std::uint64_t)seed;
                    const tbsg::Game g = tbsg::generate(spec);
                    const auto alg = tbsg::algorithm_from_string(name);
                    const auto t0 = std::chrono::steady_clock::now();
                    tbsg::SolveReport rep;
                    bool certified = false;
                    try {
                        rep = tbsg::solve(g, tbsg::default_strategy(g), alg, max_iters);
                        certified = !rep.limit_reached &&
                                    tbsg::is_equilibrium(g, rep.equilibrium, 10 * g.eps());
                    } catch (const std::exception& e) {
                        std::cerr << "bench cell failed: " << e.what() << "\n";
                    }
                    const auto t1 = std::chrono::steady_clock::now();
                    const auto ns =
                        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
                    const double bound = iteration_bound(alg, l, g.num_actions, gamma);
                    csv << l << ',' << g.num_actions << ',' << tbsg::format_double(gamma) << ','
                        << seed << ',' << name << ',' << rep.iterations << ',' << ns << ','
                        << (certified ? 1 : 0) << ',' << tbsg::format_double(bound) << ','
                        << tbsg::format_double(rep.iterations / bound) << '\n';
                }
    write_or_print(output, csv.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solver for discounted two-player turn-based stochastic games"};
    app.require_subcommand(1);

    if (const char* env = std::getenv("TBSG_EPS")) {
        const double eps = std::atof(env);
        if (eps > 0.0) tbsg::Game::eps_base() = eps;
    }
    double eps_flag = 0.0;
    app.add_option("--eps", eps_flag, "Tolerance base (overrides TBSG_EPS)");

    std::string input, output, trace_path, map_path, algorithm = "simplex";
    int max_iters = 100000;
    bool random_start = false;
    std::uint64_t seed = 0;

    auto* solve_cmd = app.add_subcommand("solve", "Find an equilibrium strategy");
    solve_cmd->add_option("--input", input, "Game file")->required();
    solve_cmd->add_option("--output", output, "Result file (default stdout)");
    solve_cmd->add_option("--trace", trace_path, "Per-iteration CSV trace");
    solve_cmd->add_option("--algorithm", algorithm,
                          "strategy | simplex | modified-simplex");
    solve_cmd->add_option("--max-iters", max_iters)->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--random-start", random_start, "Seed-randomized initial strategy");
    solve_cmd->add_option("--seed", seed, "Seed for --random-start");

    tbsg::GenSpec spec;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random game");
    gen_cmd->add_option("--states", spec.num_states)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--min-actions", spec.min_actions)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--max-actions", spec.max_actions)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--gamma", spec.gamma);
    gen_cmd->add_option("--seed", spec.seed);
    gen_cmd->add_flag("--deterministic", spec.deterministic, "One-hot transition rows");
    gen_cmd->add_flag("--player2-empty", spec.player2_empty, "All states Player1");
    gen_cmd->add_option("--reward-min", spec.reward_min);
    gen_cmd->add_option("--reward-max", spec.reward_max);
    gen_cmd->add_option("--output", output, "Game file (default stdout)");

    auto* transform_cmd = app.add_subcommand("transform", "Binary-action reduction");
    transform_cmd->add_option("--input", input, "Game file")->required();
    transform_cmd->add_option("--output", output, "Constructed game (default stdout)");
    transform_cmd->add_option("--map", map_path, "Sidecar state-mapping file");

    std::vector<std::string> checks;
    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
    verify_cmd->add_option("--input", input, "Game file")->required();
    verify_cmd->add_option("--seed", seed, "Seed for randomized checks");
    verify_cmd->add_option("--check", checks,
                           "validate | flux | signs | algorithms | contraction | transform");

    std::vector<int> sizes{2, 4, 6};
    std::vector<double> gammas{0.5, 0.9};
    int num_seeds = 5;
    std::vector<std::string> algorithms{"strategy", "simplex", "modified-simplex"};
    auto* bench_cmd = app.add_subcommand("bench", "Iteration-count sweep");
    bench_cmd->add_option("--states", sizes, "State counts");
    bench_cmd->add_option("--gammas", gammas, "Discount factors");
    bench_cmd->add_option("--seeds", num_seeds, "Seeds per cell")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--algorithms", algorithms);
    bench_cmd->add_option("--min-actions", spec.min_actions)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--max-actions", spec.max_actions)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--max-iters", max_iters)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--output", output, "CSV file (default stdout)");

    CLI11_PARSE(app, argc, argv);
    if (eps_flag > 0.0) tbsg::Game::eps_base() = eps_flag;

    try {
        if (solve_cmd->parsed())
            return cmd_solve(input, output, trace_path, algorithm, max_iters, random_start, seed);
        if (gen_cmd->parsed()) return cmd_gen(spec, output);
        if (transform_cmd->parsed()) return cmd_transform(input, output, map_path);
        if (verify_cmd->parsed()) return cmd_verify(input, seed, checks);
        if (bench_cmd->parsed())
            return cmd_bench(sizes, gammas, num_seeds, algorithms, spec.min_actions,
                             spec.max_actions, max_iters, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
