// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include "tbsg/best_response.hpp"
#include "tbsg/generate.hpp"
#include "tbsg/io.hpp"
#include "tbsg/oracle.hpp"
#include "tbsg/solve.hpp"
#include "tbsg/transform.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

using namespace tbsg;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

constexpr Algorithm kAll[] = {Algorithm::Strategy, Algorithm::Simplex,
                              Algorithm::ModifiedSimplex};
constexpr int kMaxIters = 200000;

GenSpec spec_for(int l, double gamma, std::uint64_t seed) {
    GenSpec spec;
    spec.num_states = l;
    spec.min_actions = 2;
    spec.max_actions = 3;
    spec.gamma = gamma;
    spec.seed = seed;
    return spec;
}

void criterion_oracle_equivalence() {
    int games = 0;
    std::string fail;
    for (int l = 2; l <= 6 && fail.empty(); ++l)
        for (double gamma : {0.5, 0.9})
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                const Game g = generate(spec_for(l, gamma, seed));
                const auto oracle = brute_force_equilibrium(g);
                ++games;
                for (Algorithm alg : kAll) {
                    const auto rep = solve(g, default_strategy(g), alg, kMaxIters);
                    const double diff = (rep.value - oracle.value).cwiseAbs().maxCoeff();
                    if (rep.limit_reached || diff > 1e-6) {
                        std::ostringstream msg;
                        msg << to_string(alg) << " off by " << diff << " on l=" << l
                            << " gamma=" << gamma << " seed=" << seed;
                        fail = msg.str();
                    }
                }
            }
    report(1, "oracle equivalence",
           fail.empty(), fail.empty() ? std::to_string(games) + " games x 3 algorithms" : fail);
}

void criterion_flux_suite() {
    int pairs = 0;
    std::string fail;
    for (std::uint64_t gseed = 0; gseed < 100 && fail.empty(); ++gseed) {
        const Game g =
            generate(spec_for(2 + (int)(gseed % 5), gseed % 2 ? 0.9 : 0.5, gseed));
        const double l_over = g.num_states / (1.0 - g.gamma);
        Strategy prev;
        Eigen::VectorXd prev_rc;
        double prev_sum = 0.0;
        for (int k = 0; k < 10; ++k, ++pairs) {
            const Strategy pi = random_strategy(g, gseed * 1000 + k);
            const Eigen::VectorXd v = value_of(g, pi);
            const Eigen::VectorXd x = flux_of(g, pi);
            if (std::abs(x.sum() - l_over) > 1e-8 * l_over) fail = "flux sum identity";
            for (int s = 0; s < g.num_states; ++s)
                if (x(pi.choice[s]) < 1.0 - 1e-8) fail = "flux lower bound";
            if (std::abs(v.sum() - x.dot(g.reward)) > 1e-8 * (1.0 + std::abs(v.sum())))
                fail = "total value identity";
            if (k > 0) {
                const double lhs = v.sum() - prev_sum;
                if (std::abs(lhs - x.dot(prev_rc)) > 1e-8 * (1.0 + std::abs(lhs)))
                    fail = "difference identity";
            }
            prev = pi;
            prev_rc = modified_reward(g, v);
            prev_sum = v.sum();
        }
    }
    report(2, "flux identity suite", fail.empty(),
           fail.empty() ? std::to_string(pairs) + " (game, strategy) pairs" : fail);
}

void criterion_contraction() {
    int traces = 0;
    std::string fail;
    for (std::uint64_t seed = 0; seed < 100 && fail.empty(); ++seed, ++traces) {
        const Game g = generate(spec_for(2 + (int)(seed % 4), seed % 2 ? 0.9 : 0.5, seed));
        const auto oracle = brute_force_equilibrium(g);
        const auto rep =
            simplex_strategy_iteration(g, random_strategy(g, seed + 7), kMaxIters);
        const double bound = 1.0 - (1.0 - g.gamma) / g.num_states;
        const double star = oracle.value.sum();
        for (size_t i = 0; i + 1 < rep.trace.size(); ++i) {
            const double gap0 = star - rep.trace[i].sum_v;
            const double gap1 = star - rep.trace[i + 1].sum_v;
            if (gap1 > bound * gap0 + 1e-8) fail = "per-iteration bound at seed " +
                                                   std::to_string(seed);
        }
    }
    report(3, "simplex contraction", fail.empty(),
           fail.empty() ? std::to_string(traces) + " traces" : fail);
}

void criterion_monotonicity() {
    std::string fail;
    int traces = 0;
    for (std::uint64_t seed = 0; seed < 40 && fail.empty(); ++seed)
        for (Algorithm alg : kAll) {
            const Game g =
                generate(spec_for(2 + (int)(seed % 5), seed % 2 ? 0.9 : 0.5, seed + 200));
            const auto rep = solve(g, random_strategy(g, seed), alg, kMaxIters);
            ++traces;
            for (size_t i = 0; i + 1 < rep.trace.size(); ++i)
                if (rep.trace[i + 1].sum_v < rep.trace[i].sum_v - 1e-9)
                    fail = to_string(alg) + " decreased at seed " + std::to_string(seed);
        }
    report(4, "trace monotonicity", fail.empty(),
           fail.empty() ? std::to_string(traces) + " traces" : fail);
}

void criterion_iteration_budget() {
    std::string fail;
    std::ofstream csv("acceptance_bench.csv");
    csv << "l,m,gamma,seed,algorithm,iterations,certified,bound,ratio\n";
    for (int l : {2, 4, 6, 8, 10})
        for (double gamma : {0.5, 0.9})
            for (std::uint64_t seed = 0; seed < 5; ++seed)
                for (Algorithm alg : kAll) {
                    const Game g = generate(spec_for(l, gamma, seed + 900));
                    const auto rep = solve(g, default_strategy(g), alg, kMaxIters);
                    const bool certified =
                        !rep.limit_reached && is_equilibrium(g, rep.equilibrium, 10 * g.eps());
                    const double log_term = std::log(l / (1.0 - gamma));
                    const double bound = alg == Algorithm::Strategy
                                             ? g.num_actions / (1.0 - gamma) * log_term
                                             : (double)g.num_actions * l / (1.0 - gamma) *
                                                   log_term;
                    const double ratio = rep.iterations / bound;
                    csv << l << ',' << g.num_actions << ',' << gamma << ',' << seed << ','
                        << to_string(alg) << ',' << rep.iterations << ',' << (certified ? 1 : 0)
                        << ',' << bound << ',' << ratio << '\n';
                    if (!certified)
                        fail = to_string(alg) + " uncertified at l=" + std::to_string(l);
                    else if (rep.iterations > 10.0 * bound)
                        fail = to_string(alg) + " exceeded 10x bound at l=" + std::to_string(l);
                }
    report(5, "iteration budget", fail.empty(),
           fail.empty() ? "ratios in acceptance_bench.csv" : fail);
}

void criterion_transform() {
    std::string fail;
    int games = 0;
    for (std::uint64_t seed = 0; seed < 50 && fail.empty(); ++seed, ++games) {
        const Game g = generate(spec_for(2 + (int)(seed % 4), seed % 2 ? 0.9 : 0.5, seed + 400));
        const auto oracle = brute_force_equilibrium(g);
        const TransformedGame tg = to_binary(g);
        for (const auto& acts : tg.game.actions_by_state)
            if (acts.size() != 2) fail = "state without exactly two actions";
        if (tg.game.num_states >
            g.num_actions + g.num_states * (int)std::ceil(std::log2((double)g.num_actions)))
            fail = "size bound";
        const auto rep = simplex_strategy_iteration(tg.game, default_strategy(tg.game), kMaxIters);
        if (rep.limit_reached) fail = "constructed game not solved";
        for (int s = 0; s < tg.game.num_states && fail.empty(); ++s)
            if (tg.is_dummy[rep.equilibrium.choice[s]]) fail = "dummy in equilibrium";
        for (int s = 0; s < g.num_states && fail.empty(); ++s) {
            const double expect = tg.scale_c * oracle.value(s);
            if (std::abs(rep.value(s) - expect) > 1e-6 * (1.0 + std::abs(expect)))
                fail = "value scaling at state " + std::to_string(s);
        }
    }
    report(6, "binary-action transformation", fail.empty(),
           fail.empty() ? std::to_string(games) + " games" : fail);
}

// Independent reference: Bellman backups run to a 1e-12 residual.
Eigen::VectorXd value_iteration_reference(const Game& g) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(g.num_states);
    for (int iter = 0; iter < 10000000; ++iter) {
        Eigen::VectorXd next(g.num_states);
        for (int s = 0; s < g.num_states; ++s) {
            double best = -std::numeric_limits<double>::infinity();
            for (int a : g.actions_by_state[s])
                best = std::max(best, g.reward(a) + g.gamma * g.transition.row(a).dot(v));
            next(s) = best;
        }
        const double resid = (next - v).cwiseAbs().maxCoeff();
        v = next;
        if (resid <= 1e-12) return v;
    }
    throw std::runtime_error("value iteration failed to converge");
}

void criterion_mdp_specialization() {
    std::string fail;
    int games = 0;
    for (std::uint64_t seed = 0; seed < 30 && fail.empty(); ++seed, ++games) {
        GenSpec spec = spec_for(2 + (int)(seed % 5), seed % 2 ? 0.9 : 0.5, seed + 600);
        spec.player2_empty = true;
        spec.deterministic = true;
        const Game g = generate(spec);
        const auto rep = simplex_strategy_iteration(g, default_strategy(g), kMaxIters);
        const Eigen::VectorXd ref = value_iteration_reference(g);
        if (rep.limit_reached || (rep.value - ref).cwiseAbs().maxCoeff() > 1e-8)
            fail = "mismatch at seed " + std::to_string(seed);
    }
    report(7, "MDP specialization", fail.empty(),
           fail.empty() ? std::to_string(games) + " deterministic MDPs" : fail);
}

int run_cli(const std::string& bin, const std::string& args) {
    const int status = std::system((bin + " " + args).c_str());
    return status >= 0 && WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void criterion_determinism() {
    std::string fail;

    // library level: generation and traces
    GenSpec spec = spec_for(5, 0.9, 31);
    if (serialize_game(generate(spec)) != serialize_game(generate(spec)))
        fail = "generate not reproducible";
    const Game g = generate(spec);
    if (trace_csv(simplex_strategy_iteration(g, default_strategy(g), kMaxIters)) !=
        trace_csv(simplex_strategy_iteration(g, default_strategy(g), kMaxIters)))
        fail = "trace not reproducible";

    // CLI level, when the binary location is known
    if (const char* bin = std::getenv("TBSG_BIN"); bin != nullptr && fail.empty()) {
        namespace fs = std::filesystem;
        const fs::path tmp = fs::temp_directory_path() / ("tbsg_acc_" + std::to_string(getpid()));
        fs::create_directories(tmp);
        const auto file = [&](const std::string& n) { return (tmp / n).string(); };
        for (const std::string tag : {"1", "2"}) {
            if (run_cli(bin, "gen --states 6 --seed 13 --output " + file("g" + tag)) != 0 ||
                run_cli(bin, "solve --input " + file("g" + tag) + " --algorithm simplex" +
                                 " --output " + file("o" + tag) + " --trace " +
                                 file("t" + tag)) != 0)
                fail = "CLI run failed";
        }
        if (fail.empty() && (slurp(file("g1")) != slurp(file("g2")) ||
                             slurp(file("o1")) != slurp(file("o2")) ||
                             slurp(file("t1")) != slurp(file("t2"))))
            fail = "CLI output not byte-identical";
        fs::remove_all(tmp);
    }
    report(8, "determinism", fail.empty(), fail);
}

}  // namespace

int main() {
    criterion_oracle_equivalence();
    criterion_flux_suite();
    criterion_contraction();
    criterion_monotonicity();
    criterion_iteration_budget();
    criterion_transform();
    criterion_mdp_specialization();
    criterion_determinism();
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
