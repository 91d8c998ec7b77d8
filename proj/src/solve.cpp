#include "tbsg/solve.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tbsg {

std::string to_string(Algorithm alg) {
    switch (alg) {
        case Algorithm::Strategy: return "strategy";
        case Algorithm::Simplex: return "simplex";
        case Algorithm::ModifiedSimplex: return "modified-simplex";
    }
    return "?";
}

Algorithm algorithm_from_string(const std::string& name) {
    if (name == "strategy") return Algorithm::Strategy;
    if (name == "simplex") return Algorithm::Simplex;
    if (name == "modified-simplex") return Algorithm::ModifiedSimplex;
    throw std::invalid_argument("unknown algorithm: " + name);
}

namespace {

double max_p1_reduced_cost(const Game& g, const Eigen::VectorXd& rc) {
    double best = 0.0;
    for (int a = 0; a < g.num_actions; ++a)
        if (g.owner_of_action(a) == Player::One && rc(a) > best) best = rc(a);
    return best;
}

void push_record(SolveReport& rep, const Game& g, const Strategy& pi,
                 const Eigen::VectorXd& v, int iter, int sw_state, int sw_action) {
    const Eigen::VectorXd rc = modified_reward(g, v);
    rep.trace.push_back({iter, v.sum(), max_p1_reduced_cost(g, rc), sw_state, sw_action, pi});
}

}  // namespace

SolveReport strategy_iteration(const Game& g, const Strategy& start, int max_iters) {
    SolveReport rep;
    rep.algorithm_tag = Algorithm::Strategy;
    const double eps = g.eps();

    auto br = best_response(g, start, Player::Two, start);
    rep.best_response_steps += br.improvement_steps;
    Strategy pi = br.strategy;
    Eigen::VectorXd v = br.value;
    push_record(rep, g, pi, v, 0, -1, -1);

    bool converged = false;
    while (rep.iterations < max_iters) {
        const Eigen::VectorXd rc = modified_reward(g, v);
        int top_state = -1, top_action = -1;
        double top_rc = 0.0;
        bool switched = false;
        for (int s = 0; s < g.num_states; ++s) {
            if (g.owner[s] != Player::One) continue;
            int best = -1;
            double best_rc = -std::numeric_limits<double>::infinity();
            for (int a : g.actions_by_state[s])
                if (rc(a) > best_rc) { best = a; best_rc = rc(a); }
            if (best != pi.choice[s] && best_rc > eps) {
                pi.choice[s] = best;
                switched = true;
                if (best_rc > top_rc) { top_rc = best_rc; top_state = s; top_action = best; }
            }
        }
        if (!switched) { converged = true; break; }
        br = best_response(g, pi, Player::Two, pi);
        rep.best_response_steps += br.improvement_steps;
        pi = br.strategy;
        v = br.value;
        ++rep.iterations;
        push_record(rep, g, pi, v, rep.iterations, top_state, top_action);
    }
    rep.limit_reached = !converged && rep.iterations >= max_iters;
    rep.equilibrium = pi;
    rep.value = v;
    return rep;
}

SolveReport simplex_strategy_iteration(const Game& g, const Strategy& start, int max_iters) {
    SolveReport rep;
    rep.algorithm_tag = Algorithm::Simplex;
    const double eps = g.eps();

    auto br = best_response(g, start, Player::Two, start);
    rep.best_response_steps += br.improvement_steps;
    Strategy pi = br.strategy;
    Eigen::VectorXd v = br.value;
    push_record(rep, g, pi, v, 0, -1, -1);

    bool converged = false;
    while (rep.iterations < max_iters) {
        const Eigen::VectorXd rc = modified_reward(g, v);
        int pivot = -1;
        double pivot_rc = 0.0;
        for (int a = 0; a < g.num_actions; ++a)
            if (g.owner_of_action(a) == Player::One && rc(a) > pivot_rc) {
                pivot = a;
                pivot_rc = rc(a);
            }
        if (pivot < 0 || pivot_rc <= eps) { converged = true; break; }
        const int s = g.action_state[pivot];
        pi.choice[s] = pivot;
        br = best_response(g, pi, Player::Two, pi);
        rep.best_response_steps += br.improvement_steps;
        pi = br.strategy;
        v = br.value;
        ++rep.iterations;
        push_record(rep, g, pi, v, rep.iterations, s, pivot);
    }
    rep.limit_reached = !converged && rep.iterations >= max_iters;
    rep.equilibrium = pi;
    rep.value = v;
    return rep;
}

SolveReport modified_simplex_strategy_iteration(const Game& g, const Strategy& start,
                                                int max_iters) {
    SolveReport rep;
    rep.algorithm_tag = Algorithm::ModifiedSimplex;
    const double eps = g.eps();

    auto br = best_response(g, start, Player::Two, start);
    rep.best_response_steps += br.improvement_steps;
    Strategy pi = br.strategy;
    Eigen::VectorXd v = br.value;
    push_record(rep, g, pi, v, 0, -1, -1);

    bool converged = false;
    while (rep.iterations < max_iters) {
        const double cur_sum = v.sum();
        int best_state = -1, best_action = -1;
        double best_sum = -std::numeric_limits<double>::infinity();
        Strategy best_pi;
        Eigen::VectorXd best_v;
        for (int s = 0; s < g.num_states; ++s) {
            if (g.owner[s] != Player::One) continue;
            for (int a : g.actions_by_state[s]) {
                Strategy cand = pi;
                cand.choice[s] = a;
                auto cbr = best_response(g, cand, Player::Two, pi);
                rep.best_response_steps += cbr.improvement_steps;
                ++rep.candidate_evaluations;
                const double sum = cbr.value.sum();
                if (sum > best_sum) {  // strict: ties keep lowest (state, action)
                    best_sum = sum;
                    best_state = s;
                    best_action = a;
                    best_pi = cbr.strategy;
                    best_v = cbr.value;
                }
            }
        }
        if (best_state < 0 || best_sum <= cur_sum + eps) { converged = true; break; }
        pi = best_pi;
        v = best_v;
        ++rep.iterations;
        push_record(rep, g, pi, v, rep.iterations, best_state, best_action);
    }
    rep.limit_reached = !converged && rep.iterations >= max_iters;
    rep.equilibrium = pi;
    rep.value = v;
    return rep;
}

SolveReport solve(const Game& g, const Strategy& start, Algorithm alg, int max_iters) {
    switch (alg) {
        case Algorithm::Strategy: return strategy_iteration(g, start, max_iters);
        case Algorithm::Simplex: return simplex_strategy_iteration(g, start, max_iters);
        case Algorithm::ModifiedSimplex:
            return modified_simplex_strategy_iteration(g, start, max_iters);
    }
    throw std::logic_error("unreachable");
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string trace_csv(const SolveReport& report) {
    std::ostringstream out;
    out << "iter,sum_v,max_rc_p1,switched_state,switched_action\n";
    for (const auto& rec : report.trace)
        out << rec.iter << ',' << format_double(rec.sum_v) << ','
            << format_double(rec.max_rc_p1) << ',' << rec.switched_state << ','
            << rec.switched_action << '\n';
    return out.str();
}

ContractionCheck contraction_monitor(const Game& g, const SolveReport& report,
                                     const Eigen::VectorXd& v_star, double tol) {
    ContractionCheck check;
    const int l = g.num_states;
    check.per_step_bound = 1.0 - (1.0 - g.gamma) / l;
    const double target = (1.0 - g.gamma) * (1.0 - g.gamma) / (double(l) * l);

    // Per-step contraction factor guaranteed for each algorithm; M is the
    // smallest step count driving that factor below the squared-gap target.
    const double step_factor =
        report.algorithm_tag == Algorithm::Strategy ? g.gamma : check.per_step_bound;
    check.m_steps = std::max(1, (int)std::ceil(std::log(target) / std::log(step_factor)));

    const double star_sum = v_star.sum();
    const int n = (int)report.trace.size();
    std::vector<double> gap(n);
    for (int i = 0; i < n; ++i) gap[i] = star_sum - report.trace[i].sum_v;

    for (int i = 0; i + 1 < n; ++i) {
        if (report.trace[i + 1].sum_v < report.trace[i].sum_v - 1e-9)
            check.violations.push_back(
                {i, "total value decreased", report.trace[i].sum_v - report.trace[i + 1].sum_v});
        check.ratio.push_back(gap[i] > tol ? gap[i + 1] / gap[i]
                                           : std::numeric_limits<double>::quiet_NaN());
        if (report.algorithm_tag == Algorithm::Simplex &&
            gap[i + 1] > check.per_step_bound * gap[i] + tol)
            check.violations.push_back({i, "per-step contraction violated",
                                        gap[i + 1] - check.per_step_bound * gap[i]});
    }
    for (int i = 0; i + check.m_steps < n; ++i)
        if (gap[i + check.m_steps] > target * gap[i] + tol)
            check.violations.push_back(
                {i, "M-step contraction violated", gap[i + check.m_steps] - target * gap[i]});
    return check;
}

}  // namespace tbsg
