#include "tbsg/oracle.hpp"

#include "tbsg/dynamics.hpp"

#include <limits>
#include <stdexcept>

namespace tbsg {

namespace {

// Odometer over per-state action choices; returns false after the last one.
bool advance(std::vector<int>& idx, const std::vector<int>& sizes) {
    for (size_t i = 0; i < idx.size(); ++i) {
        if (++idx[i] < sizes[i]) return true;
        idx[i] = 0;
    }
    return false;
}

}  // namespace

OracleResult brute_force_equilibrium(const Game& g, std::uint64_t max_strategies) {
    double combinations = 1.0;
    for (const auto& acts : g.actions_by_state) combinations *= (double)acts.size();
    if (combinations > (double)max_strategies)
        throw std::runtime_error("instance too large for brute-force enumeration");

    std::vector<int> p1_states, p2_states;
    for (int s = 0; s < g.num_states; ++s)
        (g.owner[s] == Player::One ? p1_states : p2_states).push_back(s);

    std::vector<int> p1_sizes, p2_sizes;
    for (int s : p1_states) p1_sizes.push_back((int)g.actions_by_state[s].size());
    for (int s : p2_states) p2_sizes.push_back((int)g.actions_by_state[s].size());

    OracleResult res;
    Strategy pi = default_strategy(g);
    double best_outer = -std::numeric_limits<double>::infinity();

    std::vector<int> p1_idx(p1_states.size(), 0);
    do {
        for (size_t i = 0; i < p1_states.size(); ++i)
            pi.choice[p1_states[i]] = g.actions_by_state[p1_states[i]][p1_idx[i]];

        // exact minimizing counterstrategy for Player2, ties to the first
        // (lexicographically lowest) enumerated strategy
        double best_inner = std::numeric_limits<double>::infinity();
        Strategy best_counter = pi;
        Eigen::VectorXd best_counter_v;
        std::vector<int> p2_idx(p2_states.size(), 0);
        do {
            for (size_t i = 0; i < p2_states.size(); ++i)
                pi.choice[p2_states[i]] = g.actions_by_state[p2_states[i]][p2_idx[i]];
            const Eigen::VectorXd v = value_of(g, pi);
            ++res.strategies_enumerated;
            if (v.sum() < best_inner) {
                best_inner = v.sum();
                best_counter = pi;
                best_counter_v = v;
            }
        } while (advance(p2_idx, p2_sizes));

        if (best_inner > best_outer) {
            best_outer = best_inner;
            res.equilibrium = best_counter;
            res.value = best_counter_v;
        }
    } while (advance(p1_idx, p1_sizes));

    // certify via the reduced-cost sign conditions
    const double eps = g.eps();
    const Eigen::VectorXd rc = modified_reward(g, res.value);
    for (int a = 0; a < g.num_actions; ++a) {
        const double defect = g.owner_of_action(a) == Player::One ? rc(a) : -rc(a);
        if (defect > eps)
            throw std::runtime_error("oracle certification failed at action " +
                                     std::to_string(a));
    }
    return res;
}

}  // namespace tbsg
