#pragma once

#include "tbsg/dynamics.hpp"

#include <optional>

namespace tbsg {

struct CounterstrategyResult {
    Strategy strategy;       // full strategy, frozen player's part untouched
    Eigen::VectorXd value;
    int improvement_steps = 0;
};

/// Optimal counterstrategy for `optimizing` with the other player's choices
/// frozen. Howard policy iteration: evaluate, then switch every optimizing
/// state to its best reduced-cost action (ties to the lowest action id),
/// until no state switches.
CounterstrategyResult best_response(const Game& g, const Strategy& frozen,
                                    Player optimizing, const Strategy& warm_start);

struct EquilibriumWitness {
    int action = -1;
    double reduced_cost = 0.0;
};

/// True iff reduced costs are <= eps on Player1 actions and >= -eps on
/// Player2 actions. On failure the worst offending action is reported.
bool is_equilibrium(const Game& g, const Strategy& pi, double eps,
                    EquilibriumWitness* witness = nullptr);

inline bool is_equilibrium(const Game& g, const Strategy& pi) {
    return is_equilibrium(g, pi, g.eps());
}

}  // namespace tbsg
