#pragma once

#include "tbsg/game.hpp"

#include <cstdint>

namespace tbsg {

struct OracleResult {
    Strategy equilibrium;
    Eigen::VectorXd value;
    std::uint64_t strategies_enumerated = 0;
};

/// Ground-truth equilibrium by full enumeration: for every Player1 strategy,
/// enumerate every Player2 strategy to find the exact minimizing
/// counterstrategy, then keep the Player1 strategy whose counter value is
/// largest. Guarded to at most `max_strategies` strategy combinations.
///
/// Deliberately avoids best_response() so it can catch its bugs.
OracleResult brute_force_equilibrium(const Game& g,
                                     std::uint64_t max_strategies = 1'000'000);

}  // namespace tbsg
