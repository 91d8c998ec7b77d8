#pragma once

#include "tbsg/game.hpp"

#include <cstdint>

namespace tbsg {

/// Reproducible random-instance description. Identical specs yield
/// bit-identical games.
struct GenSpec {
    int num_states = 4;
    int min_actions = 2;   // per state
    int max_actions = 3;
    double gamma = 0.9;
    std::uint64_t seed = 0;
    bool deterministic = false;   // one-hot transition rows
    bool player2_empty = false;   // all states Player1 (pure MDP)
    double reward_min = -1.0;
    double reward_max = 1.0;
};

Game generate(const GenSpec& spec);

/// Uniform valid strategy, reproducible by seed.
Strategy random_strategy(const Game& g, std::uint64_t seed);

}  // namespace tbsg
