#pragma once

#include "tbsg/game.hpp"

#include <string>
#include <vector>

namespace tbsg {

/// One node of a state's routing tree. The root is the original state;
/// nodes at depths 1..p-1 are fresh states; depth-p nodes are leaves and
/// stand for original actions rather than states.
struct TreeNode {
    int parent = -1;
    std::vector<int> children;   // node indices, left to right
    int depth = 0;
    int state_id = -1;           // id in the constructed game, -1 for leaves
    int leaf_action = -1;        // original action id, -1 for non-leaves
};

struct TreeMeta {
    int root_state = -1;         // original state id (== its id in the new game)
    std::vector<TreeNode> nodes; // node 0 is the root
    std::vector<int> leaves;     // node indices, ascending original action id
};

/// Binary-action reduction of a game: every state of `game` has exactly
/// two actions after dummy padding, and equilibrium values of original
/// states scale by `scale_c`.
struct TransformedGame {
    Game game;
    int p = 0;                   // tree depth, ceil(log2 m) of the original
    double delta = 0.0;          // new discount, gamma^(1/p)
    double scale_c = 0.0;        // delta^(p-1) = gamma^((p-1)/p)
    std::vector<TreeMeta> tree_meta;        // per original state
    std::vector<int> original_state_of;     // per new state, -1 for tree internals
    std::vector<int> original_action_of;    // per new action, -1 for tree moves;
                                            // dummies mirror the action they copy
    std::vector<bool> is_dummy;             // per new action
};

/// Requires at least two actions overall (p would be 0 otherwise).
TransformedGame to_binary(const Game& g);

struct ExecutedPath {
    int action = -1;              // original action finally taken
    std::vector<int> states;      // visited new-game states, starting at s
};

/// Follows the strategy's deterministic tree moves from an original state's
/// root until an original action fires.
ExecutedPath final_action(const TransformedGame& tg, const Strategy& pi_new, int s);

/// Original-game strategy assigning every state its final action.
Strategy pull_back_strategy(const TransformedGame& tg, const Strategy& pi_new);

/// Audit sidecar: one `newstate <id> from ...` line per constructed state.
std::string mapping_sidecar(const TransformedGame& tg);

}  // namespace tbsg
