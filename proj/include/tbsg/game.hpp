#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace tbsg {

enum class Player { One, Two };

/// Discounted two-player turn-based stochastic game.
///
/// States are partitioned between a maximizing player (One) and a
/// minimizing player (Two). Each action belongs to exactly one state;
/// `transition` holds one probability row per action.
struct Game {
    int num_states = 0;                 // l
    int num_actions = 0;                // m
    std::vector<Player> owner;          // per state
    std::vector<int> action_state;      // per action: owning state
    Eigen::MatrixXd transition;         // m x l, rows sum to 1
    Eigen::VectorXd reward;             // per action
    double gamma = 0.0;                 // in (0, 1)

    // Derived index: actions available at each state, ascending action id.
    std::vector<std::vector<int>> actions_by_state;

    void rebuild_index();

    Player owner_of_action(int a) const { return owner[action_state[a]]; }

    double max_abs_reward() const {
        return num_actions > 0 ? reward.cwiseAbs().maxCoeff() : 0.0;
    }

    /// Sign-test tolerance: the global base scaled by reward magnitude.
    double eps() const { return eps_base() * (1.0 + max_abs_reward()); }

    static constexpr double kDefaultEps = 1e-9;

    /// Process-wide tolerance base, default 1e-9 (the CLI lets TBSG_EPS
    /// override it).
    static double& eps_base();
};

/// One chosen action per state. Player components live in the same vector;
/// a state's entry is only meaningful to the player owning it.
struct Strategy {
    std::vector<int> choice;

    bool operator==(const Strategy&) const = default;
};

/// Lowest-index action everywhere.
Strategy default_strategy(const Game& g);

struct Violation {
    std::string what;
    int state = -1;
    int action = -1;
    double defect = 0.0;
};

/// All invariant violations of the game itself (empty means valid).
std::vector<Violation> validate_game(const Game& g);

/// Violations of a strategy against a game (choice out of range or not
/// an action of the state).
std::vector<Violation> validate_strategy(const Game& g, const Strategy& pi);

}  // namespace tbsg
