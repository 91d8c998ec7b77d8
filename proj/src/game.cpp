#include "tbsg/game.hpp"

#include <cmath>

namespace tbsg {

double& Game::eps_base() {
    static double base = kDefaultEps;
    return base;
}

void Game::rebuild_index() {
    actions_by_state.assign(num_states, {});
    for (int a = 0; a < num_actions; ++a) {
        const int s = action_state[a];
        if (s >= 0 && s < num_states) actions_by_state[s].push_back(a);
    }
}

Strategy default_strategy(const Game& g) {
    Strategy pi;
    pi.choice.resize(g.num_states, -1);
    for (int s = 0; s < g.num_states; ++s)
        if (!g.actions_by_state[s].empty()) pi.choice[s] = g.actions_by_state[s].front();
    return pi;
}

std::vector<Violation> validate_game(const Game& g) {
    std::vector<Violation> out;
    if (g.num_states <= 0) out.push_back({"num_states must be positive", -1, -1, double(g.num_states)});
    if (g.num_actions <= 0) out.push_back({"num_actions must be positive", -1, -1, double(g.num_actions)});
    if (!(g.gamma > 0.0 && g.gamma < 1.0))
        out.push_back({"gamma must lie in (0, 1)", -1, -1, g.gamma});
    if ((int)g.owner.size() != g.num_states)
        out.push_back({"owner size != num_states", -1, -1, double(g.owner.size())});
    if ((int)g.action_state.size() != g.num_actions)
        out.push_back({"action_state size != num_actions", -1, -1, double(g.action_state.size())});
    if (g.transition.rows() != g.num_actions || g.transition.cols() != g.num_states)
        out.push_back({"transition matrix is not m x l", -1, -1, 0.0});
    if (g.reward.size() != g.num_actions)
        out.push_back({"reward size != num_actions", -1, -1, double(g.reward.size())});
    if (!out.empty()) return out;  // shapes broken, element checks meaningless

    for (int a = 0; a < g.num_actions; ++a) {
        const int s = g.action_state[a];
        if (s < 0 || s >= g.num_states) {
            out.push_back({"action belongs to no valid state", s, a, double(s)});
            continue;
        }
        double row_min = g.transition.row(a).minCoeff();
        if (row_min < 0.0)
            out.push_back({"negative transition probability", s, a, row_min});
        double row_sum = g.transition.row(a).sum();
        if (std::abs(row_sum - 1.0) > 1e-12)
            out.push_back({"transition row does not sum to 1", s, a, row_sum - 1.0});
        if (!g.reward.segment(a, 1).allFinite())
            out.push_back({"non-finite reward", s, a, 0.0});
    }
    for (int s = 0; s < g.num_states; ++s) {
        int count = 0;
        for (int a = 0; a < g.num_actions; ++a)
            if (g.action_state[a] == s) ++count;
        if (count == 0) out.push_back({"state has no actions", s, -1, 0.0});
    }
    return out;
}

std::vector<Violation> validate_strategy(const Game& g, const Strategy& pi) {
    std::vector<Violation> out;
    if ((int)pi.choice.size() != g.num_states) {
        out.push_back({"strategy size != num_states", -1, -1, double(pi.choice.size())});
        return out;
    }
    for (int s = 0; s < g.num_states; ++s) {
        const int a = pi.choice[s];
        if (a < 0 || a >= g.num_actions || g.action_state[a] != s)
            out.push_back({"chosen action not available at state", s, a, 0.0});
    }
    return out;
}

}  // namespace tbsg
