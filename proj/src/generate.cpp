#include "tbsg/generate.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace tbsg {

Game generate(const GenSpec& spec) {
    if (spec.num_states <= 0) throw std::invalid_argument("num_states must be positive");
    if (spec.min_actions < 1 || spec.max_actions < spec.min_actions)
        throw std::invalid_argument("invalid actions-per-state range");
    if (!(spec.gamma > 0.0 && spec.gamma < 1.0))
        throw std::invalid_argument("gamma must lie in (0, 1)");
    if (spec.reward_max < spec.reward_min) throw std::invalid_argument("invalid reward range");

    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<int> n_actions(spec.min_actions, spec.max_actions);
    std::uniform_int_distribution<int> owner_draw(1, 2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> reward_draw(spec.reward_min, spec.reward_max);

    Game g;
    g.num_states = spec.num_states;
    g.gamma = spec.gamma;
    for (int s = 0; s < g.num_states; ++s)
        g.owner.push_back(spec.player2_empty || owner_draw(rng) == 1 ? Player::One
                                                                     : Player::Two);
    std::vector<int> per_state(g.num_states);
    g.num_actions = 0;
    for (int s = 0; s < g.num_states; ++s) g.num_actions += per_state[s] = n_actions(rng);

    g.transition = Eigen::MatrixXd::Zero(g.num_actions, g.num_states);
    g.reward.resize(g.num_actions);
    int a = 0;
    std::uniform_int_distribution<int> state_draw(0, g.num_states - 1);
    for (int s = 0; s < g.num_states; ++s) {
        for (int k = 0; k < per_state[s]; ++k, ++a) {
            g.action_state.push_back(s);
            if (spec.deterministic) {
                g.transition(a, state_draw(rng)) = 1.0;
            } else {
                // positive draws normalized to a probability row
                double sum = 0.0;
                for (int t = 0; t < g.num_states; ++t)
                    sum += g.transition(a, t) = -std::log(1.0 - unit(rng));
                g.transition.row(a) /= sum;
            }
            g.reward(a) = reward_draw(rng);
        }
    }
    g.rebuild_index();
    return g;
}

Strategy random_strategy(const Game& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Strategy pi;
    pi.choice.resize(g.num_states);
    for (int s = 0; s < g.num_states; ++s) {
        const auto& acts = g.actions_by_state[s];
        std::uniform_int_distribution<int> pick(0, (int)acts.size() - 1);
        pi.choice[s] = acts[pick(rng)];
    }
    return pi;
}

}  // namespace tbsg
