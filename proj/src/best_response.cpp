#include "tbsg/best_response.hpp"

namespace tbsg {

CounterstrategyResult best_response(const Game& g, const Strategy& frozen,
                                    Player optimizing, const Strategy& warm_start) {
    const double eps = g.eps();
    const double sign = optimizing == Player::One ? 1.0 : -1.0;

    Strategy pi = warm_start;
    for (int s = 0; s < g.num_states; ++s)
        if (g.owner[s] != optimizing) pi.choice[s] = frozen.choice[s];

    CounterstrategyResult res;
    res.value = value_of(g, pi);
    for (;;) {
        const Eigen::VectorXd rc = modified_reward(g, res.value);
        bool switched = false;
        for (int s = 0; s < g.num_states; ++s) {
            if (g.owner[s] != optimizing) continue;
            int best = -1;
            double best_gain = 0.0;
            for (int a : g.actions_by_state[s]) {  // ascending id: ties keep the lowest
                const double gain = sign * rc(a);
                if (best < 0 || gain > best_gain) {
                    best = a;
                    best_gain = gain;
                }
            }
            // rc of the current action is 0, so a switch pays off iff gain > eps
            if (best != pi.choice[s] && best_gain > eps) {
                pi.choice[s] = best;
                switched = true;
            }
        }
        if (!switched) break;
        res.value = value_of(g, pi);
        ++res.improvement_steps;
    }
    res.strategy = std::move(pi);
    return res;
}

bool is_equilibrium(const Game& g, const Strategy& pi, double eps,
                    EquilibriumWitness* witness) {
    const Eigen::VectorXd rc = modified_reward(g, value_of(g, pi));
    int worst = -1;
    double worst_defect = eps;
    for (int a = 0; a < g.num_actions; ++a) {
        const double defect = g.owner_of_action(a) == Player::One ? rc(a) : -rc(a);
        if (defect > worst_defect) {
            worst_defect = defect;
            worst = a;
        }
    }
    if (worst >= 0 && witness) *witness = {worst, rc(worst)};
    return worst < 0;
}

}  // namespace tbsg
