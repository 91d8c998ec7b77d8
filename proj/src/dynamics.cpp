#include "tbsg/dynamics.hpp"

#include <stdexcept>

namespace tbsg {

Eigen::MatrixXd restricted_transition(const Game& g, const Strategy& pi) {
    Eigen::MatrixXd P(g.num_states, g.num_states);
    for (int s = 0; s < g.num_states; ++s) P.row(s) = g.transition.row(pi.choice[s]);
    return P;
}

Eigen::VectorXd restricted_reward(const Game& g, const Strategy& pi) {
    Eigen::VectorXd r(g.num_states);
    for (int s = 0; s < g.num_states; ++s) r(s) = g.reward(pi.choice[s]);
    return r;
}

namespace {

Eigen::VectorXd solve_checked(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    Eigen::VectorXd x = lu.solve(b);
    const double resid = (A * x - b).norm();
    if (!x.allFinite() || resid > 1e-10 * (1.0 + b.norm()))
        throw std::runtime_error("strategy-restricted linear system solve failed");
    return x;
}

}  // namespace

Eigen::VectorXd value_of(const Game& g, const Strategy& pi) {
    const int l = g.num_states;
    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(l, l) - g.gamma * restricted_transition(g, pi);
    return solve_checked(A, restricted_reward(g, pi));
}

Eigen::VectorXd modified_reward(const Game& g, const Eigen::VectorXd& v) {
    Eigen::VectorXd rc = g.reward + g.gamma * (g.transition * v);
    for (int a = 0; a < g.num_actions; ++a) rc(a) -= v(g.action_state[a]);
    return rc;
}

Eigen::VectorXd flux_of(const Game& g, const Strategy& pi) {
    const int l = g.num_states;
    Eigen::MatrixXd At =
        (Eigen::MatrixXd::Identity(l, l) - g.gamma * restricted_transition(g, pi)).transpose();
    Eigen::VectorXd y = solve_checked(At, Eigen::VectorXd::Ones(l));
    Eigen::VectorXd x = Eigen::VectorXd::Zero(g.num_actions);
    for (int s = 0; s < l; ++s) x(pi.choice[s]) = y(s);
    return x;
}

}  // namespace tbsg
