#pragma once

#include "tbsg/game.hpp"

namespace tbsg {

/// l x l transition matrix restricted to a strategy (row i = row of pi(i)).
Eigen::MatrixXd restricted_transition(const Game& g, const Strategy& pi);

/// Per-state reward restricted to a strategy.
Eigen::VectorXd restricted_reward(const Game& g, const Strategy& pi);

/// Discounted value: unique solution of (I - gamma * P_pi) v = r_pi.
Eigen::VectorXd value_of(const Game& g, const Strategy& pi);

/// Reduced cost of every action: r - (J - gamma * P) v.
/// Zero (within tolerance) on the actions of pi when v = value_of(g, pi).
Eigen::VectorXd modified_reward(const Game& g, const Eigen::VectorXd& v);

/// Per-action occupancy measure. On-strategy entries solve the transposed
/// value system with all-ones right hand side; off-strategy entries are 0.
Eigen::VectorXd flux_of(const Game& g, const Strategy& pi);

}  // namespace tbsg
