#include "tbsg/transform.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tbsg {

namespace {

int ceil_log2(int n) {
    int p = 0;
    while ((1 << p) < n) ++p;
    return p;
}

// Grows a subtree holding `count` leaves, all at depth `p`. Left-complete:
// the left child takes as many leaves as fit, the right child the rest, so
// a node gets a single child whenever the remaining capacity allows it.
int build_subtree(TreeMeta& tree, int parent, int depth, int count, int p,
                  const std::vector<int>& actions, int& next_leaf) {
    const int node = (int)tree.nodes.size();
    tree.nodes.push_back({parent, {}, depth, -1, -1});
    if (depth == p) {
        tree.nodes[node].leaf_action = actions[next_leaf++];
        tree.leaves.push_back(node);
        return node;
    }
    const long cap = 1L << (p - depth - 1);
    const int left = (int)std::min<long>(count, cap);
    const int right = count - left;
    // recursion reallocates tree.nodes; never hold a reference across it
    const int left_child = build_subtree(tree, node, depth + 1, left, p, actions, next_leaf);
    tree.nodes[node].children.push_back(left_child);
    if (right > 0) {
        const int right_child =
            build_subtree(tree, node, depth + 1, right, p, actions, next_leaf);
        tree.nodes[node].children.push_back(right_child);
    }
    return node;
}

}  // namespace

TransformedGame to_binary(const Game& g) {
    if (!validate_game(g).empty()) throw std::invalid_argument("to_binary: invalid game");
    if (g.num_actions < 2)
        throw std::invalid_argument("to_binary: needs at least two actions");

    TransformedGame tg;
    tg.p = ceil_log2(g.num_actions);
    tg.delta = std::pow(g.gamma, 1.0 / tg.p);
    tg.scale_c = std::pow(tg.delta, tg.p - 1);

    Game& ng = tg.game;
    ng.gamma = tg.delta;
    ng.num_states = g.num_states;
    ng.owner = g.owner;
    tg.original_state_of.assign(g.num_states, 0);
    for (int s = 0; s < g.num_states; ++s) tg.original_state_of[s] = s;

    // Trees first, so every internal node has its new state id before any
    // action row is emitted.
    for (int s = 0; s < g.num_states; ++s) {
        TreeMeta tree;
        tree.root_state = s;
        int next_leaf = 0;
        build_subtree(tree, -1, 0, (int)g.actions_by_state[s].size(), tg.p,
                      g.actions_by_state[s], next_leaf);
        tree.nodes[0].state_id = s;
        for (auto& node : tree.nodes) {
            if (node.depth == 0 || node.depth == tg.p) continue;
            node.state_id = ng.num_states++;
            ng.owner.push_back(g.owner[s]);
            tg.original_state_of.push_back(-1);
        }
        tg.tree_meta.push_back(std::move(tree));
    }

    // Emit actions grouped by new state id: real edges first (left to
    // right), then a dummy copy when a state has a single real action.
    struct Row {
        int state;
        double reward;
        Eigen::RowVectorXd probs;
        int orig_action;
        bool dummy;
    };
    std::vector<Row> rows;
    std::vector<std::pair<int, int>> node_of_state(ng.num_states);  // (tree, node)
    for (size_t t = 0; t < tg.tree_meta.size(); ++t)
        for (size_t n = 0; n < tg.tree_meta[t].nodes.size(); ++n)
            if (int sid = tg.tree_meta[t].nodes[n].state_id; sid >= 0)
                node_of_state[sid] = {(int)t, (int)n};

    auto edge_row = [&](const TreeNode& child) -> Row {
        if (child.leaf_action >= 0) {
            Eigen::RowVectorXd probs = Eigen::RowVectorXd::Zero(ng.num_states);
            probs.head(g.num_states) = g.transition.row(child.leaf_action);
            return {-1, g.reward(child.leaf_action), probs, child.leaf_action, false};
        }
        Eigen::RowVectorXd probs = Eigen::RowVectorXd::Zero(ng.num_states);
        probs(child.state_id) = 1.0;
        return {-1, 0.0, probs, -1, false};
    };

    for (int ns = 0; ns < ng.num_states; ++ns) {
        const auto [t, n] = node_of_state[ns];
        const TreeMeta& tree = tg.tree_meta[t];
        std::vector<Row> here;
        for (int c : tree.nodes[n].children) {
            Row row = edge_row(tree.nodes[c]);
            row.state = ns;
            here.push_back(std::move(row));
        }
        if (here.size() == 1) {
            Row dummy = here.front();
            dummy.reward += ng.owner[ns] == Player::One ? -1.0 : 1.0;
            dummy.dummy = true;
            here.push_back(std::move(dummy));
        }
        for (auto& row : here) rows.push_back(std::move(row));
    }

    ng.num_actions = (int)rows.size();
    ng.transition = Eigen::MatrixXd::Zero(ng.num_actions, ng.num_states);
    ng.reward.resize(ng.num_actions);
    for (int a = 0; a < ng.num_actions; ++a) {
        ng.action_state.push_back(rows[a].state);
        ng.transition.row(a) = rows[a].probs;
        ng.reward(a) = rows[a].reward;
        tg.original_action_of.push_back(rows[a].orig_action);
        tg.is_dummy.push_back(rows[a].dummy);
    }
    ng.rebuild_index();
    return tg;
}

ExecutedPath final_action(const TransformedGame& tg, const Strategy& pi_new, int s) {
    ExecutedPath path;
    int state = s;
    for (int step = 0; step <= tg.p; ++step) {
        path.states.push_back(state);
        const int a = pi_new.choice[state];
        if (tg.original_action_of[a] >= 0) {
            path.action = tg.original_action_of[a];
            return path;
        }
        // constructed actions are deterministic one-hot moves
        int target;
        tg.game.transition.row(a).maxCoeff(&target);
        state = target;
    }
    throw std::logic_error("final_action: walk left the routing tree");
}

Strategy pull_back_strategy(const TransformedGame& tg, const Strategy& pi_new) {
    const int l = (int)tg.tree_meta.size();
    Strategy pi;
    pi.choice.resize(l);
    for (int s = 0; s < l; ++s) pi.choice[s] = final_action(tg, pi_new, s).action;
    return pi;
}

std::string mapping_sidecar(const TransformedGame& tg) {
    std::ostringstream out;
    out << "# map\n";
    for (int ns = 0; ns < tg.game.num_states; ++ns) {
        if (tg.original_state_of[ns] >= 0) {
            out << "newstate " << ns << " from " << tg.original_state_of[ns] << "\n";
            continue;
        }
        for (size_t t = 0; t < tg.tree_meta.size(); ++t)
            for (size_t n = 0; n < tg.tree_meta[t].nodes.size(); ++n)
                if (tg.tree_meta[t].nodes[n].state_id == ns)
                    out << "newstate " << ns << " from tree:" << t << "/" << n << "\n";
    }
    return out.str();
}

}  // namespace tbsg
