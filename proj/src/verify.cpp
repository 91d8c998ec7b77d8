#include "tbsg/verify.hpp"

#include "tbsg/best_response.hpp"
#include "tbsg/generate.hpp"
#include "tbsg/oracle.hpp"
#include "tbsg/solve.hpp"
#include "tbsg/transform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tbsg {

namespace {

constexpr int kRandomStrategies = 64;

std::string describe(const Violation& v) {
    std::ostringstream out;
    out << v.what;
    if (v.state >= 0) out << " (state " << v.state << ")";
    if (v.action >= 0) out << " (action " << v.action << ")";
    return out.str();
}

bool wants(const std::vector<std::string>& checks, const std::string& name) {
    return checks.empty() || std::find(checks.begin(), checks.end(), name) != checks.end();
}

CheckResult check_flux(const Game& g, std::uint64_t seed) {
    CheckResult res{"flux", true, ""};
    const double l_over = g.num_states / (1.0 - g.gamma);
    Strategy prev;
    for (int k = 0; k < kRandomStrategies && res.pass; ++k) {
        const Strategy pi = random_strategy(g, seed + k);
        const Eigen::VectorXd v = value_of(g, pi);
        const Eigen::VectorXd x = flux_of(g, pi);
        const Eigen::VectorXd rc = modified_reward(g, v);

        if (std::abs(x.sum() - l_over) > 1e-9 * l_over)
            res = {res.name, false, "flux sum != l/(1-gamma)"};
        for (int s = 0; s < g.num_states; ++s)
            if (x(pi.choice[s]) < 1.0 - 1e-9 || x(pi.choice[s]) > l_over + 1e-9)
                res = {res.name, false, "on-strategy flux out of [1, l/(1-gamma)]"};
        const double scale = 1.0 + std::abs(v.sum());
        if (std::abs(v.sum() - x.dot(g.reward)) > 1e-8 * scale)
            res = {res.name, false, "1'v != x'r"};
        for (int s = 0; s < g.num_states; ++s)
            if (std::abs(rc(pi.choice[s])) > g.eps())
                res = {res.name, false, "nonzero on-strategy reduced cost"};
        if (k > 0) {
            // difference identity between consecutive random strategies
            const Eigen::VectorXd v_prev = value_of(g, prev);
            const Eigen::VectorXd rc_prev = modified_reward(g, v_prev);
            const double lhs = v.sum() - v_prev.sum();
            const double rhs = x.dot(rc_prev);
            if (std::abs(lhs - rhs) > 1e-8 * (1.0 + std::abs(lhs)))
                res = {res.name, false, "difference identity 1'(v'-v) != x''r^pi"};
        }
        prev = pi;
    }
    if (res.pass) res.detail = std::to_string(kRandomStrategies) + " random strategies";
    return res;
}

CheckResult check_signs(const Game& g, std::uint64_t seed) {
    CheckResult res{"signs", true, ""};
    for (int k = 0; k < 8 && res.pass; ++k) {
        const Strategy start = random_strategy(g, seed + 1000 + k);
        for (Player who : {Player::One, Player::Two}) {
            const auto br = best_response(g, start, who, start);
            const Eigen::VectorXd rc = modified_reward(g, br.value);
            for (int a = 0; a < g.num_actions; ++a) {
                if (g.owner_of_action(a) != who) continue;
                const double defect = who == Player::One ? rc(a) : -rc(a);
                if (defect > g.eps())
                    res = {res.name, false,
                           "best response violates sign condition at action " +
                               std::to_string(a)};
            }
            for (int s = 0; s < g.num_states; ++s)
                if (g.owner[s] != who && br.strategy.choice[s] != start.choice[s])
                    res = {res.name, false, "best response moved a frozen state"};
        }
    }
    if (res.pass) res.detail = "both players, 8 random starts";
    return res;
}

CheckResult check_algorithms(const Game& g, const OracleResult& oracle, std::uint64_t seed) {
    CheckResult res{"algorithms", true, ""};
    const int max_iters = 100000;
    for (Algorithm alg : {Algorithm::Strategy, Algorithm::Simplex, Algorithm::ModifiedSimplex}) {
        for (int k = 0; k < 4 && res.pass; ++k) {
            const Strategy start =
                k == 0 ? default_strategy(g) : random_strategy(g, seed + 2000 + k);
            const auto rep = solve(g, start, alg, max_iters);
            if (rep.limit_reached) {
                res = {res.name, false, to_string(alg) + " hit the iteration limit"};
                break;
            }
            if (!is_equilibrium(g, rep.equilibrium, 10 * g.eps())) {
                res = {res.name, false, to_string(alg) + " result failed certification"};
                break;
            }
            if ((rep.value - oracle.value).cwiseAbs().maxCoeff() > 1e-6) {
                res = {res.name, false, to_string(alg) + " value differs from the oracle"};
                break;
            }
        }
    }
    if (res.pass) res.detail = "3 algorithms x 4 starts agree with the oracle";
    return res;
}

CheckResult check_contraction(const Game& g, const OracleResult& oracle, std::uint64_t seed) {
    CheckResult res{"contraction", true, ""};
    for (Algorithm alg : {Algorithm::Strategy, Algorithm::Simplex, Algorithm::ModifiedSimplex}) {
        for (int k = 0; k < 4 && res.pass; ++k) {
            const Strategy start =
                k == 0 ? default_strategy(g) : random_strategy(g, seed + 3000 + k);
            const auto rep = solve(g, start, alg, 100000);
            const auto check = contraction_monitor(g, rep, oracle.value);
            if (!check.violations.empty())
                res = {res.name, false,
                       to_string(alg) + ": " + check.violations.front().what + " at iter " +
                           std::to_string(check.violations.front().iter)};
        }
    }
    if (res.pass) res.detail = "monotone and contracting on all traces";
    return res;
}

CheckResult check_transform(const Game& g, const OracleResult& oracle) {
    CheckResult res{"transform", true, ""};
    if (g.num_actions < 2) return {res.name, false, "unsupported: fewer than two actions"};
    const TransformedGame tg = to_binary(g);
    if (!validate_game(tg.game).empty())
        return {res.name, false, "constructed game fails validation"};
    for (int s = 0; s < tg.game.num_states; ++s)
        if (tg.game.actions_by_state[s].size() != 2)
            return {res.name, false, "state without exactly two actions"};
    const int bound = g.num_actions +
                      g.num_states * (int)std::ceil(std::log2((double)g.num_actions));
    if (tg.game.num_states > bound) return {res.name, false, "state bound exceeded"};

    const auto rep = simplex_strategy_iteration(tg.game, default_strategy(tg.game), 100000);
    if (rep.limit_reached) return {res.name, false, "solving the constructed game stalled"};
    for (int s = 0; s < tg.game.num_states; ++s)
        if (tg.is_dummy[rep.equilibrium.choice[s]])
            return {res.name, false, "dummy action in equilibrium"};
    const Strategy back = pull_back_strategy(tg, rep.equilibrium);
    if (!is_equilibrium(g, back, 10 * g.eps()))
        return {res.name, false, "pulled-back strategy is not an equilibrium"};
    for (int s = 0; s < g.num_states; ++s) {
        const double expect = tg.scale_c * oracle.value(s);
        if (std::abs(rep.value(s) - expect) > 1e-6 * (1.0 + std::abs(expect)))
            return {res.name, false, "value scaling V = c*v violated at state " +
                                         std::to_string(s)};
    }
    res.detail = "two-action shape, size bound, dummy rejection, scaling";
    return res;
}

}  // namespace

std::vector<CheckResult> run_verification(const Game& g, std::uint64_t seed,
                                          const std::vector<std::string>& checks) {
    std::vector<CheckResult> out;

    if (wants(checks, "validate")) {
        const auto violations = validate_game(g);
        out.push_back({"validate", violations.empty(),
                       violations.empty() ? "game well formed" : describe(violations.front())});
        if (!violations.empty()) return out;  // nothing below is meaningful
    } else if (!validate_game(g).empty()) {
        out.push_back({"validate", false, "game invalid (implicit check)"});
        return out;
    }

    if (wants(checks, "flux")) out.push_back(check_flux(g, seed));
    if (wants(checks, "signs")) out.push_back(check_signs(g, seed));

    const bool needs_oracle = wants(checks, "algorithms") || wants(checks, "contraction") ||
                              wants(checks, "transform");
    if (!needs_oracle) return out;

    OracleResult oracle;
    try {
        oracle = brute_force_equilibrium(g);
    } catch (const std::exception& e) {
        out.push_back({"oracle", false, e.what()});
        return out;
    }

    if (wants(checks, "algorithms")) out.push_back(check_algorithms(g, oracle, seed));
    if (wants(checks, "contraction")) out.push_back(check_contraction(g, oracle, seed));
    if (wants(checks, "transform")) out.push_back(check_transform(g, oracle));
    return out;
}

}  // namespace tbsg
