#pragma once

#include "tbsg/best_response.hpp"

#include <string>
#include <vector>

namespace tbsg {

enum class Algorithm { Strategy, Simplex, ModifiedSimplex };

std::string to_string(Algorithm alg);
Algorithm algorithm_from_string(const std::string& name);

struct TraceRecord {
    int iter = 0;
    double sum_v = 0.0;
    double max_rc_p1 = 0.0;  // largest Player1 reduced cost at this iterate
    int switched_state = -1;  // switch applied to reach this iterate (-1 = none)
    int switched_action = -1;
    Strategy strategy;        // full iterate, Player2 already re-optimized
};

struct SolveReport {
    Strategy equilibrium;
    Eigen::VectorXd value;
    int iterations = 0;
    bool limit_reached = false;
    std::vector<TraceRecord> trace;  // trace.size() == iterations + 1
    Algorithm algorithm_tag = Algorithm::Strategy;
    long best_response_steps = 0;    // inner Howard improvement steps, total
    long candidate_evaluations = 0;  // modified simplex only
};

/// Player1 switches every positive-reduced-cost state to its best action,
/// then Player2 re-optimizes fully; repeat until Player1 is stable.
SolveReport strategy_iteration(const Game& g, const Strategy& start, int max_iters);

/// One Player1 pivot per iteration: the single action of largest reduced
/// cost, then Player2 re-optimizes (warm-started).
SolveReport simplex_strategy_iteration(const Game& g, const Strategy& start, int max_iters);

/// Per iteration, try every single-state Player1 deviation, give each its
/// Player2 best response, and adopt the candidate with the largest total
/// value; stop when nothing strictly improves.
SolveReport modified_simplex_strategy_iteration(const Game& g, const Strategy& start,
                                                int max_iters);

SolveReport solve(const Game& g, const Strategy& start, Algorithm alg, int max_iters);

/// Round-trip-safe float formatting (17 significant digits).
std::string format_double(double x);

/// CSV with header `iter,sum_v,max_rc_p1,switched_state,switched_action`,
/// floats at 17 significant digits.
std::string trace_csv(const SolveReport& report);

struct ContractionViolation {
    int iter = 0;
    std::string what;
    double defect = 0.0;
};

struct ContractionCheck {
    std::vector<double> ratio;   // per-step gap ratio, gap = 1^T (v* - v^n)
    double per_step_bound = 0.0; // 1 - (1-gamma)/l
    int m_steps = 0;             // iterations needed for the squared-gap factor
    std::vector<ContractionViolation> violations;
};

/// Checks monotone total value on any trace, the per-iteration contraction
/// on simplex traces, and the M-step contraction for all algorithms,
/// against an externally supplied equilibrium value.
ContractionCheck contraction_monitor(const Game& g, const SolveReport& report,
                                     const Eigen::VectorXd& v_star, double tol = 1e-8);

}  // namespace tbsg
