#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <optional>
#include <vector>

#include "gje/massmap.hpp"

namespace gje {

enum class SolveStatus { Converged, MaxIterations, BacktrackFloor, SingularSystem };

const char* to_string(SolveStatus s);

struct SolveParams {
    double eps = 1e-8;       // l2 residual target
    int max_iter = 50;
    double tau_min = 0x1p-30;  // smallest step length tried, power of two
    double delta = -1.0;     // admissibility floor; negative picks half the
                             // smaller of the starting and target masses
    bool force_fallback = false;
};

struct SolveResult {
    SolveStatus status = SolveStatus::MaxIterations;
    Eigen::VectorXd psi;
    int iterations = 0;
    double residual_l2 = 0.0;
    double residual_l1 = 0.0;
    std::vector<double> res_history;     // l2 residual per iterate, start included
    std::vector<double> res_l1_history;  // l1 residual per iterate
    std::vector<double> tau_history;     // accepted step length per iteration
    double wall_ms = 0.0;
    bool fallback_used = false;
};

// Solves the anchored linear system: the Jacobian's columns sum to zero, so
// a rank-one bump on the anchor entry makes it invertible while forcing a
// direction with zero anchor component. Empty on factorization failure.
std::optional<Eigen::VectorXd> newton_direction(const Eigen::SparseMatrix<double>& dh,
                                                const Eigen::VectorXd& residual);

// Damped Newton iteration: each step is accepted only if the iterate stays
// admissible and the residual contracts by at least the factor (1 - tau/2).
SolveResult solve(const Problem& p, const SolveParams& params);

}  // namespace gje
