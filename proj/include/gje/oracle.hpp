#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gje/genfun.hpp"
#include "gje/geom.hpp"
#include "gje/massmap.hpp"

namespace gje {

struct SampleConfig {
    long long n_samples = 1000000;
    unsigned long long seed = 0;
    int grid_resolution = 512;
};

struct McMassResult {
    Eigen::VectorXd estimate;
    Eigen::VectorXd std_error;
};

// Monte-Carlo mass estimate by direct argmax assignment; ties go to the
// lowest index. Uniform densities sample the rectangle directly; callable
// densities use self-normalized importance sampling with a uniform proposal.
McMassResult mc_mass(const GeneratingFunctionSpec& gen, const Domain& domain,
                     const std::vector<Site>& sites, const Eigen::VectorXd& psi,
                     const SampleConfig& cfg);

// Midpoint-rule mass estimate on a resolution x resolution grid with the same
// argmax assignment; estimates are normalized by the total quadrature weight.
Eigen::VectorXd grid_mass(const GeneratingFunctionSpec& gen, const Domain& domain,
                          const std::vector<Site>& sites, const Eigen::VectorXd& psi,
                          const SampleConfig& cfg);

// Central-difference Jacobian of the mass map, column by column against the
// exact evaluator. A column whose perturbed potential leaves the valid range
// retries with h halved, up to 10 times.
Eigen::MatrixXd fd_jacobian(const Problem& p, const Eigen::VectorXd& psi, double h);

}  // namespace gje
