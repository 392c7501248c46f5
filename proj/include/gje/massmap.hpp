#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

#include "gje/diagram.hpp"
#include "gje/genfun.hpp"
#include "gje/geom.hpp"

namespace gje {

struct Problem {
    GeneratingFunctionSpec gen;
    Domain domain;
    std::vector<Site> sites;
    Eigen::VectorXd target;  // desired cell masses, normalized to sum 1
    double alpha = 0.0;      // anchor value for the first potential entry
};

// Potentials are handled in unconstrained solver coordinates; to_raw maps
// them into the range the generating function accepts.
std::vector<double> to_raw(const GeneratingFunctionSpec& gen, const Eigen::VectorXd& psi);

struct MassResult {
    Eigen::VectorXd mass;
    Diagram diagram;
};

MassResult compute_mass(const Problem& p, const Eigen::VectorXd& psi);

// Derivative of the cell masses with respect to the solver-coordinate
// potentials. Off-diagonal entries are boundary integrals over shared cell
// interfaces and are nonnegative; each column sums to zero because total
// mass is conserved.
Eigen::SparseMatrix<double> mass_jacobian(const Problem& p, const Eigen::VectorXd& psi,
                                          const Diagram& diagram);

// A potential vector is admissible when its anchor entry is exactly alpha
// and every cell keeps at least delta of mass.
bool is_admissible(const Eigen::VectorXd& mass, const Eigen::VectorXd& psi, double alpha,
                   double delta);

struct InitialPotential {
    Eigen::VectorXd psi;
    bool fallback_used = false;
};

// Tries the constant vector (alpha, ..., alpha) first. If some cell falls
// under delta (or force_fallback is set), rebuilds a strictly admissible
// start: all entries are pushed high enough to empty their cells, then each
// site k in turn is bisected down until its mass reaches 2^-k, which keeps
// every activated cell at or above 2^-(n-1).
InitialPotential initial_potential(const Problem& p, double delta,
                                   bool force_fallback = false);

struct StructureDiagnostics {
    int rank_defect = 0;
    Eigen::VectorXd kernel_vector;
    bool graph_connected = false;
};

// Dense SVD of the mass Jacobian plus connectivity of the interface graph.
// Intended as a debugging aid; cost grows cubically with the site count.
StructureDiagnostics structure_diagnostics(const Eigen::MatrixXd& dh);

}  // namespace gje
