#include "gje/newton.hpp"

#include <Eigen/SparseLU>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace gje {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged:
            return "converged";
        case SolveStatus::MaxIterations:
            return "max_iterations";
        case SolveStatus::BacktrackFloor:
            return "backtrack_floor";
        case SolveStatus::SingularSystem:
            return "singular_system";
    }
    return "unknown";
}

std::optional<Eigen::VectorXd> newton_direction(const Eigen::SparseMatrix<double>& dh,
                                                const Eigen::VectorXd& residual) {
    Eigen::SparseMatrix<double> m = dh;
    m.coeffRef(0, 0) += 1.0;
    m.makeCompressed();
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(m);
    if (lu.info() != Eigen::Success) return std::nullopt;
    Eigen::VectorXd u = lu.solve(residual);
    if (lu.info() != Eigen::Success || !u.allFinite()) return std::nullopt;
    // exact zero keeps the anchor entry bit-identical across iterates
    u[0] = 0.0;
    return u;
}

SolveResult solve(const Problem& p, const SolveParams& params) {
    auto t0 = std::chrono::steady_clock::now();
    const int n = (int)p.sites.size();
    if (n == 0) throw std::invalid_argument("solve: no sites");
    if (p.target.size() != n) throw std::invalid_argument("solve: target size mismatch");

    if (params.delta > p.target.minCoeff() / 2.0)
        throw std::invalid_argument("solve: delta exceeds half the smallest target mass");

    SolveResult out;
    double delta = params.delta;
    InitialPotential ini;
    MassResult mr;
    if (delta < 0.0) {
        // auto floor: half the smallest of the initial and target masses,
        // resolved after the start is chosen
        ini = initial_potential(p, 0.0, params.force_fallback);
        mr = compute_mass(p, ini.psi);
        if (!params.force_fallback && !(mr.mass.minCoeff() > 0.0)) {
            ini = initial_potential(p, 0.0, true);
            mr = compute_mass(p, ini.psi);
        }
        delta = 0.5 * std::min(mr.mass.minCoeff(), p.target.minCoeff());
    } else {
        ini = initial_potential(p, delta, params.force_fallback);
        mr = compute_mass(p, ini.psi);
    }
    out.fallback_used = ini.fallback_used;
    out.psi = ini.psi;

    Eigen::VectorXd res = mr.mass - p.target;
    double l2 = res.norm();
    out.res_history.push_back(l2);
    out.res_l1_history.push_back(res.lpNorm<1>());

    while (true) {
        if (l2 <= params.eps) {
            out.status = SolveStatus::Converged;
            break;
        }
        if (out.iterations >= params.max_iter) {
            out.status = SolveStatus::MaxIterations;
            break;
        }
        Eigen::SparseMatrix<double> dh = mass_jacobian(p, out.psi, mr.diagram);
        std::optional<Eigen::VectorXd> u = newton_direction(dh, res);
        if (!u) {
            out.status = SolveStatus::SingularSystem;
            break;
        }

        bool accepted = false;
        for (double tau = 1.0; tau >= params.tau_min; tau *= 0.5) {
            Eigen::VectorXd cand = out.psi - tau * *u;
            cand[0] = p.alpha;
            MassResult cmr = compute_mass(p, cand);
            if (cmr.mass.minCoeff() < delta) continue;
            Eigen::VectorXd cres = cmr.mass - p.target;
            double cl2 = cres.norm();
            if (!(cl2 <= (1.0 - tau / 2.0) * l2)) continue;
            out.psi = std::move(cand);
            mr = std::move(cmr);
            res = std::move(cres);
            l2 = cl2;
            ++out.iterations;
            out.tau_history.push_back(tau);
            out.res_history.push_back(l2);
            out.res_l1_history.push_back(res.lpNorm<1>());
            accepted = true;
            break;
        }
        if (!accepted) {
            out.status = SolveStatus::BacktrackFloor;
            break;
        }
    }

    out.residual_l2 = l2;
    out.residual_l1 = res.lpNorm<1>();
    out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return out;
}

}  // namespace gje
