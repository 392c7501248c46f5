#include "gje/massmap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gje/parallel.hpp"

namespace gje {

std::vector<double> to_raw(const GeneratingFunctionSpec& gen, const Eigen::VectorXd& psi) {
    std::vector<double> raw(psi.size());
    for (Eigen::Index i = 0; i < psi.size(); ++i) raw[i] = reparam_apply(gen, psi[i]);
    return raw;
}

MassResult compute_mass(const Problem& p, const Eigen::VectorXd& psi) {
    if ((Eigen::Index)p.sites.size() != psi.size())
        throw std::invalid_argument("compute_mass: size mismatch");
    MassResult out;
    auto weights = mobius_weights(p.gen, p.sites, to_raw(p.gen, psi));
    out.diagram = build_diagram(p.domain.rect, weights);
    out.mass.resize(psi.size());
    const Diagram& d = out.diagram;
    parallel_for(p.sites.size(),
                 [&](std::size_t i) { out.mass[(Eigen::Index)i] = measure(d.cells[i], p.domain); });
    return out;
}

Eigen::SparseMatrix<double> mass_jacobian(const Problem& p, const Eigen::VectorXd& psi,
                                          const Diagram& diagram) {
    const int n = (int)p.sites.size();
    std::vector<double> raw = to_raw(p.gen, psi);
    std::vector<Eigen::Triplet<double>> trip;
    Eigen::VectorXd colsum = Eigen::VectorXd::Zero(n);

    // entry (row j, column i): sensitivity of cell j's mass to potential i,
    // integrated over the edges of cell j that face site i
    for (int j = 0; j < n; ++j) {
        Vec2 yj = p.sites[j].position;
        for (int i : diagram.neighbors[j]) {
            Vec2 yi = p.sites[i].position;
            double val = boundary_integral(diagram.cells[j], i, [&](Vec2 x) {
                Vec2 gi = g_grad_x(p.gen, x, yi, raw[i]);
                Vec2 gj = g_grad_x(p.gen, x, yj, raw[j]);
                double den = std::max((gj - gi).norm(), 1e-300);
                return p.domain.rho(x) * std::abs(g_dv(p.gen, x, yi, raw[i])) / den;
            });
            val *= reparam_derivative(p.gen, psi[i]);
            trip.emplace_back(j, i, val);
            colsum[i] += val;
        }
    }
    for (int i = 0; i < n; ++i) trip.emplace_back(i, i, -colsum[i]);

    Eigen::SparseMatrix<double> dh(n, n);
    dh.setFromTriplets(trip.begin(), trip.end());
    return dh;
}

bool is_admissible(const Eigen::VectorXd& mass, const Eigen::VectorXd& psi, double alpha,
                   double delta) {
    if (psi.size() == 0 || psi[0] != alpha) return false;
    return mass.minCoeff() >= delta;
}

InitialPotential initial_potential(const Problem& p, double delta, bool force_fallback) {
    const int n = (int)p.sites.size();
    if (n == 0) throw std::invalid_argument("initial_potential: no sites");
    InitialPotential out;
    out.psi = Eigen::VectorXd::Constant(n, p.alpha);
    if (!force_fallback) {
        MassResult mr = compute_mass(p, out.psi);
        if (mr.mass.minCoeff() >= delta) return out;
    }
    out.fallback_used = true;

    double top;
    if (p.gen.family == Family::NearFieldReflector) {
        top = std::log((1.0 - 1e-6) / 1e-6);
    } else {
        double worst = 0.0;
        for (const Site& s : p.sites)
            for (int k = 0; k < 4; ++k)
                worst = std::max(worst,
                                 0.5 * (p.domain.rect.corner(k) - s.position).squared_norm());
        top = p.alpha + worst + 1.0;
    }

    out.psi.setConstant(top);
    out.psi[0] = p.alpha;
    for (int k = 1; k < n; ++k) {
        double target = std::pow(0.5, k);
        auto mass_at = [&](double t) {
            out.psi[k] = t;
            return compute_mass(p, out.psi).mass[k];
        };
        double hi = top;
        if (mass_at(hi) > target)
            throw std::runtime_error("initial_potential: cell has mass at the top value");
        double step = 1.0, lo = hi - step;
        int guard = 0;
        while (mass_at(lo) < target) {
            step *= 2.0;
            lo -= step;
            if (++guard > 200)
                throw std::runtime_error("initial_potential: bracketing failed");
        }
        double t_final = lo;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            double m = mass_at(mid);
            t_final = mid;
            if (std::abs(m - target) <= 1e-12) break;
            if (m > target)
                lo = mid;
            else
                hi = mid;
        }
        out.psi[k] = t_final;
    }
    return out;
}

StructureDiagnostics structure_diagnostics(const Eigen::MatrixXd& dh) {
    StructureDiagnostics out;
    const int n = (int)dh.rows();
    if (n == 0) return out;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(dh, Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    double smax = sv[0];
    for (int i = 0; i < n; ++i)
        if (sv[i] <= 1e-9 * smax) ++out.rank_defect;
    out.kernel_vector = svd.matrixV().col(n - 1);

    std::vector<bool> seen(n, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j)
            if (j != i && !seen[j] && std::abs(dh(i, j)) > 1e-12) {
                seen[j] = true;
                stack.push_back(j);
            }
    }
    out.graph_connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    return out;
}

}  // namespace gje
