#include "gje/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "gje/rng.hpp"

namespace gje {

namespace {

int argmax_site(const GeneratingFunctionSpec& gen, Vec2 x, const std::vector<Site>& sites,
                const std::vector<double>& raw) {
    int best = 0;
    double best_val = g_eval(gen, x, sites[0].position, raw[0]);
    for (int j = 1; j < (int)sites.size(); ++j) {
        double val = g_eval(gen, x, sites[j].position, raw[j]);
        if (val > best_val) {
            best_val = val;
            best = j;
        }
    }
    return best;
}

}  // namespace

McMassResult mc_mass(const GeneratingFunctionSpec& gen, const Domain& domain,
                     const std::vector<Site>& sites, const Eigen::VectorXd& psi,
                     const SampleConfig& cfg) {
    if (cfg.n_samples < 1) throw std::invalid_argument("mc_mass: n_samples must be >= 1");
    const int n = (int)sites.size();
    std::vector<double> raw = to_raw(gen, psi);
    const bool weighted = (bool)domain.density;

    Eigen::VectorXd wsum = Eigen::VectorXd::Zero(n);
    double wtot = 0.0, w2tot = 0.0;
    for (long long k = 0; k < cfg.n_samples; ++k) {
        Vec2 x = point_in_rect(cfg.seed, (unsigned long long)k, domain.rect);
        double w = weighted ? domain.density(x) : 1.0;
        int j = argmax_site(gen, x, sites, raw);
        wsum[j] += w;
        wtot += w;
        w2tot += w * w;
    }

    McMassResult out;
    out.estimate = wsum / wtot;
    double n_eff = wtot * wtot / w2tot;
    out.std_error.resize(n);
    for (int j = 0; j < n; ++j) {
        double pj = out.estimate[j];
        out.std_error[j] = std::sqrt(std::max(pj * (1.0 - pj), 0.0) / n_eff);
    }
    return out;
}

Eigen::VectorXd grid_mass(const GeneratingFunctionSpec& gen, const Domain& domain,
                          const std::vector<Site>& sites, const Eigen::VectorXd& psi,
                          const SampleConfig& cfg) {
    if (cfg.grid_resolution < 2) throw std::invalid_argument("grid_mass: resolution must be >= 2");
    const int n = (int)sites.size();
    const int r = cfg.grid_resolution;
    std::vector<double> raw = to_raw(gen, psi);

    Eigen::VectorXd wsum = Eigen::VectorXd::Zero(n);
    double wtot = 0.0;
    double dx = domain.rect.width() / r, dy = domain.rect.height() / r;
    for (int b = 0; b < r; ++b) {
        double y = domain.rect.lo.y + (b + 0.5) * dy;
        for (int a = 0; a < r; ++a) {
            Vec2 x{domain.rect.lo.x + (a + 0.5) * dx, y};
            double w = domain.rho(x);
            int j = argmax_site(gen, x, sites, raw);
            wsum[j] += w;
            wtot += w;
        }
    }
    return wsum / wtot;
}

Eigen::MatrixXd fd_jacobian(const Problem& p, const Eigen::VectorXd& psi, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("fd_jacobian: h must be positive");
    const int n = (int)p.sites.size();
    Eigen::MatrixXd out(n, n);
    for (int i = 0; i < n; ++i) {
        double hi = h;
        for (int attempt = 0;; ++attempt) {
            try {
                Eigen::VectorXd plus = psi, minus = psi;
                plus[i] += hi;
                minus[i] -= hi;
                Eigen::VectorXd mp = compute_mass(p, plus).mass;
                Eigen::VectorXd mm = compute_mass(p, minus).mass;
                out.col(i) = (mp - mm) / (2.0 * hi);
                break;
            } catch (const std::exception&) {
                if (attempt >= 10) throw;
                hi /= 2.0;
            }
        }
    }
    return out;
}

}  // namespace gje
