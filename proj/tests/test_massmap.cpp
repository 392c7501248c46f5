#include <cmath>

#include "doctest.h"
#include "gje/massmap.hpp"
#include "gje/rng.hpp"

using namespace gje;

namespace {

Problem two_site_quadratic() {
    Problem p;
    p.gen = {Family::QuadraticOT, 0.0};
    p.domain.rect = {{0, 0}, {1, 1}};
    p.sites = {{0, {0.25, 0.5}}, {1, {0.75, 0.5}}};
    p.target = Eigen::Vector2d{0.5, 0.5};
    return p;
}

double fd_worst_dev(const Problem& p, const Eigen::VectorXd& psi, double h) {
    MassResult mr = compute_mass(p, psi);
    Eigen::MatrixXd dh = Eigen::MatrixXd(mass_jacobian(p, psi, mr.diagram));
    const int n = (int)psi.size();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd up = psi, dn = psi;
        up[i] += h;
        dn[i] -= h;
        Eigen::VectorXd mu = compute_mass(p, up).mass;
        Eigen::VectorXd md = compute_mass(p, dn).mass;
        for (int j = 0; j < n; ++j)
            worst = std::max(worst, std::abs((mu[j] - md[j]) / (2.0 * h) - dh(j, i)));
    }
    return worst;
}

}  // namespace

TEST_CASE("two-site masses and frozen jacobian") {
    Problem p = two_site_quadratic();
    Eigen::VectorXd psi = Eigen::Vector2d{0.0, 0.0};
    MassResult mr = compute_mass(p, psi);
    CHECK(mr.mass[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mr.mass[1] == doctest::Approx(0.5).epsilon(1e-12));

    Eigen::MatrixXd dh = Eigen::MatrixXd(mass_jacobian(p, psi, mr.diagram));
    CHECK(dh(0, 0) == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(dh(1, 0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(dh(0, 1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(dh(1, 1) == doctest::Approx(-2.0).epsilon(1e-12));

    Eigen::VectorXd psi2 = Eigen::Vector2d{0.0, -0.125};
    CHECK(compute_mass(p, psi2).mass[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(fd_worst_dev(p, psi2, 1e-6) <= 1e-6);
}

TEST_CASE("callable density masses") {
    Problem p = two_site_quadratic();
    p.domain.density = [](Vec2 x) { return (1.0 + x.x) / 1.5; };
    MassResult mr = compute_mass(p, Eigen::Vector2d{0.0, 0.0});
    CHECK(mr.mass[0] == doctest::Approx(5.0 / 12.0).epsilon(1e-8));
    CHECK(mr.mass[1] == doctest::Approx(7.0 / 12.0).epsilon(1e-8));
}

TEST_CASE("reflector jacobian structure") {
    Problem p;
    Rect box{{-1, -1}, {1, 1}};
    p.domain.rect = box;
    Rect inner{{0, 0}, {1, 1}};
    for (int i = 0; i < 5; ++i) p.sites.push_back({i, point_in_rect(11, 2 * i, inner)});
    p.gen = {Family::NearFieldReflector, twist_gamma_bound(box, p.sites)};
    p.target = Eigen::VectorXd::Constant(5, 0.2);
    Eigen::VectorXd psi(5);
    for (int i = 0; i < 5; ++i) psi[i] = 0.02 * (uniform01(19, i) - 0.5);
    psi[0] = 0.0;

    CHECK(fd_worst_dev(p, psi, 1e-6) <= 1e-6);

    MassResult mr = compute_mass(p, psi);
    Eigen::MatrixXd dh = Eigen::MatrixXd(mass_jacobian(p, psi, mr.diagram));
    for (int i = 0; i < 5; ++i) {
        CHECK(std::abs(dh.col(i).sum()) <= 1e-12);
        for (int j = 0; j < 5; ++j)
            if (i != j) CHECK(dh(j, i) >= 0.0);
    }

    StructureDiagnostics diag = structure_diagnostics(dh);
    CHECK(diag.rank_defect == 1);
    CHECK(diag.graph_connected);
    bool same_sign = true;
    for (int i = 1; i < 5; ++i)
        if ((diag.kernel_vector[i] > 0) != (diag.kernel_vector[0] > 0)) same_sign = false;
    CHECK(same_sign);
}

TEST_CASE("diagnostics of the trivial single-site system") {
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(1, 1);
    StructureDiagnostics diag = structure_diagnostics(z);
    CHECK(diag.rank_defect == 1);
    CHECK(diag.graph_connected);
    CHECK(std::abs(diag.kernel_vector[0]) == doctest::Approx(1.0));
}

TEST_CASE("admissibility") {
    Eigen::VectorXd mass = Eigen::Vector3d{0.2, 0.3, 0.5};
    Eigen::VectorXd psi = Eigen::Vector3d{0.0, 1.0, 2.0};
    CHECK(is_admissible(mass, psi, 0.0, 0.1));
    CHECK(!is_admissible(mass, psi, 0.5, 0.1));
    CHECK(!is_admissible(mass, psi, 0.0, 0.25));
}

TEST_CASE("initializer strategy A") {
    Problem p = two_site_quadratic();
    InitialPotential ini = initial_potential(p, 0.25);
    CHECK(!ini.fallback_used);
    CHECK(ini.psi[0] == 0.0);
}

TEST_CASE("initializer fallback chain") {
    Problem p;
    p.gen = {Family::QuadraticOT, 0.0};
    p.domain.rect = {{0, 0}, {1, 1}};
    p.sites = {{0, {0.2, 0.2}}, {1, {0.8, 0.3}}, {2, {0.5, 0.8}}};
    p.target = Eigen::Vector3d{1.0 / 3, 1.0 / 3, 1.0 / 3};
    InitialPotential ini = initial_potential(p, 0.05, true);
    CHECK(ini.fallback_used);
    MassResult mr = compute_mass(p, ini.psi);
    CHECK(std::abs(mr.mass[2] - 0.25) <= 2e-12);
    CHECK(mr.mass[0] >= 0.25 - 1e-9);
    CHECK(mr.mass[1] >= 0.25 - 1e-9);
    CHECK(mr.mass.sum() == doctest::Approx(1.0).epsilon(1e-12));

    Problem pr = p;
    Rect box{{-1, -1}, {1, 1}};
    pr.domain.rect = box;
    pr.gen = {Family::NearFieldReflector, twist_gamma_bound(box, p.sites)};
    InitialPotential ini2 = initial_potential(pr, 0.05, true);
    MassResult mr2 = compute_mass(pr, ini2.psi);
    CHECK(std::abs(mr2.mass[2] - 0.25) <= 2e-12);
    CHECK(mr2.mass.minCoeff() >= 0.25 - 1e-9);
}
