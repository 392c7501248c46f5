#include <cmath>

#include "doctest.h"
#include "gje/oracle.hpp"
#include "gje/rng.hpp"

using namespace gje;

namespace {
const GeneratingFunctionSpec kQuad{Family::QuadraticOT, 0.0};
}

TEST_CASE("single-site sampling is exact") {
    Domain dom;
    dom.rect = {{0, 0}, {1, 1}};
    std::vector<Site> sites = {{0, {0.5, 0.5}}};
    Eigen::VectorXd psi = Eigen::VectorXd::Zero(1);
    SampleConfig cfg;
    cfg.n_samples = 1000;
    cfg.seed = 7;
    McMassResult mc = mc_mass(kQuad, dom, sites, psi, cfg);
    CHECK(mc.estimate[0] == 1.0);
    CHECK(mc.std_error[0] == 0.0);
    cfg.grid_resolution = 17;
    CHECK(grid_mass(kQuad, dom, sites, psi, cfg)[0] == 1.0);
}

TEST_CASE("symmetric two-site estimates") {
    Domain dom;
    dom.rect = {{0, 0}, {1, 1}};
    std::vector<Site> sites = {{0, {0.25, 0.5}}, {1, {0.75, 0.5}}};
    Eigen::VectorXd psi = Eigen::VectorXd::Zero(2);
    SampleConfig cfg;
    cfg.n_samples = 1000000;
    cfg.seed = 42;
    McMassResult mc = mc_mass(kQuad, dom, sites, psi, cfg);
    CHECK(std::abs(mc.estimate[0] - 0.5) <= 3 * 0.0005);
    CHECK(std::abs(mc.estimate[1] - 0.5) <= 3 * 0.0005);
    CHECK(mc.std_error[0] == doctest::Approx(0.0005).epsilon(1e-5));

    SUBCASE("deterministic given the seed") {
        McMassResult mc2 = mc_mass(kQuad, dom, sites, psi, cfg);
        CHECK(mc.estimate == mc2.estimate);
        CHECK(mc.std_error == mc2.std_error);
    }

    SUBCASE("grid quadrature error bound") {
        cfg.grid_resolution = 512;
        Eigen::VectorXd g = grid_mass(kQuad, dom, sites, psi, cfg);
        CHECK(std::abs(g[0] - 0.5) <= 2.0 / 512);
        CHECK(std::abs(g[1] - 0.5) <= 2.0 / 512);
    }
}

TEST_CASE("solved instance matches within three standard errors") {
    Domain dom;
    dom.rect = {{0, 0}, {1, 1}};
    std::vector<Site> sites = {{0, {0.25, 0.5}}, {1, {0.75, 0.5}}};
    Eigen::VectorXd psi(2);
    psi << 0.0, -0.125;
    SampleConfig cfg;
    cfg.n_samples = 1000000;
    cfg.seed = 3;
    McMassResult mc = mc_mass(kQuad, dom, sites, psi, cfg);
    CHECK(std::abs(mc.estimate[0] - 0.25) <= 3 * mc.std_error[0]);
    CHECK(std::abs(mc.estimate[1] - 0.75) <= 3 * mc.std_error[1]);
}

TEST_CASE("finite-difference jacobian frozen values") {
    Problem p;
    p.gen = kQuad;
    p.domain.rect = {{0, 0}, {1, 1}};
    p.sites = {{0, {0.25, 0.5}}, {1, {0.75, 0.5}}};
    p.target = Eigen::Vector2d{0.5, 0.5};
    Eigen::MatrixXd fd = fd_jacobian(p, Eigen::VectorXd::Zero(2), 1e-6);
    CHECK(fd(0, 0) == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK(fd(1, 0) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(fd(0, 1) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(fd(1, 1) == doctest::Approx(-2.0).epsilon(1e-6));

    Problem p1;
    p1.gen = kQuad;
    p1.domain.rect = {{0, 0}, {1, 1}};
    p1.sites = {{0, {0.5, 0.5}}};
    p1.target = Eigen::VectorXd::Ones(1);
    CHECK(std::abs(fd_jacobian(p1, Eigen::VectorXd::Zero(1), 1e-6)(0, 0)) <= 1e-12);
}

TEST_CASE("reflector finite differences conserve mass and converge") {
    Problem p;
    Rect box{{-1, -1}, {1, 1}};
    p.domain.rect = box;
    int n = 10;
    Rect inner{{0, 0}, {1, 1}};
    for (int i = 0; i < n; ++i) p.sites.push_back({i, point_in_rect(11, 2 * i, inner)});
    p.gen = {Family::NearFieldReflector, twist_gamma_bound(box, p.sites)};
    p.target = Eigen::VectorXd::Constant(n, 1.0 / n);
    Eigen::VectorXd psi(n);
    for (int i = 0; i < n; ++i) psi[i] = 0.02 * (uniform01(13, i) - 0.5);
    psi[0] = 0.0;

    Eigen::MatrixXd fd = fd_jacobian(p, psi, 1e-6);
    CHECK(fd.colwise().sum().cwiseAbs().maxCoeff() <= 1e-7);

    MassResult mr = compute_mass(p, psi);
    Eigen::MatrixXd exact = Eigen::MatrixXd(mass_jacobian(p, psi, mr.diagram));
    double err_h = (fd_jacobian(p, psi, 2e-4) - exact).cwiseAbs().maxCoeff();
    double err_h2 = (fd_jacobian(p, psi, 1e-4) - exact).cwiseAbs().maxCoeff();
    CHECK(err_h / err_h2 >= 3.0);
}

TEST_CASE("weighted-density estimates agree with the exact mass") {
    Problem p;
    p.gen = kQuad;
    p.domain.rect = {{0, 0}, {1, 1}};
    p.domain.density = [](Vec2 x) { return (1.0 + x.x) / 1.5; };
    int n = 5;
    Rect inner{{0.1, 0.1}, {0.9, 0.9}};
    for (int i = 0; i < n; ++i) p.sites.push_back({i, point_in_rect(21, 2 * i, inner)});
    p.target = Eigen::VectorXd::Constant(n, 0.2);
    Eigen::VectorXd psi(n);
    for (int i = 0; i < n; ++i) psi[i] = 0.05 * (uniform01(23, i) - 0.5);
    psi[0] = 0.0;
    Eigen::VectorXd exact = compute_mass(p, psi).mass;

    SampleConfig cfg;
    cfg.n_samples = 1000000;
    cfg.seed = 100;
    McMassResult mc = mc_mass(p.gen, p.domain, p.sites, psi, cfg);
    for (int j = 0; j < n; ++j)
        CHECK(std::abs(mc.estimate[j] - exact[j]) <= 3 * mc.std_error[j]);

    cfg.grid_resolution = 512;
    Eigen::VectorXd g = grid_mass(p.gen, p.domain, p.sites, psi, cfg);
    CHECK((g - exact).cwiseAbs().maxCoeff() <= 4.0 / 512);
}

TEST_CASE("grid estimates track exact reflector masses") {
    for (int trial = 0; trial < 3; ++trial) {
        Problem p;
        Rect box{{-1, -1}, {1, 1}};
        p.domain.rect = box;
        int n = 6;
        Rect inner{{0, 0}, {1, 1}};
        for (int i = 0; i < n; ++i) p.sites.push_back({i, point_in_rect(31 + trial, 2 * i, inner)});
        p.gen = {Family::NearFieldReflector, twist_gamma_bound(box, p.sites)};
        p.target = Eigen::VectorXd::Constant(n, 1.0 / n);
        Eigen::VectorXd psi(n);
        for (int i = 0; i < n; ++i) psi[i] = 0.02 * (uniform01(41 + trial, i) - 0.5);
        psi[0] = 0.0;
        Eigen::VectorXd exact = compute_mass(p, psi).mass;
        SampleConfig cfg;
        cfg.grid_resolution = 512;
        Eigen::VectorXd g = grid_mass(p.gen, p.domain, p.sites, psi, cfg);
        CHECK((g - exact).cwiseAbs().maxCoeff() <= 4.0 / 512);
    }
}
