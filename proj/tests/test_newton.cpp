#include <cmath>

#include "doctest.h"
#include "gje/newton.hpp"
#include "gje/rng.hpp"

using namespace gje;

TEST_CASE("two-site solve needs one exact step") {
    Problem p;
    p.gen = {Family::QuadraticOT, 0.0};
    p.domain.rect = {{0, 0}, {1, 1}};
    p.sites = {{0, {0.25, 0.5}}, {1, {0.75, 0.5}}};
    p.target = Eigen::Vector2d{0.25, 0.75};
    SolveParams sp;
    sp.eps = 1e-12;
    SolveResult r = solve(p, sp);
    CHECK(r.status == SolveStatus::Converged);
    CHECK(r.iterations == 1);
    CHECK(r.psi[0] == 0.0);
    CHECK(r.psi[1] == doctest::Approx(-0.125).epsilon(1e-12));
    CHECK(r.tau_history[0] == 1.0);
    CHECK(r.res_history.size() == 2);
}

TEST_CASE("direction solver") {
    Eigen::SparseMatrix<double> dh(2, 2);
    std::vector<Eigen::Triplet<double>> t = {
        {0, 0, -2.0}, {1, 0, 2.0}, {0, 1, 2.0}, {1, 1, -2.0}};
    dh.setFromTriplets(t.begin(), t.end());
    Eigen::VectorXd r = Eigen::Vector2d{0.1, -0.1};
    auto u = newton_direction(dh, r);
    REQUIRE(u.has_value());
    CHECK((*u)[0] == 0.0);
    CHECK((*u)[1] == doctest::Approx(0.05).epsilon(1e-14));

    SUBCASE("anchored system solves the unanchored equations") {
        Eigen::VectorXd back = dh * *u;
        CHECK((back - r).lpNorm<Eigen::Infinity>() <= 1e-9 * r.lpNorm<Eigen::Infinity>());
    }

    SUBCASE("zero matrix is singular even with the anchor bump") {
        Eigen::SparseMatrix<double> z(2, 2);
        CHECK(!newton_direction(z, r).has_value());
    }
}

TEST_CASE("reflector solve with twenty sites") {
    Problem p;
    Rect box{{-1, -1}, {1, 1}};
    p.domain.rect = box;
    Rect inner{{0, 0}, {1, 1}};
    int n = 20;
    for (int i = 0; i < n; ++i) p.sites.push_back({i, point_in_rect(5, 2 * i, inner)});
    p.gen = {Family::NearFieldReflector, twist_gamma_bound(box, p.sites)};
    p.target = Eigen::VectorXd::Constant(n, 1.0 / n);
    SolveParams sp;
    sp.eps = 1e-10;
    sp.max_iter = 60;
    SolveResult r = solve(p, sp);
    CHECK(r.status == SolveStatus::Converged);

    MassResult check = compute_mass(p, r.psi);
    CHECK((check.mass - p.target).lpNorm<Eigen::Infinity>() <= 1e-10);

    SUBCASE("residual history contracts at the accepted rates") {
        for (size_t k = 1; k < r.res_history.size(); ++k) {
            double bound = (1.0 - r.tau_history[k - 1] / 2.0) * r.res_history[k - 1];
            CHECK(r.res_history[k] <= bound + 1e-12);
        }
    }
}

TEST_CASE("weighted callable-density solve") {
    Problem p;
    p.gen = {Family::QuadraticOT, 0.0};
    p.domain.rect = {{0, 0}, {1, 1}};
    p.domain.density = [](Vec2 x) { return (1.0 + x.x) / 1.5; };
    int n = 6;
    Rect inner{{0.1, 0.1}, {0.9, 0.9}};
    for (int i = 0; i < n; ++i) p.sites.push_back({i, point_in_rect(9, 2 * i, inner)});
    Eigen::VectorXd tgt(n);
    for (int i = 0; i < n; ++i) tgt[i] = 1.0 + uniform01(77, i);
    tgt /= tgt.sum();
    p.target = tgt;
    SolveParams sp;
    sp.eps = 1e-9;
    sp.max_iter = 60;
    SolveResult r = solve(p, sp);
    CHECK(r.status == SolveStatus::Converged);
    CHECK(r.residual_l2 <= 1e-9);
}

TEST_CASE("single site converges without iterating") {
    Problem p;
    p.gen = {Family::NearFieldReflector, 0.5};
    p.domain.rect = {{-1, -1}, {1, 1}};
    p.sites = {{0, {0.3, 0.4}}};
    p.target = Eigen::VectorXd::Ones(1);
    SolveResult r = solve(p, SolveParams{});
    CHECK(r.status == SolveStatus::Converged);
    CHECK(r.iterations == 0);
    CHECK(r.residual_l2 == 0.0);
}

TEST_CASE("iteration cap reports max_iterations") {
    Problem p;
    p.gen = {Family::QuadraticOT, 0.0};
    p.domain.rect = {{0, 0}, {1, 1}};
    p.sites = {{0, {0.25, 0.5}}, {1, {0.75, 0.5}}};
    p.target = Eigen::Vector2d{0.25, 0.75};
    SolveParams sp;
    sp.eps = 1e-12;
    sp.max_iter = 0;
    SolveResult r = solve(p, sp);
    CHECK(r.status == SolveStatus::MaxIterations);
    CHECK(r.iterations == 0);
}

TEST_CASE("explicit delta above half the smallest target is rejected") {
    Problem p;
    p.gen = {Family::QuadraticOT, 0.0};
    p.domain.rect = {{0, 0}, {1, 1}};
    p.sites = {{0, {0.25, 0.5}}, {1, {0.75, 0.5}}};
    p.target = Eigen::Vector2d{0.25, 0.75};
    SolveParams sp;
    sp.delta = 0.2;
    CHECK_THROWS_AS(solve(p, sp), std::invalid_argument);
}

TEST_CASE("status names") {
    CHECK(std::string(to_string(SolveStatus::Converged)) == "converged");
    CHECK(std::string(to_string(SolveStatus::MaxIterations)) == "max_iterations");
    CHECK(std::string(to_string(SolveStatus::BacktrackFloor)) == "backtrack_floor");
    CHECK(std::string(to_string(SolveStatus::SingularSystem)) == "singular_system");
}
