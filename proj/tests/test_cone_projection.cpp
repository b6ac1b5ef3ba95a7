#include "knotopt/cone_projection.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace knotopt;

TEST_SUITE("cone_projection") {

TEST_CASE("reference inputs")
{
    CHECK(project(std::vector<double>{1, 2, 3}) == std::vector<double>{1, 2, 3});
    CHECK(project(std::vector<double>{-1, -2}) == std::vector<double>{0, 0});
    CHECK(project(std::vector<double>{2, 1, 3}) == std::vector<double>{1.5, 1.5, 3});
    CHECK(oracle::brute_force_cone_projection({2, 1, 3}) == std::vector<double>{1.5, 1.5, 3});
}

TEST_CASE("feasible input comes back unchanged, ties included")
{
    const std::vector<double> v{0.0, 0.1, 0.1, 0.7, 0.7, 0.7, 2.0};
    CHECK(project(v) == v);
}

TEST_CASE("blocks cover the index range")
{
    const auto r = project_with_blocks(std::vector<double>{-3, -1, 4, 2, 5});
    REQUIRE(!r.blocks.empty());
    CHECK(r.blocks.front().begin == 0);
    CHECK(r.blocks.back().end == 5);
    for (std::size_t i = 1; i < r.blocks.size(); ++i) CHECK(r.blocks[i].begin == r.blocks[i - 1].end);
    CHECK(r.output == std::vector<double>{0, 0, 3, 3, 5});
}

TEST_CASE("non-finite input is rejected")
{
    CHECK_THROWS_AS(project(std::vector<double>{1, NAN}), std::invalid_argument);
    CHECK_THROWS_AS(project(std::vector<double>{INFINITY}), std::invalid_argument);
}

TEST_CASE("matches the active-set oracle, feasible and idempotent")
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        int mismatches = 0;
        for (int k = 0; k < 1000; ++k) {
            std::vector<double> v(n);
            for (double& x : v) x = u(rng);
            const auto p = project(v);
            const auto ref = oracle::brute_force_cone_projection(v);
            for (int i = 0; i < n; ++i) mismatches += std::abs(p[i] - ref[i]) > 1e-9;
            CHECK(in_monotone_cone(p));
            CHECK(project(p) == p);
        }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("non-expansive and obtuse-angle optimality")
{
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int k = 0; k < 500; ++k) {
        std::vector<double> v(8), w(8), z(8);
        for (int i = 0; i < 8; ++i) {
            v[i] = u(rng);
            w[i] = u(rng);
            z[i] = u(rng);
        }
        const auto pv = project(v);
        const auto pw = project(w);
        const auto feasible = project(z);
        double lhs = 0, rhs = 0, inner = 0;
        for (int i = 0; i < 8; ++i) {
            lhs += (pv[i] - pw[i]) * (pv[i] - pw[i]);
            rhs += (v[i] - w[i]) * (v[i] - w[i]);
            inner += (v[i] - pv[i]) * (feasible[i] - pv[i]);
        }
        CHECK(std::sqrt(lhs) <= std::sqrt(rhs) + 1e-12);
        CHECK(inner <= 1e-9);
    }
}

TEST_CASE("membership test is exact")
{
    CHECK(in_monotone_cone(std::vector<double>{0, 0, 1}));
    CHECK_FALSE(in_monotone_cone(std::vector<double>{-1e-300}));
    CHECK_FALSE(in_monotone_cone(std::vector<double>{1, std::nextafter(1.0, 0.0)}));
    CHECK(in_monotone_cone(std::vector<double>{}));
}

}
