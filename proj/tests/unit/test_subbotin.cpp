#include "nullprop/subbotin.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

using namespace nullprop;

namespace
{

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

} // namespace

TEST_CASE("spot values")
{
    CHECK(subbotin_sf(2.0, 0.0) == 0.5);
    CHECK(rel(subbotin_sf(2.0, 1.959964), oracle::normal_sf_1959964) < 1e-10);
    CHECK(rel(subbotin_sf(1.0, 1.0), oracle::laplace_sf_1) < 1e-12);
    CHECK(rel(subbotin_sf(1.5, 2.0), oracle::subbotin_sf_15_2) < 1e-10);
    CHECK(rel(subbotin_sf(0.5, 3.0), oracle::subbotin_sf_05_3) < 1e-10);
    CHECK(rel(subbotin_sf(3.0, -0.7), oracle::subbotin_sf_3_m07) < 1e-10);
}

TEST_CASE("closed forms on [0, 10] to 1e-10 relative")
{
    double worst_normal = 0.0, worst_laplace = 0.0;
    for (int i = 0; i <= 10000; ++i)
    {
        const double x = i / 1000.0;
        worst_normal = std::max(worst_normal, rel(subbotin_sf(2.0, x), oracle::normal_sf(x)));
        worst_laplace = std::max(worst_laplace, rel(subbotin_sf(1.0, x), oracle::laplace_sf(x)));
    }
    CHECK(worst_normal < 1e-10);
    CHECK(worst_laplace < 1e-10);
}

TEST_CASE("negative arguments complete by symmetry")
{
    for (double x : {0.1, 1.0, 2.5, 7.0})
    {
        CHECK(rel(subbotin_sf(2.0, -x), 1.0 - oracle::normal_sf(x)) < 1e-12);
        CHECK(rel(subbotin_sf(1.0, -x), oracle::laplace_sf(-x)) < 1e-12);
    }
}

TEST_CASE("strictly decreasing onto (0,1)")
{
    for (double kappa : {0.5, 1.0, 2.0, 4.0})
    {
        double previous = 1.0;
        for (double x = -3.0; x <= 6.0; x += 0.01)
        {
            const double s = subbotin_sf(kappa, x);
            REQUIRE(s > 0.0);
            REQUIRE(s < 1.0);
            REQUIRE(s < previous);
            previous = s;
        }
    }
}

TEST_CASE("log tail")
{
    CHECK(rel(subbotin_log_sf(2.0, 1.959964), std::log(oracle::normal_sf_1959964)) < 1e-10);
    CHECK(rel(subbotin_log_sf(1.0, 800.0), -std::log(2.0) - 800.0) < 1e-14);
    // Normal tail far past underflow: log sf ~ -x^2/2 - log(x sqrt(2 pi)).
    const double x = 60.0;
    CHECK(std::abs(subbotin_log_sf(2.0, x) - (-x * x / 2 - std::log(x * std::sqrt(2 * M_PI)))) < 1e-3);
}

TEST_CASE("inverse")
{
    CHECK(rel(subbotin_isf(2.0, 0.025), oracle::normal_isf_0025) < 1e-12);
    CHECK(subbotin_isf(2.0, 0.5) == 0.0);
    CHECK(rel(subbotin_isf(1.0, 1e-6), -std::log(2e-6)) < 1e-12);
    for (double kappa : {0.7, 1.0, 2.0, 3.0})
        for (double p : {1e-12, 1e-4, 0.1, 0.4, 0.75, 0.99})
            CHECK(rel(subbotin_sf(kappa, subbotin_isf(kappa, p)), p) < 1e-9);
    CHECK_THROWS(subbotin_isf(2.0, 0.0));
    CHECK_THROWS(subbotin_isf(2.0, 1.0));
}

TEST_CASE("kappa must be positive")
{
    CHECK_THROWS_AS(subbotin_sf(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(subbotin_sf(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(subbotin_log_sf(0.0, 1.0), std::domain_error);
    Stream s(1, 0);
    CHECK_THROWS_AS(sample_subbotin(s, 0.0), std::domain_error);
}

TEST_CASE("the sampler matches the survival function")
{
    for (double kappa : {0.7, 1.0, 2.0, 3.0})
    {
        Stream s(4242, static_cast<std::uint64_t>(kappa * 10));
        std::vector<double> u(50000);
        for (double& v : u)
            v = subbotin_sf(kappa, sample_subbotin(s, kappa));
        std::sort(u.begin(), u.end());
        double d = 0.0;
        const double n = static_cast<double>(u.size());
        for (std::size_t i = 0; i < u.size(); ++i)
            d = std::max({d, (i + 1) / n - u[i], u[i] - i / n});
        INFO("kappa = " << kappa);
        CHECK(d < 1.63 / std::sqrt(n));
    }
}
