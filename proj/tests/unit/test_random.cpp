#include "nullprop/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace nullprop;

namespace
{

// Two-sided Kolmogorov-Smirnov distance of a sample from Uniform(0,1).
double ks_uniform(std::vector<double> values)
{
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    double d = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        d = std::max(d, (i + 1) / n - values[i]);
        d = std::max(d, values[i] - i / n);
    }
    return d;
}

} // namespace

TEST_CASE("splitmix64 is the reference finalizer")
{
    // First output of the reference SplitMix64 generator seeded with 0.
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(substream_seed(1, 0) != substream_seed(1, 1));
    CHECK(substream_seed(1, 0) != substream_seed(2, 0));
    CHECK(substream_seed(7, 3) == substream_seed(7, 3));
}

TEST_CASE("the engine is the standard 64-bit Mersenne Twister")
{
    std::mt19937_64 reference(substream_seed(5, 9));
    Stream stream(5, 9);
    for (int i = 0; i < 1000; ++i)
        REQUIRE(stream() == reference());
    CHECK(generator_tag == "mt19937_64+splitmix64-substreams/v1");
}

TEST_CASE("streams are reproducible and distinct")
{
    Stream a(42, 0), b(42, 0), c(42, 1);
    bool differs = false;
    for (int i = 0; i < 100; ++i)
    {
        const double x = a.uniform_open();
        CHECK(x == b.uniform_open());
        differs = differs || x != c.uniform_open();
    }
    CHECK(differs);
}

TEST_CASE("uniform_open never hits the endpoints and is uniform")
{
    Stream s(3, 0);
    std::vector<double> xs(200000);
    for (double& x : xs)
    {
        x = s.uniform_open();
        REQUIRE(x > 0.0);
        REQUIRE(x < 1.0);
    }
    CHECK(ks_uniform(xs) < 1.63 / std::sqrt(static_cast<double>(xs.size())));
}

TEST_CASE("sorted_uniforms yields sorted uniform order statistics")
{
    constexpr std::size_t n = 50;
    std::vector<double> pooled;
    std::vector<double> buffer(n);
    for (std::uint64_t rep = 0; rep < 2000; ++rep)
    {
        Stream s(11, rep);
        sorted_uniforms(s, buffer);
        REQUIRE(std::is_sorted(buffer.begin(), buffer.end()));
        REQUIRE(buffer.front() > 0.0);
        REQUIRE(buffer.back() < 1.0);
        pooled.insert(pooled.end(), buffer.begin(), buffer.end());
    }
    CHECK(ks_uniform(pooled) < 1.63 / std::sqrt(static_cast<double>(pooled.size())));

    // The minimum of n uniforms has mean 1/(n+1).
    double mean_min = 0.0;
    for (std::size_t i = 0; i < pooled.size(); i += n)
        mean_min += pooled[i];
    mean_min /= 2000.0;
    const double sd = std::sqrt(n / ((n + 1.0) * (n + 1.0) * (n + 2.0)) / 2000.0);
    CHECK(std::abs(mean_min - 1.0 / (n + 1.0)) < 4 * sd);
}

TEST_CASE("gamma variates have the right mean and variance")
{
    for (double shape : {0.5, 1.0, 2.0})
    {
        Stream s(17, 0);
        constexpr int draws = 100000;
        double sum = 0.0, sum2 = 0.0;
        for (int i = 0; i < draws; ++i)
        {
            const double g = s.gamma(shape);
            REQUIRE(g >= 0.0);
            sum += g;
            sum2 += g * g;
        }
        const double mean = sum / draws;
        const double var = sum2 / draws - mean * mean;
        CHECK(std::abs(mean - shape) < 5 * std::sqrt(shape / draws));
        CHECK(std::abs(var / shape - 1.0) < 0.05);
    }
}
