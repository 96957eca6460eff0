#include "nullprop/random.hpp"

#include <boost/random/gamma_distribution.hpp>

#include <cmath>

namespace nullprop
{

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index)
{
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

double Stream::uniform_open()
{
    // (k + 0.5) / 2^53 for k uniform on [0, 2^53)
    const std::uint64_t k = engine_() >> 11;
    return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
}

double Stream::exponential() { return -std::log(uniform_open()); }

double Stream::gamma(double shape)
{
    // Boost's gamma sampler is a fixed algorithm, unlike std::gamma_distribution
    // whose output is implementation-defined.
    boost::random::gamma_distribution<double> dist(shape, 1.0);
    return dist(engine_);
}

void sorted_uniforms(Stream& stream, std::span<double> out)
{
    double total = 0.0;
    for (double& v : out)
    {
        total += stream.exponential();
        v = total;
    }
    total += stream.exponential();
    const double scale = 1.0 / total;
    for (double& v : out)
        v *= scale;
}

} // namespace nullprop
