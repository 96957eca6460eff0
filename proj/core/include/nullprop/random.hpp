#ifndef NULLPROP_RANDOM_HPP
#define NULLPROP_RANDOM_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace nullprop
{

/// Identifier of the generator and stream-derivation scheme. Stored next to
/// cached simulation results; results are only comparable under equal tags.
inline constexpr std::string_view generator_tag = "mt19937_64+splitmix64-substreams/v1";

/// SplitMix64 finalizer, used to derive well-separated substream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of substream `index` under master seed `seed`.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// A reproducible random stream. Each simulation replicate owns one stream,
/// derived from (master seed, replicate index), so results do not depend on
/// how replicates are scheduled across workers.
class Stream
{
public:
    using result_type = std::mt19937_64::result_type;

    Stream(std::uint64_t seed, std::uint64_t index) : engine_(substream_seed(seed, index)) {}

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

    /// Uniform on (0,1): 53 random bits, never exactly 0 or 1.
    double uniform_open();

    /// Standard exponential via inversion.
    double exponential();

    /// Gamma(shape, 1) variate.
    double gamma(double shape);

private:
    std::mt19937_64 engine_;
};

/// Fills `out` with the order statistics of out.size() iid Uniform(0,1)
/// draws, using normalized exponential spacings (no sort).
void sorted_uniforms(Stream& stream, std::span<double> out);

} // namespace nullprop

#endif // NULLPROP_RANDOM_HPP
