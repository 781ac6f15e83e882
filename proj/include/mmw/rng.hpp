#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace mmw {

/// Per-realization random stream.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based seed derivation: hashes a parent seed with a path of
/// structured indices, so child streams never depend on execution order.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::initializer_list<std::uint64_t> path)
{
    std::uint64_t h = mix64(parent);
    for (std::uint64_t index : path) h = mix64(h ^ mix64(index + 0x632be59bd9b4e019ULL));
    return h;
}

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double uniform01(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Rng make_stream(std::uint64_t stream_seed, std::uint64_t index)
{
    return Rng(derive_seed(stream_seed, {index}));
}

}  // namespace mmw
