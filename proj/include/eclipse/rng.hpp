#pragma once

#include <cstdint>
#include <random>

namespace eclipse {

// All randomness flows through mt19937_64 engines whose seeds are derived
// from a single master seed via splitmix64. Stream ids (snapshot index,
// bridge path index, trial index, ...) give independent, reproducible
// sub-streams, so parallel and serial generation produce identical output.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(splitmix64(master) + stream);
}

inline Rng make_rng(std::uint64_t master, std::uint64_t stream = 0) {
    return Rng(derive_seed(master, stream));
}

}  // namespace eclipse
