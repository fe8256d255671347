#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace linkeval {

using NodeId = std::uint32_t;

/// Unordered node pair, stored canonically with a < b.
struct NodePair {
    NodeId a = 0;
    NodeId b = 0;

    NodePair() = default;
    NodePair(NodeId u, NodeId v) : a(u < v ? u : v), b(u < v ? v : u) {}

    friend bool operator==(const NodePair&, const NodePair&) = default;
    friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

struct NodePairHash {
    std::size_t operator()(const NodePair& p) const noexcept {
        return std::hash<std::uint64_t>{}((std::uint64_t(p.a) << 32) | std::uint64_t(p.b));
    }
};

// splitmix64; used to derive independent sub-seeds from a base seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(a) ^ b);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return splitmix64(mix_seed(a, b) ^ splitmix64(c));
}

inline std::uint64_t hash_string(const std::string& s) {
    // FNV-1a 64-bit
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Uniform double in [0, 1) with 53 bits of randomness from a 64-bit generator.
template <class Rng>
double unit_real(Rng& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n) without distribution objects (n > 0).
template <class Rng>
std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    // rejection sampling to avoid modulo bias
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

/// Shortest round-trip decimal formatting for doubles (stable across runs).
std::string format_double(double v);

}  // namespace linkeval
