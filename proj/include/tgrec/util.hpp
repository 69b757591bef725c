#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace tgrec {

inline constexpr const char* kVersion = "0.1.0";

/// FNV-1a 64-bit hash, used for scenario and mesh provenance stamps.
inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string to_hex(std::uint64_t v);

/// Counter-based random generator. Draw k of a stream with seed s is
///   mix(s + (k + 1) * 0x9E3779B97F4A7C15)
/// where mix is the 64-bit finalizer
///   x ^= x >> 30; x *= 0xBF58476D1CE4E5B9;
///   x ^= x >> 27; x *= 0x94D049BB133111EB;
///   x ^= x >> 31;
/// Any draw is addressable directly from (seed, counter), so noise fields
/// are reproducible independent of evaluation order and across platforms.
struct CounterRng {
    std::uint64_t seed = 0;

    std::uint64_t bits(std::uint64_t counter) const {
        std::uint64_t x = seed + (counter + 1) * 0x9E3779B97F4A7C15ull;
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ull;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBull;
        x ^= x >> 31;
        return x;
    }

    /// Uniform double in (0, 1]; never returns 0 so log() is safe.
    double uniform(std::uint64_t counter) const {
        return (static_cast<double>(bits(counter) >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; one value per counter.
    double normal(std::uint64_t counter) const;
};

/// Shortest exact decimal form used by every writer, so that identical runs
/// produce byte-identical files.
std::string format_double(double v);

}  // namespace tgrec
