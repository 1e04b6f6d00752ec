#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace outrank {

using Rng = std::mt19937_64;

/// Uniform draw in the open interval (0, 1) with 53-bit resolution.
/// Avoids std::uniform_real_distribution so streams are identical across
/// standard library implementations.
inline double uniform01(Rng& rng) {
    while (true) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u > 0.0)
            return u;
    }
}

/// Derives an independent stream seed from a base seed and a stream tag
/// (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double x);

/// Writes content to path via a temp file and rename, so failed runs never
/// leave partial output behind.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

} // namespace outrank
