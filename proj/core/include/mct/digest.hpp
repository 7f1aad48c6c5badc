#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mct {

/// Hex-encoded SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

/// Hex-encoded SHA-256 of a file's bytes. Throws IoError if unreadable.
std::string sha256_file_hex(const std::string& path);

/// Portable 64-bit string hash (FNV-1a with a splitmix finalizer). Stable
/// across platforms and runs; used for seeded reproducible draws, never for
/// cache keys.
std::uint64_t stable_hash64(std::string_view data, std::uint64_t seed = 0);

/// Uniform draw in [0, 1) derived from (seed, key). Pure and portable.
double stable_uniform01(std::uint64_t seed, std::string_view key);

}  // namespace mct
