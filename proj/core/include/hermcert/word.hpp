#pragma once

#include <cstdint>
#include <cstring>
#include <functional>
#include <vector>

namespace hermcert {

/// Canonical form of a group element: a finite sequence of signed 32-bit
/// values interpreted per backend (letters for free groups and rewriting
/// systems, (factor, exponent) pairs for free products of cyclics, a single
/// element index for Cayley tables). Two elements are equal iff their Words
/// compare equal.
using Word = std::vector<std::int32_t>;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        // FNV-1a over the raw bytes; deterministic across runs.
        std::uint64_t h = 14695981039346656037ull;
        for (std::int32_t v : w) {
            for (int i = 0; i < 4; ++i) {
                h ^= static_cast<std::uint8_t>(v >> (8 * i));
                h *= 1099511628211ull;
            }
        }
        return static_cast<std::size_t>(h);
    }
};

inline std::uint64_t hash_bytes(const std::uint8_t* p, std::size_t n) noexcept {
    std::uint64_t h = 14695981039346656037ull;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace hermcert
