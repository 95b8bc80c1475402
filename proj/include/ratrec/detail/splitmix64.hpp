#pragma once

#include <cstdint>

namespace ratrec::detail {

// SplitMix64 (Steele/Lea/Vigna): a tiny fully-specified generator. Unlike the
// standard library distributions, its output stream depends only on the seed,
// never on the platform, which keeps benchmark sampling reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [0, bound); the modulo bias is irrelevant at the
    // bounds used here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    bool flip() { return next() & 1; }

private:
    std::uint64_t state_;
};

}  // namespace ratrec::detail
