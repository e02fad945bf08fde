#pragma once

#include <cstdint>
#include <string_view>

namespace liealg {

// SplitMix64 with named splits: every random stream in the library derives from one seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    // uniform in [lo, hi]
    long long range(long long lo, long long hi) { return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    // Independent child stream keyed by a label and an index; does not advance this stream.
    Rng split(std::string_view label, std::uint64_t index = 0) const {
        std::uint64_t h = 0xCBF29CE484222325ULL;
        for (char c : label) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001B3ULL;
        Rng child(state_ ^ h);
        child.state_ ^= Rng(index).next();
        child.next();
        return child;
    }

private:
    std::uint64_t state_;
};

}  // namespace liealg
