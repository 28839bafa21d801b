#pragma once

#include <cstdint>
#include <random>

#include "adictop/numbers.hpp"

namespace adictop {

// Deterministic RNG: mt19937_64 is fully specified by the standard, and the
// bounded draw below avoids std distributions (which are not portable), so
// identical seeds give identical streams everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw DomainError("Rng::below(0)");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        for (;;) {
            std::uint64_t x = gen_();
            if (x < limit) return x % n;
        }
    }

    long range(long lo, long hi) {  // inclusive ends
        if (hi < lo) throw DomainError("Rng::range: empty range");
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool flip() { return below(2) == 1; }

private:
    std::mt19937_64 gen_;
};

}  // namespace adictop
