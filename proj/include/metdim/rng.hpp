#ifndef METDIM_RNG_HPP
#define METDIM_RNG_HPP

#include <cstdint>
#include <random>

namespace metdim {

/// Unbiased uniform draw from [0, bound) via rejection; fully deterministic
/// for a fixed engine state (no implementation-defined distributions).
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    for (;;) {
        std::uint64_t draw = gen();
        if (draw < limit) return draw % bound;
    }
}

} // namespace metdim

#endif
