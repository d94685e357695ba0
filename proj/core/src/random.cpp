#include "netstruct/random.hpp"

#include <cassert>
#include <limits>

namespace netstruct {

std::uint64_t stream_key(std::initializer_list<std::uint64_t> parts) noexcept {
    std::uint64_t key = 0x6e657473ULL;  // arbitrary nonzero start
    for (std::uint64_t part : parts) key = mix64(key ^ part);
    return key;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    assert(bound > 0);
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

}  // namespace netstruct
