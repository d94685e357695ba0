#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

namespace netstruct {

/// splitmix64 finalizer. Used to derive independent stream keys from
/// structured inputs (model tag, size, parameter, user seed) so that every
/// generation or optimization call owns its own reproducible stream.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Chains mix64 over the parts; order-sensitive.
std::uint64_t stream_key(std::initializer_list<std::uint64_t> parts) noexcept;

/// Deterministic RNG. The engine (mt19937_64) is fully specified by the
/// standard and the conversions below avoid std distributions, whose output
/// is implementation-defined, so identical keys give identical streams on
/// every platform.
class Rng {
public:
    explicit Rng(std::uint64_t key) : eng_(key) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound); bound must be positive. Unbiased via
    /// rejection.
    std::uint64_t below(std::uint64_t bound);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace netstruct
