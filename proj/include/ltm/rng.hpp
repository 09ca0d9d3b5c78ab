#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace ltm {

// Deterministic PRNG. All distributions are derived from the raw mt19937_64
// stream (never std:: distribution objects), so sequences are bit-identical
// across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Unbiased uniform integer on [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);

    bool bernoulli(double p) { return uniform01() < p; }

    // Standard normal via Box-Muller; the second value of each pair is cached.
    double normal();

    // Number of successes before the first failure, success probability p.
    std::uint64_t geometric(double p);

    // k distinct values from {0, ..., n-1}, ascending.
    std::vector<std::int32_t> sample_without_replacement(std::int32_t n, std::int32_t k);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
    bool has_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view s);

// Stable sub-seed derivation: independent streams keyed by name and index,
// so adding a consumer never perturbs the draws of another.
std::uint64_t derive_seed(std::uint64_t master, std::string_view stream, std::uint64_t index);

}  // namespace ltm
