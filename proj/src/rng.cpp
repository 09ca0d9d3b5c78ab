#include "ltm/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ltm {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

double Rng::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    cached_normal_ = r * std::sin(a);
    has_cached_normal_ = true;
    return r * std::cos(a);
}

std::uint64_t Rng::geometric(double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) throw std::invalid_argument("Rng::geometric: p must be < 1");
    double u = uniform01();
    while (u <= 0.0) u = uniform01();
    const double count = std::floor(std::log(u) / std::log(p));
    if (count > 1e9) return 1000000000;  // unreachable in practice, keeps the cast safe
    return static_cast<std::uint64_t>(count);
}

std::vector<std::int32_t> Rng::sample_without_replacement(std::int32_t n, std::int32_t k) {
    if (k < 0 || n < 0 || k > n) {
        throw std::invalid_argument("sample_without_replacement: need 0 <= k <= n");
    }
    std::vector<std::int32_t> pool(static_cast<std::size_t>(n));
    for (std::int32_t i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (std::int32_t i = 0; i < k; ++i) {
        const auto j = static_cast<std::size_t>(i) +
                       below(static_cast<std::uint64_t>(n - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view stream, std::uint64_t index) {
    const std::uint64_t h = splitmix64(master ^ fnv1a64(stream));
    return splitmix64(h ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

}  // namespace ltm
