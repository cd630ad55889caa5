#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace uor {

/// Seeded random stream with platform-stable helpers.
///
/// The standard distributions are implementation-defined, so the helpers
/// here are written against the raw 64-bit engine output; a seed yields the
/// same sequence on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, n). n must be positive.
    std::uint64_t uniform_index(std::uint64_t n);

    // Uniform double in [0, 1) with 53 bits of mantissa.
    double uniform01();

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double normal(double mean = 0.0, double stddev = 1.0);

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_index(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

std::uint64_t fnv1a64(std::string_view text, std::uint64_t basis = 0xcbf29ce484222325ULL);

// Named sub-stream of a root seed: derive_seed(root, "poison") etc.
std::uint64_t derive_seed(std::uint64_t root, std::string_view name);
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b = 0);

}  // namespace uor
