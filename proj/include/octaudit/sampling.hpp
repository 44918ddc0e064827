#pragma once

// Deterministic pseudorandom sampling for property audits.  Values are drawn
// from mt19937_64 with explicit modulo reduction (not
// std::uniform_int_distribution, whose output is implementation-defined), so
// the same seed yields the same stream on every platform.  The slight modulo
// bias is irrelevant here: samples only need to be reproducible and varied.

#include <octaudit/rational.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace octaudit {

class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    // Uniform-ish integer in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(engine_() % span);
    }

    template <typename T>
    const T& pick(const std::vector<T>& pool) {
        return pool[static_cast<std::size_t>(range(0, static_cast<long long>(pool.size()) - 1))];
    }

    // Rational with numerator in [-9, 9] and denominator in {1, 2, 3}.
    Rational small_rational() {
        return Rational(Integer(range(-9, 9)), Integer(range(1, 3)));
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace octaudit
