#pragma once

#include <cstdint>
#include <random>

#include "prehom/matrix.hpp"

namespace prehom {

/// Seeded integer sampler. Draws are derived from std::mt19937_64, whose output
/// sequence is fixed by the standard, with explicit rejection sampling so the
/// values do not depend on the standard library's distribution code.
class Sampler {
public:
    static constexpr long long kDefaultLow = -9;
    static constexpr long long kDefaultHigh = 9;

    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    long long uniform(long long low, long long high);
    Vector vector(std::size_t n, long long low = kDefaultLow, long long high = kDefaultHigh);

private:
    std::mt19937_64 engine_;
};

}  // namespace prehom
