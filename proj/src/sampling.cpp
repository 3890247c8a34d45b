#include "prehom/sampling.hpp"

#include <stdexcept>

namespace prehom {

long long Sampler::uniform(long long low, long long high) {
    if (high < low) throw std::invalid_argument("Sampler::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(high - low) + 1;
    const std::uint64_t limit = span == 0 ? 0 : std::mt19937_64::max() - std::mt19937_64::max() % span;
    std::uint64_t draw = engine_();
    while (span != 0 && draw >= limit) draw = engine_();
    return low + static_cast<long long>(span == 0 ? draw : draw % span);
}

Vector Sampler::vector(std::size_t n, long long low, long long high) {
    Vector v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(uniform(low, high));
    return v;
}

}  // namespace prehom
