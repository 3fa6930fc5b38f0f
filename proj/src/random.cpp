#include "pcsub/random.hpp"

namespace pcsub {

std::mt19937_64 stream_for(std::uint64_t seed, std::string_view name) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    return std::mt19937_64(seq);
}

long draw_integer(std::mt19937_64& rng, long bound) {
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    return static_cast<long>(rng() % span) - bound;
}

QVector random_integer_point(std::mt19937_64& rng, Eigen::Index n, long bound) {
    QVector p(n);
    for (Eigen::Index i = 0; i < n; ++i) p(i) = draw_integer(rng, bound);
    return p;
}

}  // namespace pcsub
