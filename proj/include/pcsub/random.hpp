#pragma once

#include "pcsub/rational.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace pcsub {

/// Independent deterministic stream for a named task, so results do not depend on scheduling.
std::mt19937_64 stream_for(std::uint64_t seed, std::string_view name);

/// Uniform integer in [-bound, bound], computed without std distributions so the
/// sequence is identical across standard libraries.
long draw_integer(std::mt19937_64& rng, long bound);

/// Point with integer coordinates in [-bound, bound].
QVector random_integer_point(std::mt19937_64& rng, Eigen::Index n, long bound);

}  // namespace pcsub
