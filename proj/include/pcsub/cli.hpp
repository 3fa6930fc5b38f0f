#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace pcsub {

struct RunConfig {
    std::string command;
    std::string series;
    int rank = 0;
    std::string scenario;
    std::uint64_t seed = 42;
    int samples = 16;
    long bound = 20;
    std::string out;
    std::string point;
    std::string set = "pc";
    bool timings = false;
};

/// Exit codes: 0 success with every certificate passing, 1 a failed or inconclusive certificate,
/// 2 usage or configuration error.
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pcsub
