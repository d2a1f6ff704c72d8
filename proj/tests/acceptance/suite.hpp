#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace acceptance {

struct Outcome {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0;
    double limit = 0;  // 0 when the criterion has no time bound
    std::string detail;
};

// Runs the twelve criteria in order, printing one line per criterion to out
// as soon as it finishes.
std::vector<Outcome> run_all(std::ostream& out, std::uint64_t seed = 20240601);
std::string format(const Outcome& o);

}  // namespace acceptance
