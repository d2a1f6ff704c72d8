#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ladders {

// Seeded generator; substream(label) derives an independent generator so that
// every module draws from its own reproducible stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    Rng substream(std::string_view label) const;
    std::uint64_t seed() const { return seed_; }

    int uniform(int lo, int hi);  // inclusive bounds
    bool chance(double p);
    std::mt19937_64& engine() { return engine_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace ladders
