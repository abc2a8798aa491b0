#pragma once

#include <cstdint>
#include <random>

namespace cdatc::rng {

// What a substream is used for. Every (run, node, purpose) triple gets its
// own engine so that schemes sharing a master seed see identical data
// realizations regardless of how many draws other purposes consume.
enum class Purpose : std::uint32_t {
    ground_truth = 0,
    regressor = 1,
    noise = 2,
    harvest = 3,
};

// splitmix64 avalanche step (Steele et al. constants).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t run,
                                 std::uint64_t node, Purpose purpose) {
    std::uint64_t s = master;
    std::uint64_t z = splitmix64(s);
    s ^= z + run;
    z = splitmix64(s);
    s ^= z + (node << 16);
    z = splitmix64(s);
    s ^= z + static_cast<std::uint64_t>(purpose);
    return splitmix64(s);
}

// Standard-normal stream. Holds its own distribution instance because
// std::normal_distribution caches state between calls.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

    double next() { return dist_(engine_); }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> dist_{0.0, 1.0};
};

// Uniform(0,1) stream.
class UniformStream {
public:
    explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

    double next() { return dist_(engine_); }

private:
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> dist_{0.0, 1.0};
};

} // namespace cdatc::rng
