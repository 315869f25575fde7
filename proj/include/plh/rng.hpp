// Deterministic seeded randomness. All sampling in this project goes through
// SplitMix64 so that results are bit-identical across platforms and thread
// counts; std::random distributions are implementation-defined and not used.
#ifndef PLH_RNG_HPP
#define PLH_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace plh {

// Algorithm identifier recorded in output artifacts.
inline constexpr const char* kRngId = "splitmix64/boxmuller-v1";

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Mixes extra words into a seed; used to derive independent per-task streams
// as hash(global_seed, point_id, draw_index, ...), so results do not depend
// on scheduling order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a) {
    std::uint64_t s = seed ^ (a + 0x9E3779B97F4A7C15ull);
    return splitmix64_next(s);
}
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return derive_seed(derive_seed(seed, a), b);
}
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                                 std::uint64_t c) {
    return derive_seed(derive_seed(seed, a, b), c);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64_next(state_); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe as a log() argument.
    double uniform_pos() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; one value is kept for the next call.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        const double ang = 2.0 * std::numbers::pi * u2;
        spare_ = mag * std::sin(ang);
        have_spare_ = true;
        return mag * std::cos(ang);
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace plh

#endif
