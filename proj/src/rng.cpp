#include "penmax/rng.hpp"

#include <cmath>

namespace penmax {

namespace {

constexpr uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mul_hilo(uint32_t a, uint32_t b, uint32_t* lo, uint32_t* hi) {
    uint64_t p = static_cast<uint64_t>(a) * b;
    *lo = static_cast<uint32_t>(p);
    *hi = static_cast<uint32_t>(p >> 32);
}

inline std::array<uint32_t, 4> round_once(const std::array<uint32_t, 4>& c,
                                          const std::array<uint32_t, 2>& k) {
    uint32_t lo0, hi0, lo1, hi1;
    mul_hilo(kPhiloxM0, c[0], &lo0, &hi0);
    mul_hilo(kPhiloxM1, c[2], &lo1, &hi1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key) {
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            key[0] += kPhiloxW0;
            key[1] += kPhiloxW1;
        }
        counter = round_once(counter, key);
    }
    return counter;
}

CounterRng::CounterRng(uint64_t seed, uint64_t stream)
    : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)}, stream_(stream) {}

void CounterRng::refill() {
    std::array<uint32_t, 4> ctr = {static_cast<uint32_t>(pos_), static_cast<uint32_t>(pos_ >> 32),
                                   static_cast<uint32_t>(stream_),
                                   static_cast<uint32_t>(stream_ >> 32)};
    buf_ = philox4x32(ctr, key_);
    ++pos_;
    buf_used_ = 0;
}

uint32_t CounterRng::next_u32() {
    if (buf_used_ >= 4) refill();
    return buf_[buf_used_++];
}

uint64_t CounterRng::next_u64() {
    uint64_t lo = next_u32();
    uint64_t hi = next_u32();
    return lo | (hi << 32);
}

double CounterRng::next_unit() {
    // 53-bit mantissa in [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // Box-Muller; 1 - u in (0, 1] keeps the log argument positive.
    double u1 = 1.0 - next_unit();
    double u2 = next_unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

void CounterRng::fill_normal(Vector& out) {
    for (double& v : out) v = next_normal();
}

uint64_t derive_seed(uint64_t seed, uint64_t salt_a, uint64_t salt_b) {
    // splitmix64 finalizer chained over the inputs
    auto mix = [](uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    };
    uint64_t h = mix(seed);
    h = mix(h ^ mix(salt_a));
    h = mix(h ^ mix(salt_b));
    return h;
}

}  // namespace penmax
