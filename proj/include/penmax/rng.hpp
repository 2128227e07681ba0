#pragma once

#include <array>
#include <cstdint>

#include "penmax/types.hpp"

namespace penmax {

/// Philox4x32-10 block function (Salmon et al., SC 2011). Counter-based:
/// the value at any (key, counter) is a pure function of its arguments, so
/// substreams can be consumed in any order on any thread schedule and still
/// produce identical sequences.
std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key);

/// One substream of the Philox generator, keyed by (seed, stream). Distinct
/// stream ids under the same seed never overlap: the stream id occupies the
/// high 64 bits of the 128-bit counter and the position the low 64 bits.
class CounterRng {
public:
    CounterRng(uint64_t seed, uint64_t stream);

    uint32_t next_u32();
    uint64_t next_u64();
    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit();
    /// Standard normal via Box-Muller; pairs are cached.
    double next_normal();

    void fill_normal(Vector& out);

private:
    void refill();

    std::array<uint32_t, 2> key_;
    uint64_t stream_;
    uint64_t pos_ = 0;
    std::array<uint32_t, 4> buf_{};
    int buf_used_ = 4;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

/// Stream-id tags. Keeping purposes in disjoint id ranges guarantees that
/// e.g. multiplier draws never collide with DGP draws under the same seed.
enum class StreamKind : uint64_t {
    multiplier = 1,
    optimizer = 2,
    dgp = 3,
    process_sim = 4,
    generic = 5,
};

inline uint64_t stream_id(StreamKind kind, uint64_t index = 0) {
    return (static_cast<uint64_t>(kind) << 56) | (index & 0x00ffffffffffffffULL);
}

/// Derive an unrelated 64-bit seed from (seed, salt_a, salt_b). Used to hand
/// each bootstrap replication / MC rep its own optimizer seed.
uint64_t derive_seed(uint64_t seed, uint64_t salt_a, uint64_t salt_b = 0);

}  // namespace penmax
