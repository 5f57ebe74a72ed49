#pragma once

#include <cstdint>
#include <vector>

#include "pslab/errors.hpp"

namespace pslab {

// Identifies one pseudorandom stream; (master_seed, stream_index) pins it fully.
struct seed_spec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;

    friend bool operator==(const seed_spec&, const seed_spec&) = default;
};

// One realization A of B(n, alpha): elements strictly increasing, all in [1, n].
struct sampled_set {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> elements;

    std::uint64_t size() const { return elements.size(); }
};

namespace detail {

// Stafford "mix13" finalizer, the scrambler SplitMix64 is built on.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

} // namespace detail

// SplitMix64: a Weyl sequence scrambled by mix13. The stream start is placed
// pseudo-randomly in the 2^64 cycle from (master_seed, stream_index), so one
// master seed yields as many pairwise independent streams as needed.
class splitmix64 {
public:
    explicit splitmix64(const seed_spec& seed)
        : state_(detail::mix64(seed.master_seed ^ detail::mix64(seed.stream_index ^ golden))) {}

    std::uint64_t next() {
        state_ += golden;
        return detail::mix64(state_);
    }

    // uniform in [0, 1) from the top 53 bits
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ull;
    std::uint64_t state_;
};

// Packs (trial, set_index) into a stream id as trial * 2^32 + set_index.
// Bijective for trial, set_index < 2^32, so distinct pairs never collide.
inline seed_spec derive_stream(std::uint64_t master_seed, std::uint64_t trial,
                               std::uint64_t set_index) {
    if (trial >> 32 || set_index >> 32)
        throw domain_error("derive_stream: trial and set_index must be < 2^32");
    return seed_spec{master_seed, (trial << 32) | set_index};
}

// Draws A ~ B(n, alpha): element e is included iff the e-th unit draw of the
// stream lands below alpha. Exactly one draw per element, for every alpha
// (including 0 and 1), so streams stay aligned across alpha values.
inline sampled_set sample_set(std::uint64_t n, double alpha, const seed_spec& seed) {
    if (n < 1) throw domain_error("sample_set: n must be >= 1");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw domain_error("sample_set: alpha must lie in [0, 1]");

    sampled_set out;
    out.n = n;
    splitmix64 rng(seed);
    for (std::uint64_t e = 1; e <= n; ++e) {
        if (rng.next_unit() < alpha) out.elements.push_back(e);
    }
    return out;
}

} // namespace pslab
