#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "mci/hypergraph.hpp"

namespace mci {

/**
 * PCG32 (XSH-RR output, 64-bit LCG state). Published constants so instances
 * can be regenerated bit-for-bit from any language:
 *   multiplier 6364136223846793005, increment (stream << 1) | 1,
 *   seeding: state = 0; step; state += initstate; step.
 */
class Pcg32 {
public:
    Pcg32(std::uint64_t initState, std::uint64_t initSequence);

    std::uint32_t next();
    /// Uniform in [0, bound) by rejection (no modulo bias). bound > 0.
    std::uint32_t bounded(std::uint32_t bound);

private:
    std::uint64_t state_ = 0;
    std::uint64_t inc_ = 0;
};

/// SplitMix64 step: advances x and returns the mixed output.
std::uint64_t splitMix64(std::uint64_t& x);

/// Generator stream for instance `index`: x = seed + index * 0x9E3779B97F4A7C15,
/// initState = splitMix64(x), initSequence = splitMix64(x).
Pcg32 instanceStream(std::uint64_t seed, std::uint64_t index);

struct Scenario {
    int n = 14;
    int density = 1;  // m = density * n
    int type = 1;     // 1..5
    int count = 50;
    std::uint64_t seed = 0;

    int numHyperedges() const { return density * n; }
    /// Throws std::invalid_argument on out-of-range fields.
    void validate() const;
};

/// Hyperedge size range of types 1-4. Throws std::invalid_argument for type 5.
std::pair<int, int> sizeBounds(int type, int n);

/**
 * Instance `index` of a scenario. Types 1-4: size uniform in sizeBounds, then
 * distinct vertices drawn uniformly (repeats redrawn); duplicate hyperedges
 * are kept. Type 5: each vertex joins with probability 1/2 (top bit of one
 * draw per vertex); draws of size < 2 or equal to an earlier hyperedge are
 * redrawn. Throws std::invalid_argument when type 5 asks for more distinct
 * hyperedges than exist.
 */
Hypergraph generateInstance(const Scenario& scenario, int index);

/// s<n>_<d>_<type>_<seed>_<index>.mci
std::string instanceFileName(const Scenario& scenario, int index);

}  // namespace mci
