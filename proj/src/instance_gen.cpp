#include "mci/instance_gen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mci {

Pcg32::Pcg32(std::uint64_t initState, std::uint64_t initSequence) : inc_((initSequence << 1u) | 1u) {
    next();
    state_ += initState;
    next();
}

std::uint32_t Pcg32::next() {
    std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
}

std::uint32_t Pcg32::bounded(std::uint32_t bound) {
    if (bound == 0)
        throw std::invalid_argument("bounded draw needs a positive bound");
    const std::uint32_t threshold = (-bound) % bound;
    for (;;) {
        std::uint32_t r = next();
        if (r >= threshold)
            return r % bound;
    }
}

std::uint64_t splitMix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Pcg32 instanceStream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t x = seed + index * 0x9E3779B97F4A7C15ULL;
    std::uint64_t state = splitMix64(x);
    std::uint64_t sequence = splitMix64(x);
    return Pcg32(state, sequence);
}

void Scenario::validate() const {
    if (n < 2)
        throw std::invalid_argument("scenario needs n >= 2");
    if (density < 1)
        throw std::invalid_argument("scenario needs density >= 1");
    if (type < 1 || type > 5)
        throw std::invalid_argument("hyperedge type must be in 1..5");
    if (count < 1)
        throw std::invalid_argument("scenario needs count >= 1");
}

std::pair<int, int> sizeBounds(int type, int n) {
    const int quarter = (n + 3) / 4;
    const int half = (n + 1) / 2;
    switch (type) {
    case 1:
        return {2, n};
    case 2:
        return {2, half};
    case 3:
        return {quarter, n};
    case 4:
        return {quarter, half};
    default:
        throw std::invalid_argument("type " + std::to_string(type) + " has no size bounds");
    }
}

Hypergraph generateInstance(const Scenario& scenario, int index) {
    scenario.validate();
    if (index < 0 || index >= scenario.count)
        throw std::invalid_argument("instance index out of range");
    const int n = scenario.n;
    const int m = scenario.numHyperedges();
    Pcg32 rng = instanceStream(scenario.seed, static_cast<std::uint64_t>(index));
    std::vector<VertexSet> hyperedges;
    hyperedges.reserve(static_cast<std::size_t>(m));

    if (scenario.type == 5) {
        if (n < 62) {
            const std::uint64_t available = (std::uint64_t{1} << n) - static_cast<std::uint64_t>(n) - 1;
            if (static_cast<std::uint64_t>(m) > available)
                throw std::invalid_argument("type 5 cannot produce " + std::to_string(m) +
                                            " distinct hyperedges on " + std::to_string(n) + " vertices");
        }
        std::set<VertexSet> seen;
        while (static_cast<int>(hyperedges.size()) < m) {
            VertexSet s;
            for (Vertex v = 1; v <= n; ++v)
                if (rng.next() >> 31)
                    s.push_back(v);
            if (s.size() < 2 || !seen.insert(s).second)
                continue;
            hyperedges.push_back(std::move(s));
        }
        return Hypergraph(n, std::move(hyperedges));
    }

    const auto [lo, hi] = sizeBounds(scenario.type, n);
    for (int k = 0; k < m; ++k) {
        const int size = lo + static_cast<int>(rng.bounded(static_cast<std::uint32_t>(hi - lo + 1)));
        std::vector<char> taken(static_cast<std::size_t>(n) + 1, 0);
        VertexSet s;
        while (static_cast<int>(s.size()) < size) {
            Vertex v = 1 + static_cast<Vertex>(rng.bounded(static_cast<std::uint32_t>(n)));
            if (taken[static_cast<std::size_t>(v)])
                continue;
            taken[static_cast<std::size_t>(v)] = 1;
            s.push_back(v);
        }
        std::sort(s.begin(), s.end());
        hyperedges.push_back(std::move(s));
    }
    return Hypergraph(n, std::move(hyperedges));
}

std::string instanceFileName(const Scenario& scenario, int index) {
    return "s" + std::to_string(scenario.n) + "_" + std::to_string(scenario.density) + "_" +
           std::to_string(scenario.type) + "_" + std::to_string(scenario.seed) + "_" + std::to_string(index) +
           ".mci";
}

}  // namespace mci
