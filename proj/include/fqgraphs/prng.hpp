#pragma once
// Deterministic PRNG for all sampling code.
//
// SplitMix64 (Steele, Lea & Flood, OOPSLA 2014): state advances by the
// golden-ratio increment 0x9e3779b97f4a7c15 and the output is a finalizing
// mix of the state. 64-bit state, period 2^64, identical output on every
// platform. Substreams are derived from (master seed, a, b) so experiment
// trials and worker tasks are reproducible independently of scheduling.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace fqg {

class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n); the modulo bias (< n / 2^64) is irrelevant at the
    // universe sizes used here
    uint64_t below(uint64_t n) { return next() % n; }

    bool coin() { return next() >> 63; }

private:
    uint64_t state_;
};

// substream seed for (master, a, b): two chained SplitMix64 hops, each
// xor-folding one coordinate in
inline uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b = 0) {
    SplitMix64 g(master);
    SplitMix64 h(g.next() ^ (a * 0x9e3779b97f4a7c15ull));
    return h.next() ^ (b * 0xd1b54a32d192ed03ull);
}

// k distinct values from {0,...,n-1} by partial Fisher-Yates, returned sorted
inline std::vector<uint32_t> sample_subset(SplitMix64& g, uint32_t n, uint32_t k) {
    std::vector<uint32_t> pool(n);
    for (uint32_t i = 0; i < n; i++) pool[i] = i;
    for (uint32_t i = 0; i < k; i++) {
        uint32_t j = i + static_cast<uint32_t>(g.below(n - i));
        std::swap(pool[i], pool[j]);
    }
    std::vector<uint32_t> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fqg
