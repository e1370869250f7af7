#ifndef SYZGRAPH_FAMILIES_HPP
#define SYZGRAPH_FAMILIES_HPP

#include "syzgraph/ideal.hpp"
#include "syzgraph/simplicial.hpp"

#include <cstdint>

namespace syz {

// SplitMix64 (Steele–Lea–Vigna): tiny, splittable, and fully specified by
// its constants, so seeded instances reproduce across implementations.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // Uniform in [0, bound) by rejection (bound ≥ 1).
    std::uint64_t below(std::uint64_t bound);
    // Uniform k-subset of {1..n} as a support mask.
    std::uint64_t subset(int n, int k);
};

// Path ideal of the directed n-cycle: the n cyclic windows of length t.
// (Windows may coincide for t = n; the result is minimalized.)
MonomialIdeal pathIdealCycle(int n, int t);

// Path ideal of the line L_n: the n−t+1 consecutive windows of length t.
MonomialIdeal pathIdealLine(int n, int t);

// u_j = x_{[n] \ {j, j+1 mod n}} for j = 1..n: the degree-(n−2) family
// whose syzygy graph is the n-cycle with the missing-pair labeling.
MonomialIdeal cycleFamily(int n);

// Seeded random equigenerated ideal whose syzygy graph is a tree: a swap
// walk adds supports adjacent to exactly one previous support, rebuilding
// from a derived sub-seed on dead ends.  Throws resource_error after the
// retry budget.
MonomialIdeal randomTreeIdeal(int n, int m, std::uint64_t seed);

// Seeded random ideal: m distinct degree-d supports (no shape guarantee;
// the result is minimal since supports are distinct and equal-sized).
MonomialIdeal randomIdeal(int n, int m, int d, std::uint64_t seed);

// Seeded random pure complex: m distinct size-k facets with k drawn from
// [2, n−1]; dual-compatible by construction (no facet equals [n]).
SimplicialComplex randomPureComplex(int n, int m, std::uint64_t seed);

// Mutates one generator of a (minimal, equigenerated) ideal by swapping
// one variable of one generator for a variable outside it; the result is
// re-minimalized.  Used to probe criterion/oracle agreement near the
// structured families.
MonomialIdeal mutateOneGenerator(const MonomialIdeal& I, std::uint64_t seed);

} // namespace syz

#endif
