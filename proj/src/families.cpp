#include "syzgraph/families.hpp"

#include "syzgraph/errors.hpp"
#include "syzgraph/syzygy_graph.hpp"

#include <algorithm>
#include <set>

namespace syz {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // Rejection sampling on the top of the range keeps the draw unbiased.
    std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

std::uint64_t SplitMix64::subset(int n, int k) {
    // Floyd's algorithm: k draws, no retries.
    std::uint64_t mask = 0;
    for (int j = n - k + 1; j <= n; ++j) {
        int t = static_cast<int>(below(static_cast<std::uint64_t>(j))) + 1;
        std::uint64_t bit = std::uint64_t(1) << (t - 1);
        if (mask & bit) bit = std::uint64_t(1) << (j - 1);
        mask |= bit;
    }
    return mask;
}

MonomialIdeal pathIdealCycle(int n, int t) {
    if (n < 1 || t < 2 || t > n)
        throw input_error("path ideal of a cycle needs 2 <= t <= n");
    std::vector<SqfMonomial> gens;
    for (int start = 0; start < n; ++start) {
        SqfMonomial g;
        for (int off = 0; off < t; ++off)
            g.mask |= std::uint64_t(1) << ((start + off) % n);
        gens.push_back(g);
    }
    return makeIdeal(n, gens);
}

MonomialIdeal pathIdealLine(int n, int t) {
    if (n < 1 || t < 2 || t > n)
        throw input_error("path ideal of a line needs 2 <= t <= n");
    std::vector<SqfMonomial> gens;
    for (int start = 0; start + t <= n; ++start) {
        SqfMonomial g;
        for (int off = 0; off < t; ++off) g.mask |= std::uint64_t(1) << (start + off);
        gens.push_back(g);
    }
    return makeIdeal(n, gens);
}

MonomialIdeal cycleFamily(int n) {
    if (n < 4) throw input_error("cycle family needs n >= 4");
    std::uint64_t full = (std::uint64_t(1) << n) - 1;
    std::vector<SqfMonomial> gens;
    for (int j = 0; j < n; ++j) {
        std::uint64_t pair = (std::uint64_t(1) << j) | (std::uint64_t(1) << ((j + 1) % n));
        gens.push_back(SqfMonomial(full & ~pair));
    }
    return makeIdeal(n, gens);
}

MonomialIdeal randomTreeIdeal(int n, int m, std::uint64_t seed) {
    if (n < 2 || m < 1) throw input_error("random tree ideal needs n >= 2, m >= 1");
    const int kRetries = 512;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        SplitMix64 rng(seed + 0x9E3779B97F4A7C15ull * std::uint64_t(attempt));
        int dmax = std::max(2, n - 2);
        int d = 2 + static_cast<int>(rng.below(std::uint64_t(dmax - 1)));
        std::vector<SqfMonomial> gens{SqfMonomial(rng.subset(n, d))};
        bool stuck = false;
        while (static_cast<int>(gens.size()) < m && !stuck) {
            // swap one variable of a random existing support
            bool placed = false;
            for (int tries = 0; tries < 64 && !placed; ++tries) {
                const SqfMonomial& base =
                    gens[rng.below(gens.size())];
                auto present = base.vars();
                int out = present[rng.below(present.size())];
                int in = 1 + static_cast<int>(rng.below(std::uint64_t(n)));
                if (base.contains(in)) continue;
                SqfMonomial cand(
                    (base.mask & ~(std::uint64_t(1) << (out - 1))) |
                    (std::uint64_t(1) << (in - 1)));
                int adjacentCount = 0;
                bool duplicate = false;
                for (const auto& g : gens) {
                    if (g == cand) duplicate = true;
                    if (colonOf(g, cand).degree() == 1 && colonOf(cand, g).degree() == 1)
                        ++adjacentCount;
                }
                if (duplicate || adjacentCount != 1) continue;
                gens.push_back(cand);
                placed = true;
            }
            stuck = !placed;
        }
        if (stuck) continue;
        MonomialIdeal I = makeIdeal(n, gens);
        if (I.m() != m) continue;
        GraphShape shape = classifyShape(buildSyzygyGraph(I));
        if (shape.tag == ShapeTag::Tree || shape.tag == ShapeTag::Line) return I;
    }
    throw resource_error("random tree ideal: retry budget exhausted");
}

MonomialIdeal randomIdeal(int n, int m, int d, std::uint64_t seed) {
    if (n < 1 || d < 1 || d > n || m < 1) throw input_error("random ideal: bad parameters");
    // C(n, d) distinct supports must exist.
    long long room = 1;
    for (int i = 0; i < d; ++i) room = room * (n - i) / (i + 1);
    if (m > room) throw input_error("random ideal: m exceeds the number of degree-d supports");
    SplitMix64 rng(seed);
    std::set<std::uint64_t> chosen;
    while (static_cast<int>(chosen.size()) < m) chosen.insert(rng.subset(n, d));
    std::vector<SqfMonomial> gens;
    for (std::uint64_t mask : chosen) gens.push_back(SqfMonomial(mask));
    return makeIdeal(n, gens);
}

SimplicialComplex randomPureComplex(int n, int m, std::uint64_t seed) {
    if (n < 3 || m < 1) throw input_error("random pure complex: bad parameters");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 256; ++attempt) {
        int k = 2 + static_cast<int>(rng.below(std::uint64_t(n - 2))); // 2..n-1
        long long room = 1;
        for (int i = 0; i < k; ++i) room = room * (n - i) / (i + 1);
        if (room < m) continue;
        std::set<std::uint64_t> chosen;
        while (static_cast<int>(chosen.size()) < m) chosen.insert(rng.subset(n, k));
        std::vector<SqfMonomial> facets;
        for (std::uint64_t mask : chosen) facets.push_back(SqfMonomial(mask));
        return makeComplex(n, facets);
    }
    throw resource_error("random pure complex: retry budget exhausted");
}

MonomialIdeal mutateOneGenerator(const MonomialIdeal& I, std::uint64_t seed) {
    if (I.isZero()) throw input_error("mutate: zero ideal");
    SplitMix64 rng(seed);
    int gi = 1 + static_cast<int>(rng.below(std::uint64_t(I.m())));
    const SqfMonomial& base = I.gen(gi);
    auto present = base.vars();
    if (present.empty() || base.degree() == I.n)
        throw input_error("mutate: generator cannot be perturbed");
    int out = present[rng.below(present.size())];
    int in;
    do {
        in = 1 + static_cast<int>(rng.below(std::uint64_t(I.n)));
    } while (base.contains(in));
    std::vector<SqfMonomial> gens = I.gens;
    gens[gi - 1] = SqfMonomial((base.mask & ~(std::uint64_t(1) << (out - 1))) |
                               (std::uint64_t(1) << (in - 1)));
    return makeIdeal(I.n, gens);
}

} // namespace syz
