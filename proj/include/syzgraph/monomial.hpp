#ifndef SYZGRAPH_MONOMIAL_HPP
#define SYZGRAPH_MONOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace syz {

// Variables are indexed 1..kMaxVars.
inline constexpr int kMaxVars = 64;

// A squarefree monomial, identified with its support set F(u) ⊆ {1..n}.
// Bit v-1 of `mask` is set iff variable x_v divides the monomial.
// Multiplication is union, divisibility is containment, the colon by
// another squarefree monomial is set difference.
struct SqfMonomial {
    std::uint64_t mask = 0;

    SqfMonomial() = default;
    explicit SqfMonomial(std::uint64_t m) : mask(m) {}
    SqfMonomial(std::initializer_list<int> vars);

    static SqfMonomial fromVars(const std::vector<int>& vars);

    int  degree() const { return __builtin_popcountll(mask); }
    bool isOne() const { return mask == 0; }
    bool contains(int v) const { return (mask >> (v - 1)) & 1u; }
    bool divides(const SqfMonomial& other) const { return (mask & ~other.mask) == 0; }

    // Largest variable index in the support (0 for the monomial 1).
    int maxVar() const { return mask == 0 ? 0 : 64 - __builtin_clzll(mask); }

    // Support as an ascending list of variable indices.
    std::vector<int> vars() const;

    friend bool operator==(const SqfMonomial& a, const SqfMonomial& b) { return a.mask == b.mask; }
    friend bool operator!=(const SqfMonomial& a, const SqfMonomial& b) { return a.mask != b.mask; }
    // Lexicographic order on sorted variable lists: x1x2x3 < x1x2x4 < x1x4x5.
    friend bool operator<(const SqfMonomial& a, const SqfMonomial& b);
};

// lcm(u, v): union of supports.
inline SqfMonomial lcmOf(const SqfMonomial& a, const SqfMonomial& b) {
    return SqfMonomial(a.mask | b.mask);
}

// gcd(u, v): intersection of supports.
inline SqfMonomial gcdOf(const SqfMonomial& a, const SqfMonomial& b) {
    return SqfMonomial(a.mask & b.mask);
}

// u : v for squarefree u, v — the monomial with support F(u) \ F(v).
inline SqfMonomial colonOf(const SqfMonomial& a, const SqfMonomial& b) {
    return SqfMonomial(a.mask & ~b.mask);
}

// "x1 x2 x5"-free rendering: space-separated variable indices ("1 2 5").
std::string toIndexString(const SqfMonomial& u);

// Algebraic rendering for messages: "x1*x2*x5" ("1" for the unit).
std::string toMonomialString(const SqfMonomial& u);

} // namespace syz

#endif
