#ifndef SYZGRAPH_IDEAL_HPP
#define SYZGRAPH_IDEAL_HPP

#include "syzgraph/monomial.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace syz {

// A squarefree monomial ideal in k[x_1..x_n], held by its minimal
// generating set.  Invariants: 1 ≤ maxVar of every generator ≤ n ≤ kMaxVars,
// generators are pairwise incomparable under divisibility (an antichain),
// and their order is the input order that survived minimalization.
struct MonomialIdeal {
    int n = 0;
    std::vector<SqfMonomial> gens;

    int m() const { return static_cast<int>(gens.size()); }
    bool isZero() const { return gens.empty(); }

    // Degree shared by all generators, or nullopt if not equigenerated.
    // The zero ideal is vacuously equigenerated (returns nullopt degree 0
    // convention is avoided; callers treat m = 0 separately).
    std::optional<int> uniformDegree() const;

    // 1-based access to generator supports.
    const SqfMonomial& gen(int i) const { return gens[static_cast<std::size_t>(i) - 1]; }
};

// Drop every generator strictly divisible by another (and duplicates,
// keeping the first occurrence).  Survivors keep their relative order.
// Throws input_error if n is out of range or a generator uses a variable
// beyond n.
MonomialIdeal makeIdeal(int n, std::vector<SqfMonomial> gens);

// Whether `gens` is already an antichain without duplicates.
bool isMinimalGeneratingSet(const std::vector<SqfMonomial>& gens);

// (I_{x_l}, I^{x_l}): generators not divisible by x_l, and those divisible
// by x_l, in input order.  The pair partitions G(I).
std::pair<MonomialIdeal, MonomialIdeal> splitByVariable(const MonomialIdeal& I, int l);

// Text format:
//   line 1:            n <count>
//   following lines:   one generator as space-separated variable indices
// '#' starts a comment; blank lines are skipped.
struct ParsedIdeal {
    MonomialIdeal ideal;
    bool wasMinimal = true; // input generators already formed an antichain
};

ParsedIdeal parseIdealText(const std::string& text);
ParsedIdeal readIdealFile(const std::string& path);
std::string printIdealText(const MonomialIdeal& I);

// Shared raw grammar: header `n <count>` plus one support set per line.
// No minimalization or maximalization applied.
std::pair<int, std::vector<SqfMonomial>> parseSupportText(const std::string& text);

// FNV-1a hash of the canonical text rendering; used as the input digest in
// reports.
std::uint64_t idealDigest(const MonomialIdeal& I);

} // namespace syz

#endif
