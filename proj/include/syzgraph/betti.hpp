#ifndef SYZGRAPH_BETTI_HPP
#define SYZGRAPH_BETTI_HPP

#include "syzgraph/caps.hpp"
#include "syzgraph/field.hpp"
#include "syzgraph/homology.hpp"
#include "syzgraph/ideal.hpp"

#include <map>
#include <string>
#include <utility>

namespace syz {

// Graded Betti numbers β_{i,j}(I) of the ideal (not of S/I): β_{0,d}
// counts degree-d minimal generators.  Absent entries are zero.
struct BettiTable {
    FieldSpec field;
    std::map<std::pair<int, int>, long long> entries; // (i, j) -> β_{i,j} > 0

    long long beta(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    int projectiveDimension() const {
        int pd = 0;
        for (const auto& [ij, b] : entries)
            if (b > 0 && ij.first > pd) pd = ij.first;
        return pd;
    }
    long long totalBetti(int i) const {
        long long s = 0;
        for (const auto& [ij, b] : entries)
            if (ij.first == i) s += b;
        return s;
    }
};

// Ground truth via Hochster's formula: β_{i,j}(I) = Σ_{|W|=j} dim
// H̃_{j-i-2}(Δ|_W) where Δ is the Stanley–Reisner complex of I.
// Restrictions W whose induced complex is a cone (some vertex of W lies in
// no generator support inside W) are skipped — cones are acyclic.
// Throws input_error for the zero ideal or a degree-0 generator, and
// resource_error beyond caps.
BettiTable bettiTable(const MonomialIdeal& I, const FieldSpec& field, const Caps& caps = {});

// Boolean verdict plus an equigeneration warning: a d-linear resolution
// forces all generators into one degree, so mixed degrees report
// {false, warning=true} by convention.
struct LinearVerdict {
    bool value = false;
    bool mixedDegreeWarning = false;
};

// β_{i,j} = 0 whenever j ≠ i + d.
LinearVerdict hasLinearResolution(const MonomialIdeal& I, const FieldSpec& field,
                                  const Caps& caps = {});

// β_{1,j} = 0 whenever j ≠ d + 1 (first syzygies all linear).
LinearVerdict hasLinearRelationsOracle(const MonomialIdeal& I, const FieldSpec& field,
                                       const Caps& caps = {});

// max{i : β_{i,j} ≠ 0 for some j}.
int projDim(const MonomialIdeal& I, const FieldSpec& field, const Caps& caps = {});

// Macaulay-style rows: columns are homological degrees i, row r holds
// β_{i, i+r}, zero entries printed as '.'.
std::string renderBettiTable(const BettiTable& t);

} // namespace syz

#endif
