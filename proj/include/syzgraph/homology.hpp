#ifndef SYZGRAPH_HOMOLOGY_HPP
#define SYZGRAPH_HOMOLOGY_HPP

#include "syzgraph/caps.hpp"
#include "syzgraph/field.hpp"

#include <cstdint>
#include <vector>

namespace syz {

struct SimplicialComplex;

// Reduced homology dimensions of a simplicial complex over a field.
// dims[k+1] = dim H̃_k for k = -1 .. topDimension().  Conventions: the
// void complex (no faces at all) has every H̃ = 0 and an empty dims list;
// the empty complex {∅} has H̃_{-1} = 1.
struct HomologyProfile {
    std::vector<long long> dims;

    long long reduced(int k) const {
        int idx = k + 1;
        return (idx >= 0 && idx < static_cast<int>(dims.size())) ? dims[idx] : 0;
    }
    int topDimension() const { return static_cast<int>(dims.size()) - 2; }
    bool allZero() const {
        for (long long d : dims)
            if (d != 0) return false;
        return true;
    }
};

// Homology from an explicit face list (bitmasks over variables, including
// the empty face; an empty list is the void complex).  The list need not
// be sorted; it must be downward closed.
HomologyProfile homologyOfFaceList(std::vector<std::uint64_t> faces, const FieldSpec& field);

// Homology of the complex generated by the given facets (faces are the
// downward closure).  Throws resource_error if the vertex count exceeds
// caps.oracleVars or the face count exceeds caps.oracleFaces.
HomologyProfile reducedHomology(const SimplicialComplex& K, const FieldSpec& field,
                                const Caps& caps = {});

// Exact matrix ranks (exposed for direct testing).  Rational rank uses
// fraction-free Bareiss elimination on big integers; GF(p) uses modular
// elimination.
int matrixRankRational(const std::vector<std::vector<long long>>& M);
int matrixRankModP(const std::vector<std::vector<long long>>& M, std::int64_t p);

} // namespace syz

#endif
