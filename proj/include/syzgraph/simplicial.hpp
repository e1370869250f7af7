#ifndef SYZGRAPH_SIMPLICIAL_HPP
#define SYZGRAPH_SIMPLICIAL_HPP

#include "syzgraph/caps.hpp"
#include "syzgraph/field.hpp"
#include "syzgraph/graph.hpp"
#include "syzgraph/ideal.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace syz {

// A simplicial complex on vertex set {1..n}, held by its facets (maximal
// faces, pairwise incomparable).  An empty facet list is the void complex;
// the single facet ∅ is the empty complex {∅}.
struct SimplicialComplex {
    int n = 0;
    std::vector<SqfMonomial> facets;

    int facetCount() const { return static_cast<int>(facets.size()); }
    bool isPure() const;
    // dim = max facet size − 1 (−1 for {∅}; −2 by convention for void).
    int dimension() const;
    const SqfMonomial& facet(int i) const { return facets[static_cast<std::size_t>(i) - 1]; }
};

// Keeps only maximal faces (first-occurrence order preserved).
SimplicialComplex makeComplex(int n, std::vector<SqfMonomial> faces);

// Text format: line 1 `n <count>`, then one facet per line as
// space-separated vertex indices; '#' comments.
struct ParsedComplex {
    SimplicialComplex complex;
    bool wasIrredundant = true; // input faces were already pairwise incomparable
};
ParsedComplex parseComplexText(const std::string& text);
ParsedComplex readComplexFile(const std::string& path);
std::string printComplexText(const SimplicialComplex& K);
std::uint64_t complexDigest(const SimplicialComplex& K);

// Alexander-dual ideal (x_{[n]\F_1}, …): generator i is the complement of
// facet i.  Errors when a facet equals [n] (its dual generator would be 1)
// or the facet list is empty.
MonomialIdeal dualIdeal(const SimplicialComplex& K);

// Stanley–Reisner complex of I: faces are the subsets of [n] containing no
// generator's support; returned by its facets.  For the zero ideal this is
// the full simplex.  Caps the 2^n sweep at caps.oracleVars.
SimplicialComplex stanleyReisnerComplex(const MonomialIdeal& I, const Caps& caps = {});

// Codimension-one facet adjacency: vertices are facet indices, {i,j} is an
// edge iff |F_i ∩ F_j| = |F_i| − 1.  Pure complexes only.  The result is
// checked against the dual ideal's raw syzygy graph (they coincide
// index-for-index) whenever the dual ideal exists.
IndexGraph facetGraph(const SimplicialComplex& K);

// Connectivity in codimension one.
bool isStronglyConnected(const SimplicialComplex& K);

// Δ^{(F,G)}: subcomplex generated by the facets containing F ∩ G, checked
// for strong connectivity.  Facets are addressed by index.
bool pairSubcomplexConnected(const SimplicialComplex& K, int fIdx, int gIdx);

// All-pairs version; on failure reports the first failing (i, j) pair.
struct PairConnectivity {
    bool value = true;
    std::optional<std::pair<int, int>> failure;
};
PairConnectivity allPairSubcomplexesConnected(const SimplicialComplex& K);

// Cohen–Macaulayness over the field, decided through the dual ideal's
// linear resolution (shape criteria first, oracle fallback).  Non-pure
// complexes report {false, "not pure"} rather than an error.
struct CmVerdict {
    bool value = false;
    std::string reason; // rule fired, or "not pure"
};
CmVerdict isCohenMacaulay(const SimplicialComplex& K, const FieldSpec& field,
                          const Caps& caps = {});

// Backtracking shelling search (pure complexes, facet count capped).
struct ShellingResult {
    bool value = false;
    std::vector<int> order; // facet indices; set when value is true
};
ShellingResult isShellable(const SimplicialComplex& K, const Caps& caps = {});

// Vertex-decomposability of a pure complex, via the dual ideal's
// variable-decomposability.
bool isVertexDecomposablePure(const SimplicialComplex& K);

// Shape-dispatched report for the facet graph G_Δ.  On line/cycle/tree
// shapes the matching corollary condition decides CM = shellable =
// vertex-decomposable; otherwise the three verdicts are computed
// independently (Eagon–Reiner, brute-force shelling, dual decomposition).
struct CmShapeReport {
    GraphShape shape;
    bool viaCorollary = false;
    std::optional<bool> corollaryCondition;
    std::string detail; // e.g. "fails: m != n" for short cycles
    bool cm = false;
    bool shellable = false;
    bool vertexDecomposable = false;
};
CmShapeReport cmShapeReport(const SimplicialComplex& K, const FieldSpec& field,
                            const Caps& caps = {});

} // namespace syz

#endif
