#ifndef SYZGRAPH_SYZYGY_GRAPH_HPP
#define SYZGRAPH_SYZYGY_GRAPH_HPP

#include "syzgraph/graph.hpp"
#include "syzgraph/ideal.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace syz {

// Audit record for one triangle-pruning step: `edge` was removed because
// `triangle` (ascending generator indices) had all three pairwise lcms
// equal.
struct PrunedEdge {
    std::pair<int, int> edge;
    std::array<int, 3> triangle;
};

// The first-linear-syzygy graph of an equigenerated squarefree monomial
// ideal: vertices are generator indices 1..m, {i,j} is a raw edge iff
// x·u_i = y·u_j for single variables x, y (equivalently both support
// differences are singletons), and every triangle whose three pairwise
// lcms coincide has lost its lexicographically largest edge.
struct SyzygyGraph {
    IndexGraph graph;               // vertices + surviving edges
    std::vector<PrunedEdge> pruned; // removals, in the order applied

    int vertexCount() const { return graph.vertexCount(); }

    // Graph before pruning (edges ∪ pruned edges).
    IndexGraph rawGraph() const;
};

// Builds the graph.  Throws input_error for the zero ideal, a degree-0
// generator, or mixed generator degrees ("graph undefined for mixed
// degrees").
SyzygyGraph buildSyzygyGraph(const MonomialIdeal& I);

inline GraphShape classifyShape(const SyzygyGraph& g) { return classifyGraph(g.graph); }

// Subgraph of G induced on {w : F(u_w) ⊆ F(u_a) ∪ F(u_b)}.  Pruning
// records are restricted to surviving vertex pairs.
SyzygyGraph inducedPairSubgraph(const SyzygyGraph& g, const MonomialIdeal& I, int a, int b);

// Linear-relations test by pair-subgraph connectivity: true iff every
// induced pair subgraph G^{(a,b)} is connected.  On failure, `certificate`
// is the lexicographically least violating pair.
struct LinearRelationsResult {
    bool value = true;
    std::optional<std::pair<int, int>> certificate;
};

LinearRelationsResult hasLinearRelationsCombinatorial(const MonomialIdeal& I);

// Composes the edge syzygies x·u_i = y·u_j along a walk and cancels common
// factors, yielding squarefree multipliers with
//   first · u_{path.front()} = second · u_{path.back()}.
// Throws input_error if consecutive vertices are not adjacent in g.
std::pair<SqfMonomial, SqfMonomial> pathMultipliers(const SyzygyGraph& g, const MonomialIdeal& I,
                                                    const std::vector<int>& path);

} // namespace syz

#endif
