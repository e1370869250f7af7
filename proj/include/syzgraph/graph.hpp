#ifndef SYZGRAPH_GRAPH_HPP
#define SYZGRAPH_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace syz {

// A simple undirected graph on an explicit, ascending list of integer
// vertex ids (generator or facet indices, 1-based).  Edges are stored as
// id pairs {a, b} with a < b, sorted lexicographically.
struct IndexGraph {
    std::vector<int> verts;
    std::vector<std::pair<int, int>> edges;

    int vertexCount() const { return static_cast<int>(verts.size()); }
    int edgeCount() const { return static_cast<int>(edges.size()); }

    bool hasVertex(int v) const;
    bool hasEdge(int a, int b) const;
    int degreeOf(int v) const;
    std::vector<int> neighborsOf(int v) const;

    // Normalize: sort vertex list, orient and sort edges, drop duplicates.
    void normalize();
};

// Graph on vertices {1..m} with no edges.
IndexGraph emptyGraph(int m);

// Subgraph induced on the given vertex ids (need not be sorted).
IndexGraph inducedSubgraph(const IndexGraph& g, const std::vector<int>& vertIds);

// Connected components as sorted vertex-id lists, ordered by smallest id.
std::vector<std::vector<int>> connectedComponents(const IndexGraph& g);

inline bool isConnected(const IndexGraph& g) {
    return g.verts.empty() || connectedComponents(g).size() == 1;
}

// Unique path between two vertices of a forest (empty if none exists).
std::vector<int> treePath(const IndexGraph& g, int a, int b);

enum class ShapeTag { Line, Cycle, Tree, Complete, ConnectedOther, Disconnected };

std::string shapeTagName(ShapeTag t);

// Shape of a graph, with a witness ordering:
//  - Line:  vertices in path order, starting at the smaller-id endpoint;
//  - Cycle: vertices in cyclic order, starting at the smallest id and
//           continuing toward its smaller-id neighbor;
//  - Tree / Complete / ConnectedOther / Disconnected: witness empty.
// Precedence for ambiguous cases: a single vertex or a single edge is a
// Line; a connected 2-regular graph is a Cycle with cycleLength =
// vertexCount (so a triangle reports cycle(3), not Complete); Tree means
// acyclic, connected and not a Line.
struct GraphShape {
    ShapeTag tag = ShapeTag::Disconnected;
    int cycleLength = 0;
    std::vector<int> witness;
};

GraphShape classifyGraph(const IndexGraph& g);

} // namespace syz

#endif
