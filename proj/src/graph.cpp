#include "syzgraph/graph.hpp"

#include "syzgraph/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace syz {

bool IndexGraph::hasVertex(int v) const {
    return std::binary_search(verts.begin(), verts.end(), v);
}

bool IndexGraph::hasEdge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

int IndexGraph::degreeOf(int v) const {
    int d = 0;
    for (const auto& e : edges)
        if (e.first == v || e.second == v) ++d;
    return d;
}

std::vector<int> IndexGraph::neighborsOf(int v) const {
    std::vector<int> out;
    for (const auto& e : edges) {
        if (e.first == v) out.push_back(e.second);
        else if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void IndexGraph::normalize() {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

IndexGraph emptyGraph(int m) {
    IndexGraph g;
    for (int i = 1; i <= m; ++i) g.verts.push_back(i);
    return g;
}

IndexGraph inducedSubgraph(const IndexGraph& g, const std::vector<int>& vertIds) {
    IndexGraph sub;
    sub.verts = vertIds;
    std::sort(sub.verts.begin(), sub.verts.end());
    sub.verts.erase(std::unique(sub.verts.begin(), sub.verts.end()), sub.verts.end());
    for (int v : sub.verts)
        if (!g.hasVertex(v)) throw input_error("induced subgraph: unknown vertex id " + std::to_string(v));
    for (const auto& e : g.edges)
        if (std::binary_search(sub.verts.begin(), sub.verts.end(), e.first) &&
            std::binary_search(sub.verts.begin(), sub.verts.end(), e.second))
            sub.edges.push_back(e);
    return sub;
}

std::vector<std::vector<int>> connectedComponents(const IndexGraph& g) {
    std::map<int, int> comp; // vertex -> component id (smallest member)
    std::vector<std::vector<int>> out;
    for (int v : g.verts) {
        if (comp.count(v)) continue;
        std::vector<int> members;
        std::deque<int> queue{v};
        comp[v] = v;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            members.push_back(u);
            for (int w : g.neighborsOf(u)) {
                if (!comp.count(w)) {
                    comp[w] = v;
                    queue.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<int> treePath(const IndexGraph& g, int a, int b) {
    if (!g.hasVertex(a) || !g.hasVertex(b))
        throw input_error("treePath: vertex not in graph");
    std::map<int, int> parent;
    std::deque<int> queue{a};
    parent[a] = a;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == b) break;
        for (int w : g.neighborsOf(u))
            if (!parent.count(w)) {
                parent[w] = u;
                queue.push_back(w);
            }
    }
    if (!parent.count(b)) return {};
    std::vector<int> path{b};
    while (path.back() != a) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::string shapeTagName(ShapeTag t) {
    switch (t) {
        case ShapeTag::Line: return "line";
        case ShapeTag::Cycle: return "cycle";
        case ShapeTag::Tree: return "tree";
        case ShapeTag::Complete: return "complete";
        case ShapeTag::ConnectedOther: return "connectedOther";
        case ShapeTag::Disconnected: return "disconnected";
    }
    return "?";
}

static std::vector<int> lineWitness(const IndexGraph& g) {
    if (g.verts.size() == 1) return {g.verts.front()};
    std::vector<int> ends;
    for (int v : g.verts)
        if (g.degreeOf(v) == 1) ends.push_back(v);
    std::vector<int> order{std::min(ends[0], ends[1])};
    int prev = -1;
    while (order.size() < g.verts.size()) {
        for (int w : g.neighborsOf(order.back()))
            if (w != prev) {
                prev = order.back();
                order.push_back(w);
                break;
            }
    }
    return order;
}

static std::vector<int> cycleWitness(const IndexGraph& g) {
    int start = g.verts.front();
    auto nb = g.neighborsOf(start);
    std::vector<int> order{start, nb.front()};
    while (order.size() < g.verts.size()) {
        int prev = order[order.size() - 2];
        for (int w : g.neighborsOf(order.back()))
            if (w != prev) {
                order.push_back(w);
                break;
            }
    }
    return order;
}

GraphShape classifyGraph(const IndexGraph& g) {
    GraphShape shape;
    int m = g.vertexCount();
    if (m == 0) {
        shape.tag = ShapeTag::Line; // empty graph: degenerate line
        return shape;
    }
    if (connectedComponents(g).size() > 1) {
        shape.tag = ShapeTag::Disconnected;
        return shape;
    }
    if (m <= 2) {
        shape.tag = ShapeTag::Line;
        shape.witness = g.verts;
        return shape;
    }
    bool allDegreeTwo = true;
    int maxDeg = 0, leafCount = 0;
    for (int v : g.verts) {
        int d = g.degreeOf(v);
        allDegreeTwo = allDegreeTwo && d == 2;
        maxDeg = std::max(maxDeg, d);
        if (d == 1) ++leafCount;
    }
    if (allDegreeTwo) { // connected 2-regular: a cycle (K_3 reports as cycle(3))
        shape.tag = ShapeTag::Cycle;
        shape.cycleLength = m;
        shape.witness = cycleWitness(g);
        return shape;
    }
    if (g.edgeCount() == m * (m - 1) / 2) {
        shape.tag = ShapeTag::Complete;
        return shape;
    }
    if (g.edgeCount() == m - 1) { // connected and acyclic
        if (maxDeg <= 2 && leafCount == 2) {
            shape.tag = ShapeTag::Line;
            shape.witness = lineWitness(g);
        } else {
            shape.tag = ShapeTag::Tree;
        }
        return shape;
    }
    shape.tag = ShapeTag::ConnectedOther;
    return shape;
}

} // namespace syz
