#include "syzgraph/syzygy_graph.hpp"

#include "syzgraph/errors.hpp"

#include <algorithm>
#include <set>

namespace syz {

IndexGraph SyzygyGraph::rawGraph() const {
    IndexGraph raw = graph;
    for (const auto& p : pruned) raw.edges.push_back(p.edge);
    raw.normalize();
    return raw;
}

static bool isRawEdge(const SqfMonomial& a, const SqfMonomial& b) {
    return colonOf(a, b).degree() == 1 && colonOf(b, a).degree() == 1;
}

SyzygyGraph buildSyzygyGraph(const MonomialIdeal& I) {
    if (I.m() == 0) throw input_error("syzygy graph undefined for the zero ideal");
    auto d = I.uniformDegree();
    if (!d) throw input_error("graph undefined for mixed degrees");
    if (*d < 1) throw input_error("syzygy graph undefined for a degree-0 generator");

    int m = I.m();
    std::set<std::pair<int, int>> edges;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            if (isRawEdge(I.gen(i), I.gen(j))) edges.insert({i, j});

    // Remove one edge of every triangle whose three pairwise lcms coincide.
    // Triples are scanned in lexicographic order and the lexicographically
    // largest edge {j,k} of a surviving triangle is dropped; passes repeat
    // until none fires (removals cannot create triangles, so this settles).
    std::vector<PrunedEdge> pruned;
    bool removedAny = true;
    while (removedAny) {
        removedAny = false;
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                if (!edges.count({i, j})) continue;
                for (int k = j + 1; k <= m; ++k) {
                    if (!edges.count({i, k}) || !edges.count({j, k})) continue;
                    SqfMonomial lij = lcmOf(I.gen(i), I.gen(j));
                    SqfMonomial lik = lcmOf(I.gen(i), I.gen(k));
                    SqfMonomial ljk = lcmOf(I.gen(j), I.gen(k));
                    if (lij == lik && lik == ljk) {
                        edges.erase({j, k});
                        pruned.push_back(PrunedEdge{{j, k}, {i, j, k}});
                        removedAny = true;
                    }
                }
            }
    }

    SyzygyGraph g;
    g.graph = emptyGraph(m);
    g.graph.edges.assign(edges.begin(), edges.end());
    g.pruned = std::move(pruned);
    return g;
}

SyzygyGraph inducedPairSubgraph(const SyzygyGraph& g, const MonomialIdeal& I, int a, int b) {
    if (a < 1 || a > I.m() || b < 1 || b > I.m())
        throw input_error("pair subgraph: generator index out of range");
    SqfMonomial bound = lcmOf(I.gen(a), I.gen(b));
    std::vector<int> keep;
    for (int w = 1; w <= I.m(); ++w)
        if (I.gen(w).divides(bound)) keep.push_back(w);
    SyzygyGraph sub;
    sub.graph = inducedSubgraph(g.graph, keep);
    for (const auto& p : g.pruned)
        if (sub.graph.hasVertex(p.edge.first) && sub.graph.hasVertex(p.edge.second))
            sub.pruned.push_back(p);
    return sub;
}

LinearRelationsResult hasLinearRelationsCombinatorial(const MonomialIdeal& I) {
    SyzygyGraph g = buildSyzygyGraph(I);
    LinearRelationsResult res;
    for (int a = 1; a <= I.m(); ++a)
        for (int b = a + 1; b <= I.m(); ++b) {
            SyzygyGraph sub = inducedPairSubgraph(g, I, a, b);
            if (!isConnected(sub.graph)) {
                res.value = false;
                res.certificate = {a, b};
                return res;
            }
        }
    return res;
}

std::pair<SqfMonomial, SqfMonomial> pathMultipliers(const SyzygyGraph& g, const MonomialIdeal& I,
                                                    const std::vector<int>& path) {
    if (path.empty()) throw input_error("pathMultipliers: empty walk");
    for (int v : path)
        if (!g.graph.hasVertex(v)) throw input_error("pathMultipliers: unknown vertex");

    // Compose with integer exponents, then cancel the gcd.  The cancelled
    // multipliers are squarefree: their exponents differ by at most one in
    // every variable and share no common factor.
    std::array<int, kMaxVars> ea{}, eb{};
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
        int u = path[s], v = path[s + 1];
        if (!g.graph.hasEdge(u, v))
            throw input_error("pathMultipliers: vertices " + std::to_string(u) + " and " +
                              std::to_string(v) + " are not adjacent");
        // x_sVar · u_u = x_tVar · u_v, so the left multiplier gains sVar
        // and the right gains tVar.
        int sVar = colonOf(I.gen(v), I.gen(u)).vars().front();
        int tVar = colonOf(I.gen(u), I.gen(v)).vars().front();
        ++ea[sVar - 1];
        ++eb[tVar - 1];
    }
    SqfMonomial wa, wb;
    for (int v = 0; v < kMaxVars; ++v) {
        int common = std::min(ea[v], eb[v]);
        ea[v] -= common;
        eb[v] -= common;
        if (ea[v] > 0) wa.mask |= std::uint64_t(1) << v;
        if (eb[v] > 0) wb.mask |= std::uint64_t(1) << v;
    }
    return {wa, wb};
}

} // namespace syz
