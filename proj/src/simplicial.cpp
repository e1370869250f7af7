#include "syzgraph/simplicial.hpp"

#include "syzgraph/errors.hpp"
#include "syzgraph/structure.hpp"
#include "syzgraph/syzygy_graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace syz {

bool SimplicialComplex::isPure() const {
    for (const auto& f : facets)
        if (f.degree() != facets.front().degree()) return false;
    return true;
}

int SimplicialComplex::dimension() const {
    if (facets.empty()) return -2;
    int d = -1;
    for (const auto& f : facets) d = std::max(d, f.degree() - 1);
    return d;
}

SimplicialComplex makeComplex(int n, std::vector<SqfMonomial> faces) {
    if (n < 1 || n > kMaxVars)
        throw input_error("vertex count n = " + std::to_string(n) + " out of range 1.." +
                          std::to_string(kMaxVars));
    for (const auto& f : faces)
        if (f.maxVar() > n)
            throw input_error("facet uses a vertex beyond n = " + std::to_string(n));
    std::vector<SqfMonomial> kept;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool covered = false;
        for (std::size_t j = 0; j < faces.size() && !covered; ++j) {
            if (j == i || !faces[i].divides(faces[j])) continue;
            if (faces[i] != faces[j] || j < i) covered = true;
        }
        if (!covered) kept.push_back(faces[i]);
    }
    return SimplicialComplex{n, std::move(kept)};
}

ParsedComplex parseComplexText(const std::string& text) {
    auto [n, faces] = parseSupportText(text);
    ParsedComplex out;
    out.complex = makeComplex(n, faces);
    out.wasIrredundant = out.complex.facetCount() == static_cast<int>(faces.size());
    return out;
}

ParsedComplex readComplexFile(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot open complex file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parseComplexText(buf.str());
}

std::string printComplexText(const SimplicialComplex& K) {
    std::ostringstream os;
    os << "n " << K.n << '\n';
    for (const auto& f : K.facets) os << toIndexString(f) << '\n';
    return os.str();
}

std::uint64_t complexDigest(const SimplicialComplex& K) {
    std::string s = printComplexText(K);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

MonomialIdeal dualIdeal(const SimplicialComplex& K) {
    if (K.facets.empty()) throw input_error("dual ideal: empty facet list");
    std::uint64_t full = (K.n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << K.n) - 1);
    std::vector<SqfMonomial> gens;
    for (const auto& f : K.facets) {
        if (f.mask == full)
            throw input_error("dual ideal: facet equals the whole vertex set");
        gens.push_back(SqfMonomial(full & ~f.mask));
    }
    // Complements of an incomparable family are incomparable; makeIdeal
    // keeps all of them (index-for-index with the facets).
    MonomialIdeal I = makeIdeal(K.n, gens);
    return I;
}

SimplicialComplex stanleyReisnerComplex(const MonomialIdeal& I, const Caps& caps) {
    if (I.n > caps.oracleVars)
        throw resource_error("Stanley-Reisner sweep: n exceeds cap");
    std::uint64_t full = (std::uint64_t(1) << I.n) - 1;
    std::vector<char> isFace(std::size_t(1) << I.n, 1);
    for (const auto& g : I.gens) isFace[g.mask] = 0;
    for (std::uint64_t s = 0; s <= full; ++s) {
        if (isFace[s]) continue;
        for (int v = 0; v < I.n; ++v) isFace[s | (std::uint64_t(1) << v)] = 0;
    }
    // Collect maximal faces: a face all of whose one-bit extensions are
    // non-faces.
    std::vector<SqfMonomial> facets;
    for (std::uint64_t s = 0; s <= full; ++s) {
        if (!isFace[s]) continue;
        bool maximal = true;
        for (int v = 0; v < I.n && maximal; ++v) {
            std::uint64_t t = s | (std::uint64_t(1) << v);
            if (t != s && isFace[t]) maximal = false;
        }
        if (maximal) facets.push_back(SqfMonomial(s));
    }
    return SimplicialComplex{I.n, std::move(facets)};
}

IndexGraph facetGraph(const SimplicialComplex& K) {
    if (!K.isPure()) throw input_error("facet graph requires a pure complex");
    int m = K.facetCount();
    IndexGraph g = emptyGraph(m);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            if (gcdOf(K.facet(i), K.facet(j)).degree() == K.facet(i).degree() - 1)
                g.edges.push_back({i, j});
    g.normalize();

    // §4 identity: G_Δ is the dual ideal's raw syzygy graph, index for
    // index (checked whenever the dual exists, i.e. no facet is [n]).
    bool dualExists = m >= 1;
    std::uint64_t full = (K.n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << K.n) - 1);
    for (const auto& f : K.facets)
        if (f.mask == full) dualExists = false;
    if (dualExists) {
        IndexGraph raw = buildSyzygyGraph(dualIdeal(K)).rawGraph();
        if (raw.edges != g.edges)
            throw std::logic_error("facet graph differs from dual syzygy graph");
    }
    return g;
}

bool isStronglyConnected(const SimplicialComplex& K) {
    return isConnected(facetGraph(K));
}

static SimplicialComplex pairSubcomplex(const SimplicialComplex& K, int fIdx, int gIdx) {
    if (fIdx < 1 || fIdx > K.facetCount() || gIdx < 1 || gIdx > K.facetCount())
        throw input_error("facet index out of range");
    SqfMonomial meet = gcdOf(K.facet(fIdx), K.facet(gIdx));
    SimplicialComplex sub;
    sub.n = K.n;
    for (const auto& f : K.facets)
        if (meet.divides(f)) sub.facets.push_back(f);
    return sub;
}

bool pairSubcomplexConnected(const SimplicialComplex& K, int fIdx, int gIdx) {
    if (!K.isPure()) throw input_error("pair subcomplex requires a pure complex");
    return isStronglyConnected(pairSubcomplex(K, fIdx, gIdx));
}

PairConnectivity allPairSubcomplexesConnected(const SimplicialComplex& K) {
    PairConnectivity res;
    for (int i = 1; i <= K.facetCount(); ++i)
        for (int j = i + 1; j <= K.facetCount(); ++j)
            if (!pairSubcomplexConnected(K, i, j)) {
                res.value = false;
                res.failure = {i, j};
                return res;
            }
    return res;
}

CmVerdict isCohenMacaulay(const SimplicialComplex& K, const FieldSpec& field, const Caps& caps) {
    if (!K.isPure()) return {false, "not pure"};
    ResolutionDecision dec = decideLinearResolution(dualIdeal(K), field, caps);
    return {dec.linear, dec.rule};
}

ShellingResult isShellable(const SimplicialComplex& K, const Caps& caps) {
    if (!K.isPure()) throw input_error("shelling search requires a pure complex");
    int m = K.facetCount();
    if (m > caps.shellFacets)
        throw resource_error("shelling search: facet count " + std::to_string(m) +
                             " exceeds cap " + std::to_string(caps.shellFacets));
    if (m <= 1) {
        ShellingResult r;
        r.value = true;
        for (int i = 1; i <= m; ++i) r.order.push_back(i);
        return r;
    }

    // Appending facet f to prefix set S is valid iff every intersection
    // F_j ∩ f (j ∈ S) extends to one of size |f|−1; this depends only on
    // the set S, so dead prefix sets are memoized.
    int fsize = K.facet(1).degree();
    auto accepts = [&](const std::vector<int>& used, int next) {
        for (int j : used) {
            SqfMonomial meet = gcdOf(K.facet(j), K.facet(next));
            bool extended = false;
            for (int k : used) {
                SqfMonomial big = gcdOf(K.facet(k), K.facet(next));
                if (big.degree() == fsize - 1 && meet.divides(big)) {
                    extended = true;
                    break;
                }
            }
            if (!extended) return false;
        }
        return true;
    };

    std::unordered_set<std::uint32_t> dead;
    std::vector<int> prefix;
    std::uint32_t usedMask = 0;
    std::function<bool()> search = [&]() -> bool {
        if (static_cast<int>(prefix.size()) == m) return true;
        if (dead.count(usedMask)) return false;
        for (int cand = 1; cand <= m; ++cand) {
            if (usedMask & (std::uint32_t(1) << (cand - 1))) continue;
            if (!accepts(prefix, cand)) continue;
            prefix.push_back(cand);
            usedMask |= std::uint32_t(1) << (cand - 1);
            if (search()) return true;
            usedMask &= ~(std::uint32_t(1) << (cand - 1));
            prefix.pop_back();
        }
        dead.insert(usedMask);
        return false;
    };

    ShellingResult r;
    if (search()) {
        r.value = true;
        r.order = prefix;
    }
    return r;
}

bool isVertexDecomposablePure(const SimplicialComplex& K) {
    if (!K.isPure()) throw input_error("vertex decomposability check requires a pure complex");
    return isVariableDecomposable(dualIdeal(K)).value;
}

CmShapeReport cmShapeReport(const SimplicialComplex& K, const FieldSpec& field, const Caps& caps) {
    if (!K.isPure()) throw input_error("shape report requires a pure complex");
    CmShapeReport rep;
    IndexGraph g = facetGraph(K);
    rep.shape = classifyGraph(g);
    MonomialIdeal dual = dualIdeal(K);

    if (rep.shape.tag == ShapeTag::Line) {
        rep.viaCorollary = true;
        rep.corollaryCondition = lineCriterion(dual);
        rep.detail = "facet-path intersections F_i ∩ F_j ⊆ F_k";
    } else if (rep.shape.tag == ShapeTag::Cycle && rep.shape.cycleLength >= 4) {
        rep.viaCorollary = true;
        // Cone vertices (in every facet) are invisible to the dual ideal,
        // so the facet count is compared against the dual support size.
        std::uint64_t dualSupport = 0;
        for (const auto& u : dual.gens) dualSupport |= u.mask;
        bool cond = cycleCriterion(dual);
        rep.corollaryCondition = cond;
        if (!cond && K.facetCount() != __builtin_popcountll(dualSupport))
            rep.detail = "fails: m != n";
        else
            rep.detail = "cyclic labeling with i ∈ F_i ∩ F_{i+1} only";
    } else if (rep.shape.tag == ShapeTag::Tree) {
        rep.viaCorollary = true;
        rep.corollaryCondition = treeCriterion(dual).value;
        rep.detail = "path intersections F_i ∩ F_k ⊆ F_j";
    }

    if (rep.viaCorollary) {
        bool v = *rep.corollaryCondition;
        rep.cm = rep.shellable = rep.vertexDecomposable = v;
    } else {
        rep.detail = "no corollary shape; independent verdicts";
        rep.cm = isCohenMacaulay(K, field, caps).value;
        rep.shellable = isShellable(K, caps).value;
        rep.vertexDecomposable = isVertexDecomposablePure(K);
    }
    return rep;
}

} // namespace syz
