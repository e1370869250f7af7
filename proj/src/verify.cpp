#include "syzgraph/verify.hpp"

#include "syzgraph/betti.hpp"
#include "syzgraph/errors.hpp"
#include "syzgraph/families.hpp"
#include "syzgraph/structure.hpp"
#include "syzgraph/syzygy_graph.hpp"

#include <algorithm>
#include <sstream>

namespace syz {

std::string describeIdeal(const MonomialIdeal& I) {
    std::ostringstream os;
    os << "n=" << I.n << " I=(";
    for (int i = 1; i <= I.m(); ++i) {
        if (i > 1) os << ", ";
        os << '{' << toIndexString(I.gen(i)) << '}';
    }
    os << ')';
    return os.str();
}

std::string describeComplex(const SimplicialComplex& K) {
    std::ostringstream os;
    os << "n=" << K.n << " facets=<";
    for (int i = 1; i <= K.facetCount(); ++i) {
        if (i > 1) os << ", ";
        os << '{' << toIndexString(K.facet(i)) << '}';
    }
    os << '>';
    return os.str();
}

// --------------------------------------------------------- instance pools

std::vector<MonomialIdeal> treeBatteryInstances(int count, std::uint64_t seed) {
    std::vector<MonomialIdeal> out;
    SplitMix64 rng(seed);
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 60 * count + 60)
            throw resource_error("tree battery: could not generate enough instances");
        int n = 5 + static_cast<int>(rng.below(4)); // 5..8
        int maxM = std::min(7, n - 1);
        int m = 2 + static_cast<int>(rng.below(std::uint64_t(maxM - 1))); // 2..maxM
        std::uint64_t sub = rng.next();
        try {
            out.push_back(randomTreeIdeal(n, m, sub));
        } catch (const resource_error&) {
            continue; // redraw parameters
        }
    }
    return out;
}

CycleBattery cycleBatteryInstances(std::uint64_t seed) {
    CycleBattery b;
    SplitMix64 rng(seed);
    for (int n = 4; n <= 8; ++n) {
        b.family.push_back(cycleFamily(n));
        for (int tries = 0; tries < 8; ++tries) {
            MonomialIdeal J = mutateOneGenerator(cycleFamily(n), rng.next());
            if (J.m() != n) continue; // mutation collided with another generator
            b.mutated.push_back(J);
            GraphShape s = classifyShape(buildSyzygyGraph(J));
            if (s.tag == ShapeTag::Cycle && s.cycleLength == n) ++b.mutatedStillCycle;
        }
        for (int t = 2; t < n - 2; ++t) b.cycleNonExamples.push_back(pathIdealCycle(n, t));
    }
    return b;
}

std::vector<MonomialIdeal> equigeneratedBatteryInstances(int count, std::uint64_t seed) {
    std::vector<MonomialIdeal> out;
    SplitMix64 rng(seed);
    while (static_cast<int>(out.size()) < count) {
        int n = 4 + static_cast<int>(rng.below(4)); // 4..7
        int d = 2 + static_cast<int>(rng.below(std::uint64_t(n - 2))); // 2..n-1
        long long room = 1;
        for (int i = 0; i < d; ++i) room = room * (n - i) / (i + 1);
        int maxM = static_cast<int>(std::min<long long>(6, room));
        if (maxM < 2) continue;
        int m = 2 + static_cast<int>(rng.below(std::uint64_t(maxM - 1))); // 2..maxM
        out.push_back(randomIdeal(n, m, d, rng.next()));
    }
    return out;
}

std::vector<SimplicialComplex> dualityBatteryInstances(int count, std::uint64_t seed) {
    std::vector<SimplicialComplex> out;
    SplitMix64 rng(seed);
    while (static_cast<int>(out.size()) < count) {
        int n = 4 + static_cast<int>(rng.below(5)); // 4..8
        int m = 2 + static_cast<int>(rng.below(5)); // 2..6
        try {
            out.push_back(randomPureComplex(n, m, rng.next()));
        } catch (const resource_error&) {
            continue;
        }
    }
    return out;
}

// ------------------------------------------------------ per-instance rows

EquivalenceRow evaluateEquivalenceRow(const MonomialIdeal& I, const FieldSpec& field,
                                      const Caps& caps) {
    EquivalenceRow row;
    GraphShape shape = classifyShape(buildSyzygyGraph(I));
    row.shape = shape.tag;
    row.cycleLength = shape.cycleLength;
    row.oracleLinear = hasLinearResolution(I, field, caps).value;
    row.oracleRelations = hasLinearRelationsOracle(I, field, caps).value;
    row.combinatorialRelations = hasLinearRelationsCombinatorial(I).value;
    row.admissibleOrder = findAdmissibleOrder(I).has_value();
    row.variableDecomposable = isVariableDecomposable(I).value;
    row.decisionVerdict = decideLinearResolution(I, field, caps).linear;
    row.projectiveDim = projDim(I, field, caps);
    return row;
}

bool allPathSubidealsLine(const MonomialIdeal& I) {
    SyzygyGraph g = buildSyzygyGraph(I);
    int m = I.m();
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) {
            std::vector<int> path = treePath(g.graph, a, b);
            if (path.size() < 3) continue; // no interior vertex to constrain
            std::vector<SqfMonomial> sub;
            for (int v : path) sub.push_back(I.gen(v));
            try {
                if (!lineCriterion(makeIdeal(I.n, sub))) return false;
            } catch (const input_error&) {
                return false; // the path sub-ideal's own graph is not a line
            }
        }
    return true;
}

// ----------------------------------------------------------------- suites

namespace {

const char* tf(bool b) { return b ? "true" : "false"; }

struct Checker {
    SuiteResult& res;
    std::string instance;

    void expect(bool cond, const std::string& msg) {
        ++res.checks;
        if (!cond) res.issues.push_back({instance, msg});
    }
    void expectEq(bool a, bool b, const std::string& what) {
        expect(a == b, what + ": " + tf(a) + " vs " + tf(b));
    }
    void expectTrue(bool a, const std::string& what) { expect(a, what + ": expected true"); }
    void expectFalse(bool a, const std::string& what) { expect(!a, what + ": expected false"); }
};

bool isTreeShape(ShapeTag t) { return t == ShapeTag::Tree || t == ShapeTag::Line; }

// Checks shared by every equigenerated instance, whatever the shape:
// Prop 009 (combinatorial relations == oracle relations), the soundness
// chain, the shape-dispatch verdict against the oracle, and the
// projective-dimension-one theorems.
void checkUniversal(Checker& ck, const MonomialIdeal& I, const EquivalenceRow& row) {
    ck.expectEq(row.combinatorialRelations, row.oracleRelations,
                "combinatorial vs oracle linear relations");
    if (row.variableDecomposable)
        ck.expectTrue(row.admissibleOrder, "variable-decomposable without linear quotients");
    if (row.admissibleOrder)
        ck.expectTrue(row.oracleLinear, "linear quotients without linear resolution");
    ck.expectEq(row.decisionVerdict, row.oracleLinear, "shape-dispatch verdict vs oracle");
    if (I.m() >= 2 && row.oracleRelations)
        ck.expectEq(row.projectiveDim == 1, isTreeShape(row.shape),
                    "with linear relations, projDim 1 vs tree shape");
    if (I.m() >= 2 && row.projectiveDim == 1)
        ck.expectEq(row.oracleLinear, row.shape != ShapeTag::Disconnected,
                    "with projDim 1, linear resolution vs connectivity");
}

SuiteResult runTreeSuite(int count, std::uint64_t seed, const FieldSpec& field,
                         const Caps& caps) {
    SuiteResult res{"tree", 0, 0, {}};
    for (const MonomialIdeal& I : treeBatteryInstances(count, seed)) {
        ++res.instances;
        Checker ck{res, describeIdeal(I)};
        EquivalenceRow row = evaluateEquivalenceRow(I, field, caps);
        bool crit = treeCriterion(I).value;
        bool paths = allPathSubidealsLine(I);
        ck.expectEq(row.oracleRelations, row.oracleLinear,
                    "oracle relations vs oracle resolution (tree equivalence)");
        ck.expectEq(row.combinatorialRelations, row.oracleLinear,
                    "combinatorial relations vs oracle resolution (tree equivalence)");
        ck.expectEq(crit, row.oracleLinear, "tree criterion vs oracle resolution");
        ck.expectEq(paths, row.oracleLinear, "path sub-ideal line checks vs oracle resolution");
        ck.expectEq(row.admissibleOrder, row.oracleLinear,
                    "admissible order vs oracle resolution (tree equivalence)");
        ck.expectEq(row.variableDecomposable, row.oracleLinear,
                    "variable-decomposable vs oracle resolution (tree equivalence)");
        // Only the proven direction: a linear resolution forces the Scarf
        // faces down to exactly the graph.  The converse is false — a tree
        // whose non-linear syzygy pair shares its lcm with a second pair
        // keeps Scarf = graph while the resolution is not linear.
        if (row.oracleLinear)
            ck.expectTrue(scarfMatchesGraph(I, caps),
                          "Scarf faces must equal the graph under a linear resolution");
        checkUniversal(ck, I, row);
    }
    for (const MonomialIdeal& I : equigeneratedBatteryInstances(count, seed + 1)) {
        ++res.instances;
        Checker ck{res, describeIdeal(I)};
        EquivalenceRow row = evaluateEquivalenceRow(I, field, caps);
        checkUniversal(ck, I, row);
    }
    return res;
}

SuiteResult runLineSuite(int count, std::uint64_t seed, const FieldSpec& field,
                         const Caps& caps) {
    SuiteResult res{"line", 0, 0, {}};
    // Deterministic sweep: path ideals of the line L_n are line-shaped and
    // linear exactly when the windows cover more than half of [n].
    for (int n = 4; n <= 10; ++n)
        for (int t = 2; t <= n; ++t) {
            MonomialIdeal I = pathIdealLine(n, t);
            ++res.instances;
            Checker ck{res, "pathIdealLine(" + std::to_string(n) + "," + std::to_string(t) + ")"};
            bool expected = 2 * t >= n;
            EquivalenceRow row = evaluateEquivalenceRow(I, field, caps);
            ck.expect(row.shape == ShapeTag::Line, "shape: expected line, got " +
                                                       shapeTagName(row.shape));
            ck.expectEq(lineCriterion(I), expected, "line criterion vs t >= n/2");
            ck.expectEq(row.oracleLinear, expected, "oracle resolution vs t >= n/2");
            ck.expectEq(row.admissibleOrder, expected, "admissible order vs t >= n/2");
            ck.expectEq(row.variableDecomposable, expected, "variable-decomposable vs t >= n/2");
            checkUniversal(ck, I, row);
        }
    // Random line-shaped instances from the tree generator.
    for (const MonomialIdeal& I : treeBatteryInstances(count, seed)) {
        EquivalenceRow row = evaluateEquivalenceRow(I, field, caps);
        if (row.shape != ShapeTag::Line) continue;
        ++res.instances;
        Checker ck{res, describeIdeal(I)};
        ck.expectEq(lineCriterion(I), row.oracleLinear, "line criterion vs oracle resolution");
        ck.expectEq(row.admissibleOrder, row.oracleLinear,
                    "admissible order vs oracle resolution (line equivalence)");
        ck.expectEq(row.variableDecomposable, row.oracleLinear,
                    "variable-decomposable vs oracle resolution (line equivalence)");
        checkUniversal(ck, I, row);
    }
    return res;
}

SuiteResult runCycleSuite(std::uint64_t seed, const FieldSpec& field, const Caps& caps) {
    SuiteResult res{"cycle", 0, 0, {}};
    CycleBattery b = cycleBatteryInstances(seed);
    for (const MonomialIdeal& I : b.family) {
        ++res.instances;
        Checker ck{res, describeIdeal(I)};
        EquivalenceRow row = evaluateEquivalenceRow(I, field, caps);
        ck.expect(row.shape == ShapeTag::Cycle && row.cycleLength == I.n,
                  "shape: expected cycle(n)");
        ck.expectTrue(cycleCriterion(I), "cycle criterion on the cycle family");
        ck.expectTrue(row.admissibleOrder, "admissible order on the cycle family");
        ck.expectTrue(row.variableDecomposable, "variable-decomposable on the cycle family");
        ck.expectTrue(row.oracleLinear, "oracle (n-2)-linearity on the cycle family");
        ck.expect(I.uniformDegree() && *I.uniformDegree() == I.n - 2,
                  "generator degree: expected n-2");
        checkUniversal(ck, I, row);
    }
    for (const MonomialIdeal& I : b.mutated) {
        ++res.instances;
        Checker ck{res, describeIdeal(I)};
        EquivalenceRow row = evaluateEquivalenceRow(I, field, caps);
        // Whatever shape the mutation lands on, the dispatcher must agree
        // with the oracle; mutations that stay a genuine (pruning-free)
        // cycle must fail both sides.  A cycle manufactured by triangle
        // pruning is outside the labeling theorem and is left to the
        // dispatcher-vs-oracle check above.
        checkUniversal(ck, I, row);
        if (row.shape == ShapeTag::Cycle && row.cycleLength >= 4 &&
            buildSyzygyGraph(I).pruned.empty()) {
            ck.expectFalse(cycleCriterion(I), "cycle criterion on a mutated family member");
            ck.expectFalse(row.oracleLinear, "oracle on a mutated still-cycle instance");
        }
    }
    for (const MonomialIdeal& I : b.cycleNonExamples) {
        ++res.instances;
        Checker ck{res, describeIdeal(I)};
        EquivalenceRow row = evaluateEquivalenceRow(I, field, caps);
        ck.expect(row.shape == ShapeTag::Cycle && row.cycleLength == I.n,
                  "shape: expected cycle(n)");
        ck.expectFalse(cycleCriterion(I), "cycle criterion on a short-window cycle ideal");
        ck.expectFalse(row.oracleLinear, "oracle on a short-window cycle ideal");
        ck.expectFalse(row.admissibleOrder, "admissible order on a short-window cycle ideal");
        ck.expectFalse(row.variableDecomposable,
                       "variable-decomposable on a short-window cycle ideal");
        checkUniversal(ck, I, row);
    }
    return res;
}

SuiteResult runPathIdealsSuite(const FieldSpec& field, const Caps& caps) {
    SuiteResult res{"path-ideals", 0, 0, {}};
    // Cycle corollary: I_t(C_n) linear iff t ∈ {n-2, n-1}; cycle(n) shape
    // below t = n-1; raw-complete graph at t = n-1.
    for (int n = 4; n <= 8; ++n)
        for (int t = 2; t <= n - 1; ++t) {
            MonomialIdeal I = pathIdealCycle(n, t);
            ++res.instances;
            Checker ck{res, "pathIdealCycle(" + std::to_string(n) + "," + std::to_string(t) + ")"};
            bool expected = t == n - 2 || t == n - 1;
            SyzygyGraph g = buildSyzygyGraph(I);
            GraphShape shape = classifyShape(g);
            EquivalenceRow row = evaluateEquivalenceRow(I, field, caps);
            ck.expectEq(row.oracleLinear, expected, "oracle resolution vs t in {n-2, n-1}");
            ck.expectEq(row.decisionVerdict, expected, "dispatch verdict vs t in {n-2, n-1}");
            if (t < n - 1) {
                ck.expect(shape.tag == ShapeTag::Cycle && shape.cycleLength == n,
                          "shape: expected cycle(n), got " + shapeTagName(shape.tag));
                ck.expectEq(cycleCriterion(I), expected, "cycle criterion vs t in {n-2, n-1}");
            } else {
                IndexGraph raw = g.rawGraph();
                ck.expect(raw.edgeCount() == I.m() * (I.m() - 1) / 2,
                          "raw graph: expected complete at t = n-1");
            }
            checkUniversal(ck, I, row);
        }
    // Line corollary: I_t(L_n) linear iff t ≥ n/2.
    for (int n = 4; n <= 10; ++n)
        for (int t = 2; t <= n; ++t) {
            MonomialIdeal I = pathIdealLine(n, t);
            ++res.instances;
            Checker ck{res, "pathIdealLine(" + std::to_string(n) + "," + std::to_string(t) + ")"};
            bool expected = 2 * t >= n;
            EquivalenceRow row = evaluateEquivalenceRow(I, field, caps);
            ck.expect(row.shape == ShapeTag::Line, "shape: expected line");
            ck.expectEq(row.oracleLinear, expected, "oracle resolution vs t >= n/2");
            ck.expectEq(lineCriterion(I), expected, "line criterion vs t >= n/2");
            checkUniversal(ck, I, row);
        }
    return res;
}

SuiteResult runCm2Suite(const FieldSpec& field, const Caps& caps) {
    SuiteResult res{"cm2", 0, 0, {}};
    struct Spot {
        std::vector<SqfMonomial> gens; // ideal whose dual complex is tested
        bool expectCm;
    };
    const std::vector<Spot> spots = {
        {{SqfMonomial{1, 2}, SqfMonomial{2, 3}, SqfMonomial{3, 4}}, true},
        {{SqfMonomial{1, 2}, SqfMonomial{3, 4}}, false},
    };
    for (const Spot& spot : spots) {
        MonomialIdeal I = makeIdeal(4, spot.gens);
        // Dual complex: facets are the generator complements.
        std::vector<SqfMonomial> facets;
        std::uint64_t full = (std::uint64_t(1) << 4) - 1;
        for (const auto& g : I.gens) facets.push_back(SqfMonomial(full & ~g.mask));
        SimplicialComplex K = makeComplex(4, facets);
        ++res.instances;
        Checker ck{res, describeComplex(K)};

        CmVerdict cm = isCohenMacaulay(K, field, caps);
        ck.expectEq(cm.value, spot.expectCm, "Cohen-Macaulay verdict vs expected");
        // The dual ideal of the dual complex is the original ideal.
        ck.expect(dualIdeal(K).gens == I.gens, "dual of the dual complex: original ideal");
        // Eagon-Reiner both ways: criterion route vs raw oracle on the dual.
        ck.expectEq(cm.value, hasLinearResolution(dualIdeal(K), field, caps).value,
                    "CM verdict vs dual-ideal oracle");
        // Independent structural checks line up with CM here.
        ck.expectEq(isShellable(K, caps).value, spot.expectCm, "shellability vs expected");
        ck.expectEq(isVertexDecomposablePure(K), spot.expectCm,
                    "vertex decomposability vs expected");
        ck.expectEq(isStronglyConnected(K), spot.expectCm,
                    "codimension-one connectivity vs expected");
    }
    return res;
}

SuiteResult runDualitySuite(int count, std::uint64_t seed, const FieldSpec& field,
                            const Caps& caps) {
    SuiteResult res{"duality", 0, 0, {}};
    for (const SimplicialComplex& K : dualityBatteryInstances(count, seed)) {
        ++res.instances;
        Checker ck{res, describeComplex(K)};
        try {
            MonomialIdeal dual = dualIdeal(K);
            IndexGraph fg = facetGraph(K);
            IndexGraph raw = buildSyzygyGraph(dual).rawGraph();
            ck.expect(fg.verts == raw.verts && fg.edges == raw.edges,
                      "facet graph vs dual raw syzygy graph");

            CmVerdict cm = isCohenMacaulay(K, field, caps);
            ResolutionDecision dec = decideLinearResolution(dual, field, caps);
            bool oracleLin = hasLinearResolution(dual, field, caps).value;
            ck.expectEq(cm.value, dec.linear, "CM verdict vs dual shape dispatch");
            ck.expectEq(dec.linear, oracleLin, "dual shape dispatch vs dual oracle");

            CmShapeReport rep = cmShapeReport(K, field, caps);
            bool shell = isShellable(K, caps).value;
            bool vd = isVertexDecomposablePure(K);
            ck.expectEq(rep.cm, cm.value, "shape report CM vs Eagon-Reiner route");
            ck.expectEq(rep.shellable, shell, "shape report shellable vs brute force");
            ck.expectEq(rep.vertexDecomposable, vd, "shape report VD vs dual decomposition");
            if (rep.viaCorollary) {
                ck.expectEq(rep.cm, rep.shellable, "corollary: CM vs shellable");
                ck.expectEq(rep.shellable, rep.vertexDecomposable,
                            "corollary: shellable vs vertex-decomposable");
            }
            // Eagon-Reiner's other face: CM complexes are strongly connected.
            if (cm.value && K.dimension() >= 1)
                ck.expectTrue(isStronglyConnected(K), "CM implies codim-1 connectivity");
        } catch (const std::exception& e) {
            ck.expect(false, std::string("exception: ") + e.what());
        }
    }
    return res;
}

} // namespace

const std::vector<std::string>& suiteNames() {
    static const std::vector<std::string> names = {"line",        "cycle", "tree",
                                                   "path-ideals", "cm2",   "duality"};
    return names;
}

bool isSuiteName(const std::string& s) {
    const auto& names = suiteNames();
    return std::find(names.begin(), names.end(), s) != names.end();
}

SuiteResult runSuite(const std::string& suite, int count, std::uint64_t seed,
                     const FieldSpec& field, const Caps& caps) {
    if (suite == "tree") return runTreeSuite(count > 0 ? count : 50, seed, field, caps);
    if (suite == "line") return runLineSuite(count > 0 ? count : 30, seed, field, caps);
    if (suite == "cycle") return runCycleSuite(seed, field, caps);
    if (suite == "path-ideals") return runPathIdealsSuite(field, caps);
    if (suite == "cm2") return runCm2Suite(field, caps);
    if (suite == "duality") return runDualitySuite(count > 0 ? count : 30, seed, field, caps);
    throw input_error("unknown verify suite: " + suite +
                      " (expected line|cycle|tree|path-ideals|cm2|duality)");
}

} // namespace syz
