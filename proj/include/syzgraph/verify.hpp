#ifndef SYZGRAPH_VERIFY_HPP
#define SYZGRAPH_VERIFY_HPP

#include "syzgraph/caps.hpp"
#include "syzgraph/field.hpp"
#include "syzgraph/graph.hpp"
#include "syzgraph/ideal.hpp"
#include "syzgraph/simplicial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace syz {

// One failed cross-check inside a verification suite.
struct VerifyIssue {
    std::string instance; // compact description of the instance
    std::string message;  // which predicates disagreed and how
};

struct SuiteResult {
    std::string suite;
    int instances = 0;    // instances evaluated
    long long checks = 0; // individual equalities checked
    std::vector<VerifyIssue> issues;

    bool ok() const { return issues.empty(); }
};

// --------------------------------------------------------- instance pools
// Shared between the `verify` subcommand and the acceptance tests so both
// exercise identical instances for a given seed.

// Seeded tree/line-shaped equigenerated ideals, n ≤ 8, m ≤ 7.
std::vector<MonomialIdeal> treeBatteryInstances(int count, std::uint64_t seed);

// cycleFamily(4..8), their seeded one-generator mutations (kept whatever
// shape they land on), and the still-cycle-shaped non-examples
// I_t(C_n) for 2 ≤ t < n−2.
struct CycleBattery {
    std::vector<MonomialIdeal> family;
    std::vector<MonomialIdeal> mutated;
    std::vector<MonomialIdeal> cycleNonExamples;
    int mutatedStillCycle = 0; // mutated instances that kept the cycle shape
};
CycleBattery cycleBatteryInstances(std::uint64_t seed);

// Seeded equigenerated ideals of arbitrary shape, n ≤ 7, m ≤ 6.
std::vector<MonomialIdeal> equigeneratedBatteryInstances(int count, std::uint64_t seed);

// Seeded pure complexes, n ≤ 8, m ≤ 6, no facet equal to [n].
std::vector<SimplicialComplex> dualityBatteryInstances(int count, std::uint64_t seed);

// ------------------------------------------------------ per-instance rows

// Every predicate the equivalence theorems tie together on one instance.
struct EquivalenceRow {
    ShapeTag shape = ShapeTag::Disconnected;
    int cycleLength = 0;
    bool oracleLinear = false;          // hasLinearResolution (Hochster)
    bool oracleRelations = false;       // hasLinearRelationsOracle
    bool combinatorialRelations = false; // pair-subgraph connectivity
    bool admissibleOrder = false;       // findAdmissibleOrder succeeded
    bool variableDecomposable = false;
    bool decisionVerdict = false;       // decideLinearResolution
    int projectiveDim = 0;
};
EquivalenceRow evaluateEquivalenceRow(const MonomialIdeal& I, const FieldSpec& field,
                                      const Caps& caps);

// Every pair (a,b): the sub-ideal on the unique a–b path of the (tree-
// shaped) syzygy graph must pass the line criterion.  A path sub-ideal
// whose own graph is not a line counts as a failure.
bool allPathSubidealsLine(const MonomialIdeal& I);

// Compact single-line rendering for issue reports.
std::string describeIdeal(const MonomialIdeal& I);
std::string describeComplex(const SimplicialComplex& K);

// ----------------------------------------------------------------- suites

const std::vector<std::string>& suiteNames();
bool isSuiteName(const std::string& s);

// `count`/`seed` drive the randomized suites (tree, line, duality); the
// deterministic sweeps (cycle, path-ideals, cm2) ignore `count`.  count ≤ 0
// selects each suite's default size (tree 50, line 30, duality 30).
SuiteResult runSuite(const std::string& suite, int count, std::uint64_t seed,
                     const FieldSpec& field, const Caps& caps);

} // namespace syz

#endif
