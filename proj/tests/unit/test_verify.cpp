#include <doctest.h>

#include "syzgraph/errors.hpp"
#include "syzgraph/verify.hpp"

#include <string>

using namespace syz;

namespace {

const FieldSpec kRat = FieldSpec::rationals();
const Caps kCaps{};

} // namespace

TEST_CASE("suite registry") {
    const auto& names = suiteNames();
    REQUIRE(names.size() == 6);
    for (const char* s : {"line", "cycle", "tree", "path-ideals", "cm2", "duality"})
        CHECK(isSuiteName(s));
    CHECK_FALSE(isSuiteName("nope"));
    CHECK_THROWS_AS(runSuite("nope", 1, 1, kRat, kCaps), input_error);
}

TEST_CASE("instance pools are seeded and sized as requested") {
    auto trees = treeBatteryInstances(8, 3);
    CHECK(trees.size() == 8);
    auto again = treeBatteryInstances(8, 3);
    for (std::size_t i = 0; i < trees.size(); ++i) CHECK(trees[i].gens == again[i].gens);

    CycleBattery cb = cycleBatteryInstances(5);
    CHECK(cb.family.size() == 5); // n = 4..8
    CHECK_FALSE(cb.mutated.empty());
    CHECK_FALSE(cb.cycleNonExamples.empty());

    CHECK(equigeneratedBatteryInstances(6, 2).size() == 6);
    CHECK(dualityBatteryInstances(6, 2).size() == 6);
}

TEST_CASE("equivalence rows populate every predicate consistently") {
    auto trees = treeBatteryInstances(4, 7);
    for (const auto& I : trees) {
        EquivalenceRow row = evaluateEquivalenceRow(I, kRat, kCaps);
        CHECK(row.combinatorialRelations == row.oracleRelations);
        CHECK(row.decisionVerdict == row.oracleLinear);
        if (row.variableDecomposable) CHECK(row.admissibleOrder);
        if (row.admissibleOrder) CHECK(row.oracleLinear);
    }
}

TEST_CASE("small runs of every suite pass cleanly") {
    for (const auto& [suite, count] : {std::pair<const char*, int>{"tree", 4},
                                       {"line", 3},
                                       {"duality", 4},
                                       {"cm2", 0}}) {
        SuiteResult r = runSuite(suite, count, 3, kRat, kCaps);
        CHECK(r.suite == suite);
        CHECK(r.instances > 0);
        CHECK(r.checks > 0);
        for (const auto& iss : r.issues)
            MESSAGE("suite ", r.suite, " [", iss.instance, "] ", iss.message);
        CHECK(r.ok());
    }
}

TEST_CASE("issue descriptions identify instances") {
    auto trees = treeBatteryInstances(1, 3);
    std::string d = describeIdeal(trees[0]);
    CHECK(d.find("n=") != std::string::npos);
}
