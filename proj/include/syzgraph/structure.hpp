#ifndef SYZGRAPH_STRUCTURE_HPP
#define SYZGRAPH_STRUCTURE_HPP

#include "syzgraph/betti.hpp"
#include "syzgraph/caps.hpp"
#include "syzgraph/field.hpp"
#include "syzgraph/ideal.hpp"
#include "syzgraph/syzygy_graph.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace syz {

// ---------------------------------------------------------------- quotients

// Validates the linear-quotients condition along `order` (a permutation of
// 1..m of generator indices): for every position i ≥ 2 and j < i there are
// k < i and a variable l with F(u_k)\F(u_i) = {l} and l ∈ F(u_j)\F(u_i).
// On failure, `failure` holds the offending (i, j) positions (1-based).
struct OrderCheck {
    bool admissible = true;
    std::optional<std::pair<int, int>> failure;
};

OrderCheck isAdmissibleOrder(const MonomialIdeal& I, const std::vector<int>& order);

// Searches for an admissible order.  When G_I is a tree (or line) with
// linear relations, a connected-prefix order (breadth-first from generator
// 1) is tried first — the paper's remark guarantees it works.  Otherwise a
// backtracking search over prefix sets runs with memoized dead ends
// (admissibility of a prefix depends only on its underlying set).
std::optional<std::vector<int>> findAdmissibleOrder(const MonomialIdeal& I);

// ---------------------------------------------------- variable decomposition

// Witness tree for 0-decomposability: each branch splits G(I) by a
// shedding variable into generators without it (left) and with it (right).
struct DecompositionTree {
    std::vector<int> genIndices; // original 1-based generator indices
    int sheddingVar = 0;         // 0 at leaves (m ≤ 1)
    std::unique_ptr<DecompositionTree> without; // I_{x_l}
    std::unique_ptr<DecompositionTree> with;    // I^{x_l}
};

struct VarDecompResult {
    bool value = false;
    std::unique_ptr<DecompositionTree> tree; // set when value is true
};

// True iff m ≤ 1, or some variable l is shedding — I_{x_l} ≠ 0 and every
// generator without l has a partner u_j with l such that u_j : u_i = x_l —
// with both splits recursively variable-decomposable.  Tries shedding
// variables in ascending order; memoizes on the generator-index subset.
VarDecompResult isVariableDecomposable(const MonomialIdeal& I);

// -------------------------------------------------------------------- Scarf

// Subsets σ ⊆ {1..m} whose lcm is attained by no other subset.
struct ScarfComplex {
    int m = 0;
    std::vector<std::uint32_t> faces; // generator-index bitmasks, sorted by (size, value)

    int dimension() const;
    std::vector<std::pair<int, int>> edgeList() const; // 1-based index pairs
    bool hasFace(std::uint32_t sigma) const;
};

ScarfComplex scarfComplex(const MonomialIdeal& I, const Caps& caps = {});

// For tree- or line-shaped G_I: true iff the Scarf complex is exactly
// {∅} ∪ vertices ∪ E(G_I) (no higher faces, no extra or missing edges).
// Other shapes violate the precondition (input_error).
bool scarfMatchesGraph(const MonomialIdeal& I, const Caps& caps = {});

// --------------------------------------------------------- shape criteria

// Line-shaped G_I: supports along the path ordering are nested,
// F(u_k) ⊆ F(u_i) ∪ F(u_j) for all positions i ≤ k ≤ j.
bool lineCriterion(const MonomialIdeal& I);

// Cycle-shaped G_I (length ≥ 4): m = n, every generator of degree n−2,
// and every variable is absent from exactly two cyclically-consecutive
// generators along the cycle.
bool cycleCriterion(const MonomialIdeal& I);

// Tree-shaped G_I: every interior vertex w of the unique a–b path
// satisfies F(u_w) ⊆ F(u_a) ∪ F(u_b).  On failure `witness` is the
// lexicographically least violating (a, w, b).
struct TreeCheck {
    bool value = true;
    std::optional<std::array<int, 3>> witness;
};

TreeCheck treeCriterion(const MonomialIdeal& I);

// Leaf-extension test: I must have linear quotients and v (same degree)
// must attach as a leaf of G_{<I,v>} with a unique neighbor u_i; returns
// true iff the single variable l = F(u_i)\F(v) lies in every generator's
// support (equivalently <I,v> has linear quotients again).
bool leafExtensionCheck(const MonomialIdeal& I, const SqfMonomial& v);

// ----------------------------------------------------------------- decision

// Shape-dispatched linear-resolution decision.  `rule` names what fired:
// zero-ideal, complete-graph, line-criterion, cycle-criterion, triangle,
// tree-criterion, disconnected, oracle.  Where the shape theorems give the
// equivalences, linearQuotients/variableDecomposable are reported equal to
// the verdict; a false verdict always forces both false (decomposable ⇒
// quotients ⇒ linear resolution).
struct ResolutionDecision {
    bool linear = false;
    std::string rule;
    GraphShape shape;
    bool oracleUsed = false;
    std::optional<bool> linearQuotients;
    std::optional<bool> variableDecomposable;
};

ResolutionDecision decideLinearResolution(const MonomialIdeal& I, const FieldSpec& field,
                                          const Caps& caps = {});

} // namespace syz

#endif
