#include "syzgraph/betti.hpp"

#include "syzgraph/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace syz {

BettiTable bettiTable(const MonomialIdeal& I, const FieldSpec& field, const Caps& caps) {
    if (I.isZero()) throw input_error("betti table: zero ideal");
    if (I.n > caps.oracleVars)
        throw resource_error("betti table: n = " + std::to_string(I.n) + " exceeds cap " +
                             std::to_string(caps.oracleVars));
    int dmin = I.n;
    for (const auto& g : I.gens) {
        if (g.degree() < 1) throw input_error("betti table: degree-0 generator (unit ideal)");
        dmin = std::min(dmin, g.degree());
    }

    const int n = I.n;
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;

    // isFace[s]: s contains no generator support, i.e. s is a face of the
    // Stanley–Reisner complex of I.
    std::vector<char> isFace(std::size_t(1) << n, 1);
    for (const auto& g : I.gens) isFace[g.mask] = 0;
    for (std::uint64_t s = 0; s <= full; ++s) {
        if (isFace[s]) continue;
        // non-faces propagate upward; mark immediate supersets
        for (int v = 0; v < n; ++v) {
            std::uint64_t t = s | (std::uint64_t(1) << v);
            if (t != s) isFace[t] = 0;
        }
    }

    BettiTable table;
    table.field = field;

    std::vector<std::uint64_t> faces;
    for (std::uint64_t W = 0; W <= full; ++W) {
        int j = __builtin_popcountll(W);
        if (j < dmin) continue;

        // Cone pruning: every vertex of W must be covered by a generator
        // support inside W, else Δ|_W is a cone and contributes nothing.
        std::uint64_t covered = 0;
        for (const auto& g : I.gens)
            if ((g.mask & ~W) == 0) covered |= g.mask;
        if (covered != W) continue;

        faces.clear();
        std::uint64_t s = W;
        while (true) {
            if (isFace[s]) faces.push_back(s);
            if (s == 0) break;
            s = (s - 1) & W;
        }
        if (faces.size() > caps.oracleFaces)
            throw resource_error("betti table: restriction face count exceeds cap");

        HomologyProfile prof = homologyOfFaceList(faces, field);
        for (int k = -1; k <= prof.topDimension(); ++k) {
            long long h = prof.reduced(k);
            if (h == 0) continue;
            int i = j - k - 2;
            if (i >= 0) table.entries[{i, j}] += h;
        }
    }
    return table;
}

LinearVerdict hasLinearResolution(const MonomialIdeal& I, const FieldSpec& field,
                                  const Caps& caps) {
    auto d = I.uniformDegree();
    if (!d) return {false, true};
    BettiTable t = bettiTable(I, field, caps);
    for (const auto& [ij, b] : t.entries)
        if (b > 0 && ij.second != ij.first + *d) return {false, false};
    return {true, false};
}

LinearVerdict hasLinearRelationsOracle(const MonomialIdeal& I, const FieldSpec& field,
                                       const Caps& caps) {
    auto d = I.uniformDegree();
    if (!d) return {false, true};
    BettiTable t = bettiTable(I, field, caps);
    for (const auto& [ij, b] : t.entries)
        if (b > 0 && ij.first == 1 && ij.second != *d + 1) return {false, false};
    return {true, false};
}

int projDim(const MonomialIdeal& I, const FieldSpec& field, const Caps& caps) {
    return bettiTable(I, field, caps).projectiveDimension();
}

std::string renderBettiTable(const BettiTable& t) {
    if (t.entries.empty()) return "(empty table)\n";
    int maxI = 0, minR = 1 << 30, maxR = 0;
    for (const auto& [ij, b] : t.entries) {
        (void)b;
        maxI = std::max(maxI, ij.first);
        minR = std::min(minR, ij.second - ij.first);
        maxR = std::max(maxR, ij.second - ij.first);
    }
    int width = 6;
    std::ostringstream os;
    os << std::setw(width) << ' ';
    for (int i = 0; i <= maxI; ++i) os << std::setw(width) << i;
    os << '\n';
    for (int r = minR; r <= maxR; ++r) {
        os << std::setw(width - 1) << r << ':';
        for (int i = 0; i <= maxI; ++i) {
            long long b = t.beta(i, i + r);
            if (b == 0) os << std::setw(width) << '.';
            else os << std::setw(width) << b;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace syz
