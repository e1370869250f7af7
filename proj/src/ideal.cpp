#include "syzgraph/ideal.hpp"

#include "syzgraph/errors.hpp"

#include <fstream>
#include <sstream>

namespace syz {

std::optional<int> MonomialIdeal::uniformDegree() const {
    if (gens.empty()) return std::nullopt;
    int d = gens.front().degree();
    for (const auto& g : gens)
        if (g.degree() != d) return std::nullopt;
    return d;
}

static void checkVarRange(int n, const std::vector<SqfMonomial>& gens) {
    if (n < 1 || n > kMaxVars)
        throw input_error("variable count n = " + std::to_string(n) + " out of range 1.." +
                          std::to_string(kMaxVars));
    for (const auto& g : gens)
        if (g.maxVar() > n)
            throw input_error("generator " + toMonomialString(g) + " uses a variable beyond n = " +
                              std::to_string(n));
}

bool isMinimalGeneratingSet(const std::vector<SqfMonomial>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j && gens[j].divides(gens[i])) return false;
    return true;
}

MonomialIdeal makeIdeal(int n, std::vector<SqfMonomial> gens) {
    checkVarRange(n, gens);
    std::vector<SqfMonomial> kept;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (j == i || !gens[j].divides(gens[i])) continue;
            // Strict divisor anywhere, or an equal generator seen earlier.
            if (gens[j] != gens[i] || j < i) redundant = true;
        }
        if (!redundant) kept.push_back(gens[i]);
    }
    return MonomialIdeal{n, std::move(kept)};
}

std::pair<MonomialIdeal, MonomialIdeal> splitByVariable(const MonomialIdeal& I, int l) {
    if (l < 1 || l > I.n)
        throw input_error("split variable " + std::to_string(l) + " out of range 1.." +
                          std::to_string(I.n));
    MonomialIdeal without{I.n, {}}, with{I.n, {}};
    for (const auto& g : I.gens)
        (g.contains(l) ? with : without).gens.push_back(g);
    return {without, with};
}

std::pair<int, std::vector<SqfMonomial>> parseSupportText(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<SqfMonomial> sets;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag)) continue; // blank before header
            if (tag != "n")
                throw input_error("line " + std::to_string(lineNo) +
                                  ": expected header 'n <count>', got '" + tag + "'");
            if (!(ls >> n) || n < 1)
                throw input_error("line " + std::to_string(lineNo) + ": bad variable count");
            std::string extra;
            if (ls >> extra)
                throw input_error("line " + std::to_string(lineNo) + ": trailing tokens after n");
            continue;
        }
        std::vector<int> vars;
        int v;
        while (ls >> v) vars.push_back(v);
        if (!ls.eof())
            throw input_error("line " + std::to_string(lineNo) + ": non-integer token");
        if (vars.empty()) continue; // blank or comment-only line
        sets.push_back(SqfMonomial::fromVars(vars));
    }
    if (n < 0) throw input_error("missing header line 'n <count>'");
    return {n, std::move(sets)};
}

ParsedIdeal parseIdealText(const std::string& text) {
    auto [n, gens] = parseSupportText(text);
    ParsedIdeal out;
    out.wasMinimal = isMinimalGeneratingSet(gens);
    out.ideal = makeIdeal(n, std::move(gens));
    return out;
}

ParsedIdeal readIdealFile(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot open ideal file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parseIdealText(buf.str());
}

std::string printIdealText(const MonomialIdeal& I) {
    std::ostringstream os;
    os << "n " << I.n << '\n';
    for (const auto& g : I.gens) os << toIndexString(g) << '\n';
    return os.str();
}

std::uint64_t idealDigest(const MonomialIdeal& I) {
    std::string s = printIdealText(I);
    std::uint64_t h = 1469598103934665603ull; // FNV-1a offset basis
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull; // FNV-1a prime
    }
    return h;
}

} // namespace syz
