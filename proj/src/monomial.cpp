#include "syzgraph/monomial.hpp"

#include "syzgraph/errors.hpp"

#include <algorithm>
#include <sstream>

namespace syz {

static std::uint64_t maskFromVars(const std::vector<int>& vars) {
    std::uint64_t m = 0;
    for (int v : vars) {
        if (v < 1 || v > kMaxVars)
            throw input_error("variable index " + std::to_string(v) + " out of range 1.." +
                              std::to_string(kMaxVars));
        m |= std::uint64_t(1) << (v - 1);
    }
    return m;
}

SqfMonomial::SqfMonomial(std::initializer_list<int> vars)
    : mask(maskFromVars(std::vector<int>(vars))) {}

SqfMonomial SqfMonomial::fromVars(const std::vector<int>& vars) {
    return SqfMonomial(maskFromVars(vars));
}

std::vector<int> SqfMonomial::vars() const {
    std::vector<int> out;
    for (int v = 1; v <= kMaxVars; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

bool operator<(const SqfMonomial& a, const SqfMonomial& b) {
    // Compare sorted variable lists lexicographically.  Bits below the
    // lowest differing bit agree, so they form a common prefix; the owner
    // of the lowest differing variable continues with a smaller element,
    // unless the other list has ended (a proper prefix is smaller).
    std::uint64_t diff = a.mask ^ b.mask;
    if (diff == 0) return false;
    std::uint64_t low = diff & (~diff + 1);
    if (a.mask & low) return (b.mask & ~(low - 1)) != 0;
    return (a.mask & ~(low - 1)) == 0;
}

std::string toIndexString(const SqfMonomial& u) {
    std::ostringstream os;
    bool first = true;
    for (int v : u.vars()) {
        if (!first) os << ' ';
        os << v;
        first = false;
    }
    return os.str();
}

std::string toMonomialString(const SqfMonomial& u) {
    if (u.isOne()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int v : u.vars()) {
        if (!first) os << '*';
        os << 'x' << v;
        first = false;
    }
    return os.str();
}

} // namespace syz
