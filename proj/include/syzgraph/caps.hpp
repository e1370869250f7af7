#ifndef SYZGRAPH_CAPS_HPP
#define SYZGRAPH_CAPS_HPP

#include <cstddef>

namespace syz {

// Resource caps for the exponential-cost routines.  Exceeding a cap raises
// resource_error (CLI exit code 3).  The CLI seeds these from the
// SYZGRAPH_CAP_N / SYZGRAPH_CAP_M environment variables and the --cap-n /
// --cap-m flags.
struct Caps {
    int oracleVars = 16;                            // n for Hochster restriction loops
    std::size_t oracleFaces = std::size_t(1) << 16; // faces per restriction
    int scarfGens = 20;                             // m for Scarf subset enumeration
    int shellFacets = 12;                           // facets for shellability search

    Caps withVarCap(int n) const {
        Caps c = *this;
        c.oracleVars = n;
        return c;
    }
    Caps withGenCap(int m) const {
        Caps c = *this;
        c.scarfGens = m;
        c.shellFacets = m;
        return c;
    }
};

} // namespace syz

#endif
