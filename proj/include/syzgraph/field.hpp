#ifndef SYZGRAPH_FIELD_HPP
#define SYZGRAPH_FIELD_HPP

#include <cstdint>
#include <string>

namespace syz {

// Coefficient field for homology ranks: the rationals (exact fraction-free
// integer elimination) or a prime field GF(p).
struct FieldSpec {
    enum class Kind { Rationals, Prime };

    Kind kind = Kind::Rationals;
    std::int64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec gf(std::int64_t prime); // throws input_error unless prime

    std::string label() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind == b.kind && a.p == b.p;
    }
};

// Accepts "rat" or "gf:<prime>" (as in the CLI --field flag).
FieldSpec parseFieldSpec(const std::string& text);

} // namespace syz

#endif
