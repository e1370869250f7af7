#include "syzgraph/field.hpp"

#include "syzgraph/errors.hpp"

namespace syz {

static bool isPrime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::gf(std::int64_t prime) {
    if (!isPrime(prime))
        throw input_error("GF(" + std::to_string(prime) + "): modulus is not prime");
    if (prime >= (std::int64_t(1) << 31))
        throw input_error("GF(p) modulus too large (need p < 2^31)");
    FieldSpec f;
    f.kind = Kind::Prime;
    f.p = prime;
    return f;
}

std::string FieldSpec::label() const {
    return kind == Kind::Rationals ? "QQ" : "GF(" + std::to_string(p) + ")";
}

FieldSpec parseFieldSpec(const std::string& text) {
    if (text == "rat") return FieldSpec::rationals();
    if (text.rfind("gf:", 0) == 0) {
        try {
            std::size_t used = 0;
            long long p = std::stoll(text.substr(3), &used);
            if (used != text.size() - 3) throw std::invalid_argument("trailing");
            return FieldSpec::gf(p);
        } catch (const input_error&) {
            throw;
        } catch (const std::exception&) {
            throw input_error("bad field spec '" + text + "' (expected rat or gf:<prime>)");
        }
    }
    throw input_error("bad field spec '" + text + "' (expected rat or gf:<prime>)");
}

} // namespace syz
