#include "syzgraph/homology.hpp"

#include "syzgraph/errors.hpp"
#include "syzgraph/simplicial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace syz {

using boost::multiprecision::cpp_int;

namespace {

// Fraction-free Bareiss elimination with full pivoting.  Every division is
// exact; picking the smallest-magnitude nonzero pivot keeps intermediate
// entries small on the ±1 boundary matrices this sees.
int rankBareiss(std::vector<std::vector<cpp_int>>& M) {
    int rows = static_cast<int>(M.size());
    int cols = rows ? static_cast<int>(M[0].size()) : 0;
    int rank = 0;
    cpp_int prev = 1;
    while (rank < rows && rank < cols) {
        int pr = -1, pc = -1;
        cpp_int best;
        for (int i = rank; i < rows; ++i)
            for (int j = rank; j < cols; ++j) {
                if (M[i][j] == 0) continue;
                cpp_int a = abs(M[i][j]);
                if (pr < 0 || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        std::swap(M[rank], M[pr]);
        if (pc != rank)
            for (int i = 0; i < rows; ++i) std::swap(M[i][rank], M[i][pc]);
        const cpp_int pivot = M[rank][rank];
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = rank + 1; j < cols; ++j)
                M[i][j] = (pivot * M[i][j] - M[i][rank] * M[rank][j]) / prev;
            M[i][rank] = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

int rankModular(std::vector<std::vector<std::int64_t>>& M, std::int64_t p) {
    int rows = static_cast<int>(M.size());
    int cols = rows ? static_cast<int>(M[0].size()) : 0;
    auto norm = [p](std::int64_t x) {
        x %= p;
        return x < 0 ? x + p : x;
    };
    auto inv = [p](std::int64_t a) { // Fermat: a^(p-2) mod p
        std::int64_t r = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pr = -1;
        for (int i = rank; i < rows; ++i)
            if (norm(M[i][col]) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(M[rank], M[pr]);
        std::int64_t scale = inv(norm(M[rank][col]));
        for (int j = col; j < cols; ++j) M[rank][j] = norm(M[rank][j]) * scale % p;
        for (int i = rank + 1; i < rows; ++i) {
            std::int64_t f = norm(M[i][col]);
            if (f == 0) continue;
            for (int j = col; j < cols; ++j) M[i][j] = norm(M[i][j] - f * M[rank][j] % p);
        }
        ++rank;
    }
    return rank;
}

// Boundary-matrix rank from faces of sizes s and s-1 (both sorted).
int boundaryRank(const std::vector<std::uint64_t>& small, const std::vector<std::uint64_t>& big,
                 const FieldSpec& field) {
    if (small.empty() || big.empty()) return 0;
    int rows = static_cast<int>(small.size());
    int cols = static_cast<int>(big.size());

    auto fill = [&](auto& M) {
        for (int c = 0; c < cols; ++c) {
            std::uint64_t face = big[c];
            int pos = 0, sign = 1;
            for (std::uint64_t rest = face; rest; rest &= rest - 1, ++pos, sign = -sign) {
                std::uint64_t bit = rest & (~rest + 1);
                std::uint64_t sub = face ^ bit;
                auto it = std::lower_bound(small.begin(), small.end(), sub);
                int r = static_cast<int>(it - small.begin());
                M[r][c] = sign;
            }
        }
    };

    if (field.kind == FieldSpec::Kind::Rationals) {
        std::vector<std::vector<cpp_int>> M(rows, std::vector<cpp_int>(cols, 0));
        fill(M);
        return rankBareiss(M);
    }
    std::vector<std::vector<std::int64_t>> M(rows, std::vector<std::int64_t>(cols, 0));
    fill(M);
    return rankModular(M, field.p);
}

} // namespace

HomologyProfile homologyOfFaceList(std::vector<std::uint64_t> faces, const FieldSpec& field) {
    HomologyProfile prof;
    if (faces.empty()) return prof; // void complex

    int top = 0;
    for (std::uint64_t f : faces) top = std::max(top, __builtin_popcountll(f));
    std::vector<std::vector<std::uint64_t>> bySize(top + 1);
    for (std::uint64_t f : faces) bySize[__builtin_popcountll(f)].push_back(f);
    for (auto& level : bySize) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }

    std::vector<int> ranks(top + 2, 0); // ranks[s] = rank ∂_s : C_{s-1} → C_{s-2}
    for (int s = 1; s <= top; ++s) ranks[s] = boundaryRank(bySize[s - 1], bySize[s], field);

    prof.dims.resize(top + 1);
    for (int s = 0; s <= top; ++s)
        prof.dims[s] = static_cast<long long>(bySize[s].size()) - ranks[s] - ranks[s + 1];
    return prof;
}

HomologyProfile reducedHomology(const SimplicialComplex& K, const FieldSpec& field,
                                const Caps& caps) {
    if (K.n > caps.oracleVars)
        throw resource_error("homology: vertex count " + std::to_string(K.n) + " exceeds cap " +
                             std::to_string(caps.oracleVars));
    std::vector<std::uint64_t> faces;
    if (!K.facets.empty()) {
        // Downward closure of the facets, by a subset sweep over 2^[n].
        std::uint64_t full = (K.n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << K.n) - 1);
        for (std::uint64_t s = 0;; ++s) {
            for (const auto& f : K.facets)
                if ((s & ~f.mask) == 0) {
                    faces.push_back(s);
                    break;
                }
            if (faces.size() > caps.oracleFaces)
                throw resource_error("homology: face count exceeds cap");
            if (s == full) break;
        }
    }
    return homologyOfFaceList(std::move(faces), field);
}

int matrixRankRational(const std::vector<std::vector<long long>>& M) {
    std::vector<std::vector<cpp_int>> A(M.size());
    for (std::size_t i = 0; i < M.size(); ++i) A[i].assign(M[i].begin(), M[i].end());
    return rankBareiss(A);
}

int matrixRankModP(const std::vector<std::vector<long long>>& M, std::int64_t p) {
    std::vector<std::vector<std::int64_t>> A(M.size());
    for (std::size_t i = 0; i < M.size(); ++i) A[i].assign(M[i].begin(), M[i].end());
    return rankModular(A, p);
}

} // namespace syz
