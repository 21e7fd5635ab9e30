#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lensstring {

/// Dense row-major matrix over Z/mZ, sized rows x cols.
struct ZModMatrix {
    int rows = 0;
    int cols = 0;
    std::int64_t m = 0;  // modulus, > 1
    std::vector<std::int64_t> a;

    ZModMatrix(int r, int c, std::int64_t mod)
        : rows(r), cols(c), m(mod), a(static_cast<std::size_t>(r) * c, 0) {}
    std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

struct ZModSolveResult {
    std::optional<std::vector<std::int64_t>> solution;
    /// On failure, the congruence that has no solution, e.g. "3*x = 1 (mod 9)".
    std::string certificate;
};

/// Solves A x = b over Z/mZ for composite m.
///
/// Z/mZ is not a field, so pivots are produced by extended-gcd row
/// combinations (unimodular over Z, hence invertible mod m) instead of
/// division. A pivot congruence a*x = s (mod m) is solvable iff gcd(a,m) | s;
/// the first violated congruence is returned as the certificate.
ZModSolveResult solve_mod(ZModMatrix A, std::vector<std::int64_t> b);

std::int64_t mod_gcd(std::int64_t a, std::int64_t b);
/// Inverse of a modulo n; throws DomainError if gcd(a,n) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t n);

}  // namespace lensstring
