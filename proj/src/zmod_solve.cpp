#include "lensstring/zmod_solve.hpp"

#include <numeric>
#include <sstream>

#include "lensstring/errors.hpp"

namespace lensstring {

using i64 = std::int64_t;

namespace {

i64 norm(i64 a, i64 m) {
    a %= m;
    return a < 0 ? a + m : a;
}

// g = s*a + t*b with g = gcd(a, b) >= 0.
void ext_gcd(i64 a, i64 b, i64& g, i64& s, i64& t) {
    if (b == 0) {
        g = a < 0 ? -a : a;
        s = a < 0 ? -1 : 1;
        t = 0;
        return;
    }
    i64 g1, s1, t1;
    ext_gcd(b, a % b, g1, s1, t1);
    g = g1;
    s = t1;
    t = s1 - (a / b) * t1;
}

}  // namespace

std::int64_t mod_gcd(std::int64_t a, std::int64_t b) {
    return std::gcd(a, b);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
    if (n <= 0) throw DomainError("mod_inverse: modulus must be positive");
    i64 g, s, t;
    ext_gcd(norm(a, n), n, g, s, t);
    if (g != 1) {
        std::ostringstream os;
        os << "mod_inverse: gcd(" << norm(a, n) << ", " << n << ") = " << g << " != 1";
        throw DomainError(os.str());
    }
    return norm(s, n);
}

ZModSolveResult solve_mod(ZModMatrix A, std::vector<std::int64_t> b) {
    const int rows = A.rows, cols = A.cols;
    const i64 m = A.m;
    if (static_cast<int>(b.size()) != rows)
        throw DimensionError("solve_mod: rhs size does not match the matrix");
    for (auto& x : A.a) x = norm(x, m);
    for (auto& x : b) x = norm(x, m);

    std::vector<int> pivot_col(rows, -1);
    int piv = 0;
    for (int col = 0; col < cols && piv < rows; ++col) {
        int first = -1;
        for (int i = piv; i < rows; ++i)
            if (A.at(i, col) != 0) { first = i; break; }
        if (first < 0) continue;
        if (first != piv) {
            for (int j = 0; j < cols; ++j) std::swap(A.at(piv, j), A.at(first, j));
            std::swap(b[piv], b[first]);
        }
        // Fold every lower entry into the pivot with a unimodular 2x2
        // combination; afterwards the pivot divides all of them.
        for (int i = piv + 1; i < rows; ++i) {
            i64 av = A.at(piv, col), bv = A.at(i, col);
            if (bv == 0) continue;
            if (av != 0 && bv % av == 0) {
                i64 q = bv / av;
                for (int j = 0; j < cols; ++j)
                    A.at(i, j) = norm(A.at(i, j) - q * A.at(piv, j), m);
                b[i] = norm(b[i] - q * b[piv], m);
            } else {
                i64 g, s, t;
                ext_gcd(av, bv, g, s, t);
                i64 u = bv / g, v = av / g;  // det [[s,t],[-u,v]] = 1
                for (int j = 0; j < cols; ++j) {
                    i64 x = A.at(piv, j), y = A.at(i, j);
                    A.at(piv, j) = norm(s * x + t * y, m);
                    A.at(i, j) = norm(-u * x + v * y, m);
                }
                i64 x = b[piv], y = b[i];
                b[piv] = norm(s * x + t * y, m);
                b[i] = norm(-u * x + v * y, m);
            }
        }
        // The pivot is now the gcd of the original column entries, a
        // positive residue.
        pivot_col[piv] = col;
        ++piv;
    }

    // Inconsistent zero rows.
    for (int i = piv; i < rows; ++i) {
        if (b[i] != 0) {
            std::ostringstream os;
            os << "0 = " << b[i] << " (mod " << m << ")";
            return {std::nullopt, os.str()};
        }
    }

    std::vector<i64> x(cols, 0);
    for (int i = piv - 1; i >= 0; --i) {
        int col = pivot_col[i];
        i64 s = b[i];
        for (int j = col + 1; j < cols; ++j) s = norm(s - A.at(i, j) * x[j], m);
        i64 a = A.at(i, col);
        i64 g = std::gcd(a, m);
        if (s % g != 0) {
            std::ostringstream os;
            os << a << "*x = " << s << " (mod " << m << ")";
            return {std::nullopt, os.str()};
        }
        i64 mm = m / g;
        x[col] = mm == 1 ? 0 : norm((s / g) * mod_inverse((a / g) % mm, mm), mm);
    }

    // Defensive verification of the computed solution.
    for (int i = 0; i < rows; ++i) {
        i64 s = 0;
        for (int j = 0; j < cols; ++j) s = norm(s + A.at(i, j) * x[j], m);
        if (s != b[i]) return {std::nullopt, "residual after back substitution"};
    }
    return {x, {}};
}

}  // namespace lensstring
