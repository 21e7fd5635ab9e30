#pragma once

#include <string>
#include <vector>

#include "lensstring/equivariant.hpp"

namespace lensstring {

/// A homotopy equivalence L(n;k) -> L(n;k') that sends the l-component to
/// the (s l)-component. Requires the classical compatibility
/// s^2 k = +-k' (mod n). The Whitehead-torsion unit is supplied as a
/// certified rational expression "(t^a-1)(t^b-1)/((t^c-1)(t^d-1))".
struct LensMap {
    LensPair source;
    LensPair target;
    int s;
    std::string expression;

    LensMap(LensPair src, LensPair tgt, int s_, std::string expr);

    /// The identity map of L(n;k) (trivial torsion expression).
    static LensMap identity(const LensPair& space);
};

/// Whitehead-torsion unit of a map, as an element of the cyclic group ring.
struct TorsionUnit {
    /// The expression reduced by exact division in Z[t], then folded mod
    /// t^n - 1 (integer coefficients).
    CyclicPoly unit_integral;
    /// The same unit over the working modulus (invertible there).
    CyclicPoly unit;
    std::string provenance;
};

/// Product of (t^{e_i} - 1) factors over the integers (plain dense
/// coefficient list, lowest degree first).
std::vector<i64> binomial_product(const std::vector<int>& exponents);

/// Parses the torsion mini-format into numerator/denominator exponent lists.
void parse_torsion_expression(const std::string& expr,
                              std::vector<int>& numerator,
                              std::vector<int>& denominator);

/// Working coefficient modulus for Dennis-trace arithmetic on L(n;*): the
/// lcm of gcd(p, n) over the surviving projection slots. The projection
/// target retains no more than that.
i64 working_modulus(int n);

/// Evaluates the map's torsion expression: exact division in Z[t] (nonzero
/// remainder raises InvalidTorsionExpression), reduction mod t^n - 1, and
/// coercion to the working modulus, where invertibility is certified.
TorsionUnit torsion_unit(const LensMap& f);

/// Dennis-trace correction of the cobracket on component l:
/// project_pi( pushforward( wedge_with_dlog(l, dennis_dlog(tau(f))), s ) ).
EqTensor correction_term(const LensMap& f, int l);

/// Both sides of the cobracket transformation formula on component l, and
/// their discrepancy. `equal` is the exact verdict; the report also states
/// whether the discrepancy lies in the span of the kernel-family values on
/// the target component (the representative ambiguity of the tables).
struct TransformReport {
    int l = 0;
    EqTensor lhs;         // cobracket on the target at component s*l
    EqTensor pushed;      // pushforward of the source cobracket
    EqTensor correction;  // Dennis-trace correction term
    EqTensor rhs;         // pushed + correction
    EqTensor discrepancy; // lhs - rhs
    bool equal = false;
    bool discrepancy_in_k_span = false;
};

TransformReport transform_check(const LensMap& f, int l);

}  // namespace lensstring
