#pragma once

#include <map>
#include <string>
#include <utility>

#include "lensstring/equivariant.hpp"

namespace lensstring {

/// Equivariant homology class fed to the compatibility checker.
struct EqClass {
    enum class Kind { pi_y, beta, alpha };
    Kind kind;
    int index;  // component l for pi_y, q for beta, p for alpha
    int n;

    static EqClass pi_y(int l, int n) { return {Kind::pi_y, l, n}; }
    static EqClass beta(int q, int n) { return {Kind::beta, q, n}; }
    static EqClass alpha(int p, int n) { return {Kind::alpha, p, n}; }

    /// Equivariant degree: 1 for pi_y and alpha, 0 for beta.
    int degree() const { return kind == Kind::beta ? 0 : 1; }
    bool operator==(const EqClass&) const = default;
};

/// Formal sum of c alpha_p (x) alpha_q terms, coefficient canonical modulo
/// gcd(gcd(p,n), gcd(q,n)). This is where the compatibility defect lives.
class AlphaTensor {
public:
    explicit AlphaTensor(int n) : n_(n) {}
    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, i64>& terms() const { return terms_; }
    void add_term(i64 p, i64 q, i64 c);
    i64 coeff(int p, int q) const;
    bool operator==(const AlphaTensor&) const = default;
    std::string str(Render r = Render::ascii) const;

private:
    int n_;
    std::map<std::pair<int, int>, i64> terms_;
};

/// Bracket of pi_* y_l with a degree-0 or degree-1 class: beta_q goes through
/// transfer, component shift and projection; alpha_p dies (its transfer is 0).
AlphaVector ad_apply(const LensPair& space, const EqClass& X, const EqClass& Z);

/// Left-hand side of the Drinfeld compatibility identity, which vanishes in
/// the computed bidegree: the transfer out of the degree-3 equivariant
/// torsion group into the free degree-4 group is zero.
AlphaTensor bialgebra_lhs(const LensPair& space, const EqClass& X, const EqClass& Y);

/// Right-hand side: (ad_X (x) 1 + 1 (x) ad_X) applied to the antisymmetrized
/// cobracket of Y, minus the same with X and Y exchanged (the second term is
/// negative: both inputs have degree one).
AlphaTensor bialgebra_rhs(const LensPair& space, const EqClass& X, const EqClass& Y,
                          i64 mx = 0, i64 my = 0);

struct BialgebraVerdict {
    AlphaTensor lhs;
    AlphaTensor rhs;
    bool compatible = false;
};

BialgebraVerdict bialgebra_check(const LensPair& space, const EqClass& X,
                                 const EqClass& Y, i64 mx = 0, i64 my = 0);

}  // namespace lensstring
