#pragma once

#include <array>
#include <string>
#include <vector>

#include "lensstring/biform.hpp"
#include "lensstring/cyclic.hpp"

namespace lensstring {

/// The lens space L(n;k): n >= 2, k in [1, n-1], gcd(k, n) = 1. Caches
/// r = k^{-1} mod n.
struct LensPair {
    int n;
    int k;
    int r;

    LensPair(int n_, int k_);
    bool operator==(const LensPair&) const = default;
};

/// Descriptor (l, m) of the degree-3 class on the l-th free-loop component:
/// the fundamental class pushed along the (l, kl+nm)-winding family.
struct RhoClass {
    int l;     // component index, in [1, n-1]
    i64 m = 0; // winding parameter, >= 0

    bool operator==(const RhoClass&) const = default;
};

/// Finitely generated abelian group signature: Z^rank + sum Z/t_i.
struct AbelianGroup {
    int rank = 0;
    std::vector<i64> torsion;
    std::string str() const;
    bool operator==(const AbelianGroup&) const = default;
};

/// H_r(L_l M) for r = 0..4 on any component l of the free loop space of
/// L(n;k). These are fixed group signatures, independent of l and k:
/// Z, Z/n, Z, Z + Z/n, Z.
using HomologyTable = std::array<AbelianGroup, 5>;
HomologyTable loop_homology_groups(int n);

/// First projection of the string coproduct of the class [rho_{l,m}]:
///
///   sum_{a=1}^{l-1} t^a t2^{l-a} dt/t
/// + r sum_{a=1}^{kl+nm-1} t^{ra mod n} t2^{r(kl+nm-a) mod n} dt/t
///
/// reduced into the quotient (index-0 monomials dropped, coefficients mod n).
/// Every surviving monomial satisfies i + j = l (mod n).
BiForm coproduct_rho(const LensPair& space, const RhoClass& c);

/// Coproduct of the kernel-family generator: the difference
/// coproduct_rho(l, 1 + n_l l) - coproduct_rho(l, 1 + l). Closed form:
/// r (n_l - 1) l * sum_{i+j = l (n), i,j != 0} t^i t2^j dt/t.
BiForm k_family_coproduct(const LensPair& space, int l, i64 n_l);

/// Default normalization of the free parameter n_l: the smallest integer >= 2
/// making the projected coefficient r (n_l - 1) l congruent to 1 modulo every
/// gcd(p, n) > 1. When no such n_l exists (gcd(l, n) shares a factor with
/// some surviving modulus) the fallback is 2.
i64 default_n_l(const LensPair& space, int l);

/// String product of [rho_{l,m}] with a degree-1 form: a pure component
/// shift, c t^q dt/t |-> c t^{(l+q) mod n} dt/t.
OneForm product_rho_form(const LensPair& space, int l, const OneForm& w);

/// Torsion-correction wedge: consumes the dt-basis view of w
/// (coefficient of t^p dt), bi-homogenizes t^p dt to t^p t2^{(n-1-p) mod n} dt,
/// multiplies by (t^l - t2^l), converts dt = t dt/t and reduces into the
/// quotient. The output keeps w's coefficient modulus.
BiForm wedge_with_dlog(const LensPair& space, int l, const OneForm& w);

}  // namespace lensstring
