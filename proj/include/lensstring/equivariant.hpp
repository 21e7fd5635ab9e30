#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "lensstring/biform.hpp"
#include "lensstring/loop_homology.hpp"

namespace lensstring {

enum class Render { ascii, unicode };

/// Formal sum of c_{pq} alpha_p (x) beta_q with c_{pq} in Z/gcd(p,n)Z.
/// Terms with gcd(p, n) = 1 cannot exist (the corresponding equivariant
/// degree-1 groups vanish); coefficients are canonical in [1, gcd(p,n)-1]
/// and zero terms are absent.
class EqTensor {
public:
    explicit EqTensor(int n) : n_(n) {}

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, i64>& terms() const { return terms_; }

    /// Adds c alpha_p (x) beta_q, reducing c mod gcd(p, n). Terms with
    /// gcd(p, n) = 1 or q = 0 (mod n) are dropped.
    void add_term(i64 p, i64 q, i64 c);
    i64 coeff(int p, int q) const;
    /// The coefficient modulus gcd(p, n) of slot p.
    i64 term_modulus(int p) const;

    bool operator==(const EqTensor&) const = default;
    EqTensor operator+(const EqTensor& rhs) const;
    EqTensor operator-(const EqTensor& rhs) const;
    EqTensor negated() const;

    /// ascii "2a3*b1+a6*b2"; unicode uses alpha/beta with subscripts.
    std::string str(Render r = Render::ascii) const;

private:
    int n_;
    std::map<std::pair<int, int>, i64> terms_;
};

/// Antisymmetrized cobracket value: `left` holds the alpha (x) beta part,
/// `swapped` the beta (x) alpha part stored with the same (p, q) keys; by
/// construction swapped = -left after exchanging the tensor slots.
struct EqTensorPair {
    EqTensor left;
    EqTensor swapped;

    static EqTensorPair antisymmetrize(const EqTensor& left);
    bool is_zero() const { return left.is_zero() && swapped.is_zero(); }
    bool operator==(const EqTensorPair&) const = default;
    std::string str(Render r = Render::ascii) const;
};

/// One-slot projection image: a vector over the alpha_p generators.
class AlphaVector {
public:
    explicit AlphaVector(int n) : n_(n) {}
    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, i64>& terms() const { return terms_; }
    void add_term(i64 p, i64 c);
    i64 coeff(int p) const;
    bool operator==(const AlphaVector&) const = default;
    std::string str(Render r = Render::ascii) const;

private:
    int n_;
    std::map<int, i64> terms_;
};

/// Projection pi_* (x) pi_*: c t^p t2^q dt/t maps to
/// (c mod gcd(p,n)) alpha_p (x) beta_q when gcd(p,n) > 1, and to 0 otherwise.
/// The reduction requires gcd(p, n) to divide the BiForm's coefficient
/// modulus.
EqTensor project_pi(const BiForm& b);

/// The same rule on single forms: pi_* of c t^a dt/t.
AlphaVector project_pi_oneform(const OneForm& w);

/// Transfer of the equivariant point class beta_q: the rotation class
/// q t^q dt/t (q = 0 gives 0: constant-loop rotation vanishes).
OneForm transfer_beta(int q, int n);

/// Transfer of alpha_p: always 0 (torsion mapping into a free group).
OneForm transfer_alpha(int p, int n);

/// Pushforward on tensors along a multiplier s coprime to n:
/// c alpha_p (x) beta_q |-> (s c) alpha_{sp} (x) beta_{sq}.
EqTensor pushforward(const EqTensor& t, i64 s);

/// String cobracket (first projection) of pi_* y_l, evaluated through the
/// representative [rho_{l,m}]: project_pi(coproduct_rho(l, m)),
/// antisymmetrized.
EqTensorPair cobracket_pi_y(const LensPair& space, int l, i64 m = 0);

/// String cobracket of the kernel-family generator y'_l with the default
/// n_l normalization. The generator is only constructed when gcd(l, n) = 1;
/// on the remaining components the value is 0.
EqTensorPair cobracket_k_family(const LensPair& space, int l);

enum class Convention { generator_sum, component_union };

std::string to_string(Convention c);

/// Nonzero-component bookkeeping for one lens space. `generator_count` is
/// |pi_family_nonzero| + |k_family_nonzero|; `component_union_count` the size
/// of the union. `m_sensitive` lists components whose pi-family nonzero-ness
/// changes for some representative m in [0, n).
struct CountReport {
    int n = 0;
    int k = 0;
    std::set<int> pi_family_nonzero;
    std::set<int> k_family_nonzero;
    int generator_count = 0;
    int component_union_count = 0;
    Convention convention = Convention::generator_sum;
    std::set<int> m_sensitive;

    int count() const {
        return convention == Convention::generator_sum ? generator_count
                                                       : component_union_count;
    }
};

/// Counts the components with nonzero cobracket values, under both
/// conventions (the headline number follows `convention`).
CountReport count_nonzero(const LensPair& space,
                          Convention convention = Convention::generator_sum);

/// Same counting skeleton applied before projection, i.e. to
/// coproduct_rho(l, 0) and k_family_coproduct(l, default n_l).
CountReport count_nonzero_coproduct(const LensPair& space,
                                    Convention convention = Convention::generator_sum);

}  // namespace lensstring
