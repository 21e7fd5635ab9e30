#pragma once

#include <map>
#include <string>
#include <utility>

#include "lensstring/cyclic.hpp"

namespace lensstring {

/// Element of R/I: sum of c_{ij} t^i t2^j dt/t with i, j in [1, n-1]. The
/// quotient kills every monomial with index 0 in either slot, so such terms
/// are dropped on insertion, as are zero coefficients (canonical sparse form).
///
/// Coefficients live in Z/mZ; the default working modulus is n.
class BiForm {
public:
    explicit BiForm(int n) : BiForm(n, n) {}
    BiForm(int n, i64 m);

    int n() const { return n_; }
    i64 modulus() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, i64>& terms() const { return terms_; }

    /// Adds c t^i t2^j dt/t; exponents reduced mod n, coefficient mod m.
    void add_term(i64 i, i64 j, i64 c);
    i64 coeff(int i, int j) const;

    bool operator==(const BiForm&) const = default;
    BiForm operator+(const BiForm& rhs) const;
    BiForm operator-(const BiForm& rhs) const;

    /// "2t^1t2^1 dt/t", terms in ascending (i, j) order; "0" when empty.
    std::string str() const;

private:
    int n_;
    i64 m_;
    std::map<std::pair<int, int>, i64> terms_;

    void check_compatible(const BiForm& rhs) const;
};

/// Pushforward along the component multiplier s (a homotopy-equivalence
/// datum): the H_1 slot carries the chain-rule factor, so
/// c t^i t2^j dt/t |-> (s c) t^{si} t2^{sj} dt/t. Requires gcd(s, n) = 1.
BiForm pushforward(const BiForm& b, i64 s);

}  // namespace lensstring
