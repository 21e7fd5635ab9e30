#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lensstring/errors.hpp"

namespace lensstring {

using i64 = std::int64_t;

/// Element of (Z/mZ)[t]/(t^n - 1), stored as an exponent-indexed coefficient
/// vector of length n. m = 0 means integer coefficients. Values are immutable
/// in spirit: every operation returns a fresh canonical value.
class CyclicPoly {
public:
    CyclicPoly(int n, i64 m);
    static CyclicPoly zero(int n, i64 m) { return CyclicPoly(n, m); }
    static CyclicPoly one(int n, i64 m);
    static CyclicPoly monomial(int n, i64 m, i64 exponent, i64 coeff = 1);
    static CyclicPoly from_coeffs(int n, i64 m, std::vector<i64> coeffs);

    int n() const { return n_; }
    i64 modulus() const { return m_; }
    const std::vector<i64>& coeffs() const { return c_; }
    /// Canonical residue of the coefficient at exponent a (a taken mod n).
    i64 coeff(i64 exponent) const;
    bool is_zero() const;

    /// Two values are equal iff n, m and all canonical residues agree.
    bool operator==(const CyclicPoly&) const = default;

    CyclicPoly operator+(const CyclicPoly& rhs) const;
    CyclicPoly operator-(const CyclicPoly& rhs) const;
    CyclicPoly operator-() const;
    /// Cyclic convolution: exponents mod n, coefficients mod m.
    CyclicPoly operator*(const CyclicPoly& rhs) const;

    /// Explicit coefficient coercion. Legal when m = 0 (plain reduction) or
    /// when the target modulus divides the current one.
    CyclicPoly reduced_to(i64 target_modulus) const;

    /// "1+t^3+t^5+t^7"; unit coefficients elided except for the constant term.
    std::string str() const;

private:
    int n_;
    i64 m_;
    std::vector<i64> c_;

    void canonicalize();
    void check_compatible(const CyclicPoly& rhs) const;
};

/// Formal de Rham 1-form: sum of c_a t^a dt/t with the same storage rules as
/// CyclicPoly. All stored forms use the dt/t basis; dt-basis views are a
/// display/interop concern (t^a dt/t = t^{a-1} dt).
class OneForm {
public:
    OneForm(int n, i64 m);
    static OneForm zero(int n, i64 m) { return OneForm(n, m); }
    static OneForm monomial(int n, i64 m, i64 exponent, i64 coeff = 1);
    static OneForm from_coeffs(int n, i64 m, std::vector<i64> coeffs);
    /// Builds the stored dt/t form whose dt-basis coefficient vector is
    /// `dt_coeffs` (i.e. shifts every exponent up by one).
    static OneForm from_dt_basis(int n, i64 m, const std::vector<i64>& dt_coeffs);

    int n() const { return n_; }
    i64 modulus() const { return m_; }
    const std::vector<i64>& coeffs() const { return c_; }
    i64 coeff(i64 exponent) const;
    /// Coefficient of t^p dt in the dt-basis view of this form.
    i64 dt_coeff(i64 p) const { return coeff(p + 1); }
    bool is_zero() const;

    bool operator==(const OneForm&) const = default;

    OneForm operator+(const OneForm& rhs) const;
    OneForm operator-(const OneForm& rhs) const;
    OneForm operator-() const;

    OneForm reduced_to(i64 target_modulus) const;

    enum class Basis { dt_over_t, dt };
    std::string str(Basis basis = Basis::dt_over_t) const;

private:
    int n_;
    i64 m_;
    std::vector<i64> c_;

    void canonicalize();
    void check_compatible(const OneForm& rhs) const;
};

/// Module action of the group ring on 1-forms: (t^i)(t^j dt/t) = t^{i+j} dt/t.
OneForm operator*(const CyclicPoly& p, const OneForm& w);

/// Formal de Rham differential: sum c_a t^a  |->  sum (a c_a) t^a dt/t, with
/// the exponent taken as its canonical representative in [0, n).
OneForm de_rham(const CyclicPoly& p);

/// Inverse in (Z/mZ)[t]/(t^n - 1), computed by solving the n x n circulant
/// system over Z/mZ (m need not be prime). Throws NotInvertibleError carrying
/// the singular congruence when no inverse exists.
CyclicPoly invert_unit(const CyclicPoly& u);

/// u^{-1} du, the 1-form image of the Dennis trace of the unit u.
OneForm dennis_dlog(const CyclicPoly& u);

/// Pushforward along t |-> t^s with chain-rule factor:
/// t^a dt/t |-> s t^{s a mod n} dt/t. Requires gcd(s, n) = 1.
OneForm substitute_pushforward(const OneForm& w, i64 s);

/// Substitution t |-> t^s on polynomials (no chain-rule factor).
CyclicPoly substitute(const CyclicPoly& p, i64 s);

}  // namespace lensstring
