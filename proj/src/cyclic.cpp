#include "lensstring/cyclic.hpp"

#include <numeric>
#include <sstream>

#include "lensstring/zmod_solve.hpp"

namespace lensstring {

namespace {

i64 canon_coeff(i64 c, i64 m) {
    if (m == 0) return c;
    c %= m;
    return c < 0 ? c + m : c;
}

i64 canon_exp(i64 a, int n) {
    a %= n;
    return a < 0 ? a + n : a;
}

void check_n_m(int n, i64 m) {
    if (n < 1) throw DomainError("group order n must be positive");
    if (m < 0) throw DomainError("coefficient modulus must be >= 0");
}

std::string poly_string(const std::vector<i64>& c, const char* var, int shift) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t a = 0; a < c.size(); ++a) {
        if (c[a] == 0) continue;
        if (!first) os << "+";
        first = false;
        i64 e = static_cast<i64>(a) + shift;
        if (e == 0) {
            os << c[a];
        } else {
            if (c[a] != 1) os << c[a];
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return first ? "0" : os.str();
}

}  // namespace

// ---------------------------------------------------------------- CyclicPoly

CyclicPoly::CyclicPoly(int n, i64 m) : n_(n), m_(m), c_(static_cast<std::size_t>(n), 0) {
    check_n_m(n, m);
}

CyclicPoly CyclicPoly::one(int n, i64 m) { return monomial(n, m, 0, 1); }

CyclicPoly CyclicPoly::monomial(int n, i64 m, i64 exponent, i64 coeff) {
    CyclicPoly p(n, m);
    p.c_[canon_exp(exponent, n)] = canon_coeff(coeff, m);
    return p;
}

CyclicPoly CyclicPoly::from_coeffs(int n, i64 m, std::vector<i64> coeffs) {
    CyclicPoly p(n, m);
    for (std::size_t a = 0; a < coeffs.size(); ++a) {
        i64 e = canon_exp(static_cast<i64>(a), n);
        p.c_[e] = canon_coeff(p.c_[e] + coeffs[a], m);
    }
    return p;
}

void CyclicPoly::canonicalize() {
    for (auto& c : c_) c = canon_coeff(c, m_);
}

void CyclicPoly::check_compatible(const CyclicPoly& rhs) const {
    if (n_ != rhs.n_ || m_ != rhs.m_)
        throw DimensionError("cyclic polynomials live in different rings");
}

i64 CyclicPoly::coeff(i64 exponent) const { return c_[canon_exp(exponent, n_)]; }

bool CyclicPoly::is_zero() const {
    for (i64 c : c_)
        if (c != 0) return false;
    return true;
}

CyclicPoly CyclicPoly::operator+(const CyclicPoly& rhs) const {
    check_compatible(rhs);
    CyclicPoly out(n_, m_);
    for (int a = 0; a < n_; ++a) out.c_[a] = canon_coeff(c_[a] + rhs.c_[a], m_);
    return out;
}

CyclicPoly CyclicPoly::operator-(const CyclicPoly& rhs) const {
    check_compatible(rhs);
    CyclicPoly out(n_, m_);
    for (int a = 0; a < n_; ++a) out.c_[a] = canon_coeff(c_[a] - rhs.c_[a], m_);
    return out;
}

CyclicPoly CyclicPoly::operator-() const {
    CyclicPoly out(n_, m_);
    for (int a = 0; a < n_; ++a) out.c_[a] = canon_coeff(-c_[a], m_);
    return out;
}

CyclicPoly CyclicPoly::operator*(const CyclicPoly& rhs) const {
    check_compatible(rhs);
    CyclicPoly out(n_, m_);
    for (int a = 0; a < n_; ++a) {
        if (c_[a] == 0) continue;
        for (int b = 0; b < n_; ++b) {
            if (rhs.c_[b] == 0) continue;
            int e = a + b >= n_ ? a + b - n_ : a + b;
            out.c_[e] = canon_coeff(out.c_[e] + c_[a] * rhs.c_[b], m_);
        }
    }
    return out;
}

CyclicPoly CyclicPoly::reduced_to(i64 target) const {
    check_n_m(n_, target);
    if (target != 0 && m_ != 0 && m_ % target != 0) {
        std::ostringstream os;
        os << "cannot reduce coefficients mod " << m_ << " to mod " << target;
        throw ModulusError(os.str());
    }
    if (target == 0 && m_ != 0)
        throw ModulusError("cannot lift modular coefficients back to the integers");
    CyclicPoly out(n_, target);
    for (int a = 0; a < n_; ++a) out.c_[a] = canon_coeff(c_[a], target);
    return out;
}

std::string CyclicPoly::str() const { return poly_string(c_, "t", 0); }

// ------------------------------------------------------------------- OneForm

OneForm::OneForm(int n, i64 m) : n_(n), m_(m), c_(static_cast<std::size_t>(n), 0) {
    check_n_m(n, m);
}

OneForm OneForm::monomial(int n, i64 m, i64 exponent, i64 coeff) {
    OneForm w(n, m);
    w.c_[canon_exp(exponent, n)] = canon_coeff(coeff, m);
    return w;
}

OneForm OneForm::from_coeffs(int n, i64 m, std::vector<i64> coeffs) {
    OneForm w(n, m);
    for (std::size_t a = 0; a < coeffs.size(); ++a) {
        i64 e = canon_exp(static_cast<i64>(a), n);
        w.c_[e] = canon_coeff(w.c_[e] + coeffs[a], m);
    }
    return w;
}

OneForm OneForm::from_dt_basis(int n, i64 m, const std::vector<i64>& dt_coeffs) {
    OneForm w(n, m);
    for (std::size_t p = 0; p < dt_coeffs.size(); ++p) {
        i64 e = canon_exp(static_cast<i64>(p) + 1, n);
        w.c_[e] = canon_coeff(w.c_[e] + dt_coeffs[p], m);
    }
    return w;
}

void OneForm::canonicalize() {
    for (auto& c : c_) c = canon_coeff(c, m_);
}

void OneForm::check_compatible(const OneForm& rhs) const {
    if (n_ != rhs.n_ || m_ != rhs.m_)
        throw DimensionError("1-forms live over different rings");
}

i64 OneForm::coeff(i64 exponent) const { return c_[canon_exp(exponent, n_)]; }

bool OneForm::is_zero() const {
    for (i64 c : c_)
        if (c != 0) return false;
    return true;
}

OneForm OneForm::operator+(const OneForm& rhs) const {
    check_compatible(rhs);
    OneForm out(n_, m_);
    for (int a = 0; a < n_; ++a) out.c_[a] = canon_coeff(c_[a] + rhs.c_[a], m_);
    return out;
}

OneForm OneForm::operator-(const OneForm& rhs) const {
    check_compatible(rhs);
    OneForm out(n_, m_);
    for (int a = 0; a < n_; ++a) out.c_[a] = canon_coeff(c_[a] - rhs.c_[a], m_);
    return out;
}

OneForm OneForm::operator-() const {
    OneForm out(n_, m_);
    for (int a = 0; a < n_; ++a) out.c_[a] = canon_coeff(-c_[a], m_);
    return out;
}

OneForm OneForm::reduced_to(i64 target) const {
    if (target != 0 && m_ != 0 && m_ % target != 0)
        throw ModulusError("target modulus must divide the current one");
    if (target == 0 && m_ != 0)
        throw ModulusError("cannot lift modular coefficients back to the integers");
    OneForm out(n_, target);
    for (int a = 0; a < n_; ++a) out.c_[a] = canon_coeff(c_[a], target);
    return out;
}

std::string OneForm::str(Basis basis) const {
    if (basis == Basis::dt_over_t) {
        std::string body = poly_string(c_, "t", 0);
        return body == "0" ? body : body + " dt/t";
    }
    // t^a dt/t = t^{a-1} dt
    std::vector<i64> shifted(c_.size());
    for (int a = 0; a < n_; ++a) shifted[canon_exp(a - 1, n_)] = c_[a];
    std::string body = poly_string(shifted, "t", 0);
    return body == "0" ? body : body + " dt";
}

// ---------------------------------------------------------------- operations

OneForm operator*(const CyclicPoly& p, const OneForm& w) {
    if (p.n() != w.n() || p.modulus() != w.modulus())
        throw DimensionError("polynomial and 1-form live over different rings");
    OneForm out(w.n(), w.modulus());
    std::vector<i64> acc(static_cast<std::size_t>(w.n()), 0);
    for (int a = 0; a < p.n(); ++a) {
        if (p.coeffs()[a] == 0) continue;
        for (int b = 0; b < w.n(); ++b) {
            if (w.coeffs()[b] == 0) continue;
            int e = a + b >= w.n() ? a + b - w.n() : a + b;
            acc[e] += p.coeffs()[a] * w.coeffs()[b];
        }
    }
    return OneForm::from_coeffs(w.n(), w.modulus(), acc);
}

OneForm de_rham(const CyclicPoly& p) {
    std::vector<i64> out(static_cast<std::size_t>(p.n()), 0);
    for (int a = 0; a < p.n(); ++a) out[a] = static_cast<i64>(a) * p.coeffs()[a];
    return OneForm::from_coeffs(p.n(), p.modulus(), out);
}

CyclicPoly invert_unit(const CyclicPoly& u) {
    if (u.modulus() <= 0)
        throw DomainError("invert_unit requires a positive coefficient modulus");
    const int n = u.n();
    const i64 m = u.modulus();
    if (m == 1) return CyclicPoly::zero(n, 1);  // the zero ring; 1 = 0
    // Multiplication by u is the circulant matrix C[i][j] = u[(i-j) mod n];
    // u v = 1 becomes C v = e_0.
    ZModMatrix C(n, n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            C.at(i, j) = u.coeff(i - j);
    std::vector<i64> e0(static_cast<std::size_t>(n), 0);
    e0[0] = 1;
    auto res = solve_mod(C, e0);
    if (!res.solution) {
        throw NotInvertibleError("not a unit in (Z/" + std::to_string(m) + ")[t]/(t^" +
                                     std::to_string(n) + "-1): " + res.certificate,
                                 res.certificate);
    }
    CyclicPoly v = CyclicPoly::from_coeffs(n, m, *res.solution);
    if (!((u * v) == CyclicPoly::one(n, m)))
        throw NotInvertibleError("inverse verification failed", "u*v != 1");
    return v;
}

OneForm dennis_dlog(const CyclicPoly& u) { return invert_unit(u) * de_rham(u); }

OneForm substitute_pushforward(const OneForm& w, i64 s) {
    const int n = w.n();
    if (std::gcd(canon_exp(s, n), static_cast<i64>(n)) != 1)
        throw DomainError("substitution multiplier must be coprime to n");
    std::vector<i64> out(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        if (w.coeffs()[a] == 0) continue;
        out[canon_exp(s * a, n)] += s * w.coeffs()[a];
    }
    return OneForm::from_coeffs(n, w.modulus(), out);
}

CyclicPoly substitute(const CyclicPoly& p, i64 s) {
    const int n = p.n();
    std::vector<i64> out(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) out[canon_exp(s * a, n)] += p.coeffs()[a];
    return CyclicPoly::from_coeffs(n, p.modulus(), out);
}

}  // namespace lensstring
