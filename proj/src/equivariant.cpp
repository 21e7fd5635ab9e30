#include "lensstring/equivariant.hpp"

#include <numeric>
#include <sstream>

namespace lensstring {

namespace {

std::string subscript(int v) {
    static const char* digits[10] = {"₀", "₁", "₂", "₃", "₄",
                                     "₅", "₆", "₇", "₈", "₉"};
    std::string s = std::to_string(v), out;
    for (char ch : s) out += digits[ch - '0'];
    return out;
}

}  // namespace

// ------------------------------------------------------------------ EqTensor

void EqTensor::add_term(i64 p, i64 q, i64 c) {
    p %= n_; if (p < 0) p += n_;
    q %= n_; if (q < 0) q += n_;
    if (p == 0 || q == 0) return;
    const i64 g = std::gcd(p, static_cast<i64>(n_));
    if (g == 1) return;  // the degree-1 equivariant group vanishes there
    c %= g; if (c < 0) c += g;
    if (c == 0) return;
    auto key = std::make_pair(static_cast<int>(p), static_cast<int>(q));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second = (it->second + c) % g;
        if (it->second == 0) terms_.erase(it);
    }
}

i64 EqTensor::coeff(int p, int q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? 0 : it->second;
}

i64 EqTensor::term_modulus(int p) const { return std::gcd(static_cast<i64>(p), static_cast<i64>(n_)); }

EqTensor EqTensor::operator+(const EqTensor& rhs) const {
    if (n_ != rhs.n_) throw DimensionError("tensors live over different orders");
    EqTensor out(*this);
    for (const auto& [pq, c] : rhs.terms_) out.add_term(pq.first, pq.second, c);
    return out;
}

EqTensor EqTensor::operator-(const EqTensor& rhs) const {
    if (n_ != rhs.n_) throw DimensionError("tensors live over different orders");
    EqTensor out(*this);
    for (const auto& [pq, c] : rhs.terms_) out.add_term(pq.first, pq.second, -c);
    return out;
}

EqTensor EqTensor::negated() const {
    EqTensor out(n_);
    for (const auto& [pq, c] : terms_) out.add_term(pq.first, pq.second, -c);
    return out;
}

std::string EqTensor::str(Render r) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [pq, c] : terms_) {
        if (!first) os << "+";
        first = false;
        if (c != 1) os << c;
        if (r == Render::ascii)
            os << "a" << pq.first << "*b" << pq.second;
        else
            os << "α" << subscript(pq.first) << "⊗β" << subscript(pq.second);
    }
    return os.str();
}

EqTensorPair EqTensorPair::antisymmetrize(const EqTensor& left) {
    // beta (x) alpha part: negated, slots exchanged; keys keep the alpha index
    // in the first position.
    return EqTensorPair{left, left.negated()};
}

std::string EqTensorPair::str(Render r) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << left.str(r);
    if (!swapped.is_zero()) {
        std::ostringstream sw;
        bool first = true;
        for (const auto& [pq, c] : swapped.terms()) {
            if (!first) sw << "+";
            first = false;
            if (c != 1) sw << c;
            if (r == Render::ascii)
                sw << "b" << pq.second << "*a" << pq.first;
            else
                sw << "β" << subscript(pq.second) << "⊗α" << subscript(pq.first);
        }
        os << (left.is_zero() ? "" : "+") << sw.str();
    }
    return os.str();
}

// --------------------------------------------------------------- AlphaVector

void AlphaVector::add_term(i64 p, i64 c) {
    p %= n_; if (p < 0) p += n_;
    if (p == 0) return;
    const i64 g = std::gcd(p, static_cast<i64>(n_));
    if (g == 1) return;
    c %= g; if (c < 0) c += g;
    if (c == 0) return;
    auto it = terms_.find(static_cast<int>(p));
    if (it == terms_.end()) {
        terms_.emplace(static_cast<int>(p), c);
    } else {
        it->second = (it->second + c) % g;
        if (it->second == 0) terms_.erase(it);
    }
}

i64 AlphaVector::coeff(int p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

std::string AlphaVector::str(Render r) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << "+";
        first = false;
        if (c != 1) os << c;
        if (r == Render::ascii)
            os << "a" << p;
        else
            os << "α" << subscript(p);
    }
    return os.str();
}

// --------------------------------------------------------------- projections

EqTensor project_pi(const BiForm& b) {
    EqTensor out(b.n());
    for (const auto& [ij, c] : b.terms()) {
        const i64 g = std::gcd(static_cast<i64>(ij.first), static_cast<i64>(b.n()));
        if (g == 1) continue;
        if (b.modulus() % g != 0)
            throw ModulusError("projection modulus does not divide the coefficient modulus");
        out.add_term(ij.first, ij.second, c);
    }
    return out;
}

AlphaVector project_pi_oneform(const OneForm& w) {
    AlphaVector out(w.n());
    for (int a = 1; a < w.n(); ++a) {
        if (w.coeffs()[a] == 0) continue;
        const i64 g = std::gcd(static_cast<i64>(a), static_cast<i64>(w.n()));
        if (g == 1) continue;
        if (w.modulus() != 0 && w.modulus() % g != 0)
            throw ModulusError("projection modulus does not divide the coefficient modulus");
        out.add_term(a, w.coeffs()[a]);
    }
    return out;
}

OneForm transfer_beta(int q, int n) {
    if (n < 2) throw DomainError("n must be >= 2");
    q %= n; if (q < 0) q += n;
    if (q == 0) return OneForm::zero(n, n);  // constant-loop rotation vanishes
    return OneForm::monomial(n, n, q, q);
}

OneForm transfer_alpha(int /*p*/, int n) {
    if (n < 2) throw DomainError("n must be >= 2");
    return OneForm::zero(n, n);  // torsion into a torsion-free group
}

EqTensor pushforward(const EqTensor& t, i64 s) {
    const int n = t.n();
    i64 ss = s % n; if (ss < 0) ss += n;
    if (std::gcd(ss, static_cast<i64>(n)) != 1)
        throw DomainError("pushforward multiplier must be coprime to n");
    EqTensor out(n);
    for (const auto& [pq, c] : t.terms())
        out.add_term(ss * pq.first, ss * pq.second, ss * c);
    return out;
}

// ---------------------------------------------------------------- cobrackets

EqTensorPair cobracket_pi_y(const LensPair& space, int l, i64 m) {
    return EqTensorPair::antisymmetrize(project_pi(coproduct_rho(space, RhoClass{l, m})));
}

EqTensorPair cobracket_k_family(const LensPair& space, int l) {
    if (l <= 0 || l >= space.n) throw DomainError("l must lie in [1, n-1]");
    if (std::gcd(l, space.n) > 1) {
        // The kernel-family generator is only constructed on components whose
        // class is coprime to n; elsewhere the value is zero.
        return EqTensorPair::antisymmetrize(EqTensor(space.n));
    }
    const i64 n_l = default_n_l(space, l);
    return EqTensorPair::antisymmetrize(project_pi(k_family_coproduct(space, l, n_l)));
}

// ------------------------------------------------------------------ counting

std::string to_string(Convention c) {
    return c == Convention::generator_sum ? "generator-sum" : "component-union";
}

namespace {

CountReport count_common(const LensPair& space, Convention convention, bool projected) {
    CountReport rep;
    rep.n = space.n;
    rep.k = space.k;
    rep.convention = convention;
    for (int l = 1; l < space.n; ++l) {
        bool pi_nonzero, k_nonzero;
        if (projected) {
            pi_nonzero = !cobracket_pi_y(space, l).is_zero();
            k_nonzero = !cobracket_k_family(space, l).is_zero();
            for (i64 m = 0; m < space.n; ++m) {
                if ((cobracket_pi_y(space, l, m).is_zero()) != !pi_nonzero) {
                    rep.m_sensitive.insert(l);
                    break;
                }
            }
        } else {
            pi_nonzero = !coproduct_rho(space, RhoClass{l, 0}).is_zero();
            k_nonzero = !k_family_coproduct(space, l, default_n_l(space, l)).is_zero();
        }
        if (pi_nonzero) rep.pi_family_nonzero.insert(l);
        if (k_nonzero) rep.k_family_nonzero.insert(l);
    }
    rep.generator_count = static_cast<int>(rep.pi_family_nonzero.size() +
                                           rep.k_family_nonzero.size());
    std::set<int> both = rep.pi_family_nonzero;
    both.insert(rep.k_family_nonzero.begin(), rep.k_family_nonzero.end());
    rep.component_union_count = static_cast<int>(both.size());
    return rep;
}

}  // namespace

CountReport count_nonzero(const LensPair& space, Convention convention) {
    return count_common(space, convention, true);
}

CountReport count_nonzero_coproduct(const LensPair& space, Convention convention) {
    return count_common(space, convention, false);
}

}  // namespace lensstring
