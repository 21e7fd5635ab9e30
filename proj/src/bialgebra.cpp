#include "lensstring/bialgebra.hpp"

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

void require_pi_y(const EqClass& c, const char* role) {
    if (c.kind != EqClass::Kind::pi_y)
        throw NotImplementedError(std::string(role) +
                                  " must be a degree-1 pi_y class; other degrees are "
                                  "outside the computed bidegree");
}

}  // namespace

void AlphaTensor::add_term(i64 p, i64 q, i64 c) {
    p %= n_; if (p < 0) p += n_;
    q %= n_; if (q < 0) q += n_;
    if (p == 0 || q == 0) return;
    const i64 gp = std::gcd(p, static_cast<i64>(n_));
    const i64 gq = std::gcd(q, static_cast<i64>(n_));
    if (gp == 1 || gq == 1) return;
    const i64 g = std::gcd(gp, gq);
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

i64 AlphaTensor::coeff(int p, int q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? 0 : it->second;
}

std::string AlphaTensor::str(Render r) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [pq, c] : terms_) {
        if (!first) os << "+";
        first = false;
        if (c != 1) os << c;
        if (r == Render::ascii)
            os << "a" << pq.first << "*a" << pq.second;
        else
            os << "α" << subscript(pq.first) << "⊗α" << subscript(pq.second);
    }
    return os.str();
}

AlphaVector ad_apply(const LensPair& space, const EqClass& X, const EqClass& Z) {
    require_pi_y(X, "X");
    if (Z.kind == EqClass::Kind::alpha)
        return AlphaVector(space.n);  // transfer of alpha is zero
    if (Z.kind != EqClass::Kind::beta)
        throw NotImplementedError("ad is computed on beta and alpha classes only");
    const OneForm t = transfer_beta(Z.index, space.n);
    return project_pi_oneform(product_rho_form(space, X.index, t));
}

AlphaTensor bialgebra_lhs(const LensPair& space, const EqClass& X, const EqClass& Y) {
    require_pi_y(X, "X");
    require_pi_y(Y, "Y");
    // The transfer out of the degree-3 equivariant torsion group lands in a
    // free group, hence vanishes; so does the whole left-hand side.
    return AlphaTensor(space.n);
}

AlphaTensor bialgebra_rhs(const LensPair& space, const EqClass& X, const EqClass& Y,
                          i64 mx, i64 my) {
    require_pi_y(X, "X");
    require_pi_y(Y, "Y");
    AlphaTensor out(space.n);
    // (ad_W (x) 1 + 1 (x) ad_W) over the antisymmetrized cobracket
    // left - transpose(left); ad kills the alpha slot, so only the beta slot
    // contributes on each side.
    auto accumulate = [&](int l_ad, const EqTensor& left, i64 sign) {
        for (const auto& [pq, c] : left.terms()) {
            const auto ad = ad_apply(space, EqClass::pi_y(l_ad, space.n),
                                     EqClass::beta(pq.second, space.n));
            for (const auto& [a, ca] : ad.terms()) {
                out.add_term(pq.first, a, sign * c * ca);   // alpha_p (x) ad(beta_q)
                out.add_term(a, pq.first, -sign * c * ca);  // -ad(beta_q) (x) alpha_p
            }
        }
    };
    // Both inputs have degree one; the second term of the compatibility
    // identity carries the negative sign.
    accumulate(X.index, cobracket_pi_y(space, Y.index, my).left, +1);
    accumulate(Y.index, cobracket_pi_y(space, X.index, mx).left, -1);
    return out;
}

BialgebraVerdict bialgebra_check(const LensPair& space, const EqClass& X,
                                 const EqClass& Y, i64 mx, i64 my) {
    BialgebraVerdict v{bialgebra_lhs(space, X, Y), bialgebra_rhs(space, X, Y, mx, my), false};
    v.compatible = v.lhs == v.rhs;
    return v;
}

}  // namespace lensstring
