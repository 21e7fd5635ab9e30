#include "lensstring/loop_homology.hpp"

#include <numeric>
#include <sstream>

#include "lensstring/zmod_solve.hpp"

namespace lensstring {

LensPair::LensPair(int n_, int k_) : n(n_) {
    if (n < 2) throw DomainError("lens space order n must be >= 2");
    k = k_ % n;
    if (k < 0) k += n;
    if (k == 0 || std::gcd(k, n) != 1)
        throw DomainError("k must be coprime to n");
    r = static_cast<int>(mod_inverse(k, n));
}

std::string AbelianGroup::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < rank; ++i) {
        if (!first) os << " + ";
        os << "Z";
        first = false;
    }
    for (i64 t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    return first ? "0" : os.str();
}

std::array<AbelianGroup, 5> loop_homology_groups(int n) {
    if (n < 2) throw DomainError("n must be >= 2");
    return {AbelianGroup{1, {}},
            AbelianGroup{0, {n}},
            AbelianGroup{1, {}},
            AbelianGroup{1, {n}},
            AbelianGroup{1, {}}};
}

BiForm coproduct_rho(const LensPair& space, const RhoClass& c) {
    const int n = space.n;
    if (c.l <= 0 || c.l >= n)
        throw DomainError("component index l must lie in [1, n-1]; the coproduct "
                          "on the constant-loop component is zero by definition");
    if (c.m < 0) throw DomainError("winding parameter m must be >= 0");
    BiForm out(n);
    for (i64 a = 1; a < c.l; ++a)
        out.add_term(a, c.l - a, 1);
    const i64 total = static_cast<i64>(space.k) * c.l + static_cast<i64>(n) * c.m;
    for (i64 a = 1; a < total; ++a)
        out.add_term(space.r * a, space.r * (total - a), space.r);
    return out;
}

BiForm k_family_coproduct(const LensPair& space, int l, i64 n_l) {
    return coproduct_rho(space, RhoClass{l, 1 + n_l * l}) -
           coproduct_rho(space, RhoClass{l, 1 + l});
}

i64 default_n_l(const LensPair& space, int l) {
    const int n = space.n;
    if (l <= 0 || l >= n) throw DomainError("l must lie in [1, n-1]");
    // lcm of the surviving projection moduli gcd(p, n) > 1
    i64 L = 1;
    for (int p = 1; p < n; ++p) {
        i64 g = std::gcd(static_cast<i64>(p), static_cast<i64>(n));
        if (g > 1) L = std::lcm(L, g);
    }
    if (L == 1) return 2;  // nothing survives projection; any choice works
    i64 rl = (static_cast<i64>(space.r) * l) % L;
    if (std::gcd(rl, L) != 1) return 2;  // coefficient 1 unreachable on some slot
    i64 nl = 1 + mod_inverse(rl, L);
    while (nl < 2) nl += L;
    return nl;
}

OneForm product_rho_form(const LensPair& space, int l, const OneForm& w) {
    const int n = space.n;
    if (w.n() != n) throw DimensionError("form order does not match the space");
    if (w.modulus() != 0 && n % w.modulus() != 0)
        throw DimensionError("form modulus must divide the space order");
    std::vector<i64> out(static_cast<std::size_t>(n), 0);
    for (int q = 0; q < n; ++q) {
        if (w.coeffs()[q] == 0) continue;
        out[(q + l) % n] += w.coeffs()[q];
    }
    return OneForm::from_coeffs(n, w.modulus(), out);
}

BiForm wedge_with_dlog(const LensPair& space, int l, const OneForm& w) {
    const int n = space.n;
    if (w.n() != n) throw DimensionError("form order does not match the space");
    if (l <= 0 || l >= n) throw DomainError("l must lie in [1, n-1]");
    BiForm out(n, w.modulus());
    for (int p = 0; p < n; ++p) {
        const i64 c = w.dt_coeff(p);
        if (c == 0) continue;
        const int h = (n - 1 - p) % n;
        // (t^l - t2^l) * c t^p t2^h dt, with dt = t dt/t.
        out.add_term(static_cast<i64>(l) + p + 1, h, c);
        out.add_term(p + 1, static_cast<i64>(h) + l, -c);
    }
    return out;
}

}  // namespace lensstring
