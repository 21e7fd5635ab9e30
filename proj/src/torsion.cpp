#include "lensstring/torsion.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace lensstring {

LensMap::LensMap(LensPair src, LensPair tgt, int s_, std::string expr)
    : source(src), target(tgt), s(s_), expression(std::move(expr)) {
    if (source.n != target.n)
        throw DomainError("source and target must share the same fundamental-group order");
    const int n = source.n;
    s = ((s_ % n) + n) % n;
    if (s == 0 || std::gcd(s, n) != 1)
        throw DomainError("component multiplier must be coprime to n");
    // Degree-(+-1) compatibility: s^2 k = +-k' (mod n).
    const i64 lhs = (static_cast<i64>(s) * s % n) * source.k % n;
    if (lhs != target.k && lhs != (n - target.k) % n)
        throw DomainError("no homotopy equivalence with this multiplier: s^2 k != +-k' (mod n)");
}

LensMap LensMap::identity(const LensPair& space) {
    return LensMap(space, space, 1, "(t^1-1)/((t^1-1))");
}

std::vector<i64> binomial_product(const std::vector<int>& exponents) {
    std::vector<i64> poly{1};
    for (int e : exponents) {
        if (e <= 0) throw InvalidTorsionExpression("binomial exponent must be positive");
        std::vector<i64> next(poly.size() + static_cast<std::size_t>(e), 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + static_cast<std::size_t>(e)] += poly[i];  // t^e * poly
            next[i] -= poly[i];                                // -1 * poly
        }
        poly = std::move(next);
    }
    return poly;
}

void parse_torsion_expression(const std::string& expr, std::vector<int>& numerator,
                              std::vector<int>& denominator) {
    numerator.clear();
    denominator.clear();
    std::string s;
    for (char c : expr)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "" : s.substr(slash + 1);
    // The denominator may be wrapped in one extra pair of parentheses.
    if (den.size() >= 2 && den.front() == '(' && den.back() == ')') {
        int depth = 0;
        bool wraps = true;
        for (std::size_t i = 0; i + 1 < den.size(); ++i) {
            if (den[i] == '(') ++depth;
            if (den[i] == ')') --depth;
            if (depth == 0) { wraps = false; break; }
        }
        if (wraps && den.find("(t", 1) != std::string::npos)
            den = den.substr(1, den.size() - 2);
    }
    auto parse_factors = [](const std::string& text, std::vector<int>& out) {
        std::size_t i = 0;
        while (i < text.size()) {
            if (text.compare(i, 2, "(t") != 0)
                throw InvalidTorsionExpression("expected '(t...' in torsion expression: " + text);
            i += 2;
            int e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                if (j == i) throw InvalidTorsionExpression("missing exponent");
                e = std::stoi(text.substr(i, j - i));
                i = j;
            }
            if (text.compare(i, 3, "-1)") != 0)
                throw InvalidTorsionExpression("expected '-1)' in torsion expression");
            i += 3;
            out.push_back(e);
        }
    };
    parse_factors(num, numerator);
    if (!den.empty()) parse_factors(den, denominator);
}

i64 working_modulus(int n) {
    i64 L = 1;
    for (int p = 1; p < n; ++p) {
        i64 g = std::gcd(static_cast<i64>(p), static_cast<i64>(n));
        if (g > 1) L = std::lcm(L, g);
    }
    return L;
}

namespace {

// Exact division in Z[t]; throws when the remainder is nonzero.
std::vector<i64> divide_exact(std::vector<i64> num, const std::vector<i64>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    std::vector<i64> d = den;
    while (!d.empty() && d.back() == 0) d.pop_back();
    if (d.empty()) throw InvalidTorsionExpression("division by the zero polynomial");
    if (num.empty()) return {0};
    if (num.size() < d.size())
        throw InvalidTorsionExpression("numerator degree below denominator degree");
    std::vector<i64> quot(num.size() - d.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        i64 lead = num[i + d.size() - 1];
        if (lead % d.back() != 0)
            throw InvalidTorsionExpression("nonzero remainder in torsion-unit division");
        i64 q = lead / d.back();
        quot[i] = q;
        for (std::size_t j = 0; j < d.size(); ++j) num[i + j] -= q * d[j];
    }
    for (i64 c : num)
        if (c != 0)
            throw InvalidTorsionExpression("nonzero remainder in torsion-unit division");
    return quot;
}

}  // namespace

TorsionUnit torsion_unit(const LensMap& f) {
    std::vector<int> num_exps, den_exps;
    parse_torsion_expression(f.expression, num_exps, den_exps);
    std::vector<i64> num = binomial_product(num_exps);
    std::vector<i64> den = den_exps.empty() ? std::vector<i64>{1} : binomial_product(den_exps);
    std::vector<i64> quot = divide_exact(std::move(num), den);

    const int n = f.source.n;
    CyclicPoly integral = CyclicPoly::from_coeffs(n, 0, quot);
    const i64 w = working_modulus(n);
    CyclicPoly unit = integral.reduced_to(w);
    invert_unit(unit);  // certify invertibility over the working modulus
    return TorsionUnit{integral, unit, f.expression};
}

EqTensor correction_term(const LensMap& f, int l) {
    if (l <= 0 || l >= f.source.n) throw DomainError("l must lie in [1, n-1]");
    const TorsionUnit tau = torsion_unit(f);
    const OneForm dlog = dennis_dlog(tau.unit);
    const BiForm wedge = wedge_with_dlog(f.source, l, dlog);
    return project_pi(pushforward(wedge, f.s));
}

namespace {

// Is `d` a uniform multiple of the kernel-family pattern
// sum_p alpha_p (x) beta_{L-p} on the target component L? That pattern spans
// the representative ambiguity of the cobracket tables.
bool in_k_span(const EqTensor& d, int n, int L) {
    if (d.is_zero()) return true;
    for (i64 c = 0; c < n; ++c) {
        EqTensor probe(n);
        for (int p = 1; p < n; ++p) {
            if (std::gcd(static_cast<i64>(p), static_cast<i64>(n)) == 1) continue;
            probe.add_term(p, L - p, c);
        }
        if (probe == d) return true;
    }
    return false;
}

}  // namespace

TransformReport transform_check(const LensMap& f, int l) {
    const int n = f.source.n;
    const int target_l = static_cast<int>((static_cast<i64>(f.s) * l) % n);
    EqTensor lhs = cobracket_pi_y(f.target, target_l).left;
    EqTensor pushed = pushforward(cobracket_pi_y(f.source, l).left, f.s);
    EqTensor correction = correction_term(f, l);
    EqTensor rhs = pushed + correction;
    EqTensor discrepancy = lhs - rhs;
    const bool equal = discrepancy.is_zero();
    const bool span = in_k_span(discrepancy, n, target_l);
    return TransformReport{l, std::move(lhs), std::move(pushed), std::move(correction),
                           std::move(rhs), std::move(discrepancy), equal, span};
}

}  // namespace lensstring
