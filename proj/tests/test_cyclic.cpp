#include <doctest.h>

#include <numeric>
#include <random>

#include "lensstring/cyclic.hpp"

using namespace lensstring;

namespace {

CyclicPoly geometric(int n, i64 m, int upto) {
    // 1 + t + ... + t^upto
    std::vector<i64> c(static_cast<std::size_t>(upto) + 1, 1);
    return CyclicPoly::from_coeffs(n, m, c);
}

CyclicPoly random_poly(int n, i64 m, std::mt19937& rng) {
    std::vector<i64> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = static_cast<i64>(rng() % m);
    return CyclicPoly::from_coeffs(n, m, c);
}

}  // namespace

TEST_CASE("poly_mul wraps exponents and reduces coefficients") {
    // t * t^8 = 1 over the integers
    auto t = CyclicPoly::monomial(9, 0, 1);
    auto t8 = CyclicPoly::monomial(9, 0, 8);
    CHECK(t * t8 == CyclicPoly::one(9, 0));

    // t^3 * t^6 = 1 mod 9
    CHECK(CyclicPoly::monomial(9, 9, 3) * CyclicPoly::monomial(9, 9, 6) ==
          CyclicPoly::one(9, 9));

    // (1+t+...+t^6)(1+t^3+t^5+t^7) = 1 mod 3
    auto tau = geometric(9, 3, 6);
    auto inv = CyclicPoly::from_coeffs(9, 3, {1, 0, 0, 1, 0, 1, 0, 1, 0});
    CHECK(tau * inv == CyclicPoly::one(9, 3));
}

TEST_CASE("ring mismatches are rejected") {
    CHECK_THROWS_AS(CyclicPoly::one(9, 3) * CyclicPoly::one(9, 9), DimensionError);
    CHECK_THROWS_AS(CyclicPoly::one(9, 3) * CyclicPoly::one(7, 3), DimensionError);
    CHECK_THROWS_AS(CyclicPoly::one(9, 3) + CyclicPoly::one(9, 0), DimensionError);
}

TEST_CASE("de_rham differentiates with canonical exponents") {
    CHECK(de_rham(CyclicPoly::one(9, 9)).is_zero());
    CHECK(de_rham(CyclicPoly::monomial(9, 9, 0, 5)).is_zero());

    // c0 + c1 t + ... + c8 t^8 -> (c1 t + 2 c2 t^2 + ... + 8 c8 t^8) dt/t
    auto p = CyclicPoly::from_coeffs(9, 9, {4, 1, 1, 1, 1, 1, 1, 1, 1});
    auto w = de_rham(p);
    for (int a = 0; a < 9; ++a) CHECK(w.coeff(a) == a % 9);

    CHECK(de_rham(CyclicPoly::monomial(9, 9, 3)) == OneForm::monomial(9, 9, 3, 3));
}

TEST_CASE("de_rham output is deterministic in the canonical representative") {
    // monomial(12) and monomial(3) are the same element of the ring, so the
    // derivative must agree
    CHECK(de_rham(CyclicPoly::monomial(9, 9, 12)) == de_rham(CyclicPoly::monomial(9, 9, 3)));
}

TEST_CASE("Leibniz rule holds whenever the modulus divides the order") {
    for (int n = 2; n <= 12; ++n) {
        for (i64 m : {static_cast<i64>(n), static_cast<i64>(2), static_cast<i64>(3)}) {
            if (n % m != 0) continue;
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    auto pa = CyclicPoly::monomial(n, m, a);
                    auto pb = CyclicPoly::monomial(n, m, b);
                    auto lhs = de_rham(pa * pb);
                    auto rhs = pa * de_rham(pb) + pb * de_rham(pa);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("Leibniz rule on random dense polynomials") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_poly(9, 9, rng);
        auto b = random_poly(9, 9, rng);
        CHECK(de_rham(a * b) == a * de_rham(b) + b * de_rham(a));
    }
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_poly(12, 6, rng);
        auto b = random_poly(12, 6, rng);
        CHECK(de_rham(a * b) == a * de_rham(b) + b * de_rham(a));
    }
}

TEST_CASE("invert_unit") {
    CHECK(invert_unit(CyclicPoly::one(9, 3)) == CyclicPoly::one(9, 3));
    CHECK(invert_unit(CyclicPoly::monomial(9, 3, 1)) == CyclicPoly::monomial(9, 3, 8));

    auto tau = geometric(9, 3, 6);
    CHECK(invert_unit(tau) == CyclicPoly::from_coeffs(9, 3, {1, 0, 0, 1, 0, 1, 0, 1, 0}));

    // the same unit is invertible mod 9 as well (3 is nilpotent there)
    auto tau9 = geometric(9, 9, 6);
    CHECK(tau9 * invert_unit(tau9) == CyclicPoly::one(9, 9));
}

TEST_CASE("invert_unit rejects non-units with a certificate") {
    // t - 1 has augmentation 0, hence is never a unit
    auto p = CyclicPoly::from_coeffs(9, 3, {2, 1});  // -1 + t
    try {
        invert_unit(p);
        FAIL("expected NotInvertibleError");
    } catch (const NotInvertibleError& e) {
        CHECK(!e.certificate.empty());
    }
    CHECK_THROWS_AS(invert_unit(CyclicPoly::zero(9, 3)), NotInvertibleError);
    CHECK_THROWS_AS(invert_unit(CyclicPoly::one(9, 0)), DomainError);
}

TEST_CASE("unit * inverse = 1 on random units") {
    std::mt19937 rng(23);
    int found = 0;
    while (found < 100) {
        auto u = random_poly(9, 3, rng);
        CyclicPoly v = CyclicPoly::zero(9, 3);
        try {
            v = invert_unit(u);
        } catch (const NotInvertibleError&) {
            continue;
        }
        CHECK(u * v == CyclicPoly::one(9, 3));
        ++found;
    }
    // a composite modulus as well
    found = 0;
    while (found < 25) {
        auto u = random_poly(6, 4, rng);
        CyclicPoly v = CyclicPoly::zero(6, 4);
        try {
            v = invert_unit(u);
        } catch (const NotInvertibleError&) {
            continue;
        }
        CHECK(u * v == CyclicPoly::one(6, 4));
        ++found;
    }
}

TEST_CASE("dennis_dlog") {
    CHECK(dennis_dlog(CyclicPoly::one(9, 3)).is_zero());

    // d log of 1+t+...+t^6 over Z/3, stored in the dt/t basis
    auto w = dennis_dlog(geometric(9, 3, 6));
    CHECK(w == OneForm::from_coeffs(9, 3, {0, 0, 0, 2, 2, 1, 1, 0, 0}));
    // and its dt-basis view matches 2t^2+2t^3+t^4+t^5
    CHECK(w.dt_coeff(2) == 2);
    CHECK(w.dt_coeff(3) == 2);
    CHECK(w.dt_coeff(4) == 1);
    CHECK(w.dt_coeff(5) == 1);
    CHECK(w.str(OneForm::Basis::dt) == "2t^2+2t^3+t^4+t^5 dt");
}

TEST_CASE("dennis_dlog is additive over products of units") {
    std::mt19937 rng(37);
    int found = 0;
    while (found < 40) {
        auto u = random_poly(9, 3, rng);
        auto v = random_poly(9, 3, rng);
        try {
            auto lhs = dennis_dlog(u * v);
            auto rhs = dennis_dlog(u) + dennis_dlog(v);
            CHECK(lhs == rhs);
            ++found;
        } catch (const NotInvertibleError&) {
        }
    }
}

TEST_CASE("substitute_pushforward") {
    auto w = OneForm::from_coeffs(9, 3, {0, 1, 2, 0, 1, 0, 0, 2, 0});
    CHECK(substitute_pushforward(w, 1) == w);

    // t^a dt = t^{a+1} dt/t maps to 2 t^{2a+2} dt/t under s = 2
    for (int a = 0; a < 9; ++a) {
        auto in = OneForm::monomial(9, 3, a + 1);
        auto out = substitute_pushforward(in, 2);
        CHECK(out == OneForm::monomial(9, 3, 2 * a + 2, 2));
    }

    CHECK_THROWS_AS(substitute_pushforward(w, 3), DomainError);
}

TEST_CASE("substitute_pushforward composes multiplicatively and adds") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<i64> c(9);
        for (auto& x : c) x = static_cast<i64>(rng() % 3);
        auto w = OneForm::from_coeffs(9, 3, c);
        for (i64 s : {1, 2, 4, 5, 7, 8}) {
            for (i64 s2 : {1, 2, 4, 5, 7, 8}) {
                CHECK(substitute_pushforward(substitute_pushforward(w, s), s2) ==
                      substitute_pushforward(w, s * s2 % 9));
            }
        }
        std::vector<i64> c2(9);
        for (auto& x : c2) x = static_cast<i64>(rng() % 3);
        auto w2 = OneForm::from_coeffs(9, 3, c2);
        CHECK(substitute_pushforward(w + w2, 2) ==
              substitute_pushforward(w, 2) + substitute_pushforward(w2, 2));
    }
}

TEST_CASE("substitute_pushforward commutes with de_rham when the modulus divides n") {
    for (int n = 2; n <= 12; ++n) {
        for (i64 s = 1; s < n; ++s) {
            if (std::gcd(s, static_cast<i64>(n)) != 1) continue;
            for (int a = 0; a < n; ++a) {
                auto p = CyclicPoly::monomial(n, n, a);
                CHECK(substitute_pushforward(de_rham(p), s) == de_rham(substitute(p, s)));
            }
        }
    }
}

TEST_CASE("coefficient coercion rules") {
    auto p = CyclicPoly::from_coeffs(9, 0, {10, -1, 3});
    auto q = p.reduced_to(9);
    CHECK(q.coeff(0) == 1);
    CHECK(q.coeff(1) == 8);
    CHECK(q.coeff(2) == 3);
    CHECK(q.reduced_to(3) == CyclicPoly::from_coeffs(9, 3, {1, 2, 0}));
    CHECK_THROWS_AS(q.reduced_to(6), ModulusError);   // 6 does not divide 9
    CHECK_THROWS_AS(q.reduced_to(0), ModulusError);   // no lifting back
}

TEST_CASE("rendering") {
    CHECK(CyclicPoly::zero(9, 3).str() == "0");
    CHECK(geometric(9, 3, 6).str() == "1+t+t^2+t^3+t^4+t^5+t^6");
    CHECK(OneForm::monomial(9, 9, 3, 3).str() == "3t^3 dt/t");
    CHECK(OneForm::zero(9, 9).str() == "0");
}
