#include <doctest.h>

#include "lensstring/bialgebra.hpp"

using namespace lensstring;

namespace {

AlphaTensor aa(int n, std::initializer_list<std::array<i64, 3>> terms) {
    AlphaTensor t(n);
    for (const auto& pqc : terms) t.add_term(pqc[0], pqc[1], pqc[2]);
    return t;
}

}  // namespace

TEST_CASE("ad_apply on point classes") {
    LensPair space(9, 4);
    // beta_1 against pi_* y_1: the shifted form t^2 dt/t projects to zero
    CHECK(ad_apply(space, EqClass::pi_y(1, 9), EqClass::beta(1, 9)).is_zero());
    // beta_7 against pi_* y_8: 7 t^15 dt/t = 7 t^6 dt/t projects to alpha_6
    auto v = ad_apply(space, EqClass::pi_y(8, 9), EqClass::beta(7, 9));
    CHECK(v.coeff(6) == 1);
    // alpha classes always die
    CHECK(ad_apply(space, EqClass::pi_y(8, 9), EqClass::alpha(3, 9)).is_zero());
    CHECK(ad_apply(space, EqClass::pi_y(2, 9), EqClass::alpha(6, 9)).is_zero());
}

TEST_CASE("bialgebra_lhs vanishes and rejects other degrees") {
    LensPair space(9, 4);
    CHECK(bialgebra_lhs(space, EqClass::pi_y(1, 9), EqClass::pi_y(8, 9)).is_zero());
    CHECK(bialgebra_lhs(LensPair(9, 1), EqClass::pi_y(2, 9), EqClass::pi_y(3, 9)).is_zero());
    CHECK_THROWS_AS(bialgebra_lhs(space, EqClass::beta(1, 9), EqClass::pi_y(8, 9)),
                    NotImplementedError);
    CHECK_THROWS_AS(
        bialgebra_rhs(space, EqClass::pi_y(1, 9), EqClass::alpha(3, 9)),
        NotImplementedError);
}

TEST_CASE("compatibility defect on L(9;4) with X = pi_y_1, Y = pi_y_8") {
    LensPair space(9, 4);
    BialgebraVerdict v =
        bialgebra_check(space, EqClass::pi_y(1, 9), EqClass::pi_y(8, 9));
    CHECK(v.lhs.is_zero());
    CHECK(v.rhs == aa(9, {{3, 6, 1}, {6, 3, 2}}));
    CHECK(!v.compatible);
    CHECK(v.rhs.str() == "a3*a6+2a6*a3");
}

TEST_CASE("the defect does not depend on the representative windings") {
    LensPair space(9, 4);
    AlphaTensor base =
        bialgebra_rhs(space, EqClass::pi_y(1, 9), EqClass::pi_y(8, 9));
    for (i64 mx = 0; mx < 9; ++mx)
        for (i64 my = 0; my < 9; ++my)
            CHECK(bialgebra_rhs(space, EqClass::pi_y(1, 9), EqClass::pi_y(8, 9), mx, my) ==
                  base);
}

TEST_CASE("sweep of all ordered pairs on L(9;1)") {
    LensPair space(9, 1);
    std::set<std::pair<int, int>> nonzero;
    for (int x = 1; x <= 8; ++x) {
        for (int y = 1; y <= 8; ++y) {
            auto rhs = bialgebra_rhs(space, EqClass::pi_y(x, 9), EqClass::pi_y(y, 9));
            if (!rhs.is_zero()) nonzero.insert({x, y});
        }
    }
    CHECK(nonzero == std::set<std::pair<int, int>>{{4, 5}, {5, 4}});
    CHECK(bialgebra_rhs(space, EqClass::pi_y(4, 9), EqClass::pi_y(5, 9)) ==
          aa(9, {{3, 6, 2}, {6, 3, 1}}));
    CHECK(bialgebra_rhs(space, EqClass::pi_y(5, 9), EqClass::pi_y(4, 9)) ==
          aa(9, {{3, 6, 1}, {6, 3, 2}}));
}

TEST_CASE("equal arguments and dead cobrackets are compatible") {
    LensPair k1(9, 1);
    for (int l = 1; l <= 8; ++l) {
        BialgebraVerdict v = bialgebra_check(k1, EqClass::pi_y(l, 9), EqClass::pi_y(l, 9));
        CHECK(v.compatible);
    }
    // both cobrackets vanish on components 1 and 2 of L(9;1)
    BialgebraVerdict v = bialgebra_check(k1, EqClass::pi_y(1, 9), EqClass::pi_y(2, 9));
    CHECK(v.compatible);
    CHECK(v.rhs.is_zero());
}

TEST_CASE("alpha tensor rendering") {
    CHECK(aa(9, {{3, 6, 1}, {6, 3, 2}}).str() == "a3*a6+2a6*a3");
    CHECK(aa(9, {{3, 6, 1}}).str(Render::unicode) == "α₃⊗α₆");
    CHECK(AlphaTensor(9).str() == "0");
}
