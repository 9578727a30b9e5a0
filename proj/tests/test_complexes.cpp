#include <doctest.h>

#include "test_util.hpp"

using namespace calab;
using namespace calab::testutil;

TEST_CASE("koszul complex on one element") {
    auto Qx = make_ring({"x"});
    FreeComplex K = koszul_complex(Qx, {pp(Qx, "x")});
    CHECK(K.lo() == 0);
    CHECK(K.hi() == 1);
    CHECK(K.rank(0) == 1);
    CHECK(K.rank(1) == 1);

    FGModule H0 = homology(K, 0);
    CHECK(try_isomorphic(H0, quot(Qx, {"x"})).verdict == IsoVerdict::yes);
    CHECK(homology(K, 1).is_zero());
}

TEST_CASE("koszul ranks are binomial coefficients") {
    auto R = make_ring({"x", "y", "z", "w"}, {"x*y"});
    FreeComplex K = koszul_complex(R, {pp(R, "y"), pp(R, "z"), pp(R, "w")});
    CHECK(K.rank(0) == 1);
    CHECK(K.rank(1) == 3);
    CHECK(K.rank(2) == 3);
    CHECK(K.rank(3) == 1);
}

TEST_CASE("koszul homology detects a regular sequence on a module") {
    auto R = make_ring({"x", "y", "z", "w"}, {"x*y"});
    FGModule M = quot(R, {"x"});
    FreeComplex K = koszul_complex(R, {pp(R, "y"), pp(R, "z"), pp(R, "w")});
    FreeComplex C = tensor_complexes(K, M.resolution(4));
    // y,z,w is regular on R/(x): homology vanishes above degree 0
    for (int i = 1; i <= 3; ++i) CHECK(homology(C, i).is_zero());
    CHECK(!homology(C, 0).is_zero());
}

TEST_CASE("koszul homology sees the zero divisor pair") {
    auto R = make_ring({"x", "y"}, {"x*y"});
    FreeComplex K = koszul_complex(R, {pp(R, "x"), pp(R, "y")});
    CHECK(!homology(K, 1).is_zero());
}

TEST_CASE("tensor with the ring in degree zero is the identity") {
    auto R = make_ring({"x", "y"}, {"x*y"});
    FreeComplex K = koszul_complex(R, {pp(R, "x"), pp(R, "y")});
    FreeComplex unit = FreeComplex::module_in_degree_zero_free(R, 1);
    FreeComplex T = tensor_complexes(K, unit);
    REQUIRE(T.lo() == K.lo());
    REQUIRE(T.hi() == K.hi());
    for (int i = K.lo(); i <= K.hi(); ++i) {
        CHECK(T.rank(i) == K.rank(i));
        auto a = T.differential(i), b = K.differential(i);
        REQUIRE(a.size() == b.size());
        for (size_t j = 0; j < a.size(); ++j) CHECK(vec_equal(a[j], b[j]));
    }
}

TEST_CASE("koszul complexes multiply") {
    auto R = make_ring({"x", "y"});
    FreeComplex Kx = koszul_complex(R, {pp(R, "x")});
    FreeComplex Ky = koszul_complex(R, {pp(R, "y")});
    FreeComplex T = tensor_complexes(Kx, Ky);
    FreeComplex Kxy = koszul_complex(R, {pp(R, "x"), pp(R, "y")});
    for (int i = 0; i <= 2; ++i) {
        CHECK(T.rank(i) == Kxy.rank(i));
        CHECK(try_isomorphic(homology(T, i), homology(Kxy, i)).verdict == IsoVerdict::yes);
    }
}

TEST_CASE("homology of a resolution") {
    auto R = make_ring({"x", "y", "z", "w"}, {"x*y"});
    FGModule M = quot(R, {"y", "z", "w"});
    FreeComplex res = M.resolution(3);
    CHECK(try_isomorphic(homology(res, 0), M).verdict == IsoVerdict::yes);
    for (int i = 1; i < 3; ++i) CHECK(homology(res, i).is_zero());
}

TEST_CASE("construction rejects non-complexes") {
    auto R = make_ring({"x", "y"});
    std::vector<FreeComplex::Level> levels(3);
    levels[0].rank = 1;
    levels[1].rank = 1;
    levels[1].diff = {Vec{pp(R, "x")}};
    levels[2].rank = 1;
    levels[2].diff = {Vec{pp(R, "y")}};  // x*y != 0 in Q[x,y]
    CHECK_THROWS(FreeComplex::make(R, 0, levels));
}

TEST_CASE("inf and sup of shifted modules") {
    // a module with finite projective dimension, so the terminated resolution
    // represents it exactly as a complex
    auto R = make_ring({"x", "y"});
    FGModule M = quot(R, {"x^2"});
    FreeComplex res = M.resolution(4);
    CHECK(res.hi() == 1);  // pd 1, terminated

    InfSup s = inf_sup(res);
    CHECK(s.inf == 0);
    CHECK(s.sup == 0);

    InfSup sh = inf_sup(shift_complex(res, 3));
    CHECK(sh.inf == 3);
    CHECK(sh.sup == 3);

    InfSup z = inf_sup(FreeComplex::zero_complex(R));
    CHECK(!z.inf);
    CHECK(!z.sup);
}

TEST_CASE("inf additivity for shifted modules") {
    auto R = make_ring({"x", "y"}, {"x*y"});
    FGModule M = quot(R, {"x"});
    FGModule N = quot(R, {"y"});
    FreeComplex X = shift_complex(M.resolution(4), 1);
    FreeComplex Y = shift_complex(N.resolution(4), 2);
    InfSup s = inf_sup(tensor_complexes(X, Y));
    REQUIRE(s.inf.has_value());
    CHECK(*s.inf == 3);  // 1 + 2
}

TEST_CASE("shift is involutive and signs square to one") {
    auto R = make_ring({"x", "y"});
    FreeComplex K = koszul_complex(R, {pp(R, "x"), pp(R, "y")});
    FreeComplex back = shift_complex(shift_complex(K, 2), -2);
    CHECK(back.lo() == K.lo());
    for (int i = K.lo(); i <= K.hi(); ++i) {
        auto a = back.differential(i), b = K.differential(i);
        REQUIRE(a.size() == b.size());
        for (size_t j = 0; j < a.size(); ++j) CHECK(vec_equal(a[j], b[j]));
    }
    FreeComplex shifted = shift_complex(K, 1);
    auto d = shifted.differential(2);  // odd shift negates differentials
    CHECK(d[0][0] == -K.differential(1)[0][0]);
}
