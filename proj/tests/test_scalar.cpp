#include <doctest.h>

#include "calab/scalar.hpp"

using namespace calab;

TEST_CASE("rationals stay canonical") {
    Scalar a = Scalar::of_rational(2, 4);
    CHECK(a.str() == "1/2");
    Scalar b = Scalar::of_rational(-3, -6);
    CHECK(b.str() == "1/2");
    CHECK(a == b);

    Scalar c = Scalar::of_rational(1, -3);
    CHECK(c.str() == "-1/3");
    CHECK((c + Scalar::of_rational(1, 3)).is_zero());
}

TEST_CASE("rational field axioms on sample values") {
    auto q = [](long n, long d) { return Scalar::of_rational(n, d); };
    Scalar a = q(3, 7), b = q(-5, 2), c = q(11, 13);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * a.inverse() == q(1, 1));
    CHECK((a / b) * b == a);
}

TEST_CASE("prime field arithmetic") {
    CoeffField f = CoeffField::prime(32003);
    Scalar a = Scalar::of_int(-1, f);
    CHECK(a.fp() == 32002);
    Scalar b = Scalar::of_fp(12345, 32003);
    CHECK(b * b.inverse() == Scalar::one(f));
    CHECK((a + Scalar::one(f)).is_zero());
    CHECK_THROWS(CoeffField::prime(32001));  // 3 * 10667
}

TEST_CASE("field mixing is rejected") {
    Scalar a = Scalar::of_rational(1, 2);
    Scalar b = Scalar::of_fp(1, 7);
    CHECK_THROWS(a + b);
}
