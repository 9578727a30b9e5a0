#include <doctest.h>

#include "calab/ideal.hpp"

using namespace calab;

namespace {
RingPtr Q(std::vector<std::string> vars) {
    return PolyRing::make(std::move(vars), CoeffField::rationals());
}
}

TEST_CASE("intersection of coordinate ideals") {
    auto R = Q({"x", "y"});
    Ideal I = ideal_intersect(Ideal::of(R, {"x"}), Ideal::of(R, {"y"}));
    CHECK(ideal_equal(I, Ideal::of(R, {"x*y"})));
}

TEST_CASE("quotient peels a factor") {
    auto R = Q({"x", "y"});
    CHECK(ideal_equal(ideal_quotient(Ideal::of(R, {"x*y"}), parse_polynomial(R, "x")),
                      Ideal::of(R, {"y"})));
}

TEST_CASE("saturation strips the embedded component") {
    // (x^2, x*y) = (x) ∩ (x^2, y), so saturating by y leaves (x)
    auto R = Q({"x", "y"});
    Ideal I = Ideal::of(R, {"x^2", "x*y"});
    Ideal sat = ideal_saturate(I, parse_polynomial(R, "y"));
    CHECK(ideal_equal(sat, Ideal::of(R, {"x"})));
    // stabilized: (sat : y) = sat
    CHECK(ideal_equal(ideal_quotient(sat, parse_polynomial(R, "y")), sat));
}

TEST_CASE("elimination recovers the twisted-cubic relation") {
    auto R = Q({"x", "y", "z"});
    Ideal I = Ideal::of(R, {"y - x^2", "z - x^3"});
    Ideal E = ideal_eliminate(I, {0});
    CHECK(E.contains(parse_polynomial(R, "y^3 - z^2")));
    for (const auto& g : E.generators()) {
        for (const auto& [e, c] : g.terms()) CHECK(e[0] == 0);
    }
}

TEST_CASE("ideal equality through different generating sets") {
    auto R = Q({"x", "y"});
    CHECK(ideal_equal(Ideal::of(R, {"x", "y"}), Ideal::of(R, {"x + y", "x - y"})));
    CHECK(!ideal_equal(Ideal::of(R, {"x"}), Ideal::of(R, {"x^2"})));
}

TEST_CASE("prime square plus hypersurface relation") {
    // p = (x,z) in Q[x,y,z]/(xy - z^2): p^2 + (xy - z^2) = (x^2, xz, z^2) + (xy - z^2)
    auto R = Q({"x", "y", "z"});
    Ideal lhs = ideal_sum(ideal_power(Ideal::of(R, {"x", "z"}), 2), Ideal::of(R, {"x*y - z^2"}));
    Ideal rhs = ideal_sum(Ideal::of(R, {"x^2", "x*z", "z^2"}), Ideal::of(R, {"x*y - z^2"}));
    CHECK(ideal_equal(lhs, rhs));
}

TEST_CASE("dimension from the leading-term ideal") {
    auto R4 = Q({"x", "y", "z", "w"});
    CHECK(ideal_dimension(Ideal::of(R4, {"x*y"})) == 3);

    auto R2 = Q({"x", "y"});
    CHECK(ideal_dimension(Ideal::of(R2, {"x", "y"})) == 0);

    // (y,z,w) + (xy) in Q[x,y,z,w]: quotient is Q[x]
    CHECK(ideal_dimension(Ideal::of(R4, {"y", "z", "w", "x*y"})) == 1);

    CHECK(ideal_dimension(Ideal::zero(R2)) == 2);
    CHECK(!ideal_dimension(Ideal::unit(R2)).has_value());
}

TEST_CASE("radical membership") {
    auto R = Q({"x", "y"});
    CHECK(radical_membership(parse_polynomial(R, "x"), Ideal::of(R, {"x^2"})));
    CHECK(!radical_membership(parse_polynomial(R, "y"), Ideal::of(R, {"x*y"})));

    auto R3 = Q({"x", "y", "z"});
    // z^2 = xy - (xy - z^2), so z is in the radical of (x) + (xy - z^2)
    CHECK(radical_membership(parse_polynomial(R3, "z"), Ideal::of(R3, {"x", "x*y - z^2"})));
}

TEST_CASE("exact division") {
    auto R = Q({"x", "y"});
    Polynomial f = parse_polynomial(R, "x^2 - y^2");
    auto q = exact_division(f * parse_polynomial(R, "x + 3"), f);
    REQUIRE(q.has_value());
    CHECK(*q == parse_polynomial(R, "x + 3"));
    CHECK(!exact_division(parse_polynomial(R, "x^2"), parse_polynomial(R, "y")).has_value());
}
