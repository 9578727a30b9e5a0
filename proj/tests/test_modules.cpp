#include <doctest.h>

#include "test_util.hpp"

using namespace calab;
using namespace calab::testutil;

TEST_CASE("quotient ring flags and dimension") {
    auto R1 = make_ring({"x", "y", "z", "w"}, {"x*y"});
    CHECK(R1->is_hypersurface());
    CHECK(R1->dimension() == 3);
    CHECK(R1->is_gorenstein());

    auto R2 = make_ring({"x", "y", "z", "u"}, {"x*u - y*z"});
    CHECK(R2->is_hypersurface());
    CHECK(R2->dimension() == 3);

    auto R3 = make_ring({"x", "y"}, {"x", "y"});
    CHECK(!R3->is_hypersurface());
    CHECK(R3->dimension() == 0);
    CHECK(R3->is_complete_intersection());

    auto S = make_ring({"x", "y"});
    CHECK(S->is_hypersurface());  // regular: defining ideal (0)
    CHECK(S->dimension() == 2);

    RingPtr amb = PolyRing::make({"x", "y"}, CoeffField::rationals());
    CHECK_THROWS(QuotientRing::make(amb, Ideal::of(amb, {"x - 1"})));  // not homogeneous
    CHECK_THROWS(QuotientRing::make(amb, Ideal::unit(amb)));
}

TEST_CASE("module presentations") {
    auto R = make_ring({"x", "y", "z", "w"}, {"x*y"});
    FGModule M = quot(R, {"x"});
    CHECK(M.gens() == 1);
    CHECK(M.relations().size() == 1);
    CHECK(!M.is_zero());

    FGModule F = FGModule::free_module(R, 1);
    CHECK(F.relations().empty());

    auto Rq = make_ring({"x", "y", "z", "u"}, {"x*u - y*z"});
    FGModule I = ideal_mod(Rq, {"x", "y"});
    CHECK(I.gens() == 2);
    // relations include (u, -z): x*u - y*z = 0 in R
    bool found = false;
    for (const auto& rel : I.relations()) {
        if (rel[0] == pp(Rq, "u") && rel[1] == pp(Rq, "-z")) found = true;
        if (rel[0] == pp(Rq, "-u") && rel[1] == pp(Rq, "z")) found = true;
        // image must vanish in R
        Polynomial img = rel[0] * pp(Rq, "x") + rel[1] * pp(Rq, "y");
        CHECK(Rq->is_zero_element(img));
    }
    CHECK(found);
}

TEST_CASE("syzygies over a quotient ring pick up the zero-divisor relation") {
    auto R = make_ring({"x", "y", "z", "w"}, {"x*y"});
    std::vector<Vec> cols = {Vec{pp(R, "y")}, Vec{pp(R, "z")}, Vec{pp(R, "w")}};
    auto syz = kernel_columns_over(R, cols, 1);
    ModuleGB gb = module_groebner(syz, 3, R->ambient());

    // (x, 0, 0) since x*y = 0 in R, plus the three Koszul relations
    Vec extra{pp(R, "x"), pp(R, "0"), pp(R, "0")};
    CHECK(in_submodule(extra, gb));
    Vec koszul1{pp(R, "z"), pp(R, "-y"), pp(R, "0")};
    Vec koszul2{pp(R, "w"), pp(R, "0"), pp(R, "-y")};
    Vec koszul3{pp(R, "0"), pp(R, "w"), pp(R, "-z")};
    CHECK(in_submodule(koszul1, gb));
    CHECK(in_submodule(koszul2, gb));
    CHECK(in_submodule(koszul3, gb));

    // every generator really is a syzygy over R
    for (const auto& s : syz) {
        Polynomial image = s[0] * pp(R, "y") + s[1] * pp(R, "z") + s[2] * pp(R, "w");
        CHECK(R->is_zero_element(image));
    }
}

TEST_CASE("minimalize prunes unit entries") {
    auto R = make_ring({"x", "y"});
    // coker [[1]] = 0
    FGModule triv = FGModule::from_presentation(R, 1, {Vec{pp(R, "1")}});
    CHECK(minimalize(triv).gens() == 0);
    CHECK(triv.is_zero());

    // two generators, one redundant: e2 = x*e1 via relation (x, -1)
    FGModule M = FGModule::from_presentation(
        R, 2, {Vec{pp(R, "x"), pp(R, "-1")}, Vec{pp(R, "x^2"), pp(R, "0")}}, {1, 2});
    FGModule Mm = minimalize(M);
    CHECK(Mm.gens() == 1);
    REQUIRE(Mm.relations().size() == 1);
    CHECK(Mm.relations()[0][0] == pp(R, "x^2"));
}

TEST_CASE("hom module basics") {
    auto R = make_ring({"x", "y"}, {"x*y"});
    FGModule M = quot(R, {"x"});
    FGModule free1 = FGModule::free_module(R, 1);

    // Hom(R, M) has the Betti numbers of M
    HomModule h = hom_module(free1, M);
    CHECK(minimalize(h.module).graded_betti(3) == minimalize(M).graded_betti(3));

    // dual of the residue field over Q[x] is zero
    auto Qx = make_ring({"x"});
    CHECK(dual_module(FGModule::residue_field(Qx)).is_zero());

    // dual(R/(x)) over Q[x,y]/(xy) is isomorphic to (y), i.e. to R/(x) again
    FGModule D = dual_module(M);
    CHECK(try_isomorphic(D, M).verdict == IsoVerdict::yes);
}

TEST_CASE("tensor products") {
    auto R = make_ring({"x", "y"}, {"x*y"});
    FGModule p = ideal_mod(R, {"x"});
    FGModule q = ideal_mod(R, {"y"});

    // R/I (x) R/J = R/(I+J)
    FGModule t = tensor_modules(quot(R, {"x"}), quot(R, {"y"}));
    CHECK(try_isomorphic(t, quot(R, {"x", "y"})).verdict == IsoVerdict::yes);

    // M (x) R = M
    FGModule M = quot(R, {"x"});
    CHECK(try_isomorphic(tensor_modules(M, FGModule::free_module(R, 1)), M).verdict ==
          IsoVerdict::yes);

    // p (x) q over Q[x,y]/(xy) has length 1
    CHECK(length_over_field(tensor_modules(p, q)) == 1);
}

TEST_CASE("direct sums") {
    auto R = make_ring({"x", "y", "z", "u"}, {"x*y"});
    FGModule M = quot(R, {"x"});
    CHECK(try_isomorphic(direct_sum(M, FGModule::zero_module(R)), M).verdict == IsoVerdict::yes);

    FGModule RR = direct_sum(FGModule::free_module(R, 1), FGModule::free_module(R, 1));
    CHECK(RR.gens() == 2);
    CHECK(RR.relations().empty());

    FGModule mix = direct_sum(M, FGModule::residue_field(R));
    CHECK(mix.gens() == 2);
    CHECK(!mix.is_zero());
}

TEST_CASE("auslander transpose") {
    auto R = make_ring({"x", "y"}, {"x*y"});
    CHECK(auslander_transpose(FGModule::free_module(R, 2)).is_zero());

    FGModule M = quot(R, {"x"});
    FGModule T = auslander_transpose(M);
    CHECK(try_isomorphic(T, M).verdict == IsoVerdict::yes);  // coker of the 1x1 transpose

    auto R4 = make_ring({"x", "y", "z", "w"}, {"x*y"});
    FGModule N = auslander_transpose(quot(R4, {"y", "z", "w"}));
    CHECK(N.gens() == 3);  // transpose of the 1x3 presentation row
    CHECK(!N.is_zero());
}

TEST_CASE("evaluation map and reflexivity of frees") {
    auto R = make_ring({"x", "y"}, {"x*y"});
    FGModule F = FGModule::free_module(R, 2);
    ModuleMap ev = evaluation_map(F);
    CHECK(kernel(ev).is_zero());
    CHECK(cokernel(ev).is_zero());

    auto Qx = make_ring({"x"});
    FGModule k = FGModule::residue_field(Qx);
    ModuleMap evk = evaluation_map(k);
    CHECK(evk.target().gens() == 0);  // k** = 0
    CHECK(try_isomorphic(kernel(evk), k).verdict == IsoVerdict::yes);
}

TEST_CASE("free resolutions") {
    auto Q2 = make_ring({"x", "y"});
    FGModule k = FGModule::residue_field(Q2);
    FreeComplex res = k.resolution(2);
    CHECK(res.rank(0) == 1);
    CHECK(res.rank(1) == 2);
    CHECK(res.rank(2) == 1);

    auto R = make_ring({"x", "y"}, {"x*y"});
    FGModule M = quot(R, {"x"});
    FreeComplex mres = M.resolution(4);
    // 2-periodic: ... -> R --y--> R --x--> R
    for (int i = 1; i <= 4; ++i) {
        CHECK(mres.rank(i) == 1);
        auto d = mres.differential(i);
        REQUIRE(d.size() == 1);
        CHECK(d[0][0] == (i % 2 == 1 ? pp(R, "x") : pp(R, "y")));
    }

    FGModule Z = FGModule::zero_module(R);
    CHECK(Z.resolution(3).empty());
}

TEST_CASE("projective dimension") {
    auto Q2 = make_ring({"x", "y"});
    CHECK(projective_dimension(FGModule::free_module(Q2, 3)).value == 0);
    CHECK(projective_dimension(ideal_mod(Q2, {"x", "y"})).value == 1);
    CHECK(projective_dimension(FGModule::residue_field(Q2)).value == 2);

    auto R = make_ring({"x", "y"}, {"x*y"});
    PdResult pd = projective_dimension(quot(R, {"x"}));
    CHECK(!pd.value.has_value());
    CHECK(pd.periodicity_observed);
}

TEST_CASE("annihilators") {
    auto R = make_ring({"x", "y"}, {"x*y"});
    FGModule M = quot(R, {"x"});
    Ideal annM = annihilator(M);
    CHECK(ideal_equal(annM, Ideal::of(R->ambient(), {"x"})));

    CHECK(annihilator(FGModule::free_module(R, 2)).is_zero() == false);
    // over R the annihilator of a free module is the defining ideal
    CHECK(ideal_equal(annihilator(FGModule::free_module(R, 2)), R->defining_ideal()));

    FGModule pq = tensor_modules(ideal_mod(R, {"x"}), ideal_mod(R, {"y"}));
    CHECK(ideal_equal(annihilator(pq), R->maximal_ideal()));
}

TEST_CASE("kernels and cokernels of maps") {
    auto R = make_ring({"x", "y"}, {"x*y"});
    FGModule M = quot(R, {"x"});

    ModuleMap id = ModuleMap::identity(M);
    CHECK(kernel(id).is_zero());
    CHECK(cokernel(id).is_zero());

    ModuleMap z = ModuleMap::zero_map(M, M);
    CHECK(try_isomorphic(kernel(z), M).verdict == IsoVerdict::yes);
    CHECK(try_isomorphic(cokernel(z), M).verdict == IsoVerdict::yes);

    // multiplication by y on R/(x): injective, cokernel R/(x,y)
    ModuleMap mul = ModuleMap::multiplication(M, pp(R, "y"));
    CHECK(kernel(mul).is_zero());
    CHECK(try_isomorphic(cokernel(mul), quot(R, {"x", "y"})).verdict == IsoVerdict::yes);
}

TEST_CASE("zero module detection") {
    auto R = make_ring({"x", "y"}, {"x*y"});
    FGModule triv = FGModule::from_presentation(R, 1, {Vec{pp(R, "1")}});
    CHECK(triv.is_zero());
    CHECK(!FGModule::residue_field(R).is_zero());
}

TEST_CASE("isomorphism testing is three-valued") {
    auto R = make_ring({"x", "y"}, {"x*y"});
    FGModule M = quot(R, {"x"});
    CHECK(try_isomorphic(M, M).verdict == IsoVerdict::yes);

    IsoResult r = try_isomorphic(FGModule::residue_field(R), FGModule::free_module(R, 1));
    CHECK(r.verdict == IsoVerdict::no);
}

TEST_CASE("dual of evaluation composes to the identity on the dual") {
    auto R = make_ring({"x", "y"}, {"x*y"});
    FGModule free1 = FGModule::free_module(R, 1);
    for (FGModule M : {quot(R, {"x"}), ideal_mod(R, {"x", "y"}), FGModule::free_module(R, 2)}) {
        HomModule star = hom_module(M, free1);             // M*
        HomModule dstar = hom_module(star.module, free1);  // M**
        HomModule tstar = hom_module(dstar.module, free1); // M***

        ModuleMap ev_star = evaluation_map(star.module);   // M* -> M***
        ModuleMap ev_m = evaluation_map(M);                // M -> M**
        ModuleMap retraction = dual_map(ev_m, star, tstar);  // M*** -> M*

        ModuleMap composite = compose(retraction, ev_star);
        CHECK(maps_equal(composite, ModuleMap::identity(star.module)));
    }
}

TEST_CASE("tensor of cyclic modules has the summed annihilator") {
    auto R = make_ring({"x", "y", "z"}, {"x*y"});
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> pairs = {
        {{"x"}, {"y"}}, {{"x^2"}, {"y", "z"}}, {{"x + y"}, {"z"}}};
    for (const auto& [a, b] : pairs) {
        Ideal I = Ideal::of(R->ambient(), a), J = Ideal::of(R->ambient(), b);
        FGModule T = tensor_modules(quot(R, a), quot(R, b));
        Ideal expected = ideal_sum(ideal_sum(I, J), R->defining_ideal());
        CHECK(ideal_equal(annihilator(T), expected));
    }
}

TEST_CASE("minimalize preserves the isomorphism class invariants") {
    auto R = make_ring({"x", "y"}, {"x*y"});
    // a deliberately redundant presentation of R/(x) ⊕ 0
    FGModule M = FGModule::from_presentation(
        R, 3,
        {Vec{pp(R, "x"), pp(R, "0"), pp(R, "0")}, Vec{pp(R, "0"), pp(R, "1"), pp(R, "0")},
         Vec{pp(R, "y^2"), pp(R, "0"), pp(R, "1")}},
        {1, 0, 2});
    FGModule Mm = minimalize(M);
    CHECK(Mm.gens() == 1);
    CHECK(ideal_equal(annihilator(M), annihilator(Mm)));
    CHECK(length_over_field(M) == length_over_field(Mm));
    CHECK(M.graded_betti(4) == Mm.graded_betti(4));
    CHECK(try_isomorphic(M, Mm).verdict == IsoVerdict::yes);
}
