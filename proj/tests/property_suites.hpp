#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// gate. Deterministically seeded; each suite reports how many instances it
// exercised so callers can enforce their floor.

#include <random>
#include <sstream>
#include <string>

#include "calab/invariants.hpp"

namespace calab::propsuite {

struct SuiteResult {
    bool pass = true;
    int instances = 0;
    std::string detail;

    void fail(const std::string& msg) {
        pass = false;
        if (detail.empty()) detail = msg;
    }
};

using Rng = std::mt19937;

inline Polynomial random_poly(Rng& rng, const RingPtr& S, int max_terms, int max_deg,
                              int coeff_bound = 4) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> dexp(0, max_deg);
    std::uniform_int_distribution<int> dc(-coeff_bound, coeff_bound);
    Polynomial f = Polynomial::zero(S);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Exponents e(S->nvars(), 0);
        int budget = max_deg;
        for (int v = 0; v < S->nvars(); ++v) {
            int x = dexp(rng) % (budget + 1);
            e[v] = x;
            budget -= x;
        }
        long c = dc(rng);
        if (c == 0) c = 1;
        f = f + Polynomial::monomial(S, e, Scalar::of_int(c, S->field()));
    }
    return f;
}

// exact arithmetic: associativity, distributivity, canonical form
inline SuiteResult arithmetic_suite(int rounds = 100) {
    SuiteResult out;
    Rng rng(20240811);
    RingPtr S = PolyRing::make({"x", "y", "z"}, CoeffField::rationals());
    for (int k = 0; k < rounds; ++k) {
        Polynomial f = random_poly(rng, S, 4, 3), g = random_poly(rng, S, 4, 3),
                   h = random_poly(rng, S, 3, 2);
        if ((f + g) + h != f + (g + h)) out.fail("associativity");
        if (f * (g + h) != f * g + f * h) out.fail("distributivity");
        if ((f + g) * (f - g) != f * f - g * g) out.fail("difference of squares");
        ++out.instances;
    }
    return out;
}

// the monomial comparison is a multiplicative total order
inline SuiteResult order_suite(int rounds = 100) {
    SuiteResult out;
    Rng rng(911);
    std::uniform_int_distribution<int> dexp(0, 5);
    MonomialOrder orders[] = {MonomialOrder::grevlex(), MonomialOrder::lex(),
                              MonomialOrder::elimination(2)};
    for (int k = 0; k < rounds; ++k) {
        Exponents a(4), b(4), c(4);
        for (int i = 0; i < 4; ++i) {
            a[i] = dexp(rng);
            b[i] = dexp(rng);
            c[i] = dexp(rng);
        }
        for (const auto& ord : orders) {
            int ab = compare_monomials(a, b, ord);
            if (compare_monomials(b, a, ord) != -ab) out.fail("antisymmetry");
            if (compare_monomials(exp_add(a, c), exp_add(b, c), ord) != ab)
                out.fail("multiplicativity");
            int bc = compare_monomials(b, c, ord);
            if (ab > 0 && bc > 0 && compare_monomials(a, c, ord) <= 0) out.fail("transitivity");
            if (ab == 0 && a != b) out.fail("totality");
        }
        ++out.instances;
    }
    return out;
}

// permuting and duplicating generators leaves the reduced basis unchanged
inline SuiteResult gb_order_independence_suite(int rounds = 100) {
    SuiteResult out;
    Rng rng(5150);
    RingPtr S = PolyRing::make({"x", "y", "z"}, CoeffField::prime(32003));
    for (int k = 0; k < rounds; ++k) {
        std::vector<Polynomial> gens;
        int n = 2 + static_cast<int>(rng() % 2);
        for (int i = 0; i < n; ++i) gens.push_back(random_poly(rng, S, 3, 2, 9));
        Ideal I(S, gens);
        std::vector<Polynomial> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        shuffled.push_back(shuffled.front());  // duplicate one generator
        Ideal J(S, shuffled);
        const auto& a = I.groebner_basis();
        const auto& b = J.groebner_basis();
        if (a.size() != b.size())
            out.fail("basis size changed");
        else
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) out.fail("basis element changed");

        // Buchberger post-check: every S-polynomial reduces to zero
        for (size_t i = 0; i < a.size() && out.pass; ++i)
            for (size_t j = i + 1; j < a.size(); ++j) {
                Exponents l = exp_lcm(a[i].lead_exponents(), a[j].lead_exponents());
                Polynomial s = a[i].times_monomial(exp_sub(l, a[i].lead_exponents()),
                                                   a[i].lead_coeff().inverse()) -
                               a[j].times_monomial(exp_sub(l, a[j].lead_exponents()),
                                                   a[j].lead_coeff().inverse());
                if (!I.normal_form(s).is_zero()) out.fail("S-polynomial did not reduce");
            }
        ++out.instances;
    }
    return out;
}

// planted ideal members always have zero normal form
inline SuiteResult membership_suite(int rounds = 100) {
    SuiteResult out;
    Rng rng(8128);
    RingPtr S = PolyRing::make({"x", "y"}, CoeffField::rationals());
    for (int k = 0; k < rounds; ++k) {
        std::vector<Polynomial> gens = {random_poly(rng, S, 3, 2), random_poly(rng, S, 3, 2)};
        Ideal I(S, gens);
        Polynomial f = random_poly(rng, S, 2, 2) * gens[0] + random_poly(rng, S, 2, 2) * gens[1];
        if (!I.contains(f)) out.fail("planted member escaped");
        ++out.instances;
    }
    return out;
}

// syzygies annihilate their matrix, and random kernel elements reduce to zero
inline SuiteResult syzygy_suite(int rounds = 100) {
    SuiteResult out;
    Rng rng(161803);
    RingPtr S = PolyRing::make({"x", "y"}, CoeffField::prime(32003));
    for (int k = 0; k < rounds; ++k) {
        std::vector<Vec> cols;
        for (int j = 0; j < 3; ++j)
            cols.push_back(Vec{random_poly(rng, S, 2, 2, 9), random_poly(rng, S, 2, 2, 9)});
        auto syz = syzygy_generators(cols, 2, S);
        for (const auto& s : syz) {
            Vec image = vec_zero(S, 2);
            for (size_t j = 0; j < cols.size(); ++j)
                image = vec_add(image, vec_times_poly(cols[j], s[j]));
            if (!vec_is_zero(image)) out.fail("syzygy does not annihilate");
        }
        if (!syz.empty()) {
            ModuleGB gb = module_groebner(syz, 3, S);
            Vec combo = vec_zero(S, 3);
            for (const auto& s : syz)
                combo = vec_add(combo, vec_times_poly(s, random_poly(rng, S, 2, 1, 9)));
            if (!in_submodule(combo, gb)) out.fail("kernel element escaped the syzygy module");
        }
        ++out.instances;
    }
    return out;
}

// every complex built from Koszul data and tensor products satisfies d∘d = 0
// (construction re-checks it; so does an explicit composition here)
inline SuiteResult complex_ddzero_suite(int rounds = 100) {
    SuiteResult out;
    Rng rng(2718);
    RingPtr S = PolyRing::make({"x", "y", "z"}, CoeffField::rationals());
    QRingPtr R = QuotientRing::make(S, Ideal::of(S, {"x*y"}));
    for (int k = 0; k < rounds; ++k) {
        std::vector<Polynomial> elems;
        int n = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < n; ++i) {
            Polynomial f = random_poly(rng, S, 2, 2);
            if (f.is_zero()) f = Polynomial::variable(S, 0);
            elems.push_back(f);
        }
        try {
            FreeComplex K = koszul_complex(R, elems);
            FreeComplex T = tensor_complexes(K, koszul_complex(R, {Polynomial::variable(S, 2)}));
            for (int i = T.lo() + 2; i <= T.hi(); ++i) {
                auto upper = T.differential(i);
                auto lower = T.differential(i - 1);
                for (const auto& col : upper) {
                    Vec image = apply_columns(R, lower, col, T.rank(i - 2));
                    if (!vec_is_zero(image)) out.fail("composition is nonzero");
                }
            }
        } catch (const std::exception& e) {
            out.fail(e.what());
        }
        ++out.instances;
    }
    return out;
}

// Koszul depth does not depend on the chosen generators of the ideal
inline SuiteResult depth_generator_suite(int rounds = 100) {
    SuiteResult out;
    Rng rng(31415);
    RingPtr S = PolyRing::make({"x", "y"}, CoeffField::rationals());
    QRingPtr R = QuotientRing::make(S, Ideal::of(S, {"x*y"}));
    std::vector<FGModule> pool = {FGModule::free_module(R, 1),
                                  FGModule::quotient_by_ideal(R, Ideal::of(S, {"x"})),
                                  FGModule::residue_field(R)};
    std::vector<std::vector<std::string>> ideal_pool = {
        {"x"}, {"y"}, {"x", "y"}, {"x + y"}, {"x^2"}, {"x + y", "y"}};
    for (int k = 0; k < rounds; ++k) {
        const auto& gens = ideal_pool[rng() % ideal_pool.size()];
        const FGModule& M = pool[rng() % pool.size()];
        Ideal I = Ideal::of(S, gens);
        // append a random combination of the existing generators
        Polynomial extra = Polynomial::zero(S);
        for (const auto& g : I.generators()) extra = extra + g * random_poly(rng, S, 2, 1);
        std::vector<Polynomial> padded = I.generators();
        padded.push_back(extra);
        Ideal J(S, padded);
        if (!(depth_koszul(I, M) == depth_koszul(J, M))) out.fail("depth changed at " + I.str());
        ++out.instances;
    }
    return out;
}

// the Koszul depth agrees with the Ext grade on random small pairs
inline SuiteResult depth_cross_validation_suite(int rounds = 100) {
    SuiteResult out;
    Rng rng(65537);
    RingPtr S = PolyRing::make({"x", "y"}, CoeffField::rationals());
    QRingPtr R = QuotientRing::make(S, Ideal::of(S, {"x*y"}));
    std::vector<FGModule> pool = {FGModule::free_module(R, 1),
                                  FGModule::quotient_by_ideal(R, Ideal::of(S, {"x"})),
                                  FGModule::quotient_by_ideal(R, Ideal::of(S, {"x^2"})),
                                  FGModule::residue_field(R)};
    std::vector<std::vector<std::string>> ideal_pool = {{"x"},     {"y"},        {"x", "y"},
                                                        {"x + y"}, {"x^2", "y"}, {"y^2"}};
    for (int k = 0; k < rounds; ++k) {
        const FGModule& M = pool[rng() % pool.size()];
        Ideal I = Ideal::of(S, ideal_pool[rng() % ideal_pool.size()]);
        if (!(depth_koszul(I, M) == depth_rees(I, M))) out.fail("grade mismatch at " + I.str());
        ++out.instances;
    }
    return out;
}

// inf additivity of the derived tensor over random shifted modules
inline SuiteResult inf_additivity_suite(int rounds = 100) {
    SuiteResult out;
    Rng rng(10007);
    RingPtr S = PolyRing::make({"x", "y"}, CoeffField::rationals());
    QRingPtr R = QuotientRing::make(S, Ideal::of(S, {"x*y"}));
    std::vector<FGModule> pool = {FGModule::quotient_by_ideal(R, Ideal::of(S, {"x"})),
                                  FGModule::quotient_by_ideal(R, Ideal::of(S, {"y"})),
                                  FGModule::residue_field(R),
                                  FGModule::free_module(R, 1)};
    for (int k = 0; k < rounds; ++k) {
        int s = static_cast<int>(rng() % 4) - 1, t = static_cast<int>(rng() % 4) - 1;
        const FGModule& A = pool[rng() % pool.size()];
        const FGModule& B = pool[rng() % pool.size()];
        FreeComplex X = shift_complex(A.resolution(3), s);
        FreeComplex Y = shift_complex(B.resolution(3), t);
        FreeComplex T = tensor_complexes(X, Y);
        std::optional<int> inf;
        for (int i = T.lo(); i <= T.hi() && !inf; ++i)
            if (!homology(T, i).is_zero()) inf = i;
        if (!inf || *inf != s + t) out.fail("inf additivity failed");
        ++out.instances;
    }
    return out;
}

// over hypersurfaces, reflexivity and (S_2) agree on the corpus modules
inline SuiteResult reflexive_s2_suite() {
    SuiteResult out;
    auto run = [&](const QRingPtr& R, const FGModule& M) {
        bool refl = is_reflexive(M);
        Verdict3 s2 = serre_condition(M, 2);
        if (s2 == Verdict3::unsupported || (refl != (s2 == Verdict3::yes)))
            out.fail("reflexivity and (S_2) disagree over " + R->describe());
        ++out.instances;
    };
    {
        RingPtr S = PolyRing::make({"x", "y"}, CoeffField::rationals());
        QRingPtr R = QuotientRing::make(S, Ideal::of(S, {"x*y"}));
        FGModule p = FGModule::ideal_as_module(R, Ideal::of(S, {"x"}));
        FGModule q = FGModule::ideal_as_module(R, Ideal::of(S, {"y"}));
        run(R, FGModule::free_module(R, 1));
        run(R, tensor_modules(p, p));
        run(R, tensor_modules(p, q));
        run(R, FGModule::residue_field(R));
        run(R, FGModule::quotient_by_ideal(R, Ideal::of(S, {"x^2"})));
        run(R, syzygy_module(FGModule::residue_field(R), 1));
    }
    {
        RingPtr S = PolyRing::make({"x", "y", "z", "w"}, CoeffField::rationals());
        QRingPtr R = QuotientRing::make(S, Ideal::of(S, {"x*y"}));
        FGModule M = FGModule::quotient_by_ideal(R, Ideal::of(S, {"x"}));
        FGModule N = auslander_transpose(FGModule::quotient_by_ideal(R, Ideal::of(S, {"y", "z", "w"})));
        run(R, M);
        run(R, N);
        run(R, tensor_modules(M, N));
    }
    {
        RingPtr S = PolyRing::make({"x", "y", "z", "u"}, CoeffField::rationals());
        QRingPtr R = QuotientRing::make(S, Ideal::of(S, {"x*u - y*z"}));
        run(R, FGModule::ideal_as_module(R, Ideal::of(S, {"x", "y"})));
    }
    return out;
}

}  // namespace calab::propsuite
