#include "calab/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <sstream>

namespace calab {

namespace {

// ---------------------------------------------------------------------------
// Shared builders for the native entries (each entry constructs its own copy).

QRingPtr ring_xy(std::vector<std::string> vars) {
    RingPtr S = PolyRing::make(std::move(vars), CoeffField::rationals());
    return QuotientRing::make(S, Ideal::of(S, {"x*y"}));
}

QRingPtr ring_quadric() {
    RingPtr S = PolyRing::make({"x", "y", "z", "u"}, CoeffField::rationals());
    return QuotientRing::make(S, Ideal::of(S, {"x*u - y*z"}));
}

QRingPtr ring_conic() {
    RingPtr S = PolyRing::make({"x", "y", "z"}, CoeffField::rationals());
    return QuotientRing::make(S, Ideal::of(S, {"x*y - z^2"}));
}

QRingPtr ring_regular_2() {
    return QuotientRing::polynomial_ring(PolyRing::make({"x", "y"}, CoeffField::rationals()));
}

FGModule quot(const QRingPtr& R, std::vector<std::string> gens) {
    return FGModule::quotient_by_ideal(R, Ideal::of(R->ambient(), gens));
}

Ideal amb(const QRingPtr& R, std::vector<std::string> gens) { return Ideal::of(R->ambient(), gens); }

PrimeSpec prm(const QRingPtr& R, std::vector<std::string> gens, std::string name) {
    return PrimeSpec::declare(R, parse_polynomials(R->ambient(), gens), std::move(name));
}

CheckReport simple_report(std::string id, std::string statement, bool pass) {
    CheckReport r;
    r.id = std::move(id);
    r.statement = std::move(statement);
    r.verdict = pass ? CheckVerdict::verified : CheckVerdict::refuted;
    return r;
}

// ---------------------------------------------------------------------------
// Native entries

std::vector<CheckReport> native_sn_transfer() {
    std::vector<CheckReport> out;

    // a module instance: X = R/(x) over Q[x,y], Y = R/(y); hypothesis (iv)
    // holds with m = 0 and the conclusion is (S_0) for Y
    {
        QRingPtr R = ring_regular_2();
        FGModule Rx = quot(R, {"x"});
        FGModule Ry = quot(R, {"y"});
        std::vector<PrimeSpec> primes = {prm(R, {"x"}, "(x)"), prm(R, {"y"}, "(y)"),
                                         prm(R, {"x", "y"}, "m")};
        PdResult pd = projective_dimension(Rx);
        FreeComplex X = Rx.resolution(*pd.value);
        out.push_back(verify_sn_transfer_instance(X, Ry, 0, 0, primes, "module_instance"));
    }
    // a shifted-module instance: X = R/(x)[1]; the pair ((y), (x,y)) makes
    // m = 1 tight
    {
        QRingPtr R = ring_regular_2();
        FGModule Rx = quot(R, {"x"});
        FGModule Ry = quot(R, {"y"});
        std::vector<PrimeSpec> primes = {prm(R, {"x"}, "(x)"), prm(R, {"y"}, "(y)"),
                                         prm(R, {"x", "y"}, "m")};
        FreeComplex X = shift_complex(Rx.resolution(*projective_dimension(Rx).value), 1);
        out.push_back(verify_sn_transfer_instance(X, Ry, 1, 0, primes, "shifted_instance"));

        // depth + inf is shift-invariant, so the unshifted bound m = 0 also
        // carries over to the shifted complex
        out.push_back(verify_sn_transfer_instance(X, Ry, 0, 0, primes, "shifted_shift_invariance"));
    }
    // a two-term complex instance: X = [R --z--> R] over Q[x,y,z]/(xy) is
    // quasi-isomorphic to R/(z); Y = R
    {
        RingPtr S = PolyRing::make({"x", "y", "z"}, CoeffField::rationals());
        QRingPtr R = QuotientRing::make(S, Ideal::of(S, {"x*y"}));
        std::vector<FreeComplex::Level> levels(2);
        levels[0].rank = 1;
        levels[1].rank = 1;
        levels[1].diff = {Vec{parse_polynomial(S, "z")}};
        levels[1].degrees = {1};
        FreeComplex X = FreeComplex::make(R, 0, levels);
        std::vector<PrimeSpec> primes = {prm(R, {"z"}, "(z)"), prm(R, {"x", "y", "z"}, "m")};
        // H_0 = R/(z) is torsion, so (S_0) is the right hypothesis level here
        out.push_back(
            verify_sn_transfer_instance(X, FGModule::free_module(R, 1), 0, 0, primes, "two_term_nzd"));

        // control: a two-term complex with genuinely spread homology fails
        // Serre's condition at a minimal prime
        std::vector<FreeComplex::Level> bad_levels(2);
        bad_levels[0].rank = 1;
        bad_levels[1].rank = 1;
        bad_levels[1].diff = {Vec{parse_polynomial(S, "x")}};
        bad_levels[1].degrees = {1};
        FreeComplex Xbad = FreeComplex::make(R, 0, bad_levels);
        std::vector<PrimeSpec> bad_primes = {prm(R, {"x"}, "(x)"), prm(R, {"x", "y", "z"}, "m")};
        CheckReport control = verify_sn_transfer_instance(Xbad, FGModule::free_module(R, 1), 0, 1,
                                                          bad_primes, "two_term_zd_control");
        control.expected = CheckVerdict::not_applicable;
        out.push_back(std::move(control));
    }
    return out;
}

std::vector<CheckReport> native_depth_identities() {
    std::vector<CheckReport> out;
    {
        RingPtr S = PolyRing::make({"x", "y", "z"}, CoeffField::rationals());
        QRingPtr R = QuotientRing::make(S, Ideal::of(S, {"x*y"}));
        FGModule M = quot(R, {"y"});
        bool radical_id = depth_koszul(amb(R, {"x^2"}), M) == depth_koszul(amb(R, {"x"}), M) &&
                          depth_koszul(amb(R, {"y^2", "z"}), M) == depth_koszul(amb(R, {"y", "z"}), M);
        out.push_back(simple_report("radical_invariance",
                                    "depth(I, M) agrees with depth(sqrt I, M) on instances with a "
                                    "known radical",
                                    radical_id));
    }
    {
        QRingPtr R = ring_xy({"x", "y", "z", "w"});
        FGModule M = quot(R, {"x"});
        bool ann_id = depth_koszul(amb(R, {"z", "w", "x"}), M) == depth_koszul(amb(R, {"z", "w"}), M);
        FGModule k = FGModule::residue_field(R);
        ann_id = ann_id && depth_koszul(amb(R, {"y", "x", "z", "w"}), k) ==
                               depth_koszul(amb(R, {"y"}), k);
        out.push_back(simple_report("annihilator_invariance",
                                    "depth(I + ann M, M) = depth(I, M) on instances", ann_id));
    }
    {
        QRingPtr R = ring_xy({"x", "y", "z", "w"});
        FGModule M = quot(R, {"x"});
        bool gen_indep =
            depth_koszul(amb(R, {"y", "z", "w"}), M) ==
                depth_koszul(amb(R, {"y", "z", "w", "y + z"}), M) &&
            depth_koszul(amb(R, {"y", "z"}), M) == depth_koszul(amb(R, {"y", "z", "y - 3*z"}), M);
        out.push_back(simple_report(
            "generator_independence",
            "Koszul depth does not change when a redundant generator is appended", gen_indep));
    }
    {
        QRingPtr R = ring_xy({"x", "y"});
        bool conv = depth_koszul(amb(R, {"x"}), FGModule::zero_module(R)).is_infinite();
        InfSup empty = inf_sup(FreeComplex::zero_complex(R));
        conv = conv && !empty.inf && !empty.sup;
        out.push_back(simple_report("vanishing_conventions",
                                    "depth of the zero module is infinite and an exact complex has "
                                    "the empty inf/sup markers",
                                    conv));
    }
    {
        // Koszul depth equals the Ext grade across a corpus sweep
        bool agree = true;
        std::ostringstream detail;
        auto sweep = [&](const std::vector<FGModule>& mods,
                         const std::vector<Ideal>& ideals) {
            for (const auto& M : mods)
                for (const auto& I : ideals) {
                    DepthValue a = depth_koszul(I, M), b = depth_rees(I, M);
                    if (!(a == b)) {
                        agree = false;
                        detail << "mismatch at " << I.str() << ": " << a.str() << " vs " << b.str();
                    }
                }
        };
        QRingPtr R4 = ring_xy({"x", "y", "z", "w"});
        sweep({quot(R4, {"x"}), FGModule::free_module(R4, 1), FGModule::residue_field(R4),
               auslander_transpose(quot(R4, {"y", "z", "w"}))},
              {amb(R4, {"y", "z", "w"}), amb(R4, {"x"}), R4->maximal_ideal(), amb(R4, {"z", "w"})});
        QRingPtr Rq = ring_quadric();
        sweep({FGModule::ideal_as_module(Rq, amb(Rq, {"x", "y"})), FGModule::free_module(Rq, 1)},
              {amb(Rq, {"x", "y"}), Rq->maximal_ideal(), amb(Rq, {"x"})});
        CheckReport r = simple_report(
            "koszul_vs_ext_grade", "the Koszul depth equals the first nonvanishing Ext degree "
                                   "across the corpus sweep",
            agree);
        if (!agree) r.value("detail", detail.str());
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckReport> native_depth_inequality_sweep() {
    // torsion-free modules with rank over hypersurfaces:
    // depth(I, M) <= depth(I, R) + 1
    std::vector<CheckReport> out;
    bool all = true;
    std::ostringstream rows;

    auto run = [&](const QRingPtr& R, const FGModule& M, const std::vector<Ideal>& ideals,
                   const std::string& tag) {
        FGModule free1 = FGModule::free_module(R, 1);
        for (const auto& I : ideals) {
            DepthValue dm = depth_koszul(I, M);
            DepthValue dr = depth_koszul(I, free1);
            bool ok = dm.is_infinite() ? dr.is_infinite() || true
                                       : (dr.is_infinite() || *dm.value <= *dr.value + 1);
            if (!ok) {
                all = false;
                rows << tag << " " << I.str() << ": " << dm.str() << " > " << dr.str() << " + 1; ";
            }
        }
    };

    QRingPtr R4 = ring_xy({"x", "y", "z", "w"});
    run(R4, auslander_transpose(quot(R4, {"y", "z", "w"})),
        {amb(R4, {"x"}), amb(R4, {"y"}), amb(R4, {"y", "z", "w"}), R4->maximal_ideal(),
         amb(R4, {"x + y"}), amb(R4, {"z", "w"})},
        "transpose");
    QRingPtr Rq = ring_quadric();
    run(Rq, FGModule::ideal_as_module(Rq, amb(Rq, {"x", "y"})),
        {amb(Rq, {"x"}), amb(Rq, {"x", "y"}), amb(Rq, {"x", "z"}), Rq->maximal_ideal(),
         amb(Rq, {"x + u"})},
        "quadric_ideal");
    QRingPtr R2 = ring_xy({"x", "y"});
    run(R2, syzygy_module(FGModule::residue_field(R2), 1),
        {amb(R2, {"x"}), amb(R2, {"y"}), R2->maximal_ideal(), amb(R2, {"x + y"})}, "syzygy_of_k");

    CheckReport r = simple_report("depth_inequality_sweep",
                                  "for torsion-free modules with rank over hypersurfaces, "
                                  "depth(I, M) <= depth(I, R) + 1 for every corpus ideal",
                                  all);
    if (!all) r.value("violations", rows.str());
    r.note("swept over the corpus ideal list only");
    out.push_back(std::move(r));
    return out;
}

std::vector<CheckReport> native_ci_sweep() {
    std::vector<CheckReport> out;
    bool all = true;
    std::ostringstream rows;
    auto run = [&](const FGModule& M, const std::string& tag) {
        auto ci = ci_dimension(M);
        if (!ci || *ci < 0) {
            all = false;
            rows << tag << " ";
        }
    };
    QRingPtr R2 = ring_xy({"x", "y"});
    run(FGModule::residue_field(R2), "k");
    run(quot(R2, {"x"}), "R/(x)");
    run(FGModule::free_module(R2, 2), "free");
    QRingPtr Rq = ring_quadric();
    run(FGModule::ideal_as_module(Rq, amb(Rq, {"x", "y"})), "(x,y)");
    QRingPtr R4 = ring_xy({"x", "y", "z", "w"});
    run(auslander_transpose(quot(R4, {"y", "z", "w"})), "transpose");
    run(quot(R4, {"x"}), "R/(x)");

    bool frees_zero = ci_dimension(FGModule::free_module(R2, 1)) == 0 &&
                      ci_dimension(FGModule::free_module(Rq, 3)) == 0;
    CheckReport r = simple_report("ci_dimension_sweep",
                                  "CI-dimension is nonnegative on nonzero corpus modules and zero "
                                  "on free modules",
                                  all && frees_zero);
    if (!all) r.value("violations", rows.str());
    out.push_back(std::move(r));
    return out;
}

std::vector<CheckReport> native_ab_sweep() {
    std::vector<CheckReport> out;
    bool all = true;
    std::ostringstream rows;
    auto run = [&](const QRingPtr& R, const FGModule& M, const std::string& tag) {
        PdResult pd = projective_dimension(M);
        if (!pd.value) return;  // only finite-pd modules enter the formula
        DepthValue dm = depth_koszul(R->maximal_ideal(), M);
        DepthValue dr = depth_koszul(R->maximal_ideal(), FGModule::free_module(R, 1));
        bool ok = !dm.is_infinite() && !dr.is_infinite() && *pd.value + *dm.value == *dr.value;
        if (!ok) {
            all = false;
            rows << tag << ": pd " << (pd.value ? std::to_string(*pd.value) : "inf") << " depth "
                 << dm.str() << " vs depth R " << dr.str() << "; ";
        }
    };
    QRingPtr R4 = ring_xy({"x", "y", "z", "w"});
    run(R4, auslander_transpose(quot(R4, {"y", "z", "w"})), "transpose");
    run(R4, FGModule::free_module(R4, 2), "free");
    QRingPtr Q2 = ring_regular_2();
    run(Q2, FGModule::residue_field(Q2), "k_regular");
    run(Q2, FGModule::ideal_as_module(Q2, amb(Q2, {"x", "y"})), "max_ideal_regular");
    run(Q2, quot(Q2, {"x^2"}), "R/(x^2)_regular");

    CheckReport r = simple_report(
        "auslander_buchsbaum_sweep",
        "pd(M) + depth(m, M) = depth(m, R) for every finite-pd corpus module", all);
    if (!all) r.value("violations", rows.str());
    out.push_back(std::move(r));
    return out;
}

std::vector<CheckReport> native_inf_additivity() {
    std::vector<CheckReport> out;
    bool all = true;
    QRingPtr R = ring_xy({"x", "y"});
    FGModule A = quot(R, {"x"});
    FGModule B = quot(R, {"y"});
    for (int s = 0; s <= 2 && all; ++s) {
        for (int t = 0; t <= 2 && all; ++t) {
            FreeComplex X = shift_complex(A.resolution(4), s);
            FreeComplex Y = shift_complex(B.resolution(4), t);
            InfSup i = inf_sup(tensor_complexes(X, Y));
            if (!i.inf || *i.inf != s + t) all = false;
        }
    }
    QRingPtr Q2 = ring_regular_2();
    FGModule C = quot(Q2, {"x^2"});
    FreeComplex X = shift_complex(C.resolution(3), 2);
    FreeComplex Y = shift_complex(FGModule::residue_field(Q2).resolution(3), 1);
    InfSup i = inf_sup(tensor_complexes(X, Y));
    all = all && i.inf && *i.inf == 3;

    out.push_back(simple_report("inf_additivity",
                                "inf(X tensor Y) = inf(X) + inf(Y) on shifted-module instances",
                                all));
    return out;
}

// ---------------------------------------------------------------------------
// Sessions

const char* kSessionTransposeGap = R"(
-- hypersurface in four variables; transpose of a quotient by a height-2 prime
ring R = poly(Q, [x, y, z, w]) / (x*y);
prime! p = (y, z, w);
prime! m = (x, y, z, w);
prime! px = (x);
prime! py = (y);
module M = quotient(R, (x));
module N = transpose(quotient(R, (y, z, w)));

check N_pd_finite: pd_finite(N);
check M_reflexive: reflexive(M);
check MN_reflexive: reflexive(tensor(M, N));
check N_reflexive: reflexive(N) expect refuted;
check N_torsion_free: torsion_free(N);
check N_full_support: full_support(N);
check MN_serre2: serre(tensor(M, N), 2);
check N_serre2: serre(N, 2) expect refuted;
check tor_vanishing: tor_zero(M, N, 1, 5);
check tor_all: tor_vanishes(M, N);
assert rank(N, [px, py]) == 2;
assert depth((y, z, w), M) == 3;
assert height(p) == 2;
assert depth_rees((y, z, w), M) == 3;
assert local_depth((y, z, w), M, m) == 3;
check depth_formula: depth_formula(M, N);
check hw: hw_theorem(M, N, [px, py]);
check main: main_theorem(M, N, [px, py], [p, m]) expect not_applicable;
check transfer_fails: transfer(M, [p, m]) expect refuted;
check local_transfer_fails: local_transfer(M, [p, m]) expect refuted;
)";

const char* kSessionRigidityWitness = R"(
-- three-variable hypersurface; a module that is not rigid for Tor although
-- the depth transfer bound holds at the declared primes
ring R = poly(Q, [x, y, z]) / (x*y);
prime! px = (x);
prime! pxy = (x, y);
prime! py = (y);
prime! m = (x, y, z);
module M = quotient(R, (x^2));
module N = quotient(R, (y));

check tor1_zero: tor_zero(M, N, 1, 1);
check tor2_nonzero: tor_nonzero(M, N, 2);
check tor2_identified: iso(tor(2, M, N), quotient(R, (x, y)));
check support_not_full: full_support(M) expect refuted;
check supp_px: survives(M, px);
check supp_pxy: survives(M, pxy);
check supp_py: survives(M, py) expect refuted;
check transfer_holds: transfer(M, [px, pxy, m]);
check local_transfer_holds: local_transfer(M, [px, pxy, m]);
-- rigidity on cyclic quotients: consistent for the regular element z,
-- refuted by the pair above for the zero divisor y
check rigid_on_z_quotient: tor_zero(M, quotient(R, (z)), 1, 2);
assert local_depth((x), M, pxy) == 0;
assert depth((x, y), M) == 0;
assert height(pxy) == 1;
)";

const char* kSessionDsumSocle = R"(
-- four-variable hypersurface; direct sum with a finite-length summand
ring R = poly(Q, [x, y, z, u]) / (x*y);
prime! pxy = (x, y);
prime! py = (y);
prime! m = (x, y, z, u);
module N = quotient(R, (x));
module T = quotient(R, (x, y, z, u));
module M = dsum(N, T);
module Ry = quotient(R, (y));

assert dim(T) == 0;
check T_pd_infinite: pd_infinite(T);
check support_not_full: full_support(M) expect refuted;
check supp_py: survives(M, py) expect refuted;
check N_tor1: tor_zero(N, Ry, 1, 1);
check N_tor2: iso(tor(2, N, Ry), quotient(R, (x, y)));
check y_regular_on_M_at_pxy: local_regular(y, M, pxy);
check y_not_regular_on_R_at_pxy: local_regular(y, free(R, 1), pxy) expect refuted;
check M_tor1_dies_at_pxy: survives(tor(1, M, Ry), pxy) expect refuted;
check M_tor2_survives_at_pxy: survives(tor(2, M, Ry), pxy);
)";

const char* kSessionQuadric = R"(
-- the quadric hypersurface; an ideal with full support and nonrigid Tor
ring R = poly(Q, [x, y, z, u]) / (x*u - y*z);
prime! p0 = (0);
prime! pxy = (x, y);
prime! pxz = (x, z);
prime! m = (x, y, z, u);
module M = ideal_module(R, (x, y));

check tor1_zero: tor_zero(M, M, 1, 1);
check tor2_nonzero: tor_nonzero(M, M, 2);
assert length(tor(2, M, M)) == 1;
check tor2_is_k: iso(tor(2, M, M), quotient(R, (x, y, z, u)));
check M_full_support: full_support(M);
check M_reflexive: reflexive(M);
assert rank(M, [p0]) == 1;
check transfer_holds: transfer(M, [pxy, pxz, m]);
check local_transfer_holds: local_transfer(M, [pxy, pxz, m]);
check main_positive: main_theorem(M, free(R, 1), [p0], [pxy, pxz, m]);
)";

const char* kSessionMinimalPrimes = R"(
-- the plane pair of lines; tensor products of the two minimal primes
ring R = poly(Q, [x, y]) / (x*y);
prime! px = (x);
prime! py = (y);
module p = ideal_module(R, (x));
module q = ideal_module(R, (y));

check pp_reflexive: reflexive(tensor(p, p));
check pq_reflexive: reflexive(tensor(p, q)) expect refuted;
assert length(tensor(p, q)) == 1;
check pq_is_k: iso(tensor(p, q), quotient(R, (x, y)));
check p_identified: iso(p, quotient(R, (y)));
check hw_rank_gap: hw_theorem(p, p, [px, py]) expect not_applicable;
check hw_free: hw_theorem(p, free(R, 1), [px, py]);
)";

const char* kSessionSyzygyTensor = R"(
-- tensoring an infinite-pd cyclic module with an even syzygy of R/(x);
-- the product is the syzygy again, reflexive despite pd(M) = inf
ring R = poly(Q, [x, y]) / (x*y);
prime! px = (x);
prime! py = (y);
module M = quotient(R, (x^2));
module N = syzygy(quotient(R, (x)), 2);

check M_pd_infinite: pd_infinite(M);
check MN_reflexive: reflexive(tensor(M, N));
check MN_is_N: iso(tensor(M, N), N);
check N_identified: iso(N, quotient(R, (x)));
check odd_syzygy_tensor_not_reflexive: reflexive(tensor(M, syzygy(quotient(R, (x)), 1))) expect refuted;
check appendix_minimal: appendix_pair(px, py, 1, 1, y, x, (x, y)) expect not_applicable;
)";

const char* kSessionSymbolicHeights = R"(
-- symbolic powers over the pair of lines; positive height breaks reflexivity
ring R = poly(Q, [x, y]) / (x*y);
prime! px = (x);
prime! py = (y);
prime! mm = (x, y);

check positive_height_pair: appendix_pair(mm, py, 1, 1, 1, x, (x, y));
check both_minimal_pair: appendix_pair(px, py, 1, 1, y, x, (x, y)) expect not_applicable;
check syzygy_instance: prop_syzygy(free(R, 1), mm, 1, 1, 1, (x, y), [px, py]);
assert height(mm) == 1;
)";

const char* kSessionConicSymbolic = R"(
-- symbolic square of a height-one prime on the conic hypersurface
ring R = poly(Q, [x, y, z]) / (x*y - z^2);
prime! p = (x, z);
prime! m = (x, y, z);

check symbolic_square: symbolic_power_eq(p, 2, y, (x));
check strictly_larger: symbolic_strict(p, 2, y);
check first_power: symbolic_power_eq(p, 1, y, (x, z));
check maximal_power: symbolic_eq_power(m, 2, 1);
assert height(p) == 1;
)";

const char* kSessionNegativeControls = R"(
-- hypothesis-violating instances must never come back verified
ring NC = poly(Q, [x, y, z]) / (x^2, x*y, y^2);
module k = quotient(NC, (x, y, z));
check serre_unsupported: serre(free(NC, 1), 1) expect not_applicable;
check tor_decision_unsupported: tor_vanishes(k, free(NC, 1)) expect not_applicable;

ring R = poly(Q, [x, y]) / (x*y);
prime! px = (x);
prime! py = (y);
module kk = quotient(R, (x, y));
check hw_not_hypersurface_ok: hw_theorem(kk, kk, [px, py]) expect not_applicable;
check main_tensor_not_reflexive: main_theorem(kk, kk, [px, py], [px, py]) expect not_applicable;

ring D = poly(Q, [x, y, z]) / (x*y - z^2);
prime! dp = (x, z);
prime! dm = (x, y, z);
check appendix_needs_zero_divisors: appendix_pair(dp, dm, 1, 1, y, x + y, (x, y)) expect not_applicable;
)";

}  // namespace

const std::vector<CorpusEntry>& corpus_entries() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> v;
        v.push_back({"transpose_reflexivity_gap",
                     "transpose of a quotient by a height-two prime: reflexive tensor product with "
                     "a non-reflexive factor",
                     kSessionTransposeGap, {}});
        v.push_back({"rigidity_witness_x2_y",
                     "R/(x^2) against R/(y): vanishing Tor_1 with nonvanishing Tor_2, while the "
                     "depth transfer bound holds",
                     kSessionRigidityWitness, {}});
        v.push_back({"dsum_socle_rigidity",
                     "direct sum with a finite-length summand: localized regularity and Tor "
                     "witnesses at (x,y)",
                     kSessionDsumSocle, {}});
        v.push_back({"quadric_ideal_selftor",
                     "the ideal (x,y) on the quadric: full support, reflexive, Tor_2(M,M) = k",
                     kSessionQuadric, {}});
        v.push_back({"minimal_prime_tensor_pair",
                     "tensor products of the two minimal primes of the line pair",
                     kSessionMinimalPrimes, {}});
        v.push_back({"syzygy_tensor_infinite_pd",
                     "a reflexive tensor product with an infinite-pd factor, via the even syzygy",
                     kSessionSyzygyTensor, {}});
        v.push_back({"symbolic_tensor_heights",
                     "symbolic-power tensor criterion and the syzygy instance over the line pair",
                     kSessionSymbolicHeights, {}});
        v.push_back({"conic_symbolic_square",
                     "the symbolic square of (x,z) on the conic equals (x), strictly above the "
                     "ordinary square",
                     kSessionConicSymbolic, {}});
        v.push_back({"sn_transfer_instances",
                     "Serre-condition transfer for complexes on module, shifted and two-term "
                     "instances",
                     "", native_sn_transfer});
        v.push_back({"depth_identities",
                     "radical and annihilator invariance, generator independence, vanishing "
                     "conventions, Koszul vs Ext grade",
                     "", native_depth_identities});
        v.push_back({"depth_inequality_sweep",
                     "the hypersurface depth inequality depth(I,M) <= depth(I,R) + 1 for "
                     "torsion-free corpus modules with rank",
                     "", native_depth_inequality_sweep});
        v.push_back({"ci_dimension_sweep",
                     "CI-dimension is nonnegative on corpus modules and vanishes on frees", "",
                     native_ci_sweep});
        v.push_back({"auslander_buchsbaum_sweep",
                     "pd + depth = depth R over the finite-pd corpus modules", "", native_ab_sweep});
        v.push_back({"inf_additivity",
                     "inf additivity of the derived tensor product on shifted-module instances", "",
                     native_inf_additivity});
        v.push_back({"negative_controls",
                     "hypothesis-violating instances return not-applicable or refuted, never "
                     "verified",
                     kSessionNegativeControls, {}});
        return v;
    }();
    return entries;
}

namespace {

std::vector<CheckReport> run_entry(const CorpusEntry& e) {
    std::vector<CheckReport> out;
    if (!e.session.empty()) {
        auto reports = run_session_text(e.session);
        out.insert(out.end(), reports.begin(), reports.end());
    }
    if (e.native) {
        auto reports = e.native();
        out.insert(out.end(), reports.begin(), reports.end());
    }
    for (auto& r : out) r.id = e.id + "/" + r.id;
    return out;
}

int thread_budget() {
    const char* env = std::getenv("CALAB_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n < 1 ? 1 : n;
}

}  // namespace

std::vector<CheckReport> run_corpus(const std::vector<std::string>& only) {
    std::vector<const CorpusEntry*> selected;
    for (const auto& e : corpus_entries()) {
        if (only.empty() || std::find(only.begin(), only.end(), e.id) != only.end())
            selected.push_back(&e);
    }
    for (const auto& id : only) {
        bool known = false;
        for (const auto& e : corpus_entries())
            if (e.id == id) known = true;
        if (!known) throw std::invalid_argument("unknown corpus entry '" + id + "'");
    }

    int threads = thread_budget();
    std::vector<CheckReport> out;
    if (threads <= 1) {
        for (const auto* e : selected) {
            auto reports = run_entry(*e);
            out.insert(out.end(), reports.begin(), reports.end());
        }
        return out;
    }
    // entries are independent; evaluate in waves of `threads`, merge in
    // entry order so the output never depends on the schedule
    for (size_t base = 0; base < selected.size(); base += static_cast<size_t>(threads)) {
        std::vector<std::future<std::vector<CheckReport>>> wave;
        for (size_t k = base; k < selected.size() && k < base + static_cast<size_t>(threads); ++k) {
            const CorpusEntry* e = selected[k];
            wave.push_back(std::async(std::launch::async, [e] { return run_entry(*e); }));
        }
        for (auto& f : wave) {
            auto reports = f.get();
            out.insert(out.end(), reports.begin(), reports.end());
        }
    }
    return out;
}

std::string corpus_session_hash() {
    std::string all;
    for (const auto& e : corpus_entries()) {
        all += e.id;
        all += '\n';
        all += e.session;
    }
    return fnv1a_hex(all);
}

}  // namespace calab
