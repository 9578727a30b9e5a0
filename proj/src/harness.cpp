#include "calab/harness.hpp"

#include <sstream>

namespace calab {

namespace {

std::string yn(bool b) { return b ? "true" : "false"; }

std::string pd_str(const PdResult& pd) { return pd.value ? std::to_string(*pd.value) : "inf"; }

const char* kPrimeAssumptionNote = "primality of declared primes is an input assertion";

}  // namespace

CheckReport verify_hw_theorem(const FGModule& M, const FGModule& N,
                              const std::vector<PrimeSpec>& minimal_primes, std::string id) {
    CheckReport rep;
    rep.id = std::move(id);
    rep.statement =
        "over a hypersurface, a reflexive tensor product with a rank factor forces total Tor "
        "vanishing, reflexivity of M, torsion-freeness and full support of N, and finite pd on "
        "one side";
    rep.inputs = "M = " + M.describe() + "; N = " + N.describe();
    rep.note(kPrimeAssumptionNote);
    rep.note("the declared minimal-prime list is assumed complete");

    if (!M.ring()->is_hypersurface()) {
        rep.verdict = CheckVerdict::not_applicable;
        rep.value("hypothesis: hypersurface", "false");
        return rep;
    }
    if (M.is_zero() || N.is_zero()) {
        rep.verdict = CheckVerdict::not_applicable;
        rep.value("hypothesis: both modules nonzero", "false");
        return rep;
    }
    auto rank = rank_of(N, minimal_primes);
    rep.value("hypothesis: rank(N)", rank ? std::to_string(*rank) : "none");
    if (!rank) {
        rep.verdict = CheckVerdict::not_applicable;
        return rep;
    }
    bool tensor_reflexive = is_reflexive(tensor_modules(M, N));
    rep.value("hypothesis: M (x) N reflexive", yn(tensor_reflexive));
    if (!tensor_reflexive) {
        rep.verdict = CheckVerdict::not_applicable;
        return rep;
    }

    TorVanishing tv = tor_vanishes_from_one(M, N);
    bool c1 = tv.verdict == Verdict3::yes;
    rep.value("conclusion: Tor_i(M,N) = 0 for i >= 1", yn(c1));
    bool c2 = is_reflexive(M);
    rep.value("conclusion: M reflexive", yn(c2));
    bool c3 = is_torsion_free(N) == Verdict3::yes;
    rep.value("conclusion: N torsion-free", yn(c3));
    bool c4 = has_full_support(N);
    rep.value("conclusion: Supp(N) = Spec(R)", yn(c4));
    PdResult pm = projective_dimension(M), pn = projective_dimension(N);
    bool c5 = pm.value.has_value() || pn.value.has_value();
    rep.value("conclusion: pd(M) or pd(N) finite", pd_str(pm) + " / " + pd_str(pn));

    rep.verdict = (c1 && c2 && c3 && c4 && c5) ? CheckVerdict::verified : CheckVerdict::refuted;
    return rep;
}

CheckReport verify_main_theorem(const FGModule& M, const FGModule& N,
                                const std::vector<PrimeSpec>& minimal_primes,
                                const std::vector<PrimeSpec>& primes_for_ii, std::string id) {
    CheckReport rep;
    rep.id = std::move(id);
    rep.statement =
        "over a hypersurface with M (x) N reflexive, rank of N together with the localized depth "
        "bound depth_{R_q}(p R_q, M_q) <= height(p) forces M and N reflexive";
    rep.inputs = "M = " + M.describe() + "; N = " + N.describe();
    rep.note(kPrimeAssumptionNote);
    rep.note("hypothesis (ii) is checked over the declared prime pairs only; the statement "
             "quantifies over all primes in the support");

    if (!M.ring()->is_hypersurface() || M.is_zero() || N.is_zero()) {
        rep.verdict = CheckVerdict::not_applicable;
        rep.value("hypothesis: hypersurface with nonzero modules", "false");
        return rep;
    }
    bool tensor_reflexive = is_reflexive(tensor_modules(M, N));
    rep.value("hypothesis: M (x) N reflexive", yn(tensor_reflexive));
    if (!tensor_reflexive) {
        rep.verdict = CheckVerdict::not_applicable;
        return rep;
    }
    auto rank = rank_of(N, minimal_primes);
    rep.value("hypothesis (i): rank(N)", rank ? std::to_string(*rank) : "none");

    bool ii_holds = true;
    std::string failing;
    for (const auto& q : primes_for_ii) {
        if (!survives_at(M, q)) continue;
        for (const auto& p : primes_for_ii) {
            if (p.height() <= 0) continue;
            if (!q.contains_ideal(Ideal(p.ring()->ambient(), p.declared_gens()))) continue;
            Ideal pI(p.ring()->ambient(), p.declared_gens());
            DepthValue lhs = local_depth(pI, M, q);
            DepthValue rhs = DepthValue::of(p.height());
            if (!(lhs <= rhs)) {
                ii_holds = false;
                std::ostringstream msg;
                msg << "(" << p.name() << ", " << q.name() << "): depth " << lhs.str() << " > height "
                    << rhs.str();
                failing = msg.str();
                break;
            }
        }
        if (!ii_holds) break;
    }
    rep.value("hypothesis (ii): localized depth bound", ii_holds ? "holds on declared pairs" : failing);

    if (!rank || !ii_holds) {
        rep.verdict = CheckVerdict::not_applicable;
        rep.value("consistency: N reflexive anyway?", yn(is_reflexive(N)));
        return rep;
    }

    bool rm = is_reflexive(M), rn = is_reflexive(N);
    rep.value("conclusion: M reflexive", yn(rm));
    rep.value("conclusion: N reflexive", yn(rn));
    rep.verdict = (rm && rn) ? CheckVerdict::verified : CheckVerdict::refuted;
    return rep;
}

namespace {

bool valid_zero_divisor_pair(const QRingPtr& R, const ZeroDivisorPair& zd) {
    return !R->is_zero_element(zd.a) && !R->is_zero_element(zd.b) && R->is_zero_element(zd.a * zd.b);
}

}  // namespace

CheckReport verify_appendix_pair(const PrimeSpec& p, const PrimeSpec& q, int r, int s,
                                 const Polynomial& witness_p, const Polynomial& witness_q,
                                 const std::optional<ZeroDivisorPair>& non_domain, std::string id) {
    CheckReport rep;
    rep.id = std::move(id);
    rep.statement =
        "over a non-domain hypersurface, the tensor product of symbolic powers p^(r) (x) q^(s) is "
        "not reflexive once p or q has positive height";
    rep.inputs = "p = " + p.preimage().str() + ", q = " + q.preimage().str() + ", r = " +
                 std::to_string(r) + ", s = " + std::to_string(s);
    rep.note(kPrimeAssumptionNote);

    const QRingPtr& R = p.ring();
    if (!R->is_hypersurface()) {
        rep.verdict = CheckVerdict::not_applicable;
        rep.value("hypothesis: hypersurface", "false");
        return rep;
    }
    if (!non_domain || !valid_zero_divisor_pair(R, *non_domain)) {
        rep.verdict = CheckVerdict::not_applicable;
        rep.value("hypothesis: non-domain certificate", "missing or invalid");
        return rep;
    }
    rep.value("zero-divisor pair", non_domain->a.str() + " * " + non_domain->b.str() + " = 0");

    SymbolicPowerResult P = symbolic_power(p, r, witness_p);
    SymbolicPowerResult Q = symbolic_power(q, s, witness_q);
    rep.value("p^(r)", P.power.str() + (P.certified ? " [certified]" : " [witness-dependent]"));
    rep.value("q^(s)", Q.power.str() + (Q.certified ? " [certified]" : " [witness-dependent]"));
    if (!P.certified || !Q.certified) rep.note("symbolic powers carry the witness-dependence flag");

    bool p_nonzero = !ideal_equal(P.power, R->defining_ideal());
    bool q_nonzero = !ideal_equal(Q.power, R->defining_ideal());
    rep.value("hypothesis: p^(r), q^(s) nonzero", yn(p_nonzero) + std::string(" / ") + yn(q_nonzero));
    if (!p_nonzero || !q_nonzero) {
        rep.verdict = CheckVerdict::not_applicable;
        return rep;
    }

    int hp = p.height(), hq = q.height();
    rep.value("heights", std::to_string(hp) + " / " + std::to_string(hq));
    if (hp == 0 && hq == 0) {
        rep.verdict = CheckVerdict::not_applicable;
        rep.value("criterion", "silent: both primes are minimal");
        return rep;
    }

    FGModule T = tensor_modules(FGModule::ideal_as_module(R, P.power),
                                FGModule::ideal_as_module(R, Q.power));
    bool refl = is_reflexive(T);
    rep.value("p^(r) (x) q^(s) reflexive", yn(refl));
    rep.verdict = refl ? CheckVerdict::refuted : CheckVerdict::verified;
    return rep;
}

CheckReport verify_syzygy_instance(const FGModule& M, const PrimeSpec& p, int n, int r,
                                   const Polynomial& witness,
                                   const std::optional<ZeroDivisorPair>& non_domain,
                                   const std::vector<PrimeSpec>& minimal_primes, std::string id) {
    CheckReport rep;
    rep.id = std::move(id);
    rep.statement =
        "with N = syzygy^r(R/p^(n)) over a non-domain hypersurface and M (x) N reflexive: r >= 1, "
        "M and N reflexive, pd(M) < inf = pd(N), and a non-free M has rank >= 2";
    rep.inputs = "M = " + M.describe() + "; p = " + p.preimage().str() + ", n = " + std::to_string(n) +
                 ", r = " + std::to_string(r);
    rep.note(kPrimeAssumptionNote);

    const QRingPtr& R = p.ring();
    if (!R->is_hypersurface() || !non_domain || !valid_zero_divisor_pair(R, *non_domain)) {
        rep.verdict = CheckVerdict::not_applicable;
        rep.value("hypothesis: non-domain hypersurface", "false");
        return rep;
    }
    if (p.height() < 1) {
        rep.verdict = CheckVerdict::not_applicable;
        rep.value("hypothesis: height(p) >= 1", "false");
        return rep;
    }
    SymbolicPowerResult P = symbolic_power(p, n, witness);
    rep.value("p^(n)", P.power.str() + (P.certified ? " [certified]" : " [witness-dependent]"));
    if (ideal_equal(P.power, R->defining_ideal())) {
        rep.verdict = CheckVerdict::not_applicable;
        rep.value("hypothesis: p^(n) nonzero", "false");
        return rep;
    }

    FGModule quot = FGModule::quotient_by_ideal(R, P.power);
    FGModule N = syzygy_module(quot, r);
    bool tensor_reflexive = is_reflexive(tensor_modules(M, N));
    rep.value("hypothesis: M (x) N reflexive", yn(tensor_reflexive));
    if (!tensor_reflexive) {
        rep.verdict = CheckVerdict::not_applicable;
        return rep;
    }

    bool c_r = r >= 1;
    rep.value("conclusion: r >= 1", yn(c_r));
    bool rm = is_reflexive(M), rn = is_reflexive(N);
    rep.value("conclusion: M reflexive", yn(rm));
    rep.value("conclusion: N reflexive", yn(rn));
    PdResult pm = projective_dimension(M), pn = projective_dimension(N);
    bool c_pd = pm.value.has_value() && !pn.value.has_value();
    rep.value("conclusion: pd(M) / pd(N)", pd_str(pm) + " / " + pd_str(pn));

    bool c_rank = true;
    if (pm.value && *pm.value > 0) {  // M not free
        auto rank = rank_of(M, minimal_primes);
        rep.value("conclusion: rank(M) >= 2 (M not free)", rank ? std::to_string(*rank) : "none");
        c_rank = rank && *rank >= 2;
        rep.note("the rank bound for non-free M is verified on this instance only");
    }

    rep.verdict =
        (c_r && rm && rn && c_pd && c_rank) ? CheckVerdict::verified : CheckVerdict::refuted;
    return rep;
}

CheckReport verify_sn_transfer_instance(const FreeComplex& X, const FGModule& Y, int m, int n,
                                        const std::vector<PrimeSpec>& primes, std::string id) {
    CheckReport rep;
    rep.id = std::move(id);
    rep.statement =
        "with CI-dim(X) finite, X (x)L Y bounded and (S_n), and the localized depth inequality "
        "over declared pairs, Y satisfies (S_{n-m})";
    rep.inputs = "X = " + X.describe() + "; Y = " + Y.describe() + "; m = " + std::to_string(m) +
                 ", n = " + std::to_string(n);
    rep.note(kPrimeAssumptionNote);
    rep.note("Serre conditions of complexes are evaluated over the declared primes only");

    const QRingPtr& R = X.ring();
    if (!R->is_complete_intersection() && !R->is_hypersurface()) {
        rep.verdict = CheckVerdict::not_applicable;
        rep.value("hypothesis: complete-intersection base (CI-dim finite)", "false");
        return rep;
    }
    rep.value("hypothesis: CI-dim(X) finite", "true (complete-intersection base)");

    PdResult pdY = projective_dimension(Y);
    if (!pdY.value.has_value()) {
        rep.verdict = CheckVerdict::not_applicable;
        rep.value("instance limitation: pd(Y) finite", "false");
        rep.note("instances use a finite resolution of Y so the derived tensor is exact");
        return rep;
    }
    FreeComplex C = tensor_complexes(X, Y.resolution(*pdY.value));
    rep.value("hypothesis: X (x)L Y bounded", "true (bounded free representatives)");

    PrimewiseVerdict sn = serre_condition_at_primes(C, n, primes);
    rep.value("hypothesis: X (x)L Y satisfies (S_n) on declared primes",
              sn.holds ? "true" : "fails at " + sn.failing_prime + " (" + sn.detail + ")");

    bool iv_holds = true;
    std::string iv_detail = "holds on declared pairs";
    for (const auto& q : primes) {
        bool q_in_support = false;
        for (int i = C.lo(); i <= C.hi() && !q_in_support; ++i) {
            FGModule H = homology(C, i);
            if (!H.is_zero() && survives_at(H, q)) q_in_support = true;
        }
        if (!q_in_support) continue;
        for (const auto& p : primes) {
            if (p.height() <= 0) continue;
            if (!q.contains_ideal(Ideal(p.ring()->ambient(), p.declared_gens()))) continue;
            Ideal pI(p.ring()->ambient(), p.declared_gens());
            DepthValue lhs = local_depth(pI, X, q);
            DepthValue rhs = local_depth(pI, FGModule::free_module(R, 1), q);
            std::optional<int> inf_xq;
            for (int i = X.lo(); i <= X.hi() && !inf_xq; ++i) {
                FGModule H = homology(X, i);
                if (!H.is_zero() && survives_at(H, q)) inf_xq = i;
            }
            if (!inf_xq) continue;  // X vanishes at q
            bool ok;
            if (lhs.is_infinite())
                ok = true;
            else if (rhs.is_infinite())
                ok = true;
            else
                ok = *lhs.value + *inf_xq <= *rhs.value + m;
            if (!ok) {
                iv_holds = false;
                std::ostringstream msg;
                msg << "fails at (" << p.name() << ", " << q.name() << "): " << lhs.str() << " + "
                    << *inf_xq << " > " << rhs.str() << " + " << m;
                iv_detail = msg.str();
                break;
            }
        }
        if (!iv_holds) break;
    }
    rep.value("hypothesis (iv): localized depth inequality", iv_detail);

    if (!sn.holds || !iv_holds) {
        rep.verdict = CheckVerdict::not_applicable;
        return rep;
    }

    if (n - m < 0) {
        rep.value("conclusion: Y satisfies (S_" + std::to_string(n - m) + ")",
                  "true (vacuous for a negative index)");
        rep.verdict = CheckVerdict::verified;
        return rep;
    }
    Verdict3 conclusion = serre_condition(Y, n - m);
    rep.value("conclusion: Y satisfies (S_" + std::to_string(n - m) + ")",
              conclusion == Verdict3::yes ? "true" : "false");
    rep.verdict = conclusion == Verdict3::yes ? CheckVerdict::verified : CheckVerdict::refuted;
    return rep;
}

}  // namespace calab
