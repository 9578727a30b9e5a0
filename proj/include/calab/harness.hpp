#pragma once

#include "calab/invariants.hpp"
#include "calab/report.hpp"

namespace calab {

/// Certificate that the ring is not a domain: a*b = 0 with a, b both nonzero.
struct ZeroDivisorPair {
    Polynomial a, b;
};

/// Hypersurface tensor-reflexivity checker: when N has rank and M⊗N is
/// reflexive, verifies all five conclusions (total Tor vanishing, M
/// reflexive, N torsion-free, N of full support, finite pd on one side).
CheckReport verify_hw_theorem(const FGModule& M, const FGModule& N,
                              const std::vector<PrimeSpec>& minimal_primes,
                              std::string id = "hw_theorem");

/// Reflexivity-transfer checker: hypotheses are (i) N has rank and (ii) the
/// localized depth inequality depth_{R_q}(p R_q, M_q) <= height(p) over the
/// declared prime pairs; conclusion is that M and N are both reflexive.
CheckReport verify_main_theorem(const FGModule& M, const FGModule& N,
                                const std::vector<PrimeSpec>& minimal_primes,
                                const std::vector<PrimeSpec>& primes_for_ii,
                                std::string id = "main_theorem");

/// Symbolic-power tensor criterion on a non-domain hypersurface: if p or q
/// has positive height, p^(r) ⊗ q^(s) cannot be reflexive.
CheckReport verify_appendix_pair(const PrimeSpec& p, const PrimeSpec& q, int r, int s,
                                 const Polynomial& witness_p, const Polynomial& witness_q,
                                 const std::optional<ZeroDivisorPair>& non_domain,
                                 std::string id = "appendix_pair");

/// Syzygies of symbolic-power quotients: with N = Ω^r(R/p^(n)) over a
/// non-domain hypersurface and M ⊗ N reflexive, r >= 1, both factors are
/// reflexive and pd(M) < inf = pd(N); a non-free M must have rank >= 2.
CheckReport verify_syzygy_instance(const FGModule& M, const PrimeSpec& p, int n, int r,
                                   const Polynomial& witness,
                                   const std::optional<ZeroDivisorPair>& non_domain,
                                   const std::vector<PrimeSpec>& minimal_primes,
                                   std::string id = "syzygy_instance");

/// Serre-condition transfer for complexes, on declared primes: with
/// CI_R(X) < inf, X ⊗L Y bounded and (S_n), and the depth inequality (iv)
/// over declared pairs, Y satisfies (S_{n-m}).
CheckReport verify_sn_transfer_instance(const FreeComplex& X, const FGModule& Y, int m, int n,
                                        const std::vector<PrimeSpec>& primes,
                                        std::string id = "sn_transfer");

}  // namespace calab
