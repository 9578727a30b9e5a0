#pragma once

#include "calab/fgmodule.hpp"

namespace calab {

/// Depth: a nonnegative integer, or +infinity (only for vanishing homology /
/// the zero module).
struct DepthValue {
    std::optional<int> value;  // nullopt = +infinity

    static DepthValue infinite() { return {std::nullopt}; }
    static DepthValue of(int v) { return {v}; }
    bool is_infinite() const { return !value.has_value(); }
    bool operator==(const DepthValue& o) const = default;
    bool operator<=(const DepthValue& o) const {
        if (is_infinite()) return o.is_infinite();
        if (o.is_infinite()) return true;
        return *value <= *o.value;
    }
    std::string str() const { return value ? std::to_string(*value) : "inf"; }
};

/// A declared prime of R: primality is an input assertion, not something the
/// engine decides. Stored as the ambient preimage (defining ideal included).
class PrimeSpec {
public:
    static PrimeSpec declare(QRingPtr ring, std::vector<Polynomial> gens, std::string name = "p");

    const QRingPtr& ring() const { return ring_; }
    const Ideal& preimage() const { return preimage_; }
    const std::vector<Polynomial>& declared_gens() const { return declared_; }
    const std::string& name() const { return name_; }

    bool contains(const Polynomial& f) const { return preimage_.contains(f); }
    bool contains_ideal(const Ideal& I) const;
    bool is_maximal() const;

    /// dim R - dim R/p (valid on the catenary equidimensional corpus).
    int height() const;

private:
    QRingPtr ring_;
    std::vector<Polynomial> declared_;
    Ideal preimage_;
    std::string name_;
    PrimeSpec(QRingPtr r, std::vector<Polynomial> d, Ideal p, std::string n)
        : ring_(std::move(r)), declared_(std::move(d)), preimage_(std::move(p)), name_(std::move(n)) {}
};

// --- depth -----------------------------------------------------------------

/// I-depth via the Koszul complex: #gens(I) - sup(K(gens) ⊗ X).
DepthValue depth_koszul(const Ideal& I, const FGModule& M);
DepthValue depth_koszul(const Ideal& I, const FreeComplex& X);

/// Grade via the first nonvanishing Ext^i(R/I, -); cross-validates the
/// Koszul form.
DepthValue depth_rees(const Ideal& I, const FGModule& M);

/// depth over the localization at a declared prime q (I must sit inside q):
/// the first Ext^i(R/I, M) whose annihilator is contained in q.
DepthValue local_depth(const Ideal& I, const FGModule& M, const PrimeSpec& at);
DepthValue local_depth(const Ideal& I, const FreeComplex& X, const PrimeSpec& at);

/// depth of M over R_p with respect to p R_p.
DepthValue local_depth_at(const FGModule& M, const PrimeSpec& p);

// --- Tor / Ext ---------------------------------------------------------------

FGModule tor_module(int i, const FGModule& M, const FGModule& N);
FGModule ext_module(int i, const FGModule& M, const FGModule& N);

/// Three-valued verdicts for deciders with a restricted base.
enum class Verdict3 { yes, no, unsupported };

struct TorVanishing {
    Verdict3 verdict = Verdict3::unsupported;
    std::optional<int> witness;  // first i >= 1 with Tor_i != 0
    bool resolution_terminated = false;
    bool periodicity_observed = false;
    int checked_through = 0;
};
/// Tor_i(M, N) = 0 for all i >= 1, decided over hypersurfaces through the
/// eventual 2-periodicity (or termination) of the minimal resolution.
TorVanishing tor_vanishes_from_one(const FGModule& M, const FGModule& N);

// --- Serre conditions and reflexivity ----------------------------------------

/// (S_n) over a Gorenstein base by the Ext codimension criterion:
/// dim Ext^i(M, R) <= dim R - i - n for every i >= 1.
Verdict3 serre_condition(const FGModule& M, int n);
Verdict3 is_torsion_free(const FGModule& M);  // (S_1)

/// Evaluation map M -> M** is an isomorphism (any base).
bool is_reflexive(const FGModule& M);

/// Serre's condition for a complex with the inf shift, evaluated over a
/// declared prime list only: depth_{R_p}(X_p) + inf(X_p) >= min(n, dim R_p).
struct PrimewiseVerdict {
    bool holds = true;
    std::string failing_prime;  // first failing prime, when any
    std::string detail;
};
PrimewiseVerdict serre_condition_at_primes(const FreeComplex& X, int n,
                                           const std::vector<PrimeSpec>& primes);

// --- rank, CI-dimension, symbolic powers -------------------------------------

/// Common free rank at the declared minimal primes; nullopt when they disagree.
std::optional<int> rank_of(const FGModule& M, const std::vector<PrimeSpec>& minimal_primes);

/// depth R - depth M over a complete-intersection base; nullopt for the zero
/// module (the -infinity marker).
std::optional<int> ci_dimension(const FGModule& M);

struct SymbolicPowerResult {
    Ideal power;     // ambient preimage of p^(n)
    bool certified;  // radical equality + saturation stability checks passed
    std::string note;
};
SymbolicPowerResult symbolic_power(const PrimeSpec& p, int n, const Polynomial& witness);

// --- regular sequences and the depth comparison tests -------------------------

bool is_regular_sequence(const std::vector<Polynomial>& seq, const FGModule& M);

struct DepthComparisonRow {
    std::string prime;
    DepthValue depth_module, depth_ring;
    bool pass = false;
};
struct TransferCheckResult {
    bool holds = true;
    std::vector<DepthComparisonRow> rows;
};
/// depth(p, M) <= depth(p, R) over the declared prime list (the executable
/// form of the regular-sequence transfer equivalence, necessary over the
/// listed primes only).
TransferCheckResult regular_seq_transfer_check(const FGModule& M,
                                               const std::vector<PrimeSpec>& primes);

struct DepthFormulaResult {
    bool applicable = false;       // requires total Tor vanishing
    bool holds = false;
    DepthValue depth_m, depth_n, depth_ring, depth_tensor;
};
/// depth M + depth N = depth R + depth(M ⊗ N), checked at the maximal ideal
/// when the pair is Tor-independent.
DepthFormulaResult depth_formula_check(const FGModule& M, const FGModule& N);

/// Full support: Supp(M) = Spec(R), i.e. ann(M) is contained in the
/// nilradical (every annihilator generator is nilpotent).
bool has_full_support(const FGModule& M);

/// Localized nonvanishing: H survives at p iff ann(H) is inside p.
bool survives_at(const FGModule& M, const PrimeSpec& p);

}  // namespace calab
