#include "calab/invariants.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace calab {

namespace {

int flat_index(int i, int t, int gN) { return i * gN + t; }

std::vector<Vec> power_relations(const FGModule& n, int copies) {
    std::vector<Vec> out;
    const RingPtr& S = n.ring()->ambient();
    for (int c = 0; c < copies; ++c)
        for (const auto& rel : n.relations()) {
            Vec v = vec_zero(S, copies * n.gens());
            for (int t = 0; t < n.gens(); ++t) v[flat_index(c, t, n.gens())] = rel[t];
            out.push_back(std::move(v));
        }
    return out;
}

std::vector<Polynomial> nonzero_generators(const QRingPtr& R, const Ideal& I) {
    std::vector<Polynomial> out;
    for (const auto& g : I.generators()) {
        Polynomial r = R->normal_form(g);
        if (!r.is_zero()) out.push_back(g);
    }
    return out;
}

}  // namespace

PrimeSpec PrimeSpec::declare(QRingPtr ring, std::vector<Polynomial> gens, std::string name) {
    std::vector<Polynomial> pre = gens;
    for (const auto& f : ring->defining_ideal().generators()) pre.push_back(f);
    Ideal preimage(ring->ambient(), std::move(pre));
    if (preimage.is_unit()) throw std::invalid_argument("declared prime is the unit ideal");
    return PrimeSpec(std::move(ring), std::move(gens), std::move(preimage), std::move(name));
}

bool PrimeSpec::contains_ideal(const Ideal& I) const {
    for (const auto& g : I.generators())
        if (!preimage_.contains(g)) return false;
    return true;
}

bool PrimeSpec::is_maximal() const {
    for (int i = 0; i < ring_->ambient()->nvars(); ++i)
        if (!preimage_.contains(Polynomial::variable(ring_->ambient(), i))) return false;
    return true;
}

int PrimeSpec::height() const {
    auto d = ideal_dimension(preimage_);
    if (!d) throw std::logic_error("declared prime has empty variety");
    return ring_->dimension() - *d;
}

// --- depth -------------------------------------------------------------------

DepthValue depth_koszul(const Ideal& I, const FGModule& M) {
    const QRingPtr& R = M.ring();
    std::vector<Polynomial> gens = nonzero_generators(R, I);
    int n = static_cast<int>(gens.size());
    if (M.is_zero()) return DepthValue::infinite();
    if (n == 0) return DepthValue::of(0);  // K(empty) ⊗ M has sup 0 for M != 0

    FreeComplex C = koszul_complex(gens, M);
    // sup(K ⊗L M) <= n for a module, so scanning the window [0, n] is exact
    for (int i = n; i >= 0; --i)
        if (!homology(C, i).is_zero()) return DepthValue::of(n - i);
    return DepthValue::infinite();
}

DepthValue depth_koszul(const Ideal& I, const FreeComplex& X) {
    const QRingPtr& R = X.ring();
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        if (!R->is_zero_element(g)) gens.push_back(g);
    int n = static_cast<int>(gens.size());
    if (X.empty()) return DepthValue::infinite();

    FreeComplex C = n == 0 ? X : tensor_complexes(koszul_complex(R, gens), X);
    InfSup s = inf_sup(C);
    if (!s.sup) return DepthValue::infinite();
    return DepthValue::of(n - *s.sup);
}

FGModule ext_module(int i, const FGModule& M, const FGModule& N) {
    if (i < 0) throw std::invalid_argument("negative Ext index");
    if (!M.ring()->same_as(*N.ring())) throw std::invalid_argument("Ext over different rings");
    const QRingPtr& R = M.ring();
    const RingPtr& S = R->ambient();
    int gN = N.gens();
    if (gN == 0) return FGModule::zero_module(R);

    FreeComplex res = M.resolution(i + 1);
    int r_i = res.rank(i), r_up = res.rank(i + 1), r_down = i > 0 ? res.rank(i - 1) : 0;
    if (r_i == 0) return FGModule::zero_module(R);

    std::vector<int> slot_degrees(r_i * gN, 0);
    for (int v = 0; v < r_i; ++v)
        for (int t = 0; t < gN; ++t)
            slot_degrees[flat_index(v, t, gN)] = N.degrees()[t] - res.degrees(i)[v];

    // T_k : Hom(F_{k-1}, N) -> Hom(F_k, N), one column per source slot (u, t)
    auto hom_map_columns = [&](int k, int src_rank, int tgt_rank) {
        std::vector<Vec> cols;
        auto d = res.differential(k);
        for (int u = 0; u < src_rank; ++u)
            for (int t = 0; t < gN; ++t) {
                Vec col = vec_zero(S, tgt_rank * gN);
                for (int v = 0; v < tgt_rank; ++v) col[flat_index(v, t, gN)] = d[v][u];
                cols.push_back(std::move(col));
            }
        return cols;
    };

    std::vector<Vec> cycles;
    if (r_up == 0) {
        for (int k = 0; k < r_i * gN; ++k) cycles.push_back(vec_unit(S, r_i * gN, k));
    } else {
        std::vector<Vec> T_up = hom_map_columns(i + 1, r_i, r_up);
        cycles = preimage_columns_over(R, T_up, power_relations(N, r_up), r_up * gN);
    }

    std::vector<Vec> boundaries = power_relations(N, r_i);
    if (i > 0) {
        std::vector<Vec> T_i = hom_map_columns(i, r_down, r_i);
        boundaries.insert(boundaries.end(), T_i.begin(), T_i.end());
    }
    return subquotient_module(R, r_i * gN, slot_degrees, cycles, boundaries);
}

FGModule tor_module(int i, const FGModule& M, const FGModule& N) {
    if (i < 0) throw std::invalid_argument("negative Tor index");
    if (!M.ring()->same_as(*N.ring())) throw std::invalid_argument("Tor over different rings");
    // truncated resolutions only disturb homology above the truncation level
    FreeComplex C = tensor_complexes(M.resolution(i + 1), N.resolution(i + 1));
    return homology(C, i);
}

DepthValue depth_rees(const Ideal& I, const FGModule& M) {
    const QRingPtr& R = M.ring();
    FGModule RI = FGModule::quotient_by_ideal(R, I);
    int bound = R->ambient()->nvars();
    for (int i = 0; i <= bound; ++i)
        if (!ext_module(i, RI, M).is_zero()) return DepthValue::of(i);
    return DepthValue::infinite();
}

bool survives_at(const FGModule& M, const PrimeSpec& p) {
    Ideal ann = annihilator(M);
    for (const auto& g : ann.generators())
        if (!p.contains(g)) return false;
    return true;
}

DepthValue local_depth(const Ideal& I, const FGModule& M, const PrimeSpec& at) {
    const QRingPtr& R = M.ring();
    for (const auto& g : I.generators())
        if (!at.contains(g)) throw std::invalid_argument("local depth needs I inside the prime");
    FGModule RI = FGModule::quotient_by_ideal(R, I);
    int bound = R->dimension() + 1;
    for (int i = 0; i <= bound; ++i) {
        FGModule E = ext_module(i, RI, M);
        if (E.is_zero()) continue;
        if (survives_at(E, at)) return DepthValue::of(i);
    }
    return DepthValue::infinite();
}

DepthValue local_depth(const Ideal& I, const FreeComplex& X, const PrimeSpec& at) {
    const QRingPtr& R = X.ring();
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        if (!R->is_zero_element(g)) gens.push_back(g);
    int n = static_cast<int>(gens.size());
    if (X.empty()) return DepthValue::infinite();
    FreeComplex C = n == 0 ? X : tensor_complexes(koszul_complex(R, gens), X);
    // Koszul homology localizes: sup over p keeps the classes whose
    // annihilator sits inside p
    for (int i = C.hi(); i >= C.lo(); --i) {
        FGModule H = homology(C, i);
        if (H.is_zero()) continue;
        if (survives_at(H, at)) return DepthValue::of(n - i);
    }
    return DepthValue::infinite();
}

DepthValue local_depth_at(const FGModule& M, const PrimeSpec& p) {
    return local_depth(Ideal(p.ring()->ambient(), p.declared_gens()), M, p);
}

// --- total Tor vanishing -------------------------------------------------------

TorVanishing tor_vanishes_from_one(const FGModule& M, const FGModule& N) {
    TorVanishing out;
    if (!M.ring()->is_hypersurface()) {
        out.verdict = Verdict3::unsupported;
        return out;
    }
    int dim = M.ring()->dimension();
    out.checked_through = dim + 2;
    for (int i = 1; i <= dim + 2; ++i) {
        if (!tor_module(i, M, N).is_zero()) {
            out.verdict = Verdict3::no;
            out.witness = i;
            return out;
        }
    }
    PdResult pd = projective_dimension(M);
    out.resolution_terminated = pd.value.has_value();
    out.periodicity_observed = pd.periodicity_observed;
    // a terminated or eventually 2-periodic resolution propagates the
    // vanishing window to all higher degrees
    out.verdict =
        (out.resolution_terminated || out.periodicity_observed) ? Verdict3::yes : Verdict3::no;
    return out;
}

// --- Serre conditions -----------------------------------------------------------

Verdict3 serre_condition(const FGModule& M, int n) {
    if (n < 0) throw std::invalid_argument("negative Serre index");
    if (!M.ring()->is_gorenstein()) return Verdict3::unsupported;
    const QRingPtr& R = M.ring();
    if (M.is_zero()) return Verdict3::yes;
    int dim = R->dimension();
    FGModule free1 = FGModule::free_module(R, 1);
    for (int i = 1; i <= dim; ++i) {
        FGModule E = ext_module(i, M, free1);
        auto d = module_dimension(E);
        if (d && *d > dim - i - n) return Verdict3::no;
    }
    return Verdict3::yes;
}

Verdict3 is_torsion_free(const FGModule& M) { return serre_condition(M, 1); }

bool is_reflexive(const FGModule& M) {
    ModuleMap ev = evaluation_map(M);
    return kernel(ev).is_zero() && cokernel(ev).is_zero();
}

PrimewiseVerdict serre_condition_at_primes(const FreeComplex& X, int n,
                                           const std::vector<PrimeSpec>& primes) {
    PrimewiseVerdict out;
    for (const auto& p : primes) {
        // localized inf
        std::optional<int> inf_p;
        for (int i = X.lo(); i <= X.hi() && !inf_p; ++i) {
            FGModule H = homology(X, i);
            if (!H.is_zero() && survives_at(H, p)) inf_p = i;
        }
        if (!inf_p) continue;  // X vanishes at p: nothing to check
        Ideal pI(p.ring()->ambient(), p.declared_gens());
        DepthValue d = local_depth(pI, X, p);
        int bound = std::min(n, p.height());
        bool ok = d.is_infinite() || (*d.value + *inf_p >= bound);
        if (!ok) {
            out.holds = false;
            out.failing_prime = p.name();
            std::ostringstream msg;
            msg << "depth " << d.str() << " + inf " << *inf_p << " < min(" << n << ", "
                << p.height() << ")";
            out.detail = msg.str();
            return out;
        }
    }
    return out;
}

// --- rank, CI-dimension, symbolic power ------------------------------------------

namespace {

Polynomial minor_det(const std::vector<Vec>& cols, const std::vector<int>& rows,
                     const std::vector<int>& col_idx, const RingPtr& S) {
    size_t t = rows.size();
    if (t == 0) return Polynomial::constant(S, 1);
    if (t == 1) return cols[col_idx[0]][rows[0]];
    Polynomial det = Polynomial::zero(S);
    for (size_t k = 0; k < t; ++k) {
        const Polynomial& pivot = cols[col_idx[0]][rows[k]];
        if (pivot.is_zero()) continue;
        std::vector<int> sub_rows;
        for (size_t l = 0; l < t; ++l)
            if (l != k) sub_rows.push_back(rows[l]);
        std::vector<int> sub_cols(col_idx.begin() + 1, col_idx.end());
        Polynomial sub = minor_det(cols, sub_rows, sub_cols, S);
        if (k % 2 == 1) sub = -sub;
        det = det + pivot * sub;
    }
    return det;
}

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            cur[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    if (k <= n) rec(0, 0);
}

}  // namespace

std::optional<int> rank_of(const FGModule& M, const std::vector<PrimeSpec>& minimal_primes) {
    if (minimal_primes.empty()) throw std::invalid_argument("rank needs the minimal prime list");
    FGModule m = minimalize(M);
    const RingPtr& S = m.ring()->ambient();
    int g = m.gens(), r = static_cast<int>(m.relations().size());

    std::optional<int> rank;
    for (const auto& p : minimal_primes) {
        int tmax = 0;
        int cap = std::min(g, r);
        for (int t = cap; t >= 1 && tmax == 0; --t) {
            std::vector<std::vector<int>> row_sets, col_sets;
            subsets_of_size(g, t, row_sets);
            subsets_of_size(r, t, col_sets);
            for (const auto& rows : row_sets) {
                for (const auto& cols : col_sets) {
                    Polynomial det = minor_det(m.relations(), rows, cols, S);
                    if (!p.preimage().contains(det)) {
                        tmax = t;
                        break;
                    }
                }
                if (tmax) break;
            }
        }
        int rank_at_p = g - tmax;
        if (rank && *rank != rank_at_p) return std::nullopt;
        rank = rank_at_p;
    }
    return rank;
}

std::optional<int> ci_dimension(const FGModule& M) {
    const QRingPtr& R = M.ring();
    if (!R->is_gorenstein() || !R->is_complete_intersection())
        throw std::domain_error("CI-dimension computed only over complete-intersection bases");
    if (M.is_zero()) return std::nullopt;  // the -infinity marker
    Ideal mx = R->maximal_ideal();
    DepthValue dR = depth_koszul(mx, FGModule::free_module(R, 1));
    DepthValue dM = depth_koszul(mx, M);
    if (dM.is_infinite() || dR.is_infinite()) return std::nullopt;
    return *dR.value - *dM.value;
}

SymbolicPowerResult symbolic_power(const PrimeSpec& p, int n, const Polynomial& witness) {
    if (n < 1) throw std::invalid_argument("symbolic power wants n >= 1");
    if (p.contains(witness)) throw std::invalid_argument("witness element lies in the prime");
    const QRingPtr& R = p.ring();

    Ideal pn = ideal_sum(ideal_power(Ideal(R->ambient(), p.declared_gens()), n), R->defining_ideal());
    Ideal sat = ideal_saturate(pn, witness);

    bool stable = ideal_equal(ideal_quotient(sat, witness), sat);
    bool down = true;  // sqrt(result) inside p
    for (const auto& g : sat.generators())
        if (!radical_membership(g, p.preimage())) down = false;
    bool up = true;  // p inside sqrt(result)
    for (const auto& g : p.declared_gens())
        if (!radical_membership(g, sat)) up = false;

    SymbolicPowerResult out{std::move(sat), stable && down && up, ""};
    out.note = out.certified ? "certified: radical equals p and quotient by witness is stable"
                             : "witness-dependent: certification checks failed";
    return out;
}

// --- regular sequences and depth comparisons --------------------------------------

bool is_regular_sequence(const std::vector<Polynomial>& seq, const FGModule& M) {
    const QRingPtr& R = M.ring();
    Ideal mx = R->maximal_ideal();
    for (const auto& x : seq)
        if (!mx.contains(x)) throw std::invalid_argument("sequence element outside the maximal ideal");
    FGModule cur = M;
    for (const auto& x : seq) {
        if (!kernel(ModuleMap::multiplication(cur, x)).is_zero()) return false;
        cur = quotient_by_element(cur, x);
    }
    return !cur.is_zero();
}

TransferCheckResult regular_seq_transfer_check(const FGModule& M,
                                               const std::vector<PrimeSpec>& primes) {
    if (primes.empty()) throw std::invalid_argument("transfer check needs a declared prime list");
    TransferCheckResult out;
    FGModule free1 = FGModule::free_module(M.ring(), 1);
    for (const auto& p : primes) {
        Ideal pI(p.ring()->ambient(), p.declared_gens());
        DepthComparisonRow row;
        row.prime = p.name();
        row.depth_module = depth_rees(pI, M);
        row.depth_ring = depth_rees(pI, free1);
        row.pass = row.depth_module <= row.depth_ring;
        if (!row.pass) out.holds = false;
        out.rows.push_back(std::move(row));
    }
    return out;
}

DepthFormulaResult depth_formula_check(const FGModule& M, const FGModule& N) {
    DepthFormulaResult out;
    TorVanishing tv = tor_vanishes_from_one(M, N);
    if (tv.verdict != Verdict3::yes) return out;
    out.applicable = true;
    Ideal mx = M.ring()->maximal_ideal();
    out.depth_m = depth_koszul(mx, M);
    out.depth_n = depth_koszul(mx, N);
    out.depth_ring = depth_koszul(mx, FGModule::free_module(M.ring(), 1));
    out.depth_tensor = depth_koszul(mx, tensor_modules(M, N));
    if (out.depth_m.is_infinite() || out.depth_n.is_infinite()) {
        out.holds = out.depth_tensor.is_infinite();
        return out;
    }
    out.holds = (*out.depth_m.value + *out.depth_n.value ==
                 *out.depth_ring.value + *out.depth_tensor.value);
    return out;
}

bool has_full_support(const FGModule& M) {
    Ideal ann = annihilator(M);
    const Ideal& defining = M.ring()->defining_ideal();
    for (const auto& g : ann.generators())
        if (!radical_membership(g, defining)) return false;
    return true;
}

}  // namespace calab
