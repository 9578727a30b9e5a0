#include <algorithm>
#include <set>
#include <sstream>

#include "calab/fgmodule.hpp"

namespace calab {

namespace {

int flat_index(int i, int t, int tgt_gens) { return i * tgt_gens + t; }

std::vector<Vec> power_relations(const FGModule& n, int copies) {
    // relations of N^copies, slot (c, t) -> c * n.gens() + t
    std::vector<Vec> out;
    const RingPtr& S = n.ring()->ambient();
    for (int c = 0; c < copies; ++c) {
        for (const auto& rel : n.relations()) {
            Vec v = vec_zero(S, copies * n.gens());
            for (int t = 0; t < n.gens(); ++t) v[flat_index(c, t, n.gens())] = rel[t];
            out.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace

FGModule tensor_modules(const FGModule& a, const FGModule& b) {
    if (!a.ring()->same_as(*b.ring())) throw std::invalid_argument("tensor over different rings");
    const RingPtr& S = a.ring()->ambient();
    int gA = a.gens(), gB = b.gens();
    std::vector<int> degrees(gA * gB, 0);
    for (int i = 0; i < gA; ++i)
        for (int t = 0; t < gB; ++t)
            degrees[flat_index(i, t, gB)] = a.degrees()[i] + b.degrees()[t];

    std::vector<Vec> rels;
    for (const auto& r : a.relations()) {
        for (int t = 0; t < gB; ++t) {
            Vec v = vec_zero(S, gA * gB);
            for (int i = 0; i < gA; ++i) v[flat_index(i, t, gB)] = r[i];
            rels.push_back(std::move(v));
        }
    }
    for (const auto& s : b.relations()) {
        for (int i = 0; i < gA; ++i) {
            Vec v = vec_zero(S, gA * gB);
            for (int t = 0; t < gB; ++t) v[flat_index(i, t, gB)] = s[t];
            rels.push_back(std::move(v));
        }
    }
    return FGModule::from_presentation(a.ring(), gA * gB, std::move(rels), std::move(degrees));
}

FGModule direct_sum(const FGModule& a, const FGModule& b) {
    if (!a.ring()->same_as(*b.ring())) throw std::invalid_argument("direct sum over different rings");
    const RingPtr& S = a.ring()->ambient();
    int gA = a.gens(), gB = b.gens();
    std::vector<int> degrees = a.degrees();
    degrees.insert(degrees.end(), b.degrees().begin(), b.degrees().end());
    std::vector<Vec> rels;
    for (const auto& r : a.relations()) {
        Vec v = r;
        Vec tail = vec_zero(S, gB);
        v.insert(v.end(), tail.begin(), tail.end());
        rels.push_back(std::move(v));
    }
    for (const auto& s : b.relations()) {
        Vec v = vec_zero(S, gA);
        v.insert(v.end(), s.begin(), s.end());
        rels.push_back(std::move(v));
    }
    return FGModule::from_presentation(a.ring(), gA + gB, std::move(rels), std::move(degrees));
}

FGModule auslander_transpose(const FGModule& m) {
    FGModule mm = minimalize(m);
    const auto& P = mm.relations();
    int g = mm.gens(), r = static_cast<int>(P.size());
    if (r == 0) return FGModule::zero_module(m.ring());  // transpose of a free module
    std::vector<int> coldegs;
    for (const auto& col : P) {
        auto d = vec_degree(col, mm.degrees());
        coldegs.push_back(d ? *d : 0);
    }
    std::vector<int> tr_degrees;
    for (int j = 0; j < r; ++j) tr_degrees.push_back(-coldegs[j]);
    std::vector<Vec> tr_rels;
    const RingPtr& S = m.ring()->ambient();
    for (int i = 0; i < g; ++i) {
        Vec col = vec_zero(S, r);
        for (int j = 0; j < r; ++j) col[j] = P[j][i];
        tr_rels.push_back(std::move(col));
    }
    return FGModule::from_presentation(m.ring(), r, std::move(tr_rels), std::move(tr_degrees));
}

FGModule quotient_by_element(const FGModule& m, const Polynomial& f) {
    std::vector<Vec> rels = m.relations();
    const RingPtr& S = m.ring()->ambient();
    Polynomial fr = m.ring()->normal_form(f);
    for (int i = 0; i < m.gens(); ++i) {
        Vec v = vec_zero(S, m.gens());
        v[i] = fr;
        rels.push_back(std::move(v));
    }
    return FGModule::from_presentation(m.ring(), m.gens(), std::move(rels), m.degrees());
}

FGModule syzygy_module(const FGModule& m, int r) {
    if (r < 0) throw std::invalid_argument("negative syzygy index");
    FreeComplex res = m.resolution(r + 1);
    if (res.rank(r) == 0) return FGModule::zero_module(m.ring());
    return FGModule::from_presentation(m.ring(), res.rank(r), res.differential(r + 1),
                                       res.degrees(r));
}

// ---------------------------------------------------------------------------
// Hom and duals

HomModule hom_module(const FGModule& m, const FGModule& n) {
    if (!m.ring()->same_as(*n.ring())) throw std::invalid_argument("hom over different rings");
    const QRingPtr& R = m.ring();
    const RingPtr& S = R->ambient();
    int gM = m.gens(), gN = n.gens();
    int rM = static_cast<int>(m.relations().size());

    if (gM == 0 || gN == 0) return HomModule{FGModule::zero_module(R), m, n, {}};

    std::vector<int> slot_degrees(gM * gN, 0);
    for (int i = 0; i < gM; ++i)
        for (int t = 0; t < gN; ++t)
            slot_degrees[flat_index(i, t, gN)] = n.degrees()[t] - m.degrees()[i];

    // kernel of Hom(F0, N) -> Hom(F1, N), phi -> phi∘A
    std::vector<Vec> witnesses;
    if (rM == 0) {
        for (int k = 0; k < gM * gN; ++k) witnesses.push_back(vec_unit(S, gM * gN, k));
    } else {
        std::vector<Vec> V;  // one column per source slot (i,t), landing in N^{rM}
        for (int i = 0; i < gM; ++i) {
            for (int t = 0; t < gN; ++t) {
                Vec col = vec_zero(S, rM * gN);
                for (int alpha = 0; alpha < rM; ++alpha)
                    col[flat_index(alpha, t, gN)] = m.relations()[alpha][i];
                V.push_back(std::move(col));
            }
        }
        witnesses = preimage_columns_over(R, V, power_relations(n, rM), rM * gN);
    }

    FGModule mod = subquotient_module(R, gM * gN, slot_degrees, witnesses, power_relations(n, gM));
    return HomModule{std::move(mod), m, n, std::move(witnesses)};
}

ModuleMap HomModule::generator_map(int k) const {
    const Vec& w = witnesses.at(k);
    int gM = source.gens(), gN = target.gens();
    std::vector<Vec> cols;
    for (int i = 0; i < gM; ++i) {
        Vec c(w.begin() + i * gN, w.begin() + (i + 1) * gN);
        cols.push_back(std::move(c));
    }
    return ModuleMap(source, target, std::move(cols));
}

ModuleMap HomModule::combination_map(const std::vector<long>& coeffs) const {
    int gM = source.gens(), gN = target.gens();
    const RingPtr& S = source.ring()->ambient();
    Vec w = vec_zero(S, gM * gN);
    for (size_t k = 0; k < coeffs.size() && k < witnesses.size(); ++k) {
        if (coeffs[k] == 0) continue;
        w = vec_add(w, vec_scaled(witnesses[k], Scalar::of_int(coeffs[k], S->field())));
    }
    std::vector<Vec> cols;
    for (int i = 0; i < gM; ++i) cols.emplace_back(w.begin() + i * gN, w.begin() + (i + 1) * gN);
    return ModuleMap(source, target, std::move(cols));
}

FGModule dual_module(const FGModule& m) {
    return hom_module(m, FGModule::free_module(m.ring(), 1)).module;
}

ModuleMap dual_map(const ModuleMap& phi, const HomModule& a_star, const HomModule& b_star) {
    const QRingPtr& R = phi.source().ring();
    int gA = phi.source().gens(), gB = phi.target().gens();
    std::vector<Vec> cols;
    for (const auto& w : b_star.witnesses) {
        // w∘phi as a functional on the source generators
        Vec u = vec_zero(R->ambient(), gA);
        for (int i = 0; i < gA; ++i) {
            Polynomial acc = Polynomial::zero(R->ambient());
            for (int t = 0; t < gB; ++t) acc = acc + phi.columns()[i][t] * w[t];
            u[i] = R->normal_form(acc);
        }
        if (a_star.module.gens() == 0) {
            cols.push_back(vec_zero(R->ambient(), 0));
            continue;
        }
        auto lifted = lift_columns_over(R, a_star.witnesses, {}, gA, u);
        if (!lifted) throw std::logic_error("dual of a map missed Hom(A, R)");
        cols.push_back(std::move(*lifted));
    }
    return ModuleMap(b_star.module, a_star.module, std::move(cols));
}

ModuleMap evaluation_map(const FGModule& m) {
    const QRingPtr& R = m.ring();
    const RingPtr& S = R->ambient();
    FGModule free1 = FGModule::free_module(R, 1);
    HomModule star = hom_module(m, free1);        // M*, witnesses are rows in R^{gM}
    HomModule dstar = hom_module(star.module, free1);  // M**

    int gM = m.gens();
    int s1 = star.module.gens();
    std::vector<Vec> cols;
    for (int i = 0; i < gM; ++i) {
        // evaluation at the i-th generator, as an element of Hom(F0 of M*, R)
        Vec v = vec_zero(S, s1);
        for (int k = 0; k < s1; ++k) v[k] = star.witnesses[k][i];
        if (dstar.module.gens() == 0) {
            cols.push_back(vec_zero(S, 0));
            continue;
        }
        // express v in the generators of M**
        auto lifted = lift_columns_over(R, dstar.witnesses, {}, s1, v);
        if (!lifted) throw std::logic_error("evaluation image missed Hom(M*, R)");
        cols.push_back(std::move(*lifted));
    }
    return ModuleMap(m, dstar.module, std::move(cols));
}

// ---------------------------------------------------------------------------
// Numerical invariants of modules

PdResult projective_dimension(const FGModule& m) {
    PdResult out;
    int dim = m.ring()->dimension();
    int probe = dim + 3;
    out.bound = probe;
    FreeComplex res = m.resolution(probe);

    if (res.empty()) {  // zero module
        out.value = 0;
        out.periodicity_observed = true;
        return out;
    }
    if (res.hi() < probe) {
        out.value = res.hi();
        out.periodicity_observed = true;  // trivially: the tail is zero
        return out;
    }

    out.value = std::nullopt;
    // 2-periodicity observation from level dim on: equal ranks and, over a
    // graded hypersurface, generator degrees shifted by deg(f).
    bool periodic = true;
    int twist = 0;
    const auto& gb = m.ring()->defining_ideal().groebner_basis();
    if (m.ring()->is_hypersurface() && gb.size() == 1) {
        auto d = gb[0].homogeneous_degree();
        twist = d ? *d : 0;
    }
    for (int k = dim; k + 2 <= probe && periodic; ++k) {
        if (res.rank(k) != res.rank(k + 2)) {
            periodic = false;
            break;
        }
        if (twist > 0) {
            std::vector<int> lowdeg = res.degrees(k), highdeg = res.degrees(k + 2);
            for (auto& d : lowdeg) d += twist;
            std::sort(lowdeg.begin(), lowdeg.end());
            std::sort(highdeg.begin(), highdeg.end());
            if (lowdeg != highdeg) periodic = false;
        }
    }
    out.periodicity_observed = periodic;
    return out;
}

Ideal annihilator(const FGModule& m) {
    const QRingPtr& R = m.ring();
    if (m.gens() == 0) return Ideal::unit(R->ambient());
    std::optional<Ideal> ann;
    for (int i = 0; i < m.gens(); ++i) {
        std::vector<Vec> unit = {vec_unit(R->ambient(), m.gens(), i)};
        std::vector<Vec> pre = preimage_columns_over(R, unit, m.relations(), m.gens());
        // entries come back reduced mod the defining ideal; restore it so the
        // result is the full preimage ideal in the ambient ring
        std::vector<Polynomial> gens = R->defining_ideal().generators();
        for (const auto& v : pre) gens.push_back(v[0]);
        Ideal Ii(R->ambient(), std::move(gens));
        ann = ann ? ideal_intersect(*ann, Ii) : Ii;
    }
    return *ann;
}

std::optional<int> module_dimension(const FGModule& m) { return ideal_dimension(annihilator(m)); }

namespace {
long count_standard_monomials(const std::vector<Exponents>& leads, int nvars) {
    // bounds from pure powers; the caller guarantees finiteness
    std::vector<int> bound(nvars, -1);
    for (const auto& e : leads) {
        int support = -1;
        bool pure = true;
        for (int v = 0; v < nvars; ++v) {
            if (e[v] > 0) {
                if (support >= 0) pure = false;
                support = v;
            }
        }
        if (pure && support >= 0) {
            if (bound[support] < 0 || e[support] < bound[support]) bound[support] = e[support];
        }
        if (pure && support < 0) return 0;  // lead term 1: everything collapses
    }
    for (int v = 0; v < nvars; ++v)
        if (bound[v] < 0) return -1;  // no pure power: infinitely many monomials

    long count = 0;
    Exponents e(nvars, 0);
    while (true) {
        bool divisible = false;
        for (const auto& l : leads)
            if (divides(l, e)) {
                divisible = true;
                break;
            }
        if (!divisible) ++count;
        int v = 0;
        while (v < nvars) {
            if (++e[v] < bound[v]) break;
            e[v] = 0;
            ++v;
        }
        if (v == nvars) break;
    }
    return count;
}
}  // namespace

std::optional<long> length_over_field(const FGModule& m) {
    auto dim = module_dimension(m);
    if (!dim) return 0;  // zero module
    if (*dim > 0) return std::nullopt;
    const auto& gb = m.relation_gb();
    int nvars = m.ring()->ambient()->nvars();
    long total = 0;
    for (int comp = 0; comp < m.gens(); ++comp) {
        std::vector<Exponents> leads;
        for (const auto& b : gb.basis) {
            LeadTerm lt = lead_term(b);
            if (lt.comp == comp) leads.push_back(lt.exp);
        }
        long c = count_standard_monomials(leads, nvars);
        if (c < 0) return std::nullopt;
        total += c;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Isomorphism testing (three-valued)

IsoResult try_isomorphic(const FGModule& a, const FGModule& b) {
    if (!a.ring()->same_as(*b.ring())) return {IsoVerdict::no, "different rings"};
    FGModule am = minimalize(a), bm = minimalize(b);
    if (am.gens() == 0 && bm.gens() == 0) return {IsoVerdict::yes, "both zero"};
    if ((am.gens() == 0) != (bm.gens() == 0)) return {IsoVerdict::no, "exactly one is zero"};
    if (am.gens() != bm.gens()) return {IsoVerdict::no, "minimal generator counts differ"};

    if (!ideal_equal(annihilator(am), annihilator(bm)))
        return {IsoVerdict::no, "annihilators differ"};

    auto la = length_over_field(am), lb = length_over_field(bm);
    if (la.has_value() != lb.has_value() || (la && lb && *la != *lb))
        return {IsoVerdict::no, "lengths differ"};

    // Betti ranks are twist-free isomorphism invariants; graded degrees can
    // shift under an ungraded isomorphism, so they do not separate here.
    int betti_window = a.ring()->dimension() + 2;
    {
        auto ba = am.graded_betti(betti_window);
        auto bb = bm.graded_betti(betti_window);
        for (size_t k = 0; k < ba.size(); ++k)
            if (ba[k].size() != bb[k].size())
                return {IsoVerdict::no, "Betti numbers differ"};
    }

    HomModule H = hom_module(am, bm);
    int s = static_cast<int>(H.witnesses.size());
    std::vector<std::vector<long>> trials;
    for (int k = 0; k < s; ++k) {
        std::vector<long> c(s, 0);
        c[k] = 1;
        trials.push_back(c);
    }
    for (int k = 0; k < s; ++k)
        for (int l = k + 1; l < s; ++l) {
            std::vector<long> c(s, 0);
            c[k] = 1;
            c[l] = 1;
            trials.push_back(c);
            c[l] = -1;
            trials.push_back(c);
        }
    size_t cap = 60;
    for (size_t t = 0; t < trials.size() && t < cap; ++t) {
        ModuleMap phi = H.combination_map(trials[t]);
        if (kernel(phi).is_zero() && cokernel(phi).is_zero()) {
            FGModule amap = am;  // witness found
            std::ostringstream msg;
            msg << "witness map from Hom generator combination #" << t;
            // rebuild the map between the original presentations is not
            // needed; the verdict is what callers consume
            (void)amap;
            return {IsoVerdict::yes, msg.str()};
        }
    }
    return {IsoVerdict::unknown, "no separating invariant and no witness found"};
}

// ---------------------------------------------------------------------------
// Homology of free complexes

FreeComplex koszul_complex(const std::vector<Polynomial>& elements, const FGModule& M) {
    int n = static_cast<int>(elements.size());
    return tensor_complexes(koszul_complex(M.ring(), elements), M.resolution(n + 1));
}

FGModule homology(const FreeComplex& X, int i) {
    const QRingPtr& R = X.ring();
    if (X.rank(i) == 0) return FGModule::zero_module(R);
    std::vector<Vec> cycles;
    std::vector<Vec> d_i = X.differential(i);
    if (d_i.empty()) {
        for (int k = 0; k < X.rank(i); ++k) cycles.push_back(vec_unit(R->ambient(), X.rank(i), k));
    } else {
        cycles = kernel_columns_over(R, d_i, X.rank(i - 1));
    }
    std::vector<Vec> boundaries = X.differential(i + 1);
    return subquotient_module(R, X.rank(i), X.degrees(i), cycles, boundaries);
}

InfSup inf_sup(const FreeComplex& X) {
    InfSup out;
    for (int i = X.lo(); i <= X.hi(); ++i) {
        if (homology(X, i).is_zero()) continue;
        if (!out.inf) out.inf = i;
        out.sup = i;
    }
    return out;
}

}  // namespace calab
