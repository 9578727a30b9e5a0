#include "calab/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace calab {

Vec vec_zero(const RingPtr& ring, int rank) {
    Vec v;
    v.reserve(rank);
    for (int i = 0; i < rank; ++i) v.push_back(Polynomial::zero(ring));
    return v;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

Vec vec_unit(const RingPtr& ring, int rank, int comp) {
    Vec v = vec_zero(ring, rank);
    v.at(comp) = Polynomial::constant(ring, 1);
    return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

Vec vec_scaled(const Vec& a, const Scalar& c) {
    Vec r = a;
    for (auto& p : r) p = p.scaled(c);
    return r;
}

Vec vec_times_monomial(const Vec& a, const Exponents& e, const Scalar& c) {
    Vec r = a;
    for (auto& p : r) p = p.times_monomial(e, c);
    return r;
}

Vec vec_times_poly(const Vec& a, const Polynomial& f) {
    Vec r = a;
    for (auto& p : r) p = p * f;
    return r;
}

bool vec_equal(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::string vec_str(const Vec& v) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << v[i].str();
    }
    out << ")";
    return out.str();
}

LeadTerm lead_term(const Vec& v) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) return {static_cast<int>(i), v[i].lead_exponents(), v[i].lead_coeff()};
    }
    throw std::logic_error("lead term of zero vector");
}

int compare_lead(const Vec& a, const Vec& b, const MonomialOrder& order) {
    LeadTerm la = lead_term(a), lb = lead_term(b);
    if (la.comp != lb.comp) return la.comp < lb.comp ? 1 : -1;
    return compare_monomials(la.exp, lb.exp, order);
}

namespace {

// One reduction step: cancel the lead term of v using g (whose lead divides
// v's lead). Returns v - (quot)*g.
Vec reduce_lead_once(const Vec& v, const Vec& g, const LeadTerm& lv, const LeadTerm& lg) {
    Exponents q = exp_sub(lv.exp, lg.exp);
    Scalar c = lv.coeff / lg.coeff;
    return vec_sub(v, vec_times_monomial(g, q, c));
}

// Full normal form of v against basis: no remaining term (in any component)
// is divisible by a basis lead term.
Vec normal_form(Vec v, const std::vector<Vec>& basis) {
    Vec remainder = vec_zero(v.empty() ? RingPtr() : v.front().ring(), static_cast<int>(v.size()));
    while (!vec_is_zero(v)) {
        LeadTerm lv = lead_term(v);
        bool reduced = false;
        for (const auto& g : basis) {
            LeadTerm lg = lead_term(g);
            if (lg.comp == lv.comp && divides(lg.exp, lv.exp)) {
                v = reduce_lead_once(v, g, lv, lg);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // move lead term of v to the remainder
            remainder[lv.comp] =
                remainder[lv.comp] + Polynomial::monomial(v[lv.comp].ring(), lv.exp, lv.coeff);
            v[lv.comp] = v[lv.comp] - Polynomial::monomial(v[lv.comp].ring(), lv.exp, lv.coeff);
        }
    }
    return remainder;
}

struct SPair {
    int i, j;
    int comp;
    Exponents lcm;
    int degree;
};

bool pair_less(const SPair& a, const SPair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

}  // namespace

ModuleGB module_groebner(const std::vector<Vec>& generators, int rank, const RingPtr& ring) {
    const MonomialOrder& order = ring->order();
    ModuleGB out;
    out.rank = rank;

    // Seed basis: nonzero monic generators, canonically sorted, deduplicated.
    std::vector<Vec> basis;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != rank) throw std::invalid_argument("generator rank mismatch");
        if (!vec_is_zero(g)) basis.push_back(vec_scaled(g, lead_term(g).coeff.inverse()));
    }
    std::sort(basis.begin(), basis.end(),
              [&](const Vec& a, const Vec& b) { return compare_lead(a, b, order) > 0; });
    basis.erase(std::unique(basis.begin(), basis.end(), vec_equal), basis.end());
    if (basis.empty()) return out;

    auto make_pair = [&](int i, int j) -> std::optional<SPair> {
        LeadTerm li = lead_term(basis[i]), lj = lead_term(basis[j]);
        if (li.comp != lj.comp) return std::nullopt;
        Exponents l = exp_lcm(li.exp, lj.exp);
        return SPair{i, j, li.comp, l, total_degree(l)};
    };

    std::vector<SPair> pending;
    auto push_pairs_for = [&](int j) {
        for (int i = 0; i < j; ++i)
            if (auto p = make_pair(i, j)) pending.push_back(std::move(*p));
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs_for(j);

    auto pending_has = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        for (const auto& p : pending)
            if (p.i == a && p.j == b) return true;
        return false;
    };

    // Single-component elements admit the coprimality (product) criterion.
    auto single_component = [&](const Vec& v) {
        int found = 0;
        for (const auto& p : v)
            if (!p.is_zero()) ++found;
        return found == 1;
    };

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        SPair p = *it;
        pending.erase(it);

        LeadTerm li = lead_term(basis[p.i]), lj = lead_term(basis[p.j]);

        // Product criterion (valid when both elements live in one component).
        if (exp_coprime(li.exp, lj.exp) && single_component(basis[p.i]) &&
            single_component(basis[p.j]))
            continue;

        // Chain criterion: lt(k) | lcm(i,j) with both flanking pairs done.
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            LeadTerm lk = lead_term(basis[k]);
            if (lk.comp != p.comp || !divides(lk.exp, p.lcm)) continue;
            if (!pending_has(p.i, k) && !pending_has(p.j, k)) skip = true;
        }
        if (skip) continue;

        Vec spoly = vec_sub(
            vec_times_monomial(basis[p.i], exp_sub(p.lcm, li.exp), li.coeff.inverse()),
            vec_times_monomial(basis[p.j], exp_sub(p.lcm, lj.exp), lj.coeff.inverse()));
        Vec nf = normal_form(std::move(spoly), basis);
        if (!vec_is_zero(nf)) {
            basis.push_back(vec_scaled(nf, lead_term(nf).coeff.inverse()));
            push_pairs_for(static_cast<int>(basis.size()) - 1);
        }
    }

    // Minimalize: drop elements whose lead term is divisible by another's.
    std::vector<Vec> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        LeadTerm li = lead_term(basis[i]);
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            LeadTerm lj = lead_term(basis[j]);
            if (lj.comp != li.comp || !divides(lj.exp, li.exp)) continue;
            if (li.exp != lj.exp || j < i) redundant = true;  // strict divisor, or tie broken by index
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Tail-reduce each element against the others.
    std::vector<Vec> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Vec> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Vec nf = normal_form(minimal[i], others);
        if (!vec_is_zero(nf)) reduced.push_back(vec_scaled(nf, lead_term(nf).coeff.inverse()));
    }

    std::sort(reduced.begin(), reduced.end(),
              [&](const Vec& a, const Vec& b) { return compare_lead(a, b, order) > 0; });
    out.basis = std::move(reduced);
    return out;
}

Vec module_normal_form(const Vec& v, const ModuleGB& gb) {
    if (vec_is_zero(v) || gb.basis.empty()) return v;
    return normal_form(v, gb.basis);
}

bool in_submodule(const Vec& v, const ModuleGB& gb) { return vec_is_zero(module_normal_form(v, gb)); }

GraphGB graph_groebner(const std::vector<Vec>& cols, int rank, const RingPtr& ring) {
    GraphGB g;
    g.rank = rank;
    g.ncols = static_cast<int>(cols.size());
    std::vector<Vec> gens;
    gens.reserve(cols.size());
    for (int j = 0; j < g.ncols; ++j) {
        Vec v = vec_zero(ring, rank + g.ncols);
        for (int i = 0; i < rank; ++i) v[i] = cols[j].at(i);
        v[rank + j] = Polynomial::constant(ring, 1);
        gens.push_back(std::move(v));
    }
    g.gb = module_groebner(gens, rank + g.ncols, ring);
    return g;
}

std::vector<Vec> syzygies_from_graph(const GraphGB& g) {
    std::vector<Vec> out;
    for (const auto& b : g.gb.basis) {
        bool upper_zero = true;
        for (int i = 0; i < g.rank && upper_zero; ++i)
            if (!b[i].is_zero()) upper_zero = false;
        if (upper_zero) out.emplace_back(b.begin() + g.rank, b.end());
    }
    return out;
}

std::optional<Vec> lift_from_graph(const GraphGB& g, const Vec& v) {
    if (static_cast<int>(v.size()) != g.rank) throw std::invalid_argument("lift target rank mismatch");
    const RingPtr& ring = v.empty() ? RingPtr() : v.front().ring();
    Vec augmented = vec_zero(ring, g.rank + g.ncols);
    for (int i = 0; i < g.rank; ++i) augmented[i] = v[i];
    Vec nf = module_normal_form(augmented, g.gb);
    for (int i = 0; i < g.rank; ++i)
        if (!nf[i].is_zero()) return std::nullopt;
    Vec coeffs(g.ncols, Polynomial::zero(ring));
    for (int j = 0; j < g.ncols; ++j) coeffs[j] = -nf[g.rank + j];
    return coeffs;
}

std::vector<Vec> syzygy_generators(const std::vector<Vec>& cols, int rank, const RingPtr& ring) {
    if (cols.empty()) return {};
    return syzygies_from_graph(graph_groebner(cols, rank, ring));
}

std::optional<Vec> lift_through(const std::vector<Vec>& cols, int rank, const Vec& v,
                                const RingPtr& ring) {
    return lift_from_graph(graph_groebner(cols, rank, ring), v);
}

}  // namespace calab
