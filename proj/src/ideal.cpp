#include "calab/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace calab {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (!g.ring()->same_as(*ring_)) throw std::invalid_argument("ideal generator from a different ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
    if (gens_.empty()) gens_.push_back(Polynomial::zero(ring_));
}

Ideal Ideal::zero(const RingPtr& ring) { return Ideal(ring, {}); }

Ideal Ideal::unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal Ideal::of(const RingPtr& ring, const std::vector<std::string>& gen_texts) {
    return Ideal(ring, parse_polynomials(ring, gen_texts));
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
    if (!gb_) {
        std::vector<Vec> gens;
        for (const auto& g : gens_)
            if (!g.is_zero()) gens.push_back(Vec{g});
        ModuleGB gb = module_groebner(gens, 1, ring_);
        auto out = std::make_shared<std::vector<Polynomial>>();
        for (auto& v : gb.basis) out->push_back(std::move(v[0]));
        gb_ = std::move(out);
    }
    return *gb_;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
    if (!f.ring()->same_as(*ring_)) throw std::invalid_argument("normal form argument from a different ring");
    const auto& basis = groebner_basis();
    if (basis.empty() || f.is_zero()) return f;
    std::vector<Vec> b;
    for (const auto& g : basis) b.push_back(Vec{g});
    ModuleGB gb{1, b};
    return module_normal_form(Vec{f}, gb)[0];
}

bool Ideal::is_unit() const {
    const auto& basis = groebner_basis();
    return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

bool Ideal::is_homogeneous() const {
    for (const auto& g : groebner_basis())
        if (!g.homogeneous_degree()) return false;
    return true;
}

std::string Ideal::str() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) out << ", ";
        out << gens_[i].str();
    }
    out << ")";
    return out.str();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, int n) {
    if (n < 0) throw std::invalid_argument("negative ideal power");
    Ideal r = Ideal::unit(a.ring());
    for (int i = 0; i < n; ++i) r = ideal_product(r, a);
    return r;
}

namespace {

// Fresh name not clashing with the ring's variables.
std::string fresh_name(const RingPtr& ring, const std::string& stem) {
    std::string name = stem;
    int k = 0;
    while (ring->variable_index(name) >= 0) name = stem + std::to_string(k++);
    return name;
}

}  // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    const RingPtr& ring = a.ring();
    if (!ring->same_as(*b.ring())) throw std::invalid_argument("ideal ring mismatch");
    // (t*a + (1-t)*b) ∩ k[x..] via elimination of t.
    RingPtr ext = ring->extended({fresh_name(ring, "t")});
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(t * f.mapped_to(ext));
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.mapped_to(ext));
    Ideal extended(ext, std::move(gens));
    std::vector<Polynomial> kept;
    for (const auto& g : extended.groebner_basis()) {
        bool uses_t = false;
        for (const auto& [e, c] : g.terms())
            if (e[0] > 0) uses_t = true;
        if (!uses_t) kept.push_back(g.mapped_to(ring));
    }
    return Ideal(ring, std::move(kept));
}

std::optional<Polynomial> exact_division(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero()) return std::nullopt;
    Polynomial rem = g;
    Polynomial quot = Polynomial::zero(g.ring());
    while (!rem.is_zero()) {
        if (!divides(f.lead_exponents(), rem.lead_exponents())) return std::nullopt;
        Exponents q = exp_sub(rem.lead_exponents(), f.lead_exponents());
        Scalar c = rem.lead_coeff() / f.lead_coeff();
        quot = quot + Polynomial::monomial(g.ring(), q, c);
        rem = rem - f.times_monomial(q, c);
    }
    return quot;
}

Ideal ideal_quotient(const Ideal& a, const Polynomial& f) {
    if (f.is_zero()) return Ideal::unit(a.ring());
    Ideal inter = ideal_intersect(a, Ideal(a.ring(), {f}));
    std::vector<Polynomial> gens;
    for (const auto& g : inter.groebner_basis()) {
        auto q = exact_division(g, f);
        if (!q) throw std::logic_error("intersection with (f) not divisible by f");
        gens.push_back(std::move(*q));
    }
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
    Ideal r = Ideal::unit(a.ring());
    bool first = true;
    for (const auto& f : b.generators()) {
        if (f.is_zero()) continue;
        Ideal q = ideal_quotient(a, f);
        r = first ? q : ideal_intersect(r, q);
        first = false;
    }
    return first ? Ideal::unit(a.ring()) : r;  // b = (0): a : (0) = (1)
}

Ideal ideal_saturate(const Ideal& a, const Polynomial& f) {
    Ideal current = a;
    while (true) {
        Ideal next = ideal_quotient(current, f);
        if (ideal_equal(next, current)) return current;
        current = next;
    }
}

Ideal ideal_eliminate(const Ideal& a, const std::vector<int>& eliminated_vars) {
    const RingPtr& ring = a.ring();
    std::vector<bool> elim(ring->nvars(), false);
    for (int v : eliminated_vars) {
        if (v < 0 || v >= ring->nvars()) throw std::invalid_argument("variable index out of range");
        elim[v] = true;
    }
    // Permuted ring with the eliminated block in front.
    std::vector<std::string> names;
    for (int i = 0; i < ring->nvars(); ++i)
        if (elim[i]) names.push_back(ring->variable(i));
    int block = static_cast<int>(names.size());
    for (int i = 0; i < ring->nvars(); ++i)
        if (!elim[i]) names.push_back(ring->variable(i));
    RingPtr permuted = PolyRing::make(names, ring->field(), MonomialOrder::elimination(block));

    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(f.mapped_to(permuted));
    Ideal moved(permuted, std::move(gens));
    std::vector<Polynomial> kept;
    for (const auto& g : moved.groebner_basis()) {
        bool uses_elim = false;
        for (const auto& [e, c] : g.terms())
            for (int i = 0; i < block; ++i)
                if (e[i] > 0) uses_elim = true;
        if (!uses_elim) kept.push_back(g.mapped_to(ring));
    }
    return Ideal(ring, std::move(kept));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    const auto& ga = a.groebner_basis();
    const auto& gb = b.groebner_basis();
    if (ga.size() != gb.size()) return false;
    for (size_t i = 0; i < ga.size(); ++i)
        if (ga[i] != gb[i]) return false;
    return true;
}

std::optional<int> ideal_dimension(const Ideal& I) {
    const RingPtr& ring = I.ring();
    int n = ring->nvars();
    std::vector<Exponents> leads;
    for (const auto& g : I.groebner_basis()) {
        if (g.is_constant()) return std::nullopt;  // unit ideal
        leads.push_back(g.lead_exponents());
    }
    // dim = max size of a variable set meeting no leading monomial's support.
    int best = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& e : leads) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i)
                if (e[i] > 0 && !(mask & (1u << i))) inside = false;
            if (inside) {  // lead monomial lives on this variable subset
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
    if (f.is_zero()) return true;
    const RingPtr& ring = I.ring();
    RingPtr ext = ring->extended({fresh_name(ring, "t")});
    Polynomial t = Polynomial::variable(ext, 0);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.mapped_to(ext));
    gens.push_back(Polynomial::constant(ext, 1) - t * f.mapped_to(ext));
    return Ideal(ext, std::move(gens)).is_unit();
}

}  // namespace calab
