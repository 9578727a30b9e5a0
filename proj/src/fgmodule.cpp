#include "calab/fgmodule.hpp"

#include <algorithm>
#include <sstream>

namespace calab {

std::optional<int> vec_degree(const Vec& v, const std::vector<int>& slot_degrees) {
    std::optional<int> deg;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        auto d = v[i].homogeneous_degree();
        if (!d) return std::nullopt;
        int total = *d + (i < slot_degrees.size() ? slot_degrees[i] : 0);
        if (deg && *deg != total) return std::nullopt;
        deg = total;
    }
    return deg ? deg : std::optional<int>(0);
}

namespace {

struct MutableLevel {
    int rank = 0;
    std::vector<int> degrees;
    std::vector<Vec> diff;  // columns into the level below; empty at level 0
};

bool is_unit_entry(const Polynomial& p) { return !p.is_zero() && p.is_constant(); }

std::vector<int> column_degrees(const std::vector<Vec>& cols, const std::vector<int>& slot_degrees) {
    std::vector<int> out;
    out.reserve(cols.size());
    for (const auto& c : cols) {
        auto d = vec_degree(c, slot_degrees);
        out.push_back(d ? *d : 0);
    }
    return out;
}

void reduce_entries(const QRingPtr& R, std::vector<Vec>& cols) {
    for (auto& c : cols)
        for (auto& p : c) p = R->normal_form(p);
}

// Cancel one unit entry of levels[k].diff at (row i in level k-1, column j).
void cancel_unit(const QRingPtr& R, std::vector<MutableLevel>& levels, size_t k, int i, int j) {
    auto& up = levels[k].diff;
    Scalar u = up[j][i].lead_coeff();

    for (size_t c = 0; c < up.size(); ++c) {
        if (static_cast<int>(c) == j || up[c][i].is_zero()) continue;
        Polynomial factor = up[c][i].scaled(u.inverse());
        up[c] = vec_sub(up[c], vec_times_poly(up[j], factor));
        for (auto& p : up[c]) p = R->normal_form(p);
    }
    // delete row i and column j
    for (auto& col : up) col.erase(col.begin() + i);
    up.erase(up.begin() + j);
    levels[k].rank -= 1;
    levels[k].degrees.erase(levels[k].degrees.begin() + j);
    levels[k - 1].rank -= 1;
    levels[k - 1].degrees.erase(levels[k - 1].degrees.begin() + i);

    if (k >= 2) {
        auto& low = levels[k - 1].diff;
        low.erase(low.begin() + i);
    }
    if (k + 1 < levels.size()) {
        for (auto& col : levels[k + 1].diff) col.erase(col.begin() + j);
    }
}

// Elementary cancellations until every differential entry lies in the
// maximal ideal (no nonzero constants). Preserves the homotopy type.
void prune_levels(const QRingPtr& R, std::vector<MutableLevel>& levels) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 1; k < levels.size() && !changed; ++k) {
            auto& up = levels[k].diff;
            for (int j = 0; j < static_cast<int>(up.size()) && !changed; ++j) {
                for (int i = 0; i < static_cast<int>(up[j].size()) && !changed; ++i) {
                    if (is_unit_entry(up[j][i])) {
                        cancel_unit(R, levels, k, i, j);
                        changed = true;
                    }
                }
            }
        }
    }
}

std::vector<Vec> defining_relation_columns(const QRingPtr& R, int rank) {
    std::vector<Vec> out;
    for (const auto& f : R->defining_ideal().groebner_basis())
        for (int i = 0; i < rank; ++i) {
            Vec v = vec_zero(R->ambient(), rank);
            v[i] = f;
            out.push_back(std::move(v));
        }
    return out;
}

}  // namespace

std::vector<Vec> preimage_columns_over(const QRingPtr& R, const std::vector<Vec>& cols,
                                       const std::vector<Vec>& modulo, int rank) {
    if (cols.empty()) return {};
    std::vector<Vec> aug = cols;
    aug.insert(aug.end(), modulo.begin(), modulo.end());
    auto extra = defining_relation_columns(R, rank);
    aug.insert(aug.end(), extra.begin(), extra.end());
    GraphGB graph = graph_groebner(aug, rank, R->ambient());
    std::vector<Vec> out;
    for (const auto& s : syzygies_from_graph(graph)) {
        Vec v(s.begin(), s.begin() + static_cast<long>(cols.size()));
        for (auto& p : v) p = R->normal_form(p);
        if (!vec_is_zero(v)) out.push_back(std::move(v));
    }
    // drop exact duplicates introduced by reduction
    std::vector<Vec> unique;
    for (auto& v : out) {
        bool seen = false;
        for (const auto& u : unique)
            if (vec_equal(u, v)) seen = true;
        if (!seen) unique.push_back(std::move(v));
    }
    return unique;
}

std::optional<Vec> lift_columns_over(const QRingPtr& R, const std::vector<Vec>& cols,
                                     const std::vector<Vec>& modulo, int rank, const Vec& v) {
    std::vector<Vec> aug = cols;
    aug.insert(aug.end(), modulo.begin(), modulo.end());
    auto extra = defining_relation_columns(R, rank);
    aug.insert(aug.end(), extra.begin(), extra.end());
    if (aug.empty()) {
        if (vec_is_zero(v)) return Vec{};
        return std::nullopt;
    }
    GraphGB graph = graph_groebner(aug, rank, R->ambient());
    auto full = lift_from_graph(graph, v);
    if (!full) return std::nullopt;
    Vec coeffs(full->begin(), full->begin() + static_cast<long>(cols.size()));
    for (auto& p : coeffs) p = R->normal_form(p);
    return coeffs;
}

std::vector<Vec> kernel_columns_over(const QRingPtr& ring, const std::vector<Vec>& cols, int rank) {
    if (rank == 0) {
        // everything maps to zero
        std::vector<Vec> out;
        for (size_t j = 0; j < cols.size(); ++j)
            out.push_back(vec_unit(ring->ambient(), static_cast<int>(cols.size()), static_cast<int>(j)));
        return out;
    }
    return preimage_columns_over(ring, cols, {}, rank);
}

struct FGModule::State {
    QRingPtr ring;
    int gens = 0;
    std::vector<Vec> rels;
    std::vector<int> degrees;
    bool graded = false;

    mutable std::shared_ptr<ModuleGB> rel_gb;

    struct Res {
        std::vector<MutableLevel> levels;
        bool terminated = false;
    };
    mutable std::shared_ptr<Res> res;

    void ensure_resolution(int want_levels) const;
};

FGModule FGModule::from_presentation(QRingPtr ring, int gens, std::vector<Vec> relations,
                                     std::vector<int> degrees) {
    if (gens < 0) throw std::invalid_argument("negative generator count");
    auto st = std::make_shared<State>();
    st->ring = std::move(ring);
    st->gens = gens;
    if (degrees.empty()) degrees.assign(gens, 0);
    if (static_cast<int>(degrees.size()) != gens)
        throw std::invalid_argument("degree list does not match generator count");
    st->degrees = std::move(degrees);

    for (auto& col : relations) {
        if (static_cast<int>(col.size()) != gens)
            throw std::invalid_argument("relation column has wrong length");
        for (auto& p : col) {
            if (!p.ring()->same_as(*st->ring->ambient()))
                throw std::invalid_argument("relation entry from a different ring");
            p = st->ring->normal_form(p);
        }
        if (!vec_is_zero(col)) st->rels.push_back(std::move(col));
    }

    st->graded = true;
    for (const auto& col : st->rels)
        if (!vec_degree(col, st->degrees)) st->graded = false;

    FGModule m;
    m.st_ = std::move(st);
    return m;
}

FGModule FGModule::free_module(const QRingPtr& ring, int rank, std::vector<int> degrees) {
    return from_presentation(ring, rank, {}, std::move(degrees));
}

FGModule FGModule::zero_module(const QRingPtr& ring) { return from_presentation(ring, 0, {}); }

FGModule FGModule::quotient_by_ideal(const QRingPtr& ring, const Ideal& I) {
    std::vector<Vec> rels;
    for (const auto& g : I.generators())
        if (!g.is_zero()) rels.push_back(Vec{g});
    return from_presentation(ring, 1, std::move(rels));
}

FGModule FGModule::residue_field(const QRingPtr& ring) {
    return quotient_by_ideal(ring, ring->maximal_ideal());
}

FGModule FGModule::ideal_as_module(const QRingPtr& ring, const Ideal& I) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) {
        Polynomial r = ring->normal_form(g);
        if (!r.is_zero()) gens.push_back(std::move(r));
    }
    if (gens.empty()) return zero_module(ring);
    std::vector<Vec> cols;
    std::vector<int> degrees;
    for (const auto& g : gens) {
        cols.push_back(Vec{g});
        auto d = g.homogeneous_degree();
        degrees.push_back(d ? *d : 0);
    }
    std::vector<Vec> rels = kernel_columns_over(ring, cols, 1);
    return from_presentation(ring, static_cast<int>(gens.size()), std::move(rels), std::move(degrees));
}

const QRingPtr& FGModule::ring() const { return st_->ring; }
int FGModule::gens() const { return st_->gens; }
const std::vector<Vec>& FGModule::relations() const { return st_->rels; }
const std::vector<int>& FGModule::degrees() const { return st_->degrees; }
bool FGModule::is_graded() const { return st_->graded && st_->ring->is_graded(); }

const ModuleGB& FGModule::relation_gb() const {
    if (!st_->rel_gb) {
        std::vector<Vec> cols = st_->rels;
        auto extra = defining_relation_columns(st_->ring, st_->gens);
        cols.insert(cols.end(), extra.begin(), extra.end());
        st_->rel_gb = std::make_shared<ModuleGB>(module_groebner(cols, st_->gens, st_->ring->ambient()));
    }
    return *st_->rel_gb;
}

Vec FGModule::reduce(const Vec& v) const {
    if (static_cast<int>(v.size()) != st_->gens) throw std::invalid_argument("vector length mismatch");
    if (st_->gens == 0) return v;
    return module_normal_form(v, relation_gb());
}

bool FGModule::is_zero() const {
    if (st_->gens == 0) return true;
    for (int i = 0; i < st_->gens; ++i)
        if (!element_is_zero(vec_unit(st_->ring->ambient(), st_->gens, i))) return false;
    return true;
}

void FGModule::State::ensure_resolution(int want_levels) const {
    if (!res) {
        auto r = std::make_shared<Res>();
        MutableLevel L0{gens, degrees, {}};
        r->levels.push_back(std::move(L0));
        if (!rels.empty()) {
            MutableLevel L1;
            L1.rank = static_cast<int>(rels.size());
            L1.degrees = column_degrees(rels, degrees);
            L1.diff = rels;
            r->levels.push_back(std::move(L1));
            prune_levels(ring, r->levels);
            if (r->levels.back().rank == 0) {
                r->levels.pop_back();
                r->terminated = true;
            }
        } else {
            r->terminated = true;
        }
        if (r->levels.size() == 1 && r->levels[0].rank == 0) r->terminated = true;
        res = std::move(r);
    }
    while (!res->terminated && static_cast<int>(res->levels.size()) <= want_levels) {
        const MutableLevel& top = res->levels.back();
        if (top.rank == 0) {
            res->terminated = true;
            break;
        }
        int below_rank = res->levels[res->levels.size() - 2].rank;
        std::vector<Vec> raw = kernel_columns_over(ring, top.diff, below_rank);
        if (raw.empty()) {
            res->terminated = true;
            break;
        }
        MutableLevel next;
        next.rank = static_cast<int>(raw.size());
        next.degrees = column_degrees(raw, top.degrees);
        next.diff = std::move(raw);
        res->levels.push_back(std::move(next));
        prune_levels(ring, res->levels);
        if (res->levels.back().rank == 0) {
            res->levels.pop_back();
            res->terminated = true;
        }
    }
}

FreeComplex FGModule::resolution(int length) const {
    if (length < 0) throw std::invalid_argument("negative resolution length");
    st_->ensure_resolution(length);
    const auto& levels = st_->res->levels;
    std::vector<FreeComplex::Level> out;
    for (int k = 0; k <= length && k < static_cast<int>(levels.size()); ++k) {
        FreeComplex::Level L;
        L.rank = levels[k].rank;
        L.degrees = levels[k].degrees;
        L.diff = levels[k].diff;
        out.push_back(std::move(L));
    }
    return FreeComplex::make(st_->ring, 0, std::move(out));
}

std::vector<std::multiset<int>> FGModule::graded_betti(int length) const {
    st_->ensure_resolution(length);
    const auto& levels = st_->res->levels;
    std::vector<std::multiset<int>> out;
    for (int k = 0; k <= length; ++k) {
        std::multiset<int> level;
        if (k < static_cast<int>(levels.size()))
            level.insert(levels[k].degrees.begin(), levels[k].degrees.end());
        out.push_back(std::move(level));
    }
    return out;
}

std::string FGModule::describe() const {
    std::ostringstream out;
    out << "coker(" << st_->gens << " x " << st_->rels.size() << ") over " << st_->ring->describe();
    return out.str();
}

// ---------------------------------------------------------------------------
// ModuleMap

ModuleMap::ModuleMap(FGModule source, FGModule target, std::vector<Vec> columns)
    : source_(std::move(source)), target_(std::move(target)), cols_(std::move(columns)) {
    if (!source_.ring()->same_as(*target_.ring()))
        throw std::invalid_argument("module map between different rings");
    if (static_cast<int>(cols_.size()) != source_.gens())
        throw std::invalid_argument("module map needs one column per source generator");
    const QRingPtr& R = source_.ring();
    for (auto& c : cols_) {
        if (static_cast<int>(c.size()) != target_.gens())
            throw std::invalid_argument("module map column has wrong length");
        for (auto& p : c) p = R->normal_form(p);
    }
    for (const auto& rel : source_.relations()) {
        Vec image = apply_columns(R, cols_, rel, target_.gens());
        if (!target_.element_is_zero(image))
            throw std::invalid_argument("module map is not well-defined on relations");
    }
}

ModuleMap ModuleMap::zero_map(const FGModule& source, const FGModule& target) {
    std::vector<Vec> cols(source.gens(), vec_zero(source.ring()->ambient(), target.gens()));
    return ModuleMap(source, target, std::move(cols));
}

ModuleMap ModuleMap::identity(const FGModule& m) {
    std::vector<Vec> cols;
    for (int j = 0; j < m.gens(); ++j) cols.push_back(vec_unit(m.ring()->ambient(), m.gens(), j));
    return ModuleMap(m, m, std::move(cols));
}

ModuleMap ModuleMap::multiplication(const FGModule& m, const Polynomial& f) {
    std::vector<Vec> cols;
    for (int j = 0; j < m.gens(); ++j) {
        Vec v = vec_zero(m.ring()->ambient(), m.gens());
        v[j] = m.ring()->normal_form(f);
        cols.push_back(std::move(v));
    }
    return ModuleMap(m, m, std::move(cols));
}

Vec ModuleMap::apply(const Vec& v) const {
    return apply_columns(source_.ring(), cols_, v, target_.gens());
}

bool ModuleMap::is_zero_map() const {
    for (const auto& c : cols_)
        if (!target_.element_is_zero(c)) return false;
    return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    if (f.target().gens() != g.source().gens())
        throw std::invalid_argument("composition shape mismatch");
    std::vector<Vec> cols;
    for (const auto& c : f.columns())
        cols.push_back(apply_columns(f.source().ring(), g.columns(), c, g.target().gens()));
    return ModuleMap(f.source(), g.target(), std::move(cols));
}

bool maps_equal(const ModuleMap& f, const ModuleMap& g) {
    if (f.source().gens() != g.source().gens() || f.target().gens() != g.target().gens())
        return false;
    for (size_t j = 0; j < f.columns().size(); ++j) {
        Vec diff = vec_sub(f.columns()[j], g.columns()[j]);
        if (!f.target().element_is_zero(diff)) return false;
    }
    return true;
}

FGModule subquotient_module(const QRingPtr& ring, int rank, const std::vector<int>& slot_degrees,
                            const std::vector<Vec>& gens, const std::vector<Vec>& rels) {
    if (gens.empty()) return FGModule::zero_module(ring);
    std::vector<Vec> pres = preimage_columns_over(ring, gens, rels, rank);
    std::vector<int> degrees;
    for (const auto& g : gens) {
        auto d = vec_degree(g, slot_degrees);
        degrees.push_back(d ? *d : 0);
    }
    return FGModule::from_presentation(ring, static_cast<int>(gens.size()), std::move(pres),
                                       std::move(degrees));
}

FGModule kernel(const ModuleMap& f) {
    const QRingPtr& R = f.source().ring();
    std::vector<Vec> pre;
    if (f.target().gens() == 0) {
        for (int j = 0; j < f.source().gens(); ++j)
            pre.push_back(vec_unit(R->ambient(), f.source().gens(), j));
    } else {
        pre = preimage_columns_over(R, f.columns(), f.target().relations(), f.target().gens());
    }
    return subquotient_module(R, f.source().gens(), f.source().degrees(), pre,
                              f.source().relations());
}

FGModule cokernel(const ModuleMap& f) {
    std::vector<Vec> rels = f.target().relations();
    rels.insert(rels.end(), f.columns().begin(), f.columns().end());
    return FGModule::from_presentation(f.target().ring(), f.target().gens(), std::move(rels),
                                       f.target().degrees());
}

FGModule minimalize(const FGModule& m) {
    std::vector<MutableLevel> levels;
    levels.push_back(MutableLevel{m.gens(), m.degrees(), {}});
    if (!m.relations().empty()) {
        MutableLevel L1;
        L1.rank = static_cast<int>(m.relations().size());
        L1.degrees = column_degrees(m.relations(), m.degrees());
        L1.diff = m.relations();
        levels.push_back(std::move(L1));
        prune_levels(m.ring(), levels);
    }
    std::vector<Vec> rels = levels.size() > 1 ? levels[1].diff : std::vector<Vec>{};
    return FGModule::from_presentation(m.ring(), levels[0].rank, std::move(rels), levels[0].degrees);
}

}  // namespace calab
