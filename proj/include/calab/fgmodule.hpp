#pragma once

#include <map>
#include <memory>
#include <set>

#include "calab/free_complex.hpp"

namespace calab {

/// Degree of a homogeneous vector in a graded free module whose generator i
/// sits in degree slot_degrees[i]; nullopt when the vector is not homogeneous.
std::optional<int> vec_degree(const Vec& v, const std::vector<int>& slot_degrees);

/// Finitely generated R-module given as the cokernel of a presentation
/// matrix (relations stored column-wise). Cheap to copy; caches (relation
/// Gröbner basis, minimal free resolution) are shared between copies.
class FGModule {
public:
    static FGModule from_presentation(QRingPtr ring, int gens, std::vector<Vec> relations,
                                      std::vector<int> degrees = {});
    static FGModule free_module(const QRingPtr& ring, int rank, std::vector<int> degrees = {});
    static FGModule zero_module(const QRingPtr& ring);
    static FGModule quotient_by_ideal(const QRingPtr& ring, const Ideal& I);  // R/I
    static FGModule residue_field(const QRingPtr& ring);                      // R/m
    /// An ideal viewed as a module: generators are the ideal's generators,
    /// relations are their syzygies over R.
    static FGModule ideal_as_module(const QRingPtr& ring, const Ideal& I);

    const QRingPtr& ring() const;
    int gens() const;
    const std::vector<Vec>& relations() const;
    const std::vector<int>& degrees() const;
    bool is_graded() const;

    /// Gröbner basis of the relation submodule of R^gens (defining-ideal
    /// multiples of the unit vectors included); ambient-ring computation.
    const ModuleGB& relation_gb() const;
    Vec reduce(const Vec& v) const;
    bool element_is_zero(const Vec& v) const { return vec_is_zero(reduce(v)); }
    bool is_zero() const;

    /// Minimal free resolution up to homological degree `length`.
    FreeComplex resolution(int length) const;
    /// Generator degrees at each level of the minimal resolution (graded
    /// Betti numbers), levels 0..length.
    std::vector<std::multiset<int>> graded_betti(int length) const;

    std::string describe() const;

private:
    struct State;
    std::shared_ptr<State> st_;
    FGModule() = default;
    friend struct ModuleOpsAccess;
};

/// Map of finitely generated modules, one image column per source generator.
/// Construction verifies well-definedness (images of relations fall in the
/// target's relation submodule).
class ModuleMap {
public:
    ModuleMap(FGModule source, FGModule target, std::vector<Vec> columns);
    static ModuleMap zero_map(const FGModule& source, const FGModule& target);
    static ModuleMap identity(const FGModule& m);
    static ModuleMap multiplication(const FGModule& m, const Polynomial& f);

    const FGModule& source() const { return source_; }
    const FGModule& target() const { return target_; }
    const std::vector<Vec>& columns() const { return cols_; }

    Vec apply(const Vec& v) const;
    bool is_zero_map() const;

private:
    FGModule source_, target_;
    std::vector<Vec> cols_;
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
bool maps_equal(const ModuleMap& f, const ModuleMap& g);

FGModule kernel(const ModuleMap& f);
FGModule cokernel(const ModuleMap& f);

/// Presentation of (span(gens) + span(rels)) / span(rels) inside R^rank,
/// on the given generators.
FGModule subquotient_module(const QRingPtr& ring, int rank, const std::vector<int>& slot_degrees,
                            const std::vector<Vec>& gens, const std::vector<Vec>& rels);

/// Columns generating ker(R^#cols -> R^rank) over the quotient ring.
std::vector<Vec> kernel_columns_over(const QRingPtr& ring, const std::vector<Vec>& cols, int rank);

/// Columns v with sum_j v_j * cols[j] in span(modulo), over the quotient ring.
std::vector<Vec> preimage_columns_over(const QRingPtr& ring, const std::vector<Vec>& cols,
                                       const std::vector<Vec>& modulo, int rank);

/// Solve sum_j cols[j] * c_j = v modulo span(modulo), over the quotient ring.
std::optional<Vec> lift_columns_over(const QRingPtr& ring, const std::vector<Vec>& cols,
                                     const std::vector<Vec>& modulo, int rank, const Vec& v);

/// Isomorphism-preserving pruning of the presentation (graded Nakayama:
/// unit entries are cancelled until every entry lies in the maximal ideal).
FGModule minimalize(const FGModule& m);

FGModule tensor_modules(const FGModule& a, const FGModule& b);
FGModule direct_sum(const FGModule& a, const FGModule& b);
FGModule auslander_transpose(const FGModule& m);
/// M/(f)M.
FGModule quotient_by_element(const FGModule& m, const Polynomial& f);
/// r-th syzygy module in the minimal resolution (r = 0 gives M itself,
/// up to minimalization).
FGModule syzygy_module(const FGModule& m, int r);

/// Hom(M, N) together with the generator witnesses: each generator of the
/// Hom module corresponds to a target.gens x source.gens matrix, stored
/// flattened with slot (i, t) -> i * target.gens + t.
struct HomModule {
    FGModule module;
    FGModule source, target;
    std::vector<Vec> witnesses;

    ModuleMap generator_map(int k) const;
    /// The map given by sum coeff[k] * witness[k].
    ModuleMap combination_map(const std::vector<long>& coeffs) const;
};
HomModule hom_module(const FGModule& m, const FGModule& n);
FGModule dual_module(const FGModule& m);

/// Contravariant dual of a map: for phi : A -> B and the Hom data of the two
/// duals, the induced map B* -> A*.
ModuleMap dual_map(const ModuleMap& phi, const HomModule& a_star, const HomModule& b_star);

/// Canonical map M -> M**.
ModuleMap evaluation_map(const FGModule& m);

struct PdResult {
    std::optional<int> value;   // nullopt = infinite
    bool periodicity_observed = false;
    int bound = 0;              // resolution was inspected to this level
};
PdResult projective_dimension(const FGModule& m);

Ideal annihilator(const FGModule& m);
/// Krull dimension of R/ann(M); nullopt is the "-infinity" marker (M = 0).
std::optional<int> module_dimension(const FGModule& m);
/// Vector-space length over the coefficient field; nullopt = infinite.
std::optional<long> length_over_field(const FGModule& m);

enum class IsoVerdict { yes, no, unknown };
struct IsoResult {
    IsoVerdict verdict;
    std::string detail;  // separating invariant or witness description
};
IsoResult try_isomorphic(const FGModule& a, const FGModule& b);

/// Koszul complex on ring elements tensored against the module (placed in
/// degree zero through a resolution long enough for every homology degree
/// in [0, #elements] to be exact).
FreeComplex koszul_complex(const std::vector<Polynomial>& elements, const FGModule& M);

/// Homology ker(d_i)/im(d_{i+1}) of a free complex, as a presented module.
FGModule homology(const FreeComplex& X, int i);

/// Extremal homological degrees with nonvanishing homology; nullopt markers
/// mean the complex is exact (sup = -inf marker, inf = +inf marker).
struct InfSup {
    std::optional<int> inf, sup;
};
InfSup inf_sup(const FreeComplex& X);

}  // namespace calab
