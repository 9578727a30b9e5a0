#pragma once

#include <optional>
#include <vector>

#include "calab/polynomial.hpp"

namespace calab {

/// Element of a free module R^rank: one polynomial per component.
using Vec = std::vector<Polynomial>;

Vec vec_zero(const RingPtr& ring, int rank);
bool vec_is_zero(const Vec& v);
Vec vec_unit(const RingPtr& ring, int rank, int comp);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Scalar& c);
Vec vec_times_monomial(const Vec& a, const Exponents& e, const Scalar& c);
Vec vec_times_poly(const Vec& a, const Polynomial& f);
bool vec_equal(const Vec& a, const Vec& b);
std::string vec_str(const Vec& v);

/// Leading position under the position-over-term order (component 0 is the
/// largest; ties broken by the ring's monomial order).
struct LeadTerm {
    int comp;
    Exponents exp;
    Scalar coeff;
};
LeadTerm lead_term(const Vec& v);

/// -1/0/+1 comparing leading terms of nonzero vectors under POT.
int compare_lead(const Vec& a, const Vec& b, const MonomialOrder& order);

/// Gröbner basis of a submodule of R^rank, position-over-term order.
/// The basis is reduced: monic leads, pairwise non-dividing leading terms,
/// tails in normal form. Unique for a given submodule, hence deterministic.
struct ModuleGB {
    int rank = 0;
    std::vector<Vec> basis;
};

ModuleGB module_groebner(const std::vector<Vec>& generators, int rank, const RingPtr& ring);

/// Full normal form of v against a module Gröbner basis.
Vec module_normal_form(const Vec& v, const ModuleGB& gb);

bool in_submodule(const Vec& v, const ModuleGB& gb);

/// Columns generating ker( R^ncols --A--> R^rank ) where A's columns are
/// `cols`. Computed from a Gröbner basis of the graph module
/// {(col_j, e_j)} with the target components dominating.
std::vector<Vec> syzygy_generators(const std::vector<Vec>& cols, int rank, const RingPtr& ring);

/// Solve sum_j cols[j]*c_j = v; nullopt when v is not in the column span.
std::optional<Vec> lift_through(const std::vector<Vec>& cols, int rank, const Vec& v,
                                const RingPtr& ring);

/// Graph-module Gröbner data reused by syzygy/lift on the same columns.
struct GraphGB {
    int rank = 0;       // ambient rank of the columns
    int ncols = 0;      // number of columns
    ModuleGB gb;        // basis in R^(rank+ncols)
};
GraphGB graph_groebner(const std::vector<Vec>& cols, int rank, const RingPtr& ring);
std::vector<Vec> syzygies_from_graph(const GraphGB& g);
std::optional<Vec> lift_from_graph(const GraphGB& g, const Vec& v);

}  // namespace calab
