#pragma once

#include <memory>

#include "calab/ideal.hpp"

namespace calab {

class QuotientRing;
using QRingPtr = std::shared_ptr<const QuotientRing>;

/// R = S/I for a polynomial ring S and a proper homogeneous ideal I, the
/// ambient model of a graded local ring with maximal ideal generated by all
/// variables. Elements are represented by ambient normal forms.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
public:
    static QRingPtr make(RingPtr ambient, Ideal defining);
    static QRingPtr polynomial_ring(RingPtr ambient);  // zero defining ideal

    const RingPtr& ambient() const { return ambient_; }
    const Ideal& defining_ideal() const { return defining_; }

    /// Krull dimension of R.
    int dimension() const { return dim_; }
    /// Defining ideal principal after reduction (includes the regular case).
    bool is_hypersurface() const { return hypersurface_; }
    bool is_graded() const { return graded_; }
    /// Defining ideal cut out by a homogeneous regular sequence.
    bool is_complete_intersection() const { return complete_intersection_; }
    /// Gorenstein for the bases used here: hypersurface or complete intersection.
    bool is_gorenstein() const { return hypersurface_ || complete_intersection_; }

    Polynomial normal_form(const Polynomial& f) const { return defining_.normal_form(f); }
    bool is_zero_element(const Polynomial& f) const { return defining_.contains(f); }

    /// The irrelevant maximal ideal (all variables).
    Ideal maximal_ideal() const;

    bool same_as(const QuotientRing& o) const;
    std::string describe() const;

private:
    QuotientRing(RingPtr ambient, Ideal defining);
    RingPtr ambient_;
    Ideal defining_;
    int dim_ = 0;
    bool hypersurface_ = false;
    bool graded_ = false;
    bool complete_intersection_ = false;
};

}  // namespace calab
