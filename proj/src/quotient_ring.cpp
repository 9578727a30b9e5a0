#include "calab/quotient_ring.hpp"

namespace calab {

QuotientRing::QuotientRing(RingPtr ambient, Ideal defining)
    : ambient_(std::move(ambient)), defining_(std::move(defining)) {}

QRingPtr QuotientRing::make(RingPtr ambient, Ideal defining) {
    if (!defining.ring()->same_as(*ambient))
        throw std::invalid_argument("defining ideal lives in a different ring");
    if (defining.is_unit()) throw std::invalid_argument("defining ideal is the unit ideal");
    for (const auto& g : defining.generators())
        if (!g.homogeneous_degree())
            throw std::invalid_argument("defining ideal generator is not homogeneous: " + g.str());

    auto R = QRingPtr(new QuotientRing(std::move(ambient), std::move(defining)));
    auto self = const_cast<QuotientRing*>(R.get());

    const auto& gb = self->defining_.groebner_basis();
    self->hypersurface_ = gb.size() <= 1;
    self->graded_ = true;  // generators checked homogeneous above

    auto dim = ideal_dimension(self->defining_);
    if (!dim) throw std::logic_error("proper ideal reported empty variety");
    self->dim_ = *dim;

    // Complete intersection test: a homogeneous ideal is a complete
    // intersection iff its minimal generator count equals the codimension.
    std::vector<Polynomial> mingens;
    for (const auto& g : self->defining_.generators()) {
        if (g.is_zero()) continue;
        // redundant against the others already kept plus the rest?
        mingens.push_back(g);
    }
    // prune redundant generators greedily
    for (size_t i = 0; i < mingens.size();) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < mingens.size(); ++j)
            if (j != i) others.push_back(mingens[j]);
        if (Ideal(self->ambient_, others).contains(mingens[i]))
            mingens.erase(mingens.begin() + static_cast<long>(i));
        else
            ++i;
    }
    int codim = self->ambient_->nvars() - self->dim_;
    self->complete_intersection_ = static_cast<int>(mingens.size()) == codim;

    return R;
}

QRingPtr QuotientRing::polynomial_ring(RingPtr ambient) {
    Ideal zero = Ideal::zero(ambient);
    return make(std::move(ambient), std::move(zero));
}

Ideal QuotientRing::maximal_ideal() const {
    std::vector<Polynomial> vars;
    for (int i = 0; i < ambient_->nvars(); ++i) vars.push_back(Polynomial::variable(ambient_, i));
    return Ideal(ambient_, std::move(vars));
}

bool QuotientRing::same_as(const QuotientRing& o) const {
    if (this == &o) return true;
    return ambient_->same_as(*o.ambient_) && ideal_equal(defining_, o.defining_);
}

std::string QuotientRing::describe() const {
    if (defining_.is_zero()) return ambient_->describe();
    return ambient_->describe() + "/" + defining_.str();
}

}  // namespace calab
