#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "calab/groebner.hpp"

namespace calab {

/// Ideal of a polynomial ring, with a lazily computed reduced Gröbner basis.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> gens);
    static Ideal zero(const RingPtr& ring);
    static Ideal unit(const RingPtr& ring);
    static Ideal of(const RingPtr& ring, const std::vector<std::string>& gen_texts);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    /// Unique reduced Gröbner basis for the ring's order (empty for (0)).
    const std::vector<Polynomial>& groebner_basis() const;

    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

    bool is_zero() const { return groebner_basis().empty(); }
    bool is_unit() const;
    bool is_proper() const { return !is_unit(); }
    bool is_homogeneous() const;  // admits homogeneous generating set (checked on the GB)

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<std::vector<Polynomial>> gb_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int n);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_quotient(const Ideal& a, const Polynomial& f);   // a : (f)
Ideal ideal_quotient(const Ideal& a, const Ideal& b);        // a : b
Ideal ideal_saturate(const Ideal& a, const Polynomial& f);   // a : f^inf
/// Generators of a not involving the given variables, spanning the
/// elimination ideal a ∩ k[remaining vars] (computed with a block order).
Ideal ideal_eliminate(const Ideal& a, const std::vector<int>& eliminated_vars);

bool ideal_equal(const Ideal& a, const Ideal& b);

/// Krull dimension of S/I; nullopt is the "-infinity" marker for I = (1).
std::optional<int> ideal_dimension(const Ideal& I);

/// f in sqrt(I), decided with a Rabinowitsch extension.
bool radical_membership(const Polynomial& f, const Ideal& I);

/// Exact quotient g/f in the polynomial ring; nullopt when not divisible.
std::optional<Polynomial> exact_division(const Polynomial& g, const Polynomial& f);

}  // namespace calab
