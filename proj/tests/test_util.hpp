#pragma once

#include <string>
#include <vector>

#include "calab/fgmodule.hpp"

namespace calab::testutil {

inline QRingPtr make_ring(std::vector<std::string> vars, std::vector<std::string> defining = {}) {
    RingPtr S = PolyRing::make(std::move(vars), CoeffField::rationals());
    if (defining.empty()) return QuotientRing::polynomial_ring(S);
    return QuotientRing::make(S, Ideal::of(S, defining));
}

inline FGModule quot(const QRingPtr& R, std::vector<std::string> gens) {
    return FGModule::quotient_by_ideal(R, Ideal::of(R->ambient(), gens));
}

inline FGModule ideal_mod(const QRingPtr& R, std::vector<std::string> gens) {
    return FGModule::ideal_as_module(R, Ideal::of(R->ambient(), gens));
}

inline Polynomial pp(const QRingPtr& R, const std::string& text) {
    return parse_polynomial(R->ambient(), text);
}

}  // namespace calab::testutil
