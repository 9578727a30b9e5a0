#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "calab/scalar.hpp"

namespace calab {

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);           // a | b componentwise
Exponents exp_add(const Exponents& a, const Exponents& b);
Exponents exp_sub(const Exponents& a, const Exponents& b);      // requires b | a
Exponents exp_lcm(const Exponents& a, const Exponents& b);
bool exp_coprime(const Exponents& a, const Exponents& b);

enum class OrderKind { grevlex, lex, block };

/// Monomial order tag. `block` is an elimination order: the first
/// `block_size` variables are compared grevlex first, the rest break ties.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    int block_size = 0;

    static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::lex, 0}; }
    static MonomialOrder elimination(int first_block) { return {OrderKind::block, first_block}; }

    bool operator==(const MonomialOrder&) const = default;
};

/// -1, 0, +1 for a < b, a = b, a > b under the order.
int compare_monomials(const Exponents& a, const Exponents& b, const MonomialOrder& order);

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Ambient polynomial ring: named variables over a coefficient field,
/// with a fixed monomial order.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
public:
    static RingPtr make(std::vector<std::string> variables, CoeffField field,
                        MonomialOrder order = MonomialOrder::grevlex());

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& variable(int i) const { return vars_.at(i); }
    int variable_index(const std::string& name) const;  // -1 if absent
    const CoeffField& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }

    bool same_as(const PolyRing& o) const;

    /// Ring with extra variables appended (fresh names required), used for
    /// elimination tricks. The new variables form the elimination block.
    RingPtr extended(const std::vector<std::string>& extra_front) const;

    std::string describe() const;

private:
    PolyRing(std::vector<std::string> v, CoeffField f, MonomialOrder o);
    std::vector<std::string> vars_;
    CoeffField field_;
    MonomialOrder order_;
};

struct ExpGreater {
    MonomialOrder order;
    bool operator()(const Exponents& a, const Exponents& b) const {
        return compare_monomials(a, b, order) > 0;
    }
};

/// Sparse exact-coefficient multivariate polynomial. Terms are kept in
/// decreasing monomial order; no zero coefficients are stored.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Scalar, ExpGreater>;

    explicit Polynomial(RingPtr ring);
    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
    static Polynomial constant(const RingPtr& ring, const Scalar& c);
    static Polynomial constant(const RingPtr& ring, long c);
    static Polynomial variable(const RingPtr& ring, int index, int power = 1);
    static Polynomial monomial(const RingPtr& ring, Exponents e, const Scalar& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int num_terms() const { return static_cast<int>(terms_.size()); }

    /// Max total degree of the terms; -1 for the zero polynomial.
    int degree() const;
    /// d if every term has total degree d, nullopt otherwise (zero poly: 0).
    std::optional<int> homogeneous_degree() const;

    const Exponents& lead_exponents() const;
    const Scalar& lead_coeff() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial times_monomial(const Exponents& e, const Scalar& c) const;
    Polynomial monic() const;  // divide by lead coefficient

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Map into a ring containing the same variable names (e.g. an
    /// elimination extension); exponents are re-indexed by name.
    Polynomial mapped_to(const RingPtr& target) const;

    /// Substitute images[i] for variable i; images live in the target ring.
    Polynomial substituted(const RingPtr& target, const std::vector<Polynomial>& images) const;

    std::string str() const;

private:
    RingPtr ring_;
    TermMap terms_;

    void add_term(const Exponents& e, const Scalar& c);
    friend Polynomial parse_polynomial(const RingPtr&, const std::string&);
};

/// Parse "x^2*y - 3*z + 1/2" style expressions (+, -, *, ^, parentheses,
/// integer or rational literals, variable names). Throws std::invalid_argument
/// with a readable message on bad input.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

std::vector<Polynomial> parse_polynomials(const RingPtr& ring, const std::vector<std::string>& texts);

}  // namespace calab
