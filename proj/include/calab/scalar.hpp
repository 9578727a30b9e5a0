#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace calab {

enum class FieldKind { rationals, prime_field };

/// Coefficient field descriptor: exact rationals or Z/p for a prime p.
struct CoeffField {
    FieldKind kind = FieldKind::rationals;
    unsigned long p = 0;

    static CoeffField rationals() { return {FieldKind::rationals, 0}; }
    static CoeffField prime(unsigned long p);

    bool operator==(const CoeffField&) const = default;
    std::string name() const;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field values live in [0, p).
class Scalar {
public:
    Scalar() : mod_(0), rat_(0) {}

    static Scalar of_rational(long num, long den = 1);
    static Scalar of_rational(mpq_class q);
    static Scalar of_fp(unsigned long value, unsigned long p);
    static Scalar zero(const CoeffField& f) { return of_int(0, f); }
    static Scalar one(const CoeffField& f) { return of_int(1, f); }
    static Scalar of_int(long v, const CoeffField& f);

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return mod_ == 0; }
    unsigned long modulus() const { return mod_; }

    const mpq_class& rat() const;
    unsigned long fp() const { return fp_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    // mod_ == 0 means rational; otherwise value fp_ in Z/mod_.
    unsigned long mod_;
    unsigned long fp_ = 0;
    mpq_class rat_;

    void require_same_field(const Scalar& o) const;
};

bool is_small_prime(unsigned long p);

}  // namespace calab
