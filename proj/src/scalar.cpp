#include "calab/scalar.hpp"

namespace calab {

bool is_small_prime(unsigned long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (unsigned long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

CoeffField CoeffField::prime(unsigned long p) {
    if (!is_small_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    return {FieldKind::prime_field, p};
}

std::string CoeffField::name() const {
    return kind == FieldKind::rationals ? "Q" : "F" + std::to_string(p);
}

Scalar Scalar::of_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return of_rational(std::move(q));
}

Scalar Scalar::of_rational(mpq_class q) {
    q.canonicalize();
    Scalar s;
    s.mod_ = 0;
    s.rat_ = std::move(q);
    return s;
}

Scalar Scalar::of_fp(unsigned long value, unsigned long p) {
    if (!is_small_prime(p)) throw std::invalid_argument("modulus is not prime");
    Scalar s;
    s.mod_ = p;
    s.fp_ = value % p;
    return s;
}

Scalar Scalar::of_int(long v, const CoeffField& f) {
    if (f.kind == FieldKind::rationals) return of_rational(v);
    long r = v % static_cast<long>(f.p);
    if (r < 0) r += static_cast<long>(f.p);
    return of_fp(static_cast<unsigned long>(r), f.p);
}

bool Scalar::is_zero() const { return mod_ ? fp_ == 0 : rat_ == 0; }
bool Scalar::is_one() const { return mod_ ? fp_ == 1 : rat_ == 1; }

const mpq_class& Scalar::rat() const {
    if (mod_) throw std::logic_error("not a rational scalar");
    return rat_;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (mod_ != o.mod_) throw std::invalid_argument("scalar field mismatch");
}

namespace {
unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % p);
}

unsigned long powmod(unsigned long a, unsigned long e, unsigned long p) {
    unsigned long r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    if (mod_) return of_fp((fp_ + o.fp_) % mod_, mod_);
    return of_rational(rat_ + o.rat_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    if (mod_) return of_fp((fp_ + mod_ - o.fp_) % mod_, mod_);
    return of_rational(rat_ - o.rat_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    if (mod_) return of_fp(mulmod(fp_, o.fp_, mod_), mod_);
    return of_rational(rat_ * o.rat_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    if (mod_) return of_fp(fp_ ? mod_ - fp_ : 0, mod_);
    return of_rational(-rat_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (mod_) return of_fp(powmod(fp_, mod_ - 2, mod_), mod_);
    return of_rational(1 / rat_);
}

bool Scalar::operator==(const Scalar& o) const {
    if (mod_ != o.mod_) return false;
    return mod_ ? fp_ == o.fp_ : rat_ == o.rat_;
}

std::string Scalar::str() const {
    if (mod_) return std::to_string(fp_);
    return rat_.get_str();
}

}  // namespace calab
