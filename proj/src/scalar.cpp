#include "ca/scalar.hpp"

namespace ca {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (!is_prime_u32(p)) throw Error("field modulus " + std::to_string(p) + " is not prime");
    return Field{FieldKind::Prime, p};
}

std::string Field::str() const {
    return kind == FieldKind::Rationals ? "Q" : "fp:" + std::to_string(p);
}

Scalar Scalar::from_int(const Field& f, long v) {
    Scalar s(f);
    if (f.kind == FieldKind::Rationals) {
        s.q_ = v;
    } else {
        long m = v % static_cast<long>(f.p);
        if (m < 0) m += f.p;
        s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw Error("zero denominator");
    Scalar s(Field::rationals());
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::from_mpq(mpq_class v) {
    v.canonicalize();
    Scalar s(Field::rationals());
    s.q_ = std::move(v);
    return s;
}

Scalar Scalar::residue(std::uint32_t p, long v) { return from_int(Field::prime(p), v); }

bool Scalar::is_zero() const {
    return field_.kind == FieldKind::Rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == FieldKind::Rationals ? q_ == 1 : r_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
    if (!(field_ == o.field_)) throw Error("mixed-field arithmetic: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s(field_);
    if (field_.kind == FieldKind::Rationals)
        s.q_ = q_ + o.q_;
    else
        s.r_ = (r_ + o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar s(field_);
    if (field_.kind == FieldKind::Rationals)
        s.q_ = q_ - o.q_;
    else
        s.r_ = (r_ + field_.p - o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s(field_);
    if (field_.kind == FieldKind::Rationals)
        s.q_ = q_ * o.q_;
    else
        s.r_ = r_ * o.r_ % field_.p;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.kind == FieldKind::Rationals)
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.p - r_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    Scalar s(field_);
    if (field_.kind == FieldKind::Rationals)
        s.q_ = 1 / q_;
    else
        s.r_ = mod_pow(r_, field_.p - 2, field_.p);
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.kind == FieldKind::Rationals ? q_ == o.q_ : r_ == o.r_;
}

const mpq_class& Scalar::rat() const {
    if (field_.kind != FieldKind::Rationals) throw Error("rat() on prime-field scalar");
    return q_;
}

std::string Scalar::str() const {
    if (field_.kind == FieldKind::Rationals) return q_.get_str();
    return std::to_string(r_);
}

}  // namespace ca
