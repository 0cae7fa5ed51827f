#ifndef CA_SCALAR_HPP
#define CA_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ca {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class FieldKind { Rationals, Prime };

// Coefficient field descriptor. Prime fields carry their modulus; the
// rationals carry none. Two scalars may interact only if their fields match.
struct Field {
    FieldKind kind = FieldKind::Rationals;
    std::uint32_t p = 0;

    static Field rationals() { return Field{FieldKind::Rationals, 0}; }
    static Field prime(std::uint32_t p);

    bool operator==(const Field&) const = default;
    std::string str() const;
};

// Immutable field element. Rational values are kept reduced with positive
// denominator (mpq_class canonicalization); prime-field values as residues
// in [0, p).
class Scalar {
public:
    Scalar() : field_(Field::rationals()) {}
    explicit Scalar(const Field& f) : field_(f) {}

    static Scalar from_int(const Field& f, long v);
    static Scalar rational(long num, long den);
    static Scalar from_mpq(mpq_class v);
    static Scalar residue(std::uint32_t p, long v);
    static Scalar zero(const Field& f) { return Scalar(f); }
    static Scalar one(const Field& f) { return from_int(f, 1); }

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Rational value (rationals only).
    const mpq_class& rat() const;
    // Residue value (prime fields only).
    std::uint64_t res() const { return r_; }

    std::string str() const;

private:
    void check_same(const Scalar& o) const;

    Field field_;
    mpq_class q_ = 0;
    std::uint64_t r_ = 0;
};

}  // namespace ca

#endif
