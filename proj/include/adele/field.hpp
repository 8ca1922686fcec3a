#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace adele {

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Dense coefficient vectors over GF(p), least significant first. Used for the
/// moduli of extension fields and for the arithmetic inside GF(p^k).
namespace gfp {
using Vec = std::vector<uint32_t>;

uint32_t inv(uint32_t a, uint32_t p);
uint32_t pow(uint32_t a, uint64_t e, uint32_t p);
void trim(Vec& a);
Vec mul(const Vec& a, const Vec& b, uint32_t p);
Vec mod(Vec a, const Vec& m, uint32_t p);
Vec mulmod(const Vec& a, const Vec& b, const Vec& m, uint32_t p);
Vec powmod(Vec base, uint64_t e, const Vec& m, uint32_t p);
Vec gcd(Vec a, Vec b, uint32_t p);
bool is_irreducible(const Vec& f, uint32_t p);
bool is_prime(uint64_t n);
}  // namespace gfp

/// GF(p^k) presented as GF(p)[z]/(modulus). Prime fields have k = 1 and no modulus.
///
/// Two specs compare equal iff they have the same characteristic and modulus,
/// so independently constructed copies of the same field interoperate.
class FieldSpec {
public:
    static FieldPtr prime(uint32_t p);
    /// Verifies that `modulus` is monic and irreducible over GF(p).
    static FieldPtr extension(uint32_t p, gfp::Vec modulus);
    /// GF(p^k) with the lexicographically first monic irreducible modulus of
    /// degree k (constant term varying fastest).
    static FieldPtr standard(uint32_t p, int k);

    uint32_t characteristic() const noexcept { return p_; }
    int degree() const noexcept { return k_; }
    const gfp::Vec& modulus() const noexcept { return modulus_; }
    /// p^k, or 0 when it does not fit in 64 bits.
    uint64_t order() const noexcept { return order_; }

    bool operator==(const FieldSpec& o) const noexcept { return p_ == o.p_ && modulus_ == o.modulus_; }

    std::string describe() const;

private:
    FieldSpec(uint32_t p, gfp::Vec modulus);
    uint32_t p_;
    int k_;
    gfp::Vec modulus_;
    uint64_t order_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, int64_t value);
    FieldElement(FieldPtr field, gfp::Vec coeffs);

    static FieldElement zero(const FieldPtr& f) { return {f, 0}; }
    static FieldElement one(const FieldPtr& f) { return {f, 1}; }
    /// The class of z in GF(p)[z]/(modulus); equals 0 in a prime field.
    static FieldElement generator(const FieldPtr& f);

    const FieldPtr& field() const noexcept { return field_; }
    const gfp::Vec& coeffs() const noexcept { return c_; }
    bool valid() const noexcept { return static_cast<bool>(field_); }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// True when the element lies in the prime subfield.
    bool is_prime_field_element() const noexcept;
    uint32_t prime_value() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    FieldElement inverse() const;
    FieldElement pow(int64_t e) const;
    FieldElement frobenius() const;  // a^p

    /// Product of the k Frobenius conjugates, as an element of the prime field.
    FieldElement norm() const;
    /// Sum of the k Frobenius conjugates, as an element of the prime field.
    FieldElement trace() const;

    /// Moves a prime-field value into another field of the same characteristic.
    FieldElement lift_to(const FieldPtr& target) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    /// Total order used for deterministic sorting (degree-lex on coefficients).
    bool operator<(const FieldElement& o) const;

    std::string to_string() const;

private:
    FieldPtr field_;
    gfp::Vec c_;
};

inline FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
inline FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
inline FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
inline FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

/// Norm from GF(p^k) to GF(p).
FieldElement norm_to_prime_field(const FieldElement& a);

/// Every element of a field with at most `limit` elements, in a fixed order.
std::vector<FieldElement> enumerate_field(const FieldPtr& f, uint64_t limit = 1u << 20);

}  // namespace adele
