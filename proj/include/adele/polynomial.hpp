#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "adele/field.hpp"

namespace adele {

/// Univariate polynomial over a FieldSpec, least significant coefficient first.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(FieldPtr f) : field_(std::move(f)) {}
    Polynomial(FieldPtr f, std::vector<FieldElement> coeffs);
    Polynomial(FieldPtr f, const std::vector<int64_t>& coeffs);

    static Polynomial constant(const FieldElement& c);
    static Polynomial x(const FieldPtr& f);
    /// x - a
    static Polynomial linear(const FieldElement& a);

    const FieldPtr& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }

    const std::vector<FieldElement>& coeffs() const noexcept { return c_; }
    FieldElement coeff(int i) const;
    FieldElement leading() const;
    Polynomial monic() const;

    FieldElement operator()(const FieldElement& at) const;
    /// Evaluates at a point of an extension of the coefficient field; the
    /// coefficients must lie in the prime field.
    FieldElement eval_lifted(const FieldElement& at) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const FieldElement& c);

    Polynomial derivative() const;
    Polynomial pow(unsigned e) const;
    /// Coefficients moved into `target` (prime-field coefficients only).
    Polynomial lift_to(const FieldPtr& target) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    /// Degree first, then coefficients from the constant term upward.
    bool operator<(const Polynomial& o) const;

    std::string to_string(const char* var = "t") const;
    std::vector<uint32_t> prime_coeffs() const;

private:
    void trim();
    FieldPtr field_;
    std::vector<FieldElement> c_;
};

inline Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
inline Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
inline Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
inline Polynomial operator*(Polynomial a, const FieldElement& c) { return a *= c; }

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Quotient and remainder; throws on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);
/// Monic gcd g with s*a + t*b = g.
struct ExtendedGcd {
    Polynomial g, s, t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);
Polynomial powmod(Polynomial base, uint64_t e, const Polynomial& m);
/// Largest m with f^m | a (a nonzero, f nonconstant).
int multiplicity(Polynomial a, const Polynomial& f);

struct Factorization {
    FieldElement leading;
    std::vector<std::pair<Polynomial, int>> factors;  // monic irreducible, multiplicity
};

/// Squarefree decomposition, distinct-degree and equal-degree splitting. The
/// seed drives the random splitting elements; the output order is canonical
/// (degree, then coefficients) and independent of the seed.
Factorization factor_polynomial(const Polynomial& f, uint64_t seed = 0);
/// Distinct roots lying in the coefficient field, sorted.
std::vector<FieldElement> roots(const Polynomial& f, uint64_t seed = 0);
/// Monic minimal polynomial over GF(p) of an element of GF(p^k).
Polynomial minimal_polynomial(const FieldElement& a);

}  // namespace adele
