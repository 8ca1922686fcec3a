#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "adele/polynomial.hpp"

namespace adele {

/// Element of k(t) in canonical form: coprime numerator and monic denominator.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(const Polynomial& num);
    RationalFunction(const Polynomial& num, const Polynomial& den);

    static RationalFunction constant(const FieldElement& c);
    static RationalFunction zero(const FieldPtr& f);
    static RationalFunction one(const FieldPtr& f);

    const FieldPtr& field() const noexcept { return num_.field(); }
    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    /// deg(num) - deg(den); the negated valuation at infinity.
    int degree() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    RationalFunction inverse() const;
    RationalFunction pow(int e) const;
    RationalFunction derivative() const;

    /// Value at a point of the coefficient field or an extension of it; empty at a pole.
    std::optional<FieldElement> eval(const FieldElement& at) const;

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }
    bool operator<(const RationalFunction& o) const;

    std::string to_string(const char* var = "t") const;

private:
    Polynomial num_, den_;
};

inline RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
inline RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
inline RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
inline RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

/// Canonical form of num/den; throws on a zero denominator.
RationalFunction normalize_rational(const Polynomial& num, const Polynomial& den);

}  // namespace adele
