#pragma once

#include <vector>

#include "adele/polynomial.hpp"
#include "adele/rational_function.hpp"

namespace adele {

/// Truncated Laurent series  sum_{i} c_i s^(valuation + i) + O(s^precision).
///
/// Coefficients are stored from s^offset upward; leading zeros may be present
/// until `normalized()` strips them. All arithmetic tracks the absolute
/// precision so that cancellation never fabricates coefficients.
class Series {
public:
    Series() = default;
    Series(FieldPtr f, int offset, std::vector<FieldElement> coeffs);

    static Series constant(const FieldElement& c, int precision);
    /// c0 + s, the expansion of a coordinate around the point c0
    static Series shifted_variable(const FieldElement& c0, int precision);

    const FieldPtr& field() const noexcept { return field_; }
    int offset() const noexcept { return offset_; }
    int precision() const noexcept { return offset_ + static_cast<int>(c_.size()); }
    const std::vector<FieldElement>& coeffs() const noexcept { return c_; }
    /// Coefficient of s^i (zero below the offset); i must be below precision().
    FieldElement coeff(int i) const;

    /// Strips leading zero coefficients. The result is "zero to precision" if no
    /// nonzero coefficient is known.
    Series normalized() const;
    bool known_nonzero() const { return !normalized().c_.empty(); }
    /// Valuation; throws if the series vanishes to its precision.
    int valuation() const;
    FieldElement leading() const;

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o);
    Series inverse() const;
    Series truncated(int precision) const;

private:
    FieldPtr field_;
    int offset_ = 0;
    std::vector<FieldElement> c_;
};

inline Series operator+(Series a, const Series& b) { return a += b; }
inline Series operator-(Series a, const Series& b) { return a -= b; }
inline Series operator*(Series a, const Series& b) { return a *= b; }

/// p(x(s)) for a polynomial with prime-field (or x's field) coefficients.
Series compose(const Polynomial& p, const Series& x);
Series compose(const RationalFunction& r, const Series& x);

}  // namespace adele
