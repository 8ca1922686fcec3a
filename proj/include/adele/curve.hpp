#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "adele/rational_function.hpp"

namespace adele {

enum class CurveKind { ProjectiveLine, Elliptic };

/// The projective line over GF(p), or the smooth Weierstrass curve
/// y^2 = x^3 + a x + b over GF(p).
class CurveModel {
public:
    static std::shared_ptr<const CurveModel> projective_line(FieldPtr base);
    /// Throws if the discriminant -16(4a^3 + 27b^2) vanishes.
    static std::shared_ptr<const CurveModel> elliptic(FieldPtr base, int64_t a, int64_t b);

    CurveKind kind() const noexcept { return kind_; }
    bool is_elliptic() const noexcept { return kind_ == CurveKind::Elliptic; }
    const FieldPtr& base() const noexcept { return base_; }
    int genus() const noexcept { return is_elliptic() ? 1 : 0; }
    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    /// x^3 + a x + b (elliptic only)
    const Polynomial& cubic() const { return cubic_; }

    bool operator==(const CurveModel& o) const;
    std::string describe() const;

private:
    CurveModel() = default;
    CurveKind kind_ = CurveKind::ProjectiveLine;
    FieldPtr base_;
    FieldElement a_, b_;
    Polynomial cubic_;
};

using CurvePtr = std::shared_ptr<const CurveModel>;

bool same_curve(const CurvePtr& a, const CurvePtr& b) noexcept;

/// Element a(x) + b(x) y of the function field. On the projective line b = 0 and
/// the variable is t.
class FunctionFieldElement {
public:
    FunctionFieldElement() = default;
    FunctionFieldElement(CurvePtr curve, RationalFunction a);
    FunctionFieldElement(CurvePtr curve, RationalFunction a, RationalFunction b);

    static FunctionFieldElement constant(const CurvePtr& c, int64_t v);
    static FunctionFieldElement constant(const CurvePtr& c, const FieldElement& v);
    /// t on the projective line, x on the elliptic curve
    static FunctionFieldElement x(const CurvePtr& c);
    static FunctionFieldElement y(const CurvePtr& c);

    const CurvePtr& curve() const noexcept { return curve_; }
    const RationalFunction& a() const noexcept { return a_; }
    const RationalFunction& b() const noexcept { return b_; }
    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
    bool is_constant() const noexcept { return b_.is_zero() && a_.is_constant(); }

    FunctionFieldElement operator-() const;
    FunctionFieldElement& operator+=(const FunctionFieldElement& o);
    FunctionFieldElement& operator-=(const FunctionFieldElement& o);
    FunctionFieldElement& operator*=(const FunctionFieldElement& o);
    FunctionFieldElement& operator/=(const FunctionFieldElement& o);
    FunctionFieldElement inverse() const;
    FunctionFieldElement pow(int e) const;
    /// a - b y
    FunctionFieldElement conjugate() const;
    /// a^2 - b^2 (x^3 + a x + b), an element of k(x)
    RationalFunction norm_down() const;

    /// (A + B y) / C with polynomials A, B and monic C.
    struct Cleared {
        Polynomial A, B, C;
    };
    Cleared cleared() const;

    bool operator==(const FunctionFieldElement& o) const;
    bool operator!=(const FunctionFieldElement& o) const { return !(*this == o); }
    bool operator<(const FunctionFieldElement& o) const;

    std::string to_string() const;

private:
    void check(const FunctionFieldElement& o) const;
    CurvePtr curve_;
    RationalFunction a_, b_;
};

inline FunctionFieldElement operator+(FunctionFieldElement a, const FunctionFieldElement& b) { return a += b; }
inline FunctionFieldElement operator-(FunctionFieldElement a, const FunctionFieldElement& b) { return a -= b; }
inline FunctionFieldElement operator*(FunctionFieldElement a, const FunctionFieldElement& b) { return a *= b; }
inline FunctionFieldElement operator/(FunctionFieldElement a, const FunctionFieldElement& b) { return a /= b; }

std::ostream& operator<<(std::ostream& os, const FunctionFieldElement& f);

}  // namespace adele
