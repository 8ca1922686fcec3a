#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "adele/curve.hpp"
#include "adele/series.hpp"

namespace adele {

/// A closed point of a curve, described over the base field.
///
/// Projective line: a monic irreducible polynomial in t, or infinity.
/// Elliptic curve: the point O, or a monic irreducible polynomial pi(x) together
/// with the shape of the fibre above it: two places (split, distinguished by a
/// square root y = Y(x) mod pi), one place of twice the degree (inert), or one
/// place where y vanishes (ramified).
class Place {
public:
    enum class Fibre { None, Split, Inert, Ramified };

    Place() = default;
    static Place infinity(const CurvePtr& c);
    static Place finite(const CurvePtr& c, const Polynomial& pi);  // projective line
    static Place split(const CurvePtr& c, const Polynomial& pi, const Polynomial& y_rep);
    static Place inert(const CurvePtr& c, const Polynomial& pi);
    static Place ramified(const CurvePtr& c, const Polynomial& pi);

    /// Closed point through a point with coordinates in an extension of GF(p).
    static Place from_root(const CurvePtr& c, const FieldElement& t0);
    static Place from_point(const CurvePtr& c, const FieldElement& x0, const FieldElement& y0);
    /// All places lying over the irreducible pi (one on the projective line).
    static std::vector<Place> over(const CurvePtr& c, const Polynomial& pi);

    const CurvePtr& curve() const noexcept { return curve_; }
    bool is_infinity() const noexcept { return infinity_; }
    const Polynomial& pi() const noexcept { return pi_; }
    Fibre fibre() const noexcept { return fibre_; }
    const Polynomial& y_rep() const noexcept { return y_rep_; }
    /// [k(v) : k]
    int degree() const;
    /// Ramification index of x - x0 over the x-line (2 only for ramified fibres).
    int x_ramification() const { return fibre_ == Fibre::Ramified ? 2 : 1; }

    bool operator==(const Place& o) const;
    bool operator!=(const Place& o) const { return !(*this == o); }
    bool operator<(const Place& o) const;

    std::string to_string() const;

private:
    CurvePtr curve_;
    bool infinity_ = false;
    Polynomial pi_;
    Fibre fibre_ = Fibre::None;
    Polynomial y_rep_;
};

std::ostream& operator<<(std::ostream& os, const Place& v);

/// Residue field of a place and a representative point in it.
struct ResiduePoint {
    FieldPtr field;
    FieldElement x0;  // t0 on the projective line
    FieldElement y0;  // elliptic only
};
/// Not defined at infinity.
ResiduePoint residue_point(const Place& v);

/// Embedding of the function field into k(v)((s)): the expansions of the
/// coordinate functions in a fixed uniformizer s at v.
///
///   P^1, finite:    t = t0 + s
///   P^1, infinity:  t = 1/s
///   elliptic, O:    s = x/y, x = s^-2 X(s), y = s^-3 X(s), X(0) = 1
///   elliptic, y0 != 0: x = x0 + s, y = sqrt(x^3+ax+b) with y(0) = y0
///   elliptic, y0 = 0:  y = s, x = x0 + s^2/g(x) where x^3+ax+b = (x - x0) g(x)
struct LocalCoordinates {
    FieldPtr field;
    Series x, y;
};
LocalCoordinates local_coordinates(const Place& v, int relative_precision);

/// Expansion of f at v known at least to s^(abs_precision - 1).
Series expand(const FunctionFieldElement& f, const Place& v, int abs_precision);

struct LocalValue {
    int valuation;
    FieldElement leading;  // in k(v), relative to the uniformizer of local_coordinates
};
LocalValue local_leading(const FunctionFieldElement& f, const Place& v);

/// Normalized discrete valuation; throws for f = 0.
int valuation(const FunctionFieldElement& f, const Place& v);
/// Value in k(v) of a function regular and nonvanishing at v.
FieldElement evaluate_unit(const FunctionFieldElement& f, const Place& v);

/// Formal sum of places with nonzero integer multiplicities.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(CurvePtr c) : curve_(std::move(c)) {}
    static Divisor point(const Place& v, int mult = 1);

    const CurvePtr& curve() const noexcept { return curve_; }
    const std::map<Place, int>& terms() const noexcept { return terms_; }
    int operator[](const Place& v) const;
    void add(const Place& v, int mult);
    bool empty() const noexcept { return terms_.empty(); }
    int degree() const;
    bool is_effective() const;

    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    Divisor operator-() const;
    Divisor operator*(int k) const;
    bool operator==(const Divisor& o) const { return terms_ == o.terms_; }
    bool operator!=(const Divisor& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    CurvePtr curve_;
    std::map<Place, int> terms_;
};

inline Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
inline Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }

/// Places where f has a zero or a pole, in canonical order.
std::vector<Place> support(const FunctionFieldElement& f);
Divisor principal_divisor(const FunctionFieldElement& f);
/// Zeros and poles of f contained in a candidate list (places where f is
/// possibly non-unit), plus infinity.
std::vector<Place> candidate_places(const FunctionFieldElement& f);

/// The point at infinity of the model (infinity on P^1, O on the elliptic curve).
Place base_point(const CurvePtr& c);

/// A function with valuation exactly 1 at v.
FunctionFieldElement local_parameter(const Place& v);

}  // namespace adele
