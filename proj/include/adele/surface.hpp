#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "adele/polynomial.hpp"
#include "adele/signs.hpp"

namespace adele {

using Exponent = std::array<int, 3>;

/// Polynomial in X0, X1, X2 (affine computations use X0 = u, X1 = v only).
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(FieldPtr f) : field_(std::move(f)) {}
    MultiPoly(FieldPtr f, const std::vector<std::pair<Exponent, int64_t>>& terms);

    static MultiPoly constant(const FieldElement& c);
    static MultiPoly variable(const FieldPtr& f, int i);
    static MultiPoly monomial(const FieldElement& c, const Exponent& e);

    const FieldPtr& field() const noexcept { return field_; }
    const std::map<Exponent, FieldElement>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int total_degree() const;
    int degree_in(int var) const;
    bool is_homogeneous() const;
    FieldElement coeff(const Exponent& e) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const FieldElement& c) const;
    MultiPoly pow(int e) const;

    MultiPoly derivative(int var) const;
    MultiPoly lift_to(const FieldPtr& f) const;
    FieldElement eval(const std::array<FieldElement, 3>& at) const;
    /// X_i -> images[i]
    MultiPoly substitute(const std::array<MultiPoly, 3>& images) const;
    /// Sets X_j = 1 and renames the remaining variables to X0, X1 in order.
    MultiPoly dehomogenize(int j) const;
    /// Coefficients of powers of X_var as univariate polynomials in X_other
    /// (other variables must be absent).
    std::vector<Polynomial> coefficients_in(int var, int other) const;
    /// Univariate polynomial in X_var after substituting values for the others.
    Polynomial restrict_to(int var, const std::array<FieldElement, 3>& values) const;
    /// Remainder under lex division by a single polynomial.
    MultiPoly remainder(const MultiPoly& divisor) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator<(const MultiPoly& o) const { return terms_ < o.terms_; }
    std::string to_string() const;

private:
    void add_term(const Exponent& e, const FieldElement& c);
    FieldPtr field_;
    std::map<Exponent, FieldElement> terms_;
};

inline MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
inline MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

/// Local intersection multiplicity; `infinite` when the curves share a component
/// through the point.
struct Multiplicity {
    bool infinite = false;
    int value = 0;
    bool operator==(const Multiplicity&) const = default;
};

/// Intersection multiplicity of affine curves F(u, v) = 0 and G(u, v) = 0 at (a, b).
Multiplicity fulton_multiplicity(const MultiPoly& F, const MultiPoly& G, const FieldElement& a, const FieldElement& b);
Multiplicity fulton_multiplicity(const MultiPoly& F, const MultiPoly& G);  // at the origin

/// Homogeneous form over GF(p), irreducible over GF(p), scaled so that its
/// largest monomial has coefficient 1.
class PlaneCurve {
public:
    PlaneCurve() = default;
    /// Checks homogeneity and, for degree <= 3, the absence of linear factors.
    explicit PlaneCurve(const MultiPoly& form);
    static PlaneCurve line(const FieldPtr& k, int64_t a0, int64_t a1, int64_t a2);

    const MultiPoly& form() const noexcept { return form_; }
    int degree() const noexcept { return form_.total_degree(); }
    /// False when irreducibility was assumed rather than checked (degree > 3).
    bool verified() const noexcept { return verified_; }

    bool operator==(const PlaneCurve& o) const { return form_ == o.form_; }
    bool operator<(const PlaneCurve& o) const;
    std::string to_string() const { return form_.to_string(); }

private:
    MultiPoly form_;
    bool verified_ = true;
};

/// Projective point scaled so that its last nonzero coordinate is 1.
struct ProjectivePoint {
    std::array<FieldElement, 3> coords;

    static ProjectivePoint normalized(std::array<FieldElement, 3> c);
    const FieldPtr& field() const { return coords[0].field(); }
    /// index of the coordinate equal to 1
    int chart() const;
    /// Size of the Frobenius orbit, the degree of the closed point.
    int orbit_degree() const;
    ProjectivePoint frobenius() const;
    /// Smallest point of the Frobenius orbit.
    ProjectivePoint orbit_representative() const;
    /// The affine coordinates in the chart.
    std::array<FieldElement, 2> affine() const;

    bool operator==(const ProjectivePoint& o) const { return coords == o.coords; }
    bool operator<(const ProjectivePoint& o) const;
    std::string to_string() const;
};

class SurfaceDivisor {
public:
    SurfaceDivisor() = default;
    void add(const PlaneCurve& C, int mult);
    static SurfaceDivisor of(const PlaneCurve& C, int mult = 1);
    const std::map<PlaneCurve, int>& terms() const noexcept { return terms_; }
    int degree() const;
    bool empty() const noexcept { return terms_.empty(); }

private:
    std::map<PlaneCurve, int> terms_;
};

/// c * prod F_i^e_i, a rational function on P^2 when the total degree is 0.
struct SurfaceFunction {
    FieldElement constant;
    std::map<PlaneCurve, int> factors;

    static SurfaceFunction unit(const FieldPtr& k, int64_t c = 1);
    static SurfaceFunction ratio(const PlaneCurve& num, const PlaneCurve& den, int exponent = 1);
    int degree() const;
    int order_along(const PlaneCurve& C) const;
    SurfaceFunction& operator*=(const SurfaceFunction& o);
    SurfaceFunction pow(int e) const;
    SurfaceFunction inverse() const { return pow(-1); }
    bool operator==(const SurfaceFunction& o) const { return constant == o.constant && factors == o.factors; }
    std::string to_string() const;
};

inline SurfaceFunction operator*(SurfaceFunction a, const SurfaceFunction& b) { return a *= b; }

/// Formal product of symbols {f, g}^e of factored functions of degree 0.
struct SurfaceSymbol {
    struct Entry {
        SurfaceFunction f, g;
        int exponent;
    };
    std::vector<Entry> entries;

    static SurfaceSymbol single(const SurfaceFunction& f, const SurfaceFunction& g, int exponent = 1);
    /// Throws unless every entry function has degree 0.
    void validate() const;
    /// Curves appearing in some entry.
    std::vector<PlaneCurve> support() const;
};

struct Flag2 {
    PlaneCurve curve;
    ProjectivePoint point;
    int chart() const { return point.chart(); }
};

/// First residue: the tame symbol along C, a factored function on C.
SurfaceFunction curve_tame_symbol(const SurfaceSymbol& s, const PlaneCurve& C);
/// Order of vanishing at x of the restriction of phi to C.
int valuation_on_curve(const SurfaceFunction& phi, const PlaneCurve& C, const ProjectivePoint& x);
/// The two-step residue of s at the flag, an integer.
int flag_residue(const SurfaceSymbol& s, const Flag2& flag);
/// Sum of the flag residues over all curves of the support of s through x.
int parshin_point_reciprocity(const SurfaceSymbol& s, const ProjectivePoint& x);

struct IntersectionOptions {
    int ext_bound = 6;
    SignConventions signs = kSignConventions;
};

/// Closed points of C1 ∩ C2 (orbit representatives over GF(p^K)).
struct IntersectionPoint {
    ProjectivePoint point;
    int degree;
    int multiplicity;  // Fulton
};

/// Smallest K such that C1 ∩ C2 is defined over GF(p^K). Throws on a common component.
int intersection_field_degree(const PlaneCurve& C1, const PlaneCurve& C2);
std::vector<IntersectionPoint> intersection_points(const PlaneCurve& C1, const PlaneCurve& C2, const FieldPtr& field);

/// Count of C1 ∩ C2 with multiplicity read off a resultant after a change of
/// coordinates moving (0:1:0) off both curves.
int bezout_oracle(const PlaneCurve& C1, const PlaneCurve& C2);

struct IntersectionReport {
    int number = 0;
    /// zero-cycle of the flag-wise product: orbit representative -> multiplicity
    std::map<ProjectivePoint, int> cycle;
    std::map<ProjectivePoint, int> degrees;
    int fulton_sum = 0;
    int bezout = 0;
    int field_degree = 1;
    PlaneCurve auxiliary_line;
    std::size_t flags = 0;
};

IntersectionReport intersect(const SurfaceDivisor& D1, const SurfaceDivisor& D2, const IntersectionOptions& opt = {});
IntersectionReport intersect_serial(const SurfaceDivisor& D1, const SurfaceDivisor& D2, const IntersectionOptions& opt = {});
int intersection_number(const SurfaceDivisor& D1, const SurfaceDivisor& D2, const IntersectionOptions& opt = {});
std::map<ProjectivePoint, int> surface_product_cycle(const SurfaceDivisor& D1, const SurfaceDivisor& D2,
                                                     const IntersectionOptions& opt = {});

/// Pole order along each curve of the support of sum e (df/f ^ dg/g).
std::map<PlaneCurve, int> dlog2_pole_orders(const SurfaceSymbol& s);
int dlog2_pole_check(const SurfaceSymbol& s);

}  // namespace adele
