#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "adele/milnor.hpp"
#include "adele/signs.hpp"

namespace adele {

/// Coefficients of an adelic cochain: the sheaf O(D), or Milnor K_n.
struct AdeleCoefficients {
    enum class Kind { Coherent, KWeight };
    Kind kind = Kind::KWeight;
    Divisor divisor;
    int weight = 1;

    static AdeleCoefficients coherent(Divisor D) { return {Kind::Coherent, std::move(D), 0}; }
    static AdeleCoefficients k_weight(int n) { return {Kind::KWeight, Divisor(), n}; }
    bool is_coherent() const noexcept { return kind == Kind::Coherent; }
};

/// A component: an integer (K_0), a function (K_1 or O(D)) or a symbol (K_2).
using AdeleValue = std::variant<int64_t, FunctionFieldElement, MilnorSymbol>;

/// Element of A(X, F)^p in finite presentation.
///
/// Degree 0: a generic component f_X and local components f_x, equal to
/// `local_tail` (or to f_X when it is absent) except at finitely many places.
/// Degree 1: components f_{X,x}, equal to `tail` except at finitely many places.
struct AdeleCochain {
    CurvePtr curve;
    int degree = 0;
    AdeleCoefficients coefficients;
    AdeleValue generic;
    std::optional<AdeleValue> local_tail;
    AdeleValue tail;
    std::map<Place, AdeleValue> exceptions;

    static AdeleCochain zero_form(const CurvePtr& c, int degree, AdeleCoefficients coeffs);
    /// Degree-0 cochain whose local components all equal f.
    static AdeleCochain global(const AdeleValue& f, AdeleCoefficients coeffs);

    /// Local component at v (degree 0) or the component over (X, v) (degree 1).
    AdeleValue component(const Place& v) const;
    /// True when every component is the identity of its group.
    bool is_zero() const;
};

AdeleValue identity_value(const CurvePtr& c, const AdeleCoefficients& coeffs);
bool is_identity(const AdeleValue& a);

/// (f_X, {f_x}) -> {f_x - f_X} (written multiplicatively for K-coefficients).
/// On a degree-1 cochain returns the empty degree-2 cochain: A^2 = 0 on a curve.
AdeleCochain adelic_differential(const AdeleCochain& c);

struct CohomologyReport {
    int h0 = 0;
    int h1 = 0;
    /// multiple of the base point added to D when the principal parts stabilized
    int bound = 0;
    std::vector<FunctionFieldElement> basis;
};

/// Dimensions of H^0 and H^1 of A(X, O(D)).
CohomologyReport cohomology_dims(const CurvePtr& c, const Divisor& D);
/// Same computation with the principal parts expanded serially.
CohomologyReport cohomology_dims_serial(const CurvePtr& c, const Divisor& D);

/// The one-cocycle [D]: s_v^-1 over (X, v) for v in supp D, 1 elsewhere.
AdeleCochain divisor_cocycle(const Divisor& D);

/// Image of a degree-1 cochain in the Gersten complex.
struct GerstenImage {
    int weight = 1;
    Divisor cycle;      // weight 1
    PlaceUnits units;   // weight 2
};
GerstenImage nu_curve(const AdeleCochain& c, const SignConventions& signs = kSignConventions);

/// Flag-wise product (f g)_{0..p+q} = f_{0..p} g_{p..p+q}.
AdeleCochain cochain_product(const AdeleCochain& f, const AdeleCochain& g);

}  // namespace adele
