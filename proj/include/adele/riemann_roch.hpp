#pragma once

#include <vector>

#include "adele/place.hpp"

namespace adele {

/// Basis of L(D) = {f : div f + D >= 0} over the base field, ordered by pole
/// order at the base point.
std::vector<FunctionFieldElement> riemann_roch_space(const Divisor& D);

/// The canonical divisor of the model: -2 inf on P^1, 0 on the elliptic curve.
Divisor canonical_divisor(const CurvePtr& c);

/// Coordinates over GF(p) of the coefficients of s^lo .. s^(hi-1) of a series
/// with coefficients in an extension field.
std::vector<uint32_t> flatten_coefficients(const Series& s, int lo, int hi, int residue_degree);

}  // namespace adele
