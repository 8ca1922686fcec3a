#pragma once

#include <string>
#include <vector>

#include "adele/curve.hpp"

namespace adele {

/// Point of an elliptic curve with coordinates in some extension of its base
/// field, or the neutral element O.
struct EcPoint {
    bool infinity = true;
    FieldElement x, y;

    static EcPoint zero() { return {}; }
    static EcPoint affine(FieldElement x, FieldElement y) { return {false, std::move(x), std::move(y)}; }

    bool operator==(const EcPoint& o) const;
    bool operator!=(const EcPoint& o) const { return !(*this == o); }
    bool operator<(const EcPoint& o) const;
    std::string to_string() const;
};

bool on_curve(const CurvePtr& c, const EcPoint& P);
EcPoint ec_negate(const EcPoint& P);
/// Chord-tangent addition; throws if either point is off the curve.
EcPoint ec_add(const CurvePtr& c, const EcPoint& P, const EcPoint& Q);
EcPoint scalar_multiple(const CurvePtr& c, int64_t n, const EcPoint& P);

/// All points with coordinates in `field` (defaults to the base field), sorted, O first.
std::vector<EcPoint> rational_points(const CurvePtr& c, const FieldPtr& field = nullptr);
/// Rational points killed by l.
std::vector<EcPoint> torsion_points(const CurvePtr& c, int64_t l, const FieldPtr& field = nullptr);

}  // namespace adele
