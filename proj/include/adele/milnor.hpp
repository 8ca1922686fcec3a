#pragma once

#include <map>
#include <vector>

#include "adele/place.hpp"

namespace adele {

/// Formal product of Steinberg symbols {f, g}^e in K2 of a function field.
class MilnorSymbol {
public:
    struct Entry {
        FunctionFieldElement f, g;
        int exponent;
    };

    MilnorSymbol() = default;
    explicit MilnorSymbol(CurvePtr c) : curve_(std::move(c)) {}
    static MilnorSymbol single(const FunctionFieldElement& f, const FunctionFieldElement& g, int exponent = 1);

    const CurvePtr& curve() const noexcept { return curve_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    /// Throws on a zero function; drops zero exponents.
    void add(const FunctionFieldElement& f, const FunctionFieldElement& g, int exponent = 1);

    MilnorSymbol& operator*=(const MilnorSymbol& o);
    MilnorSymbol inverse() const;

private:
    CurvePtr curve_;
    std::vector<Entry> entries_;
};

inline MilnorSymbol operator*(MilnorSymbol a, const MilnorSymbol& b) { return a *= b; }

/// Values in residue fields indexed by place.
using PlaceUnits = std::map<Place, FieldElement>;

/// (-1)^(v(f)v(g)) f^v(g) / g^v(f) reduced at v, an element of k(v).
FieldElement tame_symbol(const FunctionFieldElement& f, const FunctionFieldElement& g, const Place& v);
FieldElement tame_symbol(const MilnorSymbol& s, const Place& v);

/// Places where some entry function has a zero or a pole.
std::vector<Place> symbol_support(const MilnorSymbol& s);
/// Tame symbols at every place with trivial values pruned.
PlaceUnits gersten_boundary(const MilnorSymbol& s);
/// Product of the norms of all values down to GF(p); 1 for an empty map.
FieldElement direct_image(const PlaceUnits& cocycle, const FieldPtr& base);
/// Product over all places of the norms of the tame symbols.
FieldElement weil_reciprocity_check(const MilnorSymbol& s);

/// omega dt on the projective line.
struct RationalOneForm {
    CurvePtr curve;
    RationalFunction coefficient;
};

/// f'/f dt
RationalOneForm dlog_k1(const FunctionFieldElement& f);
/// Trace to GF(p) of the coefficient of s^-1 in the expansion of omega at v.
FieldElement form_residue(const RationalOneForm& omega, const Place& v);
/// Places where omega has a pole.
std::vector<Place> polar_places(const RationalOneForm& omega);
int pole_order(const RationalOneForm& omega, const Place& v);
/// Largest pole order of dlog f over all places, 0 for constants.
int dlog_pole_order_check(const FunctionFieldElement& f);

}  // namespace adele
