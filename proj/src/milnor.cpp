#include "adele/milnor.hpp"

#include <algorithm>

#include "adele/error.hpp"

namespace adele {

MilnorSymbol MilnorSymbol::single(const FunctionFieldElement& f, const FunctionFieldElement& g, int exponent) {
    MilnorSymbol s(f.curve());
    s.add(f, g, exponent);
    return s;
}

void MilnorSymbol::add(const FunctionFieldElement& f, const FunctionFieldElement& g, int exponent) {
    if (f.is_zero() || g.is_zero()) throw Error("symbol entry with zero function");
    if (!curve_) curve_ = f.curve();
    if (!same_curve(curve_, f.curve()) || !same_curve(curve_, g.curve())) throw Error("symbol entries from different curves");
    if (exponent == 0) return;
    entries_.push_back({f, g, exponent});
}

MilnorSymbol& MilnorSymbol::operator*=(const MilnorSymbol& o) {
    for (const auto& e : o.entries_) add(e.f, e.g, e.exponent);
    return *this;
}

MilnorSymbol MilnorSymbol::inverse() const {
    MilnorSymbol r(curve_);
    for (const auto& e : entries_) r.add(e.f, e.g, -e.exponent);
    return r;
}

FieldElement tame_symbol(const FunctionFieldElement& f, const FunctionFieldElement& g, const Place& v) {
    if (f.is_zero() || g.is_zero()) throw Error("symbol entry with zero function");
    const LocalValue lf = local_leading(f, v);
    const LocalValue lg = local_leading(g, v);
    FieldElement r = lf.leading.pow(lg.valuation) / lg.leading.pow(lf.valuation);
    if ((lf.valuation * lg.valuation) % 2 != 0) r = -r;
    return r;
}

FieldElement tame_symbol(const MilnorSymbol& s, const Place& v) {
    FieldElement acc;
    for (const auto& e : s.entries()) {
        FieldElement t = tame_symbol(e.f, e.g, v).pow(e.exponent);
        acc = acc.valid() ? acc * t : t;
    }
    if (!acc.valid()) {
        if (v.is_infinity()) return FieldElement::one(v.curve()->base());
        return FieldElement::one(residue_point(v).field);
    }
    return acc;
}

std::vector<Place> symbol_support(const MilnorSymbol& s) {
    std::vector<Place> out;
    for (const auto& e : s.entries())
        for (const auto* h : {&e.f, &e.g})
            for (auto& v : candidate_places(*h)) out.push_back(std::move(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PlaceUnits gersten_boundary(const MilnorSymbol& s) {
    PlaceUnits out;
    for (const auto& v : symbol_support(s)) {
        FieldElement t = tame_symbol(s, v);
        if (!t.is_one()) out.emplace(v, std::move(t));
    }
    return out;
}

FieldElement direct_image(const PlaceUnits& cocycle, const FieldPtr& base) {
    FieldElement acc = FieldElement::one(base);
    for (const auto& [v, a] : cocycle) acc *= norm_to_prime_field(a);
    return acc;
}

FieldElement weil_reciprocity_check(const MilnorSymbol& s) {
    if (!s.curve()) throw Error("empty symbol has no curve");
    return direct_image(gersten_boundary(s), s.curve()->base());
}

RationalOneForm dlog_k1(const FunctionFieldElement& f) {
    if (f.is_zero()) throw Error("dlog of zero undefined");
    if (f.curve()->is_elliptic()) throw Error("dlog_k1 is implemented on the projective line");
    return {f.curve(), f.a().derivative() / f.a()};
}

namespace {

// valuation of dt itself
int dt_valuation(const Place& v) { return v.is_infinity() ? -2 : 0; }

}  // namespace

FieldElement form_residue(const RationalOneForm& omega, const Place& v) {
    const FieldPtr& k = omega.curve->base();
    if (omega.coefficient.is_zero()) return FieldElement::zero(k);
    FunctionFieldElement w(omega.curve, omega.coefficient);
    if (v.is_infinity()) {
        // dt = -s^-2 ds
        return -expand(w, v, 2).coeff(1).trace();
    }
    return expand(w, v, 0).coeff(-1).trace();
}

std::vector<Place> polar_places(const RationalOneForm& omega) {
    std::vector<Place> out;
    if (omega.coefficient.is_zero()) return out;
    FunctionFieldElement w(omega.curve, omega.coefficient);
    for (auto& v : candidate_places(w))
        if (pole_order(omega, v) > 0) out.push_back(std::move(v));
    return out;
}

int pole_order(const RationalOneForm& omega, const Place& v) {
    if (omega.coefficient.is_zero()) return 0;
    FunctionFieldElement w(omega.curve, omega.coefficient);
    return std::max(0, -(valuation(w, v) + dt_valuation(v)));
}

int dlog_pole_order_check(const FunctionFieldElement& f) {
    const RationalOneForm omega = dlog_k1(f);
    int best = 0;
    for (const auto& v : polar_places(omega)) best = std::max(best, pole_order(omega, v));
    return best;
}

}  // namespace adele
