#include "adele/elliptic.hpp"

#include <algorithm>

#include "adele/error.hpp"

namespace adele {

bool EcPoint::operator==(const EcPoint& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return same_field(x.field(), o.x.field()) && x == o.x && y == o.y;
}

bool EcPoint::operator<(const EcPoint& o) const {
    if (infinity != o.infinity) return infinity;
    if (infinity) return false;
    if (x != o.x) return x < o.x;
    return y < o.y;
}

std::string EcPoint::to_string() const {
    if (infinity) return "O";
    return "(" + x.to_string() + ", " + y.to_string() + ")";
}

namespace {

FieldElement lifted(const FieldElement& a, const FieldPtr& f) {
    return same_field(a.field(), f) ? a : a.lift_to(f);
}

void require_on_curve(const CurvePtr& c, const EcPoint& P) {
    if (!on_curve(c, P)) throw Error("point " + P.to_string() + " is not on the curve");
}

}  // namespace

bool on_curve(const CurvePtr& c, const EcPoint& P) {
    if (!c->is_elliptic()) throw Error("group law requires an elliptic curve");
    if (P.infinity) return true;
    const FieldPtr& f = P.x.field();
    if (!same_field(f, P.y.field())) return false;
    return P.y * P.y == P.x * P.x * P.x + lifted(c->a(), f) * P.x + lifted(c->b(), f);
}

EcPoint ec_negate(const EcPoint& P) {
    if (P.infinity) return P;
    return EcPoint::affine(P.x, -P.y);
}

EcPoint ec_add(const CurvePtr& c, const EcPoint& P, const EcPoint& Q) {
    require_on_curve(c, P);
    require_on_curve(c, Q);
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    if (!same_field(P.x.field(), Q.x.field())) throw Error("points live over different fields");
    const FieldPtr& f = P.x.field();
    FieldElement lambda;
    if (P.x == Q.x) {
        if ((P.y + Q.y).is_zero()) return EcPoint::zero();
        lambda = (FieldElement(f, 3) * P.x * P.x + lifted(c->a(), f)) / (P.y + P.y);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    FieldElement x3 = lambda * lambda - P.x - Q.x;
    FieldElement y3 = lambda * (P.x - x3) - P.y;
    return EcPoint::affine(std::move(x3), std::move(y3));
}

EcPoint scalar_multiple(const CurvePtr& c, int64_t n, const EcPoint& P) {
    require_on_curve(c, P);
    EcPoint base = n < 0 ? ec_negate(P) : P;
    uint64_t k = n < 0 ? static_cast<uint64_t>(-(n + 1)) + 1 : static_cast<uint64_t>(n);
    EcPoint acc = EcPoint::zero();
    while (k) {
        if (k & 1) acc = ec_add(c, acc, base);
        base = ec_add(c, base, base);
        k >>= 1;
    }
    return acc;
}

std::vector<EcPoint> rational_points(const CurvePtr& c, const FieldPtr& field) {
    if (!c->is_elliptic()) throw Error("rational points requested on a non-elliptic model");
    const FieldPtr f = field ? field : c->base();
    if (f->characteristic() != c->base()->characteristic()) throw Error("field characteristic differs from the curve's");
    const Polynomial h = c->cubic().lift_to(f);
    std::vector<EcPoint> out{EcPoint::zero()};
    for (const FieldElement& x : enumerate_field(f)) {
        const FieldElement hx = h(x);
        if (hx.is_zero()) {
            out.push_back(EcPoint::affine(x, hx));
            continue;
        }
        Polynomial sq(f, std::vector<FieldElement>{-hx, FieldElement::zero(f), FieldElement::one(f)});
        for (const auto& y : roots(sq)) out.push_back(EcPoint::affine(x, y));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EcPoint> torsion_points(const CurvePtr& c, int64_t l, const FieldPtr& field) {
    if (l < 1) throw Error("l must be positive");
    if (l % c->base()->characteristic() == 0) throw Error("l must be prime to characteristic");
    std::vector<EcPoint> out;
    for (auto& P : rational_points(c, field))
        if (scalar_multiple(c, l, P).infinity) out.push_back(std::move(P));
    return out;
}

}  // namespace adele
