#include "adele/place.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "adele/error.hpp"

namespace adele {

namespace {

FieldPtr residue_field_of(const Polynomial& pi) {
    const uint32_t p = pi.field()->characteristic();
    if (pi.degree() == 1) return FieldSpec::prime(p);
    return FieldSpec::extension(p, pi.prime_coeffs());
}

// the class of the variable in GF(p)[x]/(pi)
FieldElement root_class(const Polynomial& pi, const FieldPtr& k) {
    if (pi.degree() == 1) return -pi.coeff(0);
    return FieldElement::generator(k);
}

void require_monic_irreducible(const Polynomial& pi) {
    if (pi.degree() < 1 || !pi.is_monic() || pi.field()->degree() != 1 ||
        !gfp::is_irreducible(pi.prime_coeffs(), pi.field()->characteristic()))
        throw Error("place polynomial must be monic irreducible over the base field: " + pi.to_string());
}

}  // namespace

Place Place::infinity(const CurvePtr& c) {
    Place v;
    v.curve_ = c;
    v.infinity_ = true;
    return v;
}

Place Place::finite(const CurvePtr& c, const Polynomial& pi) {
    if (c->is_elliptic()) throw Error("elliptic places are described by their fibre");
    require_monic_irreducible(pi);
    Place v;
    v.curve_ = c;
    v.pi_ = pi;
    return v;
}

Place Place::split(const CurvePtr& c, const Polynomial& pi, const Polynomial& y_rep) {
    Place v;
    v.curve_ = c;
    v.pi_ = pi;
    v.fibre_ = Fibre::Split;
    v.y_rep_ = y_rep % pi;
    return v;
}

Place Place::inert(const CurvePtr& c, const Polynomial& pi) {
    Place v;
    v.curve_ = c;
    v.pi_ = pi;
    v.fibre_ = Fibre::Inert;
    return v;
}

Place Place::ramified(const CurvePtr& c, const Polynomial& pi) {
    Place v;
    v.curve_ = c;
    v.pi_ = pi;
    v.fibre_ = Fibre::Ramified;
    return v;
}

std::vector<Place> Place::over(const CurvePtr& c, const Polynomial& pi) {
    require_monic_irreducible(pi);
    if (!c->is_elliptic()) return {finite(c, pi)};
    const FieldPtr k = residue_field_of(pi);
    const FieldElement x0 = root_class(pi, k);
    const FieldElement hx = c->cubic()(x0);
    if (hx.is_zero()) return {ramified(c, pi)};
    Polynomial sq(k, std::vector<FieldElement>{-hx, FieldElement::zero(k), FieldElement::one(k)});
    auto rts = roots(sq);
    if (rts.empty()) return {inert(c, pi)};
    std::vector<Place> out;
    for (const auto& r : rts) {
        std::vector<int64_t> coeffs(r.coeffs().begin(), r.coeffs().end());
        out.push_back(split(c, pi, Polynomial(c->base(), coeffs)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Place Place::from_root(const CurvePtr& c, const FieldElement& t0) {
    if (c->is_elliptic()) throw Error("from_root applies to the projective line");
    return finite(c, minimal_polynomial(t0));
}

Place Place::from_point(const CurvePtr& c, const FieldElement& x0, const FieldElement& y0) {
    if (!c->is_elliptic()) throw Error("from_point applies to elliptic curves");
    if (y0 * y0 != c->cubic()(x0)) throw Error("point (" + x0.to_string() + ", " + y0.to_string() + ") is not on the curve");
    Polynomial pi = minimal_polynomial(x0);
    if (y0.is_zero()) return ramified(c, pi);
    for (const Place& v : over(c, pi)) {
        if (v.fibre() == Fibre::Inert) return v;
        if (v.y_rep().eval_lifted(x0) == y0) return v;
    }
    throw Error("could not locate the place of a curve point");  // unreachable for points on the curve
}

int Place::degree() const {
    if (infinity_) return 1;
    return fibre_ == Fibre::Inert ? 2 * pi_.degree() : pi_.degree();
}

bool Place::operator==(const Place& o) const {
    if (infinity_ != o.infinity_) return false;
    if (infinity_) return true;
    return fibre_ == o.fibre_ && pi_ == o.pi_ && y_rep_ == o.y_rep_;
}

bool Place::operator<(const Place& o) const {
    if (infinity_ != o.infinity_) return infinity_;
    if (infinity_) return false;
    if (pi_ != o.pi_) return pi_ < o.pi_;
    if (fibre_ != o.fibre_) return fibre_ < o.fibre_;
    return y_rep_ < o.y_rep_;
}

std::string Place::to_string() const {
    const bool ell = curve_ && curve_->is_elliptic();
    if (infinity_) return ell ? "O" : "inf";
    std::ostringstream os;
    os << "(" << pi_.to_string(ell ? "x" : "t");
    switch (fibre_) {
        case Fibre::Split: os << ", y=" << y_rep_.to_string("x"); break;
        case Fibre::Inert: os << ", inert"; break;
        case Fibre::Ramified: os << ", y=0"; break;
        case Fibre::None: break;
    }
    os << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Place& v) { return os << v.to_string(); }

ResiduePoint residue_point(const Place& v) {
    if (v.is_infinity()) throw Error("residue point requested at infinity");
    const CurvePtr& c = v.curve();
    if (!c->is_elliptic()) {
        FieldPtr k = residue_field_of(v.pi());
        return {k, root_class(v.pi(), k), FieldElement()};
    }
    if (v.fibre() == Place::Fibre::Inert) {
        FieldPtr k = FieldSpec::standard(c->base()->characteristic(), 2 * v.pi().degree());
        const FieldElement x0 = roots(v.pi().lift_to(k)).front();
        const FieldElement hx = c->cubic().eval_lifted(x0);
        Polynomial sq(k, std::vector<FieldElement>{-hx, FieldElement::zero(k), FieldElement::one(k)});
        return {k, x0, roots(sq).front()};
    }
    FieldPtr k = residue_field_of(v.pi());
    const FieldElement x0 = root_class(v.pi(), k);
    if (v.fibre() == Place::Fibre::Ramified) return {k, x0, FieldElement::zero(k)};
    return {k, x0, v.y_rep()(x0)};
}

LocalCoordinates local_coordinates(const Place& v, int R) {
    const CurvePtr& c = v.curve();
    const FieldPtr& base = c->base();
    R = std::max(R, 2);
    auto monomial = [](const FieldPtr& f, int offset, int n) {
        std::vector<FieldElement> cs(n, FieldElement::zero(f));
        cs[0] = FieldElement::one(f);
        return Series(f, offset, std::move(cs));
    };
    if (!c->is_elliptic()) {
        if (v.is_infinity()) return {base, monomial(base, -1, R), Series()};
        ResiduePoint rp = residue_point(v);
        return {rp.field, Series::shifted_variable(rp.x0, R), Series()};
    }
    if (v.is_infinity()) {
        // X = 1 - a s^4 / X - b s^6 / X^2
        Series one = Series::constant(FieldElement::one(base), R);
        Series s4 = monomial(base, 4, R), s6 = monomial(base, 6, R);
        Series X = one;
        for (int it = 0; it < R / 4 + 2; ++it) {
            Series Xi = X.inverse();
            X = (one - Series::constant(c->a(), R) * s4 * Xi - Series::constant(c->b(), R) * s6 * Xi * Xi).truncated(R);
        }
        return {base, Series(base, -2, X.coeffs()), Series(base, -3, X.coeffs())};
    }
    ResiduePoint rp = residue_point(v);
    const FieldPtr& k = rp.field;
    if (!rp.y0.is_zero()) {
        Series x = Series::shifted_variable(rp.x0, R);
        Series H = compose(c->cubic(), x);
        std::vector<FieldElement> y(R, FieldElement::zero(k));
        y[0] = rp.y0;
        const FieldElement inv2y0 = (rp.y0 + rp.y0).inverse();
        for (int n = 1; n < R; ++n) {
            FieldElement acc = H.coeff(n);
            for (int i = 1; i < n; ++i) acc -= y[i] * y[n - i];
            y[n] = acc * inv2y0;
        }
        return {k, x, Series(k, 0, std::move(y))};
    }
    // ramified: y is the uniformizer
    const Polynomial h = c->cubic().lift_to(k);
    const Polynomial g = h / Polynomial::linear(rp.x0);
    Series s = Series::shifted_variable(FieldElement::zero(k), R);
    Series s2 = monomial(k, 2, R);
    Series u = Series::constant(FieldElement::zero(k), R);
    Series x0 = Series::constant(rp.x0, R);
    for (int it = 0; it < R / 2 + 2; ++it) u = (s2 * compose(g, x0 + u).inverse()).truncated(R);
    return {k, x0 + u, s};
}

Series expand(const FunctionFieldElement& f, const Place& v, int abs_precision) {
    if (!same_curve(f.curve(), v.curve())) throw Error("function and place live on different curves");
    const auto cl = f.cleared();
    const int total = std::max({cl.A.degree(), cl.B.degree(), cl.C.degree(), 0});
    int R = std::max(8, abs_precision + 4 * total + 8);
    for (int attempt = 0; attempt < 12; ++attempt, R *= 2) {
        LocalCoordinates lc = local_coordinates(v, R);
        Series num = compose(cl.A, lc.x);
        if (!cl.B.is_zero()) num += compose(cl.B, lc.x) * lc.y;
        if (f.is_zero()) return Series(lc.field, abs_precision, {});
        if (!num.known_nonzero()) continue;
        Series r = num * compose(cl.C, lc.x).inverse();
        if (r.precision() >= abs_precision) return r.truncated(abs_precision);
    }
    throw Error("local expansion did not reach the requested precision");
}

LocalValue local_leading(const FunctionFieldElement& f, const Place& v) {
    if (f.is_zero()) throw Error("valuation of zero undefined");
    if (!same_curve(f.curve(), v.curve())) throw Error("function and place live on different curves");
    const CurvePtr& c = v.curve();
    if (v.is_infinity()) {
        const FieldPtr& base = c->base();
        // closed forms: t = 1/s on P^1; x ~ s^-2, y ~ s^-3 at O
        auto term = [](const RationalFunction& r) {
            return std::make_pair(r.degree(), r.num().leading() / r.den().leading());
        };
        if (!c->is_elliptic()) {
            auto [d, lcoef] = term(f.a());
            return {-d, lcoef};
        }
        std::optional<std::pair<int, FieldElement>> best;
        if (!f.a().is_zero()) {
            auto [d, lcoef] = term(f.a());
            best = std::make_pair(-2 * d, lcoef);
        }
        if (!f.b().is_zero()) {
            auto [d, lcoef] = term(f.b());
            const int val = -2 * d - 3;
            if (!best || val < best->first) best = std::make_pair(val, lcoef);
        }
        (void)base;
        return {best->first, best->second};
    }
    const auto cl = f.cleared();
    int bound;
    if (!c->is_elliptic()) {
        bound = multiplicity(cl.A, v.pi()) - multiplicity(cl.C, v.pi());
    } else {
        const int e = v.x_ramification();
        Polynomial N = cl.A * cl.A - cl.B * cl.B * c->cubic();
        bound = e * multiplicity(N, v.pi()) - e * multiplicity(cl.C, v.pi());
    }
    Series s = expand(f, v, bound + 1).normalized();
    return {s.valuation(), s.leading()};
}

int valuation(const FunctionFieldElement& f, const Place& v) {
    if (f.is_zero()) throw Error("valuation of zero undefined");
    if (!f.curve()->is_elliptic() && !v.is_infinity()) {
        return multiplicity(f.a().num(), v.pi()) - multiplicity(f.a().den(), v.pi());
    }
    return local_leading(f, v).valuation;
}

FieldElement evaluate_unit(const FunctionFieldElement& f, const Place& v) {
    LocalValue lv = local_leading(f, v);
    if (lv.valuation != 0) throw Error("function " + f.to_string() + " is not a unit at " + v.to_string());
    return lv.leading;
}

// ------------------------------------------------------------------ Divisor

Divisor Divisor::point(const Place& v, int mult) {
    Divisor d(v.curve());
    d.add(v, mult);
    return d;
}

int Divisor::operator[](const Place& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? 0 : it->second;
}

void Divisor::add(const Place& v, int mult) {
    if (!curve_) curve_ = v.curve();
    if (mult == 0) return;
    auto [it, inserted] = terms_.emplace(v, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

int Divisor::degree() const {
    int d = 0;
    for (const auto& [v, m] : terms_) d += m * v.degree();
    return d;
}

bool Divisor::is_effective() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

Divisor& Divisor::operator+=(const Divisor& o) {
    if (!curve_) curve_ = o.curve_;
    for (const auto& [v, m] : o.terms_) add(v, m);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    if (!curve_) curve_ = o.curve_;
    for (const auto& [v, m] : o.terms_) add(v, -m);
    return *this;
}

Divisor Divisor::operator-() const {
    Divisor r(curve_);
    for (const auto& [v, m] : terms_) r.add(v, -m);
    return r;
}

Divisor Divisor::operator*(int k) const {
    Divisor r(curve_);
    for (const auto& [v, m] : terms_) r.add(v, m * k);
    return r;
}

std::string Divisor::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, m] : terms_) {
        if (!first) os << (m < 0 ? " - " : " + ");
        else if (m < 0) os << "-";
        first = false;
        const int a = m < 0 ? -m : m;
        if (a != 1) os << a << "*";
        os << v;
    }
    return os.str();
}

std::vector<Place> candidate_places(const FunctionFieldElement& f) {
    if (f.is_zero()) throw Error("valuation of zero undefined");
    const CurvePtr& c = f.curve();
    std::vector<Polynomial> polys;
    const auto cl = f.cleared();
    if (!c->is_elliptic()) {
        polys = {cl.A, cl.C};
    } else {
        polys = {cl.A * cl.A - cl.B * cl.B * c->cubic(), cl.C};
    }
    std::vector<Place> out;
    for (const auto& q : polys) {
        if (q.degree() < 1) continue;
        for (const auto& [pi, m] : factor_polynomial(q).factors) {
            for (auto& v : Place::over(c, pi)) out.push_back(std::move(v));
        }
    }
    out.push_back(Place::infinity(c));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Place> support(const FunctionFieldElement& f) {
    std::vector<Place> out;
    for (auto& v : candidate_places(f))
        if (valuation(f, v) != 0) out.push_back(std::move(v));
    return out;
}

Divisor principal_divisor(const FunctionFieldElement& f) {
    Divisor d(f.curve());
    for (const auto& v : candidate_places(f)) d.add(v, valuation(f, v));
    return d;
}

Place base_point(const CurvePtr& c) { return Place::infinity(c); }

FunctionFieldElement local_parameter(const Place& v) {
    const CurvePtr& c = v.curve();
    if (v.is_infinity()) {
        if (!c->is_elliptic()) return FunctionFieldElement::x(c).inverse();
        return FunctionFieldElement::x(c) / FunctionFieldElement::y(c);
    }
    if (v.fibre() == Place::Fibre::Ramified) return FunctionFieldElement::y(c);
    return FunctionFieldElement(c, RationalFunction(v.pi()));
}

}  // namespace adele
