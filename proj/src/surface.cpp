#include "adele/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "adele/error.hpp"
#include "adele/parallel.hpp"

namespace adele {

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(FieldPtr f, const std::vector<std::pair<Exponent, int64_t>>& terms) : field_(std::move(f)) {
    for (const auto& [e, c] : terms) add_term(e, FieldElement(field_, c));
}

MultiPoly MultiPoly::constant(const FieldElement& c) { return monomial(c, {0, 0, 0}); }

MultiPoly MultiPoly::variable(const FieldPtr& f, int i) {
    Exponent e{0, 0, 0};
    e[i] = 1;
    return monomial(FieldElement::one(f), e);
}

MultiPoly MultiPoly::monomial(const FieldElement& c, const Exponent& e) {
    MultiPoly r(c.field());
    r.add_term(e, c);
    return r;
}

void MultiPoly::add_term(const Exponent& e, const FieldElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

bool MultiPoly::is_homogeneous() const {
    const int d = total_degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first[0] + t.first[1] + t.first[2] == d; });
}

FieldElement MultiPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (!field_) field_ = o.field_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (!field_) field_ = o.field_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(field_ ? field_ : o.field_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return r;
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
    MultiPoly r(field_);
    for (const auto& [e, a] : terms_) r.add_term(e, a * c);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw Error("negative power of a polynomial");
    MultiPoly r = constant(FieldElement::one(field_)), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(field_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent d = e;
        --d[var];
        r.add_term(d, c * FieldElement(field_, e[var]));
    }
    return r;
}

MultiPoly MultiPoly::lift_to(const FieldPtr& f) const {
    if (same_field(field_, f)) return *this;
    MultiPoly r(f);
    for (const auto& [e, c] : terms_) r.add_term(e, c.lift_to(f));
    return r;
}

FieldElement MultiPoly::eval(const std::array<FieldElement, 3>& at) const {
    const FieldPtr& f = at[0].field();
    FieldElement acc = FieldElement::zero(f);
    for (const auto& [e, c] : terms_) {
        FieldElement t = same_field(c.field(), f) ? c : c.lift_to(f);
        for (int i = 0; i < 3; ++i)
            if (e[i]) t *= at[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::array<MultiPoly, 3>& images) const {
    const FieldPtr& f = images[0].field();
    MultiPoly r(f);
    std::array<std::vector<MultiPoly>, 3> powers;
    for (int i = 0; i < 3; ++i) powers[i].push_back(constant(FieldElement::one(f)));
    for (const auto& [e, c] : terms_) {
        MultiPoly t = constant(same_field(c.field(), f) ? c : c.lift_to(f));
        for (int i = 0; i < 3; ++i) {
            while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
            t = t * powers[i][e[i]];
        }
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::dehomogenize(int j) const {
    MultiPoly r(field_);
    for (const auto& [e, c] : terms_) {
        Exponent d{0, 0, 0};
        int slot = 0;
        for (int i = 0; i < 3; ++i)
            if (i != j) d[slot++] = e[i];
        r.add_term(d, c);
    }
    return r;
}

std::vector<Polynomial> MultiPoly::coefficients_in(int var, int other) const {
    const int third = 3 - var - other;
    std::vector<std::vector<FieldElement>> cs(std::max(0, degree_in(var) + 1));
    for (const auto& [e, c] : terms_) {
        if (e[third] != 0) throw Error("coefficients_in: unexpected variable");
        auto& row = cs[e[var]];
        if (static_cast<int>(row.size()) <= e[other]) row.resize(e[other] + 1, FieldElement::zero(field_));
        row[e[other]] += c;
    }
    std::vector<Polynomial> out;
    for (auto& row : cs) out.emplace_back(field_, std::move(row));
    return out;
}

Polynomial MultiPoly::restrict_to(int var, const std::array<FieldElement, 3>& values) const {
    const FieldPtr& f = values[(var + 1) % 3].field();
    std::vector<FieldElement> cs(std::max(0, degree_in(var) + 1), FieldElement::zero(f));
    for (const auto& [e, c] : terms_) {
        FieldElement t = same_field(c.field(), f) ? c : c.lift_to(f);
        for (int i = 0; i < 3; ++i)
            if (i != var && e[i]) t *= values[i].pow(e[i]);
        cs[e[var]] += t;
    }
    return Polynomial(f, std::move(cs));
}

MultiPoly MultiPoly::remainder(const MultiPoly& divisor) const {
    if (divisor.is_zero()) throw Error("division by the zero polynomial");
    const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
    const FieldElement inv = lead_c.inverse();
    MultiPoly p = *this, r(field_);
    while (!p.is_zero()) {
        const auto [e, c] = *p.terms_.rbegin();
        if (e[0] >= lead_e[0] && e[1] >= lead_e[1] && e[2] >= lead_e[2]) {
            p -= divisor * monomial(c * inv, {e[0] - lead_e[0], e[1] - lead_e[1], e[2] - lead_e[2]});
        } else {
            r.add_term(e, c);
            p.terms_.erase(e);
        }
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        const bool unit = e == Exponent{0, 0, 0};
        if (!c.is_one() || unit) os << c.to_string();
        bool need_star = !c.is_one() || unit;
        for (int i = 0; i < 3; ++i) {
            if (!e[i]) continue;
            if (need_star) os << "*";
            os << "X" << i;
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

// ------------------------------------------------------------------ Fulton

namespace {

Polynomial along_u(const MultiPoly& F) {
    std::vector<FieldElement> cs(std::max(0, F.degree_in(0) + 1), FieldElement::zero(F.field()));
    for (const auto& [e, c] : F.terms())
        if (e[1] == 0) cs[e[0]] += c;
    return Polynomial(F.field(), std::move(cs));
}

MultiPoly divide_by_v(const MultiPoly& F) {
    MultiPoly r(F.field());
    for (const auto& [e, c] : F.terms()) r += MultiPoly::monomial(c, {e[0], e[1] - 1, e[2]});
    return r;
}

Multiplicity fulton_origin(MultiPoly F, MultiPoly G) {
    int finite = 0;
    for (;;) {
        const Exponent origin{0, 0, 0};
        if (F.is_zero() && G.is_zero()) return {true, 0};
        if (F.is_zero()) std::swap(F, G);
        if (!F.coeff(origin).is_zero()) return {false, finite};
        if (G.is_zero()) return {true, 0};
        if (!G.coeff(origin).is_zero()) return {false, finite};
        Polynomial F0 = along_u(F), G0 = along_u(G);
        int r = F0.degree(), s = G0.degree();
        if (r < 0 && s < 0) return {true, 0};
        if (s < 0) {
            std::swap(F, G);
            std::swap(F0, G0);
            std::swap(r, s);
        }
        if (r < 0) {
            // F = v H: I(v, G) is the order of G(u, 0) at u = 0
            int m = 0;
            while (G0.coeff(m).is_zero()) ++m;
            finite += m;
            F = divide_by_v(F);
            continue;
        }
        if (r > s) {
            std::swap(F, G);
            std::swap(F0, G0);
            std::swap(r, s);
        }
        G = G.scaled(F0.leading()) - F * MultiPoly::monomial(G0.leading(), {s - r, 0, 0});
    }
}

}  // namespace

Multiplicity fulton_multiplicity(const MultiPoly& F, const MultiPoly& G) { return fulton_origin(F, G); }

Multiplicity fulton_multiplicity(const MultiPoly& F, const MultiPoly& G, const FieldElement& a, const FieldElement& b) {
    const FieldPtr& f = a.field();
    std::array<MultiPoly, 3> shift{MultiPoly::variable(f, 0) + MultiPoly::constant(a), MultiPoly::variable(f, 1) + MultiPoly::constant(b),
                                   MultiPoly::variable(f, 2)};
    return fulton_origin(F.substitute(shift), G.substitute(shift));
}

// ------------------------------------------------------------- PlaneCurve

namespace {

MultiPoly normalize_form(const MultiPoly& F) {
    return F.scaled(F.terms().rbegin()->second.inverse());
}

std::vector<MultiPoly> lines_over(const FieldPtr& k) {
    const int64_t p = k->characteristic();
    std::vector<MultiPoly> out;
    for (int64_t a0 = 0; a0 < p; ++a0)
        for (int64_t a1 = 0; a1 < p; ++a1)
            for (int64_t a2 = 0; a2 < p; ++a2) {
                if (a0 == 0 && a1 == 0 && a2 == 0) continue;
                const int64_t first = a0 ? a0 : (a1 ? a1 : a2);
                if (first != 1) continue;
                out.push_back(MultiPoly(k, {{{1, 0, 0}, a0}, {{0, 1, 0}, a1}, {{0, 0, 1}, a2}}));
            }
    std::stable_sort(out.begin(), out.end(), [](const MultiPoly& x, const MultiPoly& y) { return x.terms().size() < y.terms().size(); });
    return out;
}

}  // namespace

PlaneCurve::PlaneCurve(const MultiPoly& form) {
    if (form.is_zero()) throw Error(ErrorCode::Domain, "plane curve form is zero");
    if (form.field()->degree() != 1) throw Error("plane curve forms have coefficients in the prime field");
    if (!form.is_homogeneous()) throw Error("plane curve form is not homogeneous: " + form.to_string());
    if (form.total_degree() < 1) throw Error("plane curve form is constant");
    form_ = normalize_form(form);
    const int d = form_.total_degree();
    if (d >= 2 && d <= 3) {
        for (const auto& L : lines_over(form_.field()))
            if (form_.remainder(L).is_zero()) throw Error("plane curve form is reducible: divisible by " + L.to_string());
    }
    verified_ = d <= 3;
}

PlaneCurve PlaneCurve::line(const FieldPtr& k, int64_t a0, int64_t a1, int64_t a2) {
    return PlaneCurve(MultiPoly(k, {{{1, 0, 0}, a0}, {{0, 1, 0}, a1}, {{0, 0, 1}, a2}}));
}

bool PlaneCurve::operator<(const PlaneCurve& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return form_ < o.form_;
}

// -------------------------------------------------------- ProjectivePoint

ProjectivePoint ProjectivePoint::normalized(std::array<FieldElement, 3> c) {
    int j = 2;
    while (j >= 0 && c[j].is_zero()) --j;
    if (j < 0) throw Error("the zero vector is not a projective point");
    const FieldElement inv = c[j].inverse();
    for (auto& x : c) x *= inv;
    return {c};
}

int ProjectivePoint::chart() const {
    for (int j = 2; j >= 0; --j)
        if (!coords[j].is_zero()) return j;
    throw Error("invalid projective point");
}

ProjectivePoint ProjectivePoint::frobenius() const {
    return {{coords[0].frobenius(), coords[1].frobenius(), coords[2].frobenius()}};
}

int ProjectivePoint::orbit_degree() const {
    int n = 1;
    for (ProjectivePoint q = frobenius(); !(q == *this); q = q.frobenius()) ++n;
    return n;
}

ProjectivePoint ProjectivePoint::orbit_representative() const {
    ProjectivePoint best = *this;
    for (ProjectivePoint q = frobenius(); !(q == *this); q = q.frobenius())
        if (q < best) best = q;
    return best;
}

std::array<FieldElement, 2> ProjectivePoint::affine() const {
    const int j = chart();
    std::array<FieldElement, 2> out;
    int slot = 0;
    for (int i = 0; i < 3; ++i)
        if (i != j) out[slot++] = coords[i];
    return out;
}

bool ProjectivePoint::operator<(const ProjectivePoint& o) const {
    for (int i = 0; i < 3; ++i)
        if (coords[i] != o.coords[i]) return coords[i] < o.coords[i];
    return false;
}

std::string ProjectivePoint::to_string() const {
    return "(" + coords[0].to_string() + ":" + coords[1].to_string() + ":" + coords[2].to_string() + ")";
}

// ---------------------------------------------------- divisors and symbols

void SurfaceDivisor::add(const PlaneCurve& C, int mult) {
    if (mult == 0) return;
    auto [it, inserted] = terms_.emplace(C, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

SurfaceDivisor SurfaceDivisor::of(const PlaneCurve& C, int mult) {
    SurfaceDivisor D;
    D.add(C, mult);
    return D;
}

int SurfaceDivisor::degree() const {
    int d = 0;
    for (const auto& [C, m] : terms_) d += m * C.degree();
    return d;
}

SurfaceFunction SurfaceFunction::unit(const FieldPtr& k, int64_t c) {
    if (FieldElement(k, c).is_zero()) throw Error("surface function with zero constant");
    return {FieldElement(k, c), {}};
}

SurfaceFunction SurfaceFunction::ratio(const PlaneCurve& num, const PlaneCurve& den, int exponent) {
    SurfaceFunction f = unit(num.form().field());
    f.factors[num] += exponent;
    f.factors[den] -= exponent;
    std::erase_if(f.factors, [](const auto& t) { return t.second == 0; });
    return f;
}

int SurfaceFunction::degree() const {
    int d = 0;
    for (const auto& [C, e] : factors) d += e * C.degree();
    return d;
}

int SurfaceFunction::order_along(const PlaneCurve& C) const {
    auto it = factors.find(C);
    return it == factors.end() ? 0 : it->second;
}

SurfaceFunction& SurfaceFunction::operator*=(const SurfaceFunction& o) {
    constant = constant.valid() ? constant * o.constant : o.constant;
    for (const auto& [C, e] : o.factors) {
        int& x = factors[C];
        x += e;
        if (x == 0) factors.erase(C);
    }
    return *this;
}

SurfaceFunction SurfaceFunction::pow(int e) const {
    SurfaceFunction r{constant.pow(e), {}};
    if (e != 0)
        for (const auto& [C, x] : factors) r.factors.emplace(C, x * e);
    return r;
}

std::string SurfaceFunction::to_string() const {
    std::ostringstream os;
    os << constant.to_string();
    for (const auto& [C, e] : factors) os << " * (" << C.to_string() << ")^" << e;
    return os.str();
}

SurfaceSymbol SurfaceSymbol::single(const SurfaceFunction& f, const SurfaceFunction& g, int exponent) {
    SurfaceSymbol s;
    s.entries.push_back({f, g, exponent});
    s.validate();
    return s;
}

void SurfaceSymbol::validate() const {
    for (const auto& e : entries)
        if (e.f.degree() != 0 || e.g.degree() != 0)
            throw Error(ErrorCode::Domain, "symbol entries must be ratios of forms of total degree 0");
}

std::vector<PlaneCurve> SurfaceSymbol::support() const {
    std::set<PlaneCurve> out;
    for (const auto& e : entries) {
        for (const auto& [C, x] : e.f.factors) out.insert(C);
        for (const auto& [C, x] : e.g.factors) out.insert(C);
    }
    return {out.begin(), out.end()};
}

// ---------------------------------------------------------------- residues

SurfaceFunction curve_tame_symbol(const SurfaceSymbol& s, const PlaneCurve& C) {
    SurfaceFunction acc = SurfaceFunction::unit(C.form().field());
    for (const auto& e : s.entries) {
        const int a = e.f.order_along(C), b = e.g.order_along(C);
        SurfaceFunction t = e.f.pow(b) * e.g.pow(-a);
        if ((a * b) % 2 != 0) t.constant = -t.constant;
        t.factors.erase(C);
        acc *= t.pow(e.exponent);
    }
    return acc;
}

namespace {

void require_smooth_point(const PlaneCurve& C, const ProjectivePoint& x) {
    const MultiPoly F = C.form();
    if (!F.eval(x.coords).is_zero()) throw Error("flag point " + x.to_string() + " is not on the curve " + C.to_string());
    bool smooth = false;
    for (int i = 0; i < 3 && !smooth; ++i) smooth = !F.derivative(i).eval(x.coords).is_zero();
    if (!smooth) throw Error("flag-curve singular at point " + x.to_string());
}

Multiplicity local_index(const MultiPoly& F, const MultiPoly& G, const ProjectivePoint& x) {
    const int j = x.chart();
    const auto ab = x.affine();
    return fulton_multiplicity(F.lift_to(x.field()).dehomogenize(j), G.lift_to(x.field()).dehomogenize(j), ab[0], ab[1]);
}

}  // namespace

int valuation_on_curve(const SurfaceFunction& phi, const PlaneCurve& C, const ProjectivePoint& x) {
    require_smooth_point(C, x);
    if (phi.order_along(C) != 0) throw Error("function vanishes or has a pole along the whole curve " + C.to_string());
    int v = 0;
    for (const auto& [D, e] : phi.factors) {
        Multiplicity m = local_index(D.form(), C.form(), x);
        if (m.infinite) throw Error("curves share a component");
        v += e * m.value;
    }
    return v;
}

int flag_residue(const SurfaceSymbol& s, const Flag2& flag) {
    return valuation_on_curve(curve_tame_symbol(s, flag.curve), flag.curve, flag.point);
}

int parshin_point_reciprocity(const SurfaceSymbol& s, const ProjectivePoint& x) {
    int total = 0;
    for (const auto& C : s.support()) {
        if (!C.form().eval(x.coords).is_zero()) continue;
        total += flag_residue(s, {C, x});
    }
    return total;
}

// ------------------------------------------------------- intersection points

namespace {

Polynomial determinant(std::vector<std::vector<Polynomial>> M, const FieldPtr& f) {
    const std::size_t n = M.size();
    if (n == 0) return Polynomial::constant(FieldElement::one(f));
    Polynomial prev = Polynomial::constant(FieldElement::one(f));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && M[r][k].is_zero()) ++r;
            if (r == n) return Polynomial(f, std::vector<FieldElement>{});
            std::swap(M[k], M[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
            M[i][k] = Polynomial(f, std::vector<FieldElement>{});
        }
        prev = M[k][k];
    }
    Polynomial d = M[n - 1][n - 1];
    return negate ? -d : d;
}

// Res over the variable indexed by the vector position
Polynomial resultant(const std::vector<Polynomial>& A, const std::vector<Polynomial>& B, const FieldPtr& f) {
    const int m = static_cast<int>(A.size()) - 1, n = static_cast<int>(B.size()) - 1;
    if (m < 0 || n < 0) return Polynomial(f, std::vector<FieldElement>{});
    if (m == 0) return A[0].pow(n);
    if (n == 0) return B[0].pow(m);
    const int size = m + n;
    const Polynomial zero(f, std::vector<FieldElement>{});
    std::vector<std::vector<Polynomial>> M(size, std::vector<Polynomial>(size, zero));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) M[r][r + m - i] = A[i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) M[n + r][r + n - i] = B[i];
    return determinant(std::move(M), f);
}

Polynomial gcd_or_other(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw Error("improper intersection");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    return gcd(a, b);
}

struct AffineResultant {
    bool none = false;  // both curves free of X1 and disjoint in the chart
    Polynomial R;
};

AffineResultant affine_resultant(const MultiPoly& F, const MultiPoly& G) {
    const MultiPoly Fa = F.dehomogenize(2), Ga = G.dehomogenize(2);
    const FieldPtr& k = F.field();
    auto A = Fa.coefficients_in(1, 0), B = Ga.coefficients_in(1, 0);
    if (A.size() == 1 && B.size() == 1) {
        if (gcd(A[0], B[0]).degree() >= 1) throw Error("improper intersection");
        return {true, Polynomial(k, std::vector<FieldElement>{})};
    }
    Polynomial R = resultant(A, B, k);
    if (R.is_zero()) throw Error("improper intersection");
    return {false, R};
}

Polynomial infinity_gcd(const MultiPoly& F, const MultiPoly& G, const FieldPtr& f) {
    std::array<FieldElement, 3> at{FieldElement::one(f), FieldElement::zero(f), FieldElement::zero(f)};
    return gcd_or_other(F.restrict_to(1, at), G.restrict_to(1, at));
}

void require_disjoint(const PlaneCurve& C1, const PlaneCurve& C2) {
    if (C1 == C2) throw Error("improper intersection");
}

}  // namespace

int intersection_field_degree(const PlaneCurve& C1, const PlaneCurve& C2) {
    require_disjoint(C1, C2);
    const MultiPoly &F = C1.form(), &G = C2.form();
    const FieldPtr& k = F.field();
    const uint32_t p = k->characteristic();
    int K = 1;
    AffineResultant ar = affine_resultant(F, G);
    if (!ar.none && ar.R.degree() >= 1) {
        for (const auto& [phi, mult] : factor_polynomial(ar.R).factors) {
            const int d = phi.degree();
            FieldPtr L = FieldSpec::standard(p, d);
            const FieldElement a = roots(phi.lift_to(L)).front();
            std::array<FieldElement, 3> at{a, FieldElement::zero(L), FieldElement::one(L)};
            Polynomial g = gcd_or_other(F.restrict_to(1, at), G.restrict_to(1, at));
            if (g.degree() < 1) continue;
            for (const auto& [psi, m2] : factor_polynomial(g).factors) K = std::lcm(K, d * psi.degree());
        }
    }
    Polynomial gi = infinity_gcd(F, G, k);
    if (gi.degree() >= 1)
        for (const auto& [psi, m] : factor_polynomial(gi).factors) K = std::lcm(K, psi.degree());
    return K;
}

std::vector<IntersectionPoint> intersection_points(const PlaneCurve& C1, const PlaneCurve& C2, const FieldPtr& M) {
    require_disjoint(C1, C2);
    const MultiPoly F = C1.form().lift_to(M), G = C2.form().lift_to(M);
    std::vector<ProjectivePoint> raw;
    AffineResultant ar = affine_resultant(C1.form(), C2.form());
    if (!ar.none && ar.R.degree() >= 1) {
        for (const auto& a : roots(ar.R.lift_to(M))) {
            std::array<FieldElement, 3> at{a, FieldElement::zero(M), FieldElement::one(M)};
            Polynomial g = gcd_or_other(F.restrict_to(1, at), G.restrict_to(1, at));
            if (g.degree() < 1) continue;
            for (const auto& b : roots(g)) raw.push_back(ProjectivePoint::normalized({a, b, FieldElement::one(M)}));
        }
    }
    Polynomial gi = infinity_gcd(F, G, M);
    if (gi.degree() >= 1)
        for (const auto& t : roots(gi)) raw.push_back(ProjectivePoint::normalized({FieldElement::one(M), t, FieldElement::zero(M)}));
    const std::array<FieldElement, 3> pole{FieldElement::zero(M), FieldElement::one(M), FieldElement::zero(M)};
    if (F.eval(pole).is_zero() && G.eval(pole).is_zero()) raw.push_back(ProjectivePoint{pole});

    std::set<ProjectivePoint> reps;
    for (const auto& x : raw) reps.insert(x.orbit_representative());
    std::vector<IntersectionPoint> out;
    for (const auto& x : reps) {
        Multiplicity m = local_index(F, G, x);
        if (m.infinite) throw Error("improper intersection");
        out.push_back({x, x.orbit_degree(), m.value});
    }
    return out;
}

int bezout_oracle(const PlaneCurve& C1, const PlaneCurve& C2) {
    require_disjoint(C1, C2);
    const MultiPoly &F = C1.form(), &G = C2.form();
    const FieldPtr& k = F.field();
    const int64_t p = k->characteristic();
    for (int64_t c0 = 0; c0 < p; ++c0)
        for (int64_t c2 = 0; c2 < p; ++c2) {
            const std::array<FieldElement, 3> q{FieldElement(k, c0), FieldElement::one(k), FieldElement(k, c2)};
            if (F.eval(q).is_zero() || G.eval(q).is_zero()) continue;
            // moves (0:1:0) to q
            const std::array<MultiPoly, 3> change{MultiPoly::variable(k, 0) + MultiPoly::variable(k, 1).scaled(q[0]),
                                                  MultiPoly::variable(k, 1),
                                                  MultiPoly::variable(k, 2) + MultiPoly::variable(k, 1).scaled(q[2])};
            const MultiPoly F2 = F.substitute(change), G2 = G.substitute(change);
            Polynomial R1 = resultant(F2.dehomogenize(2).coefficients_in(1, 0), G2.dehomogenize(2).coefficients_in(1, 0), k);
            if (R1.is_zero()) throw Error("improper intersection");
            // chart X0 = 1: dehomogenize(0) renames (X1, X2) to (X0, X1)
            Polynomial R2 = resultant(F2.dehomogenize(0).coefficients_in(0, 1), G2.dehomogenize(0).coefficients_in(0, 1), k);
            int at_infinity = 0;
            while (R2.coeff(at_infinity).is_zero()) ++at_infinity;
            return R1.degree() + at_infinity;
        }
    throw Error("no rational projection centre avoids both curves");
}

// ---------------------------------------------------------------- intersect

namespace {

SurfaceFunction local_equation(const SurfaceDivisor& D, const PlaneCurve& L) {
    SurfaceFunction s = SurfaceFunction::unit(L.form().field());
    for (const auto& [C, m] : D.terms()) s.factors[C] += m;
    s.factors[L] -= D.degree();
    std::erase_if(s.factors, [](const auto& t) { return t.second == 0; });
    return s;
}

template <bool Parallel>
IntersectionReport intersect_impl(const SurfaceDivisor& D1, const SurfaceDivisor& D2, const IntersectionOptions& opt) {
    if (D1.empty() || D2.empty()) throw Error("empty surface divisor");
    for (const auto& [C, m] : D1.terms())
        if (D2.terms().count(C)) throw Error("improper intersection");
    const FieldPtr k = D1.terms().begin()->first.form().field();
    const uint32_t p = k->characteristic();

    IntersectionReport rep;
    int K = 1;
    for (const auto& [C1, m1] : D1.terms())
        for (const auto& [C2, m2] : D2.terms()) K = std::lcm(K, intersection_field_degree(C1, C2));
    if (K > opt.ext_bound)
        throw Error("intersection points need GF(" + std::to_string(p) + "^" + std::to_string(K) + "), beyond the extension bound " +
                    std::to_string(opt.ext_bound));
    rep.field_degree = K;
    const FieldPtr M = FieldSpec::standard(p, K);

    // points of C ∩ |D2| for each C in supp D1
    std::vector<Flag2> flags;
    std::set<ProjectivePoint> all_points;
    for (const auto& [C1, m1] : D1.terms()) {
        std::set<ProjectivePoint> on_c;
        for (const auto& [C2, m2] : D2.terms()) {
            for (const auto& ip : intersection_points(C1, C2, M)) {
                on_c.insert(ip.point);
                all_points.insert(ip.point);
                rep.fulton_sum += m1 * m2 * ip.degree * ip.multiplicity;
                rep.degrees[ip.point] = ip.degree;
            }
            rep.bezout += m1 * m2 * bezout_oracle(C1, C2);
        }
        for (const auto& x : on_c) {
            require_smooth_point(C1, x);
            flags.push_back({C1, x});
        }
    }

    // auxiliary line avoiding every contributing point
    bool found = false;
    for (const auto& form : lines_over(k)) {
        PlaneCurve L(form);
        if (D1.terms().count(L) || D2.terms().count(L)) continue;
        const MultiPoly LM = form.lift_to(M);
        if (std::any_of(all_points.begin(), all_points.end(), [&](const ProjectivePoint& x) { return LM.eval(x.coords).is_zero(); }))
            continue;
        rep.auxiliary_line = L;
        found = true;
        break;
    }
    if (!found) throw Error("no auxiliary line over the base field avoids the intersection points; enlarge the field");

    const SurfaceSymbol S = SurfaceSymbol::single(local_equation(D1, rep.auxiliary_line).inverse(),
                                                  local_equation(D2, rep.auxiliary_line).inverse());
    auto residue = [&](std::size_t i) { return flag_residue(S, flags[i]); };
    const auto residues = Parallel ? parallel::map_indexed<int>(flags.size(), residue)
                                   : parallel::map_indexed_serial<int>(flags.size(), residue);
    rep.flags = flags.size();
    for (std::size_t i = 0; i < flags.size(); ++i) {
        const ProjectivePoint& x = flags[i].point;
        const int contribution = opt.signs.intersection * residues[i];
        rep.number += rep.degrees.at(x) * contribution;
        rep.cycle[x] += contribution;
    }
    std::erase_if(rep.cycle, [](const auto& t) { return t.second == 0; });
    return rep;
}

}  // namespace

IntersectionReport intersect(const SurfaceDivisor& D1, const SurfaceDivisor& D2, const IntersectionOptions& opt) {
    return intersect_impl<true>(D1, D2, opt);
}

IntersectionReport intersect_serial(const SurfaceDivisor& D1, const SurfaceDivisor& D2, const IntersectionOptions& opt) {
    return intersect_impl<false>(D1, D2, opt);
}

int intersection_number(const SurfaceDivisor& D1, const SurfaceDivisor& D2, const IntersectionOptions& opt) {
    return intersect(D1, D2, opt).number;
}

std::map<ProjectivePoint, int> surface_product_cycle(const SurfaceDivisor& D1, const SurfaceDivisor& D2, const IntersectionOptions& opt) {
    return intersect(D1, D2, opt).cycle;
}

// --------------------------------------------------------------------- dlog

std::map<PlaneCurve, int> dlog2_pole_orders(const SurfaceSymbol& s) {
    s.validate();
    std::map<PlaneCurve, int> out;
    const auto support = s.support();
    for (const auto& C : support) {
        const int j = C.form().degree_in(2) == C.degree() && C.degree() == 1 && C.form().terms().size() == 1 ? 0 : 2;
        auto aff = [j](const PlaneCurve& D) { return D.form().dehomogenize(j); };
        const FieldPtr& k = C.form().field();
        std::vector<PlaneCurve> visible;
        for (const auto& D : support)
            if (aff(D).total_degree() >= 1) visible.push_back(D);
        MultiPoly N(k);
        for (const auto& e : s.entries) {
            for (const auto& [phi, a] : e.f.factors) {
                if (aff(phi).total_degree() < 1) continue;
                for (const auto& [psi, b] : e.g.factors) {
                    if (aff(psi).total_degree() < 1 || phi == psi) continue;
                    const MultiPoly P = aff(phi), Q = aff(psi);
                    MultiPoly J = P.derivative(0) * Q.derivative(1) - P.derivative(1) * Q.derivative(0);
                    for (const auto& D : visible)
                        if (!(D == phi) && !(D == psi)) J = J * aff(D);
                    N += J.scaled(FieldElement(k, static_cast<int64_t>(e.exponent) * a * b));
                }
            }
        }
        out[C] = N.remainder(aff(C)).is_zero() ? 0 : 1;
    }
    return out;
}

int dlog2_pole_check(const SurfaceSymbol& s) {
    int best = 0;
    for (const auto& [C, order] : dlog2_pole_orders(s)) best = std::max(best, order);
    return best;
}

}  // namespace adele
