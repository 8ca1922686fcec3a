#include "adele/weil.hpp"

#include <numeric>

#include "adele/adelic.hpp"
#include "adele/error.hpp"
#include "adele/surface.hpp"

namespace adele {

Place place_of(const CurvePtr& c, const EcPoint& P) {
    if (P.infinity) return base_point(c);
    return Place::from_point(c, P.x, P.y);
}

namespace {

FieldPtr residue_field(const Place& v) {
    if (v.is_infinity()) return v.curve()->base();
    return residue_point(v).field;
}

void require_torsion(const CurvePtr& c, const EcPoint& P, int l) {
    if (l < 1) throw Error("l must be positive");
    if (!c->is_elliptic()) throw Error("Miller functions live on an elliptic curve");
    if (!on_curve(c, P)) throw Error("point " + P.to_string() + " is not on the curve");
    if (!scalar_multiple(c, l, P).infinity) throw Error("point " + P.to_string() + " is not " + std::to_string(l) + "-torsion");
}

void require_tame(const CurvePtr& c, int l) {
    if (l % static_cast<int>(c->base()->characteristic()) == 0) throw Error("l must be prime to the characteristic");
}

FunctionFieldElement linear(const CurvePtr& c, const FieldElement& c0, const FieldElement& c1, bool with_y) {
    const FieldPtr& k = c->base();
    RationalFunction a(Polynomial(k, std::vector<FieldElement>{c0, c1}));
    RationalFunction b = with_y ? RationalFunction::one(k) : RationalFunction::zero(k);
    return FunctionFieldElement(c, a, b);
}

PairingValue annotate(const FieldElement& value, int l) {
    if (!value.pow(l).is_one()) throw Error(ErrorCode::Audit, "pairing value " + value.to_string() + " is not an l-th root of unity");
    int n = 1;
    while (!value.pow(n).is_one()) ++n;
    return {value, n};
}

}  // namespace

// ----------------------------------------------------------- MillerFunction

MillerFunction MillerFunction::unit(const CurvePtr& c) { return {c, FieldElement::one(c->base()), {}, Divisor(c)}; }

MillerFunction MillerFunction::of(const FunctionFieldElement& h) {
    if (h.is_zero()) throw Error("chain function is zero");
    MillerFunction f = unit(h.curve());
    if (h.is_constant()) {
        f.constant = h.a().num().leading() / h.a().den().leading();
        return f;
    }
    f.factors.push_back({h, 1});
    f.divisor = principal_divisor(h);
    return f;
}

void MillerFunction::check() const {
    Divisor d(curve);
    for (const auto& [h, e] : factors) d += principal_divisor(h) * e;
    if (d != divisor) throw Error("chain divisor " + d.to_string() + " differs from the declared " + divisor.to_string());
}

FunctionFieldElement MillerFunction::expanded() const {
    FunctionFieldElement r = FunctionFieldElement::constant(curve, constant);
    for (const auto& [h, e] : factors) r *= h.pow(e);
    return r;
}

MillerFunction MillerFunction::scaled(const FieldElement& c) const {
    MillerFunction r = *this;
    r.constant *= c;
    return r;
}

MillerFunction MillerFunction::pow(int e) const {
    MillerFunction r = unit(curve);
    r.constant = constant.pow(e);
    if (e == 0) return r;
    for (const auto& [h, x] : factors) r.factors.push_back({h, x * e});
    r.divisor = divisor * e;
    return r;
}

MillerFunction& MillerFunction::operator*=(const MillerFunction& o) {
    constant *= o.constant;
    for (const auto& [h, e] : o.factors) {
        auto it = std::find_if(factors.begin(), factors.end(), [&](const auto& t) { return t.first == h; });
        if (it == factors.end())
            factors.push_back({h, e});
        else
            it->second += e;
    }
    std::erase_if(factors, [](const auto& t) { return t.second == 0; });
    divisor += o.divisor;
    return *this;
}

FieldElement value_at(const MillerFunction& f, const Place& v) {
    const FieldPtr kv = residue_field(v);
    FieldElement value = f.constant.lift_to(kv);
    int total = 0;
    for (const auto& [h, e] : f.factors) {
        LocalValue lv = local_leading(h, v);
        total += e * lv.valuation;
        value *= lv.leading.pow(e);
    }
    if (total != 0) throw Error("chain has a zero or pole at " + v.to_string());
    return value;
}

FieldElement evaluate_at(const MillerFunction& f, const Divisor& D) {
    FieldElement acc = FieldElement::one(f.curve->base());
    for (const auto& [v, m] : D.terms()) acc *= value_at(f, v).norm().pow(m);
    return acc;
}

// ----------------------------------------------------------------- lines

FunctionFieldElement vertical(const CurvePtr& c, const EcPoint& A) {
    const FieldPtr& k = c->base();
    if (A.infinity) return FunctionFieldElement::constant(c, 1);
    return linear(c, -A.x, FieldElement::one(k), false);
}

FunctionFieldElement chord(const CurvePtr& c, const EcPoint& A, const EcPoint& B) {
    if (A.infinity && B.infinity) return FunctionFieldElement::constant(c, 1);
    if (A.infinity) return vertical(c, B);
    if (B.infinity || (A.x == B.x && A.y == -B.y)) return vertical(c, A);
    const FieldPtr& k = c->base();
    FieldElement lambda = A == B ? (FieldElement(k, 3) * A.x * A.x + c->a()) / (FieldElement(k, 2) * A.y) : (B.y - A.y) / (B.x - A.x);
    // y - yA - lambda (x - xA)
    return linear(c, lambda * A.x - A.y, -lambda, true);
}

MillerFunction miller_function(const CurvePtr& c, const EcPoint& P, int l, const EcPoint& R) {
    require_torsion(c, P, l);
    if (!on_curve(c, R)) throw Error("offset " + R.to_string() + " is not on the curve");
    auto factor = [&](const FunctionFieldElement& h, int e) {
        MillerFunction m = MillerFunction::unit(c);
        if (!h.is_constant()) m.factors.push_back({h, e});
        return m;
    };
    MillerFunction f = MillerFunction::unit(c);
    EcPoint T = P;
    for (int i = 1; i < l; ++i) {
        const EcPoint next = ec_add(c, T, P);
        f *= factor(chord(c, T, P), 1) * factor(vertical(c, next), -1);
        T = next;
    }
    const EcPoint PR = ec_add(c, P, R);
    f *= factor(vertical(c, PR), l) * factor(chord(c, P, R), -l);
    f.divisor = Divisor(c);
    if (!P.infinity) {
        f.divisor.add(place_of(c, PR), l);
        f.divisor.add(place_of(c, R), -l);
    }
    f.check();
    return f;
}

// -------------------------------------------------------------- pairings

PairingValue weil_pairing_miller(const CurvePtr& c, const EcPoint& P, const EcPoint& Q, int l) {
    require_tame(c, l);
    require_torsion(c, P, l);
    require_torsion(c, Q, l);
    const FieldPtr& k = c->base();
    if (P.infinity || Q.infinity || P == Q) return annotate(FieldElement::one(k), l);
    const MillerFunction fP = miller_function(c, P, l), fQ = miller_function(c, Q, l);
    FieldElement v = value_at(fP, place_of(c, Q)) / value_at(fQ, place_of(c, P));
    if (l % 2) v = -v;
    return annotate(v, l);
}

Representatives choose_representatives(const CurvePtr& c, const EcPoint& P, const EcPoint& Q, int skip) {
    const auto offsets = rational_points(c);
    auto translated = [&](const EcPoint& X, const EcPoint& R) {
        Divisor D(c);
        if (!X.infinity) {
            D.add(place_of(c, ec_add(c, X, R)), 1);
            D.add(place_of(c, R), -1);
        }
        return D;
    };
    for (const auto& R1 : offsets) {
        const Divisor D = translated(P, R1);
        for (const auto& R2 : offsets) {
            const Divisor E = translated(Q, R2);
            bool disjoint = true;
            for (const auto& [v, m] : E.terms()) disjoint = disjoint && D[v] == 0;
            if (!disjoint) continue;
            if (skip-- == 0) return {R1, R2, D, E};
        }
    }
    throw Error("representative list exhausted");
}

PairingValue weil_pairing_idelic(const CurvePtr& c, const EcPoint& P, const EcPoint& Q, int l, int skip) {
    require_tame(c, l);
    require_torsion(c, P, l);
    require_torsion(c, Q, l);
    const Representatives r = choose_representatives(c, P, Q, skip);
    const MillerFunction f = miller_function(c, P, l, r.R1), g = miller_function(c, Q, l, r.R2);
    return annotate(evaluate_at(f, r.E) / evaluate_at(g, r.D), l);
}

// ---------------------------------------------------------------- Massey

MasseyOutput massey_triple_curve(const MasseyClass& alpha, const MasseyClass& beta, int l, const SignConventions& signs) {
    for (const MasseyClass* m : {&alpha, &beta}) {
        if (m->representative.degree() != 0) throw Error("torsion class representative must have degree 0");
        if (m->chain.divisor != m->representative * l) throw Error("chain divisor must be l times the representative");
    }
    for (const auto& [v, m] : beta.representative.terms())
        if (alpha.representative[v] != 0) throw Error("overlapping supports at " + v.to_string());
    MasseyOutput out;
    for (const auto& [z, m] : beta.representative.terms()) out.cocycle[z] = value_at(alpha.chain, z).pow(signs.massey * m);
    for (const auto& [y, m] : alpha.representative.terms()) out.cocycle[y] = value_at(beta.chain, y).pow(-signs.massey * m);
    const CurvePtr& c = alpha.chain.curve;
    out.direct_image = direct_image(out.cocycle, c->base());
    return out;
}

MasseyOutput massey_for_points(const CurvePtr& c, const EcPoint& P, const EcPoint& Q, int l, int skip, const SignConventions& signs) {
    require_tame(c, l);
    const Representatives r = choose_representatives(c, P, Q, skip);
    return massey_triple_curve({r.D, miller_function(c, P, l, r.R1)}, {r.E, miller_function(c, Q, l, r.R2)}, l, signs);
}

// ------------------------------------------------------------ sign audit

namespace {

bool line_fixture(const SignConventions& s) {
    auto k = FieldSpec::prime(7);
    IntersectionOptions opt;
    opt.signs = s;
    return intersection_number(SurfaceDivisor::of(PlaneCurve::line(k, 1, 0, 0)), SurfaceDivisor::of(PlaneCurve::line(k, 0, 1, 0)),
                               opt) == 1;
}

bool nu_fixture(const SignConventions& s) {
    auto k = FieldSpec::prime(5);
    auto c = CurveModel::projective_line(k);
    Divisor D(c);
    D.add(Place::finite(c, Polynomial(k, std::vector<int64_t>{0, 1})), 2);
    D.add(Place::finite(c, Polynomial(k, std::vector<int64_t>{2, 0, 1})), -1);
    D.add(Place::infinity(c), 3);
    return nu_curve(divisor_cocycle(D), s).cycle == D;
}

// y^2 = x^3 + 2 over GF(7) has full rational 3-torsion
bool massey_fixture(const SignConventions& s) {
    auto k = FieldSpec::prime(7);
    auto c = CurveModel::elliptic(k, 0, 2);
    const auto T = torsion_points(c, 3);
    for (const auto& P : T)
        for (const auto& Q : T) {
            const FieldElement psi = weil_pairing_miller(c, P, Q, 3).value;
            if (psi.is_one()) continue;
            return massey_for_points(c, P, Q, 3, 0, s).direct_image == psi.inverse();
        }
    return false;
}

std::vector<std::pair<std::string, bool>> run_fixtures(const SignConventions& s) {
    return {{"line-line", line_fixture(s)}, {"nu-divisor", nu_fixture(s)}, {"massey-weil", massey_fixture(s)}};
}

}  // namespace

bool SignAuditReport::ok() const {
    for (const auto& [name, passed] : fixtures)
        if (!passed) return false;
    return !consistent.empty();
}

SignAuditReport sign_audit(const SignConventions& configured) {
    SignAuditReport report;
    report.configured = configured;
    report.fixtures = run_fixtures(configured);
    for (int nu : {-1, 1})
        for (int intersection : {-1, 1})
            for (int massey : {-1, 1}) {
                const SignConventions s{nu, intersection, massey};
                bool all = true;
                for (const auto& [name, passed] : run_fixtures(s)) all = all && passed;
                if (all) report.consistent.push_back(s);
            }
    return report;
}

}  // namespace adele
