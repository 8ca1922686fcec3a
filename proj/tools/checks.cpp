#include "checks.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "adele/adelic.hpp"
#include "adele/error.hpp"
#include "adele/riemann_roch.hpp"
#include "adele/surface.hpp"
#include "adele/weil.hpp"

namespace adele::checks {

namespace {

class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++cases_;
        if (!ok && failures_++ == 0) first_ = what;
    }
    int cases() const { return cases_; }
    CheckResult result(std::string name) const {
        std::string detail = std::to_string(cases_) + " cases, " + std::to_string(failures_) + " failed";
        if (failures_) detail += "; first: " + first_;
        return {std::move(name), failures_ == 0 && cases_ > 0, detail, 0};
    }

private:
    int cases_ = 0, failures_ = 0;
    std::string first_;
};

CheckResult timed(const std::function<CheckResult()>& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

Polynomial poly(const FieldPtr& f, std::vector<int64_t> c) { return Polynomial(f, c); }

FunctionFieldElement random_rational(const CurvePtr& c, std::mt19937_64& rng, int max_deg) {
    const int64_t p = c->base()->characteristic();
    for (;;) {
        std::vector<int64_t> num(1 + rng() % (max_deg + 1)), den(1 + rng() % (max_deg + 1));
        for (auto& x : num) x = static_cast<int64_t>(rng() % p);
        for (auto& x : den) x = static_cast<int64_t>(rng() % p);
        if (poly(c->base(), num).is_zero() || poly(c->base(), den).is_zero()) continue;
        return FunctionFieldElement(c, RationalFunction(poly(c->base(), num), poly(c->base(), den)));
    }
}

// --------------------------------------------------------------- fixtures

struct TorsionFixture {
    uint32_t p;
    int64_t a, b;
    int l;
};

const TorsionFixture kTorsion[] = {{5, -1, 0, 2}, {7, -1, 0, 2}, {7, 0, 2, 3}, {13, 0, 3, 3}};

CurvePtr torsion_curve(const TorsionFixture& fx) { return CurveModel::elliptic(FieldSpec::prime(fx.p), fx.a, fx.b); }

std::vector<Place> small_places(const CurvePtr& c) {
    std::vector<Place> out{Place::infinity(c)};
    const FieldPtr& k = c->base();
    for (int64_t r = 0; r < static_cast<int64_t>(k->characteristic()); ++r)
        for (auto& v : Place::over(c, poly(k, {-r, 1}))) out.push_back(v);
    for (auto& v : Place::over(c, poly(k, {2, 0, 1}))) out.push_back(v);
    return out;
}

Divisor random_divisor(const CurvePtr& c, std::mt19937_64& rng, int bound) {
    const auto pool = small_places(c);
    for (;;) {
        Divisor D(c);
        const int terms = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < terms; ++i) D.add(pool[rng() % pool.size()], static_cast<int>(rng() % 7) - 3);
        if (D.degree() >= -bound && D.degree() <= bound) return D;
    }
}

using Terms = std::vector<std::pair<Exponent, int64_t>>;

PlaneCurve plane(const FieldPtr& k, const Terms& t) { return PlaneCurve(MultiPoly(k, t)); }

PlaneCurve random_plane_curve(const FieldPtr& k, std::mt19937_64& rng, int degree) {
    const int64_t p = k->characteristic();
    for (;;) {
        Terms t;
        for (int a = 0; a <= degree; ++a)
            for (int b = 0; a + b <= degree; ++b) t.push_back({{a, b, degree - a - b}, static_cast<int64_t>(rng() % p)});
        MultiPoly F(k, t);
        if (F.is_zero() || F.total_degree() != degree) continue;
        try {
            return PlaneCurve(F);
        } catch (const Error&) {
        }
    }
}

// C / X2^deg C
SurfaceFunction affine(const PlaneCurve& C, int e = 1) {
    const FieldPtr& k = C.form().field();
    SurfaceFunction f = SurfaceFunction::unit(k);
    f.factors[C] += e;
    f.factors[PlaneCurve::line(k, 0, 0, 1)] -= e * C.degree();
    std::erase_if(f.factors, [](const auto& t) { return t.second == 0; });
    return f;
}

SurfaceSymbol random_surface_symbol(const FieldPtr& k, std::mt19937_64& rng) {
    const PlaneCurve X2 = PlaneCurve::line(k, 0, 0, 1);
    for (;;) {
        const PlaneCurve a = random_plane_curve(k, rng, 1), b = random_plane_curve(k, rng, 1 + static_cast<int>(rng() % 2)),
                         c = random_plane_curve(k, rng, 1);
        if (a == X2 || b == X2 || c == X2 || a == c || a == b) continue;
        const int64_t p = k->characteristic();
        SurfaceFunction f = affine(a) * SurfaceFunction::unit(k, 1 + static_cast<int64_t>(rng() % (p - 1)));
        SurfaceFunction g = affine(b) * affine(c, -1) * SurfaceFunction::unit(k, 1 + static_cast<int64_t>(rng() % (p - 1)));
        SurfaceSymbol s = SurfaceSymbol::single(f, g);
        if (rng() % 2) s.entries.push_back({affine(c), affine(a, 2), 1});
        return s;
    }
}

SurfaceDivisor single(const PlaneCurve& C, int m = 1) { return SurfaceDivisor::of(C, m); }

}  // namespace

// ---------------------------------------------------------------- checks

CheckResult riemann_roch(const SuiteOptions& opt) {
    return timed([&] {
        Tally t;
        std::mt19937_64 rng(opt.seed + 101);
        for (auto c : {CurveModel::projective_line(FieldSpec::prime(5)), CurveModel::elliptic(FieldSpec::prime(5), 1, 1)}) {
            const Divisor K = canonical_divisor(c);
            for (int i = 0; i < 20; ++i) {
                const Divisor D = random_divisor(c, rng, 6);
                const auto rep = cohomology_dims(c, D);
                const std::string tag = c->describe() + " D = " + D.to_string();
                t.expect(rep.h0 - rep.h1 == D.degree() + 1 - c->genus(), "euler characteristic at " + tag);
                t.expect(rep.h1 == cohomology_dims(c, K - D).h0, "serre duality at " + tag);
                t.expect(rep.h0 == static_cast<int>(riemann_roch_space(D).size()), "riemann-roch basis at " + tag);
            }
        }
        return t.result("riemann-roch");
    });
}

CheckResult weil_reciprocity(const SuiteOptions& opt) {
    return timed([&] {
        Tally t;
        std::mt19937_64 rng(opt.seed + 202);
        auto P1 = CurveModel::projective_line(FieldSpec::prime(7));
        for (int i = 0; i < 100; ++i) {
            MilnorSymbol s(P1);
            const int entries = 1 + static_cast<int>(rng() % 2);
            for (int j = 0; j < entries; ++j) s.add(random_rational(P1, rng, 3), random_rational(P1, rng, 3), 1 + static_cast<int>(rng() % 3));
            t.expect(weil_reciprocity_check(s).is_one(), "random symbol " + std::to_string(i));
        }
        int built = 0;
        for (const auto& fx : kTorsion) {
            auto c = torsion_curve(fx);
            const auto T = torsion_points(c, fx.l);
            const auto R = rational_points(c);
            for (std::size_t i = 1; i < 2 * T.size() && built < 20; ++i) {
                const MillerFunction f = miller_function(c, T[i % T.size()], fx.l, R[(2 * i) % R.size()]);
                const MillerFunction g = miller_function(c, T[(i + 1) % T.size()], fx.l, R[(5 * i + 1) % R.size()]);
                if (f.factors.empty() || g.factors.empty()) continue;
                t.expect(weil_reciprocity_check(MilnorSymbol::single(f.expanded(), g.expanded())).is_one(),
                         "miller symbol on " + c->describe());
                ++built;
            }
        }
        t.expect(built == 20, "twenty miller symbols");
        return t.result("weil-reciprocity");
    });
}

CheckResult intersection(const SuiteOptions& opt) {
    return timed([&] {
        Tally t;
        auto k = FieldSpec::prime(7);
        const PlaneCurve X0 = PlaneCurve::line(k, 1, 0, 0), X1 = PlaneCurve::line(k, 0, 1, 0);
        const PlaneCurve conic = plane(k, {{{0, 1, 1}, 1}, {{2, 0, 0}, -1}});
        const PlaneCurve circle = plane(k, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, -1}});
        const PlaneCurve cubic = plane(k, {{{0, 2, 1}, 1}, {{3, 0, 0}, -1}, {{1, 0, 2}, -1}, {{0, 0, 3}, -1}});
        const PlaneCurve v3 = PlaneCurve::line(k, 0, 1, -3);

        std::vector<std::pair<SurfaceDivisor, SurfaceDivisor>> pairs{
            {single(X0), single(X1)},          {single(conic), single(X1)},  {single(conic), single(circle)},
            {single(conic), single(v3)},       {single(cubic), single(X0)},  {single(cubic), single(conic)},
            {single(circle), single(X0, 2)},   {single(X1), single(cubic)},
        };
        SurfaceDivisor mixed;
        mixed.add(X0, 2);
        mixed.add(conic, -1);
        pairs.push_back({mixed, single(cubic)});
        SurfaceDivisor lines;
        lines.add(X0, 1);
        lines.add(X1, 1);
        pairs.push_back({lines, single(circle)});
        std::mt19937_64 rng(opt.seed + 303);
        for (uint32_t p : {5u, 11u}) {
            auto kp = FieldSpec::prime(p);
            for (int i = 0; i < 2; ++i) {
                PlaneCurve a = random_plane_curve(kp, rng, 2), b = random_plane_curve(kp, rng, 1 + i);
                if (a == b) continue;
                pairs.push_back({single(a), single(b)});
            }
        }

        IntersectionOptions io;
        io.ext_bound = opt.ext_bound;
        io.signs = opt.signs;
        bool tangency = false, quadratic = false;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto& [D1, D2] = pairs[i];
            const std::string tag = "pair " + std::to_string(i);
            IntersectionReport rep;
            try {
                rep = intersect(D1, D2, io);
            } catch (const Error& e) {
                // random pairs may need a larger extension than allowed
                t.expect(i >= 10 && std::string(e.what()).find("extension bound") != std::string::npos, tag + ": " + e.what());
                continue;
            }
            t.expect(rep.number == D1.degree() * D2.degree(), tag + " vs bezout degree product");
            t.expect(rep.bezout == rep.number, tag + " vs resultant oracle");
            t.expect(rep.fulton_sum == rep.number, tag + " vs fulton sum");
            const auto serial = intersect_serial(D1, D2, io);
            t.expect(serial.number == rep.number && serial.cycle == rep.cycle, tag + " serial");
            // cycle against pointwise Fulton multiplicities
            const FieldPtr M = FieldSpec::standard(D1.terms().begin()->first.form().field()->characteristic(), rep.field_degree);
            std::map<ProjectivePoint, int> expected;
            for (const auto& [C1, m1] : D1.terms())
                for (const auto& [C2, m2] : D2.terms())
                    for (const auto& ip : intersection_points(C1, C2, M)) {
                        expected[ip.point] += m1 * m2 * ip.multiplicity;
                        if (ip.multiplicity == 2 && i == 1) tangency = true;
                        if (ip.degree == 2 && i == 3) quadratic = true;
                    }
            std::erase_if(expected, [](const auto& e) { return e.second == 0; });
            t.expect(expected == rep.cycle, tag + " cycle vs fulton");
        }
        t.expect(tangency, "tangency fixture has local multiplicity 2");
        t.expect(quadratic, "fixture with points in GF(49)");
        t.expect(pairs.size() >= 10, "at least ten pairs");
        return t.result("intersection");
    });
}

CheckResult parshin(const SuiteOptions& opt) {
    return timed([&] {
        Tally t;
        std::mt19937_64 rng(opt.seed + 404);
        auto k = FieldSpec::prime(5);
        int admissible = 0;
        for (int attempt = 0; attempt < 200 && admissible < 20; ++attempt) {
            const SurfaceSymbol s = random_surface_symbol(k, rng);
            const auto support = s.support();
            std::set<ProjectivePoint> points;
            try {
                for (std::size_t i = 0; i < support.size(); ++i)
                    for (std::size_t j = i + 1; j < support.size(); ++j) {
                        const int K = intersection_field_degree(support[i], support[j]);
                        if (K > opt.ext_bound) throw Error("extension bound");
                        for (const auto& ip : intersection_points(support[i], support[j], FieldSpec::standard(5, K)))
                            points.insert(ip.point);
                    }
                std::vector<int> totals;
                for (const auto& x : points) totals.push_back(parshin_point_reciprocity(s, x));
                for (int v : totals) t.expect(v == 0, "symbol " + std::to_string(admissible));
                ++admissible;
            } catch (const Error&) {
                // singular flag curves or large residue fields: not admissible
            }
        }
        t.expect(admissible >= 20, "twenty admissible symbols");
        return t.result("parshin-reciprocity");
    });
}

CheckResult weil_pairing(const SuiteOptions& opt) {
    return timed([&] {
        Tally t;
        for (const auto& fx : kTorsion) {
            auto c = torsion_curve(fx);
            const auto T = torsion_points(c, fx.l);
            const std::string tag = c->describe() + " l = " + std::to_string(fx.l);
            t.expect(T.size() == static_cast<std::size_t>(fx.l * fx.l), tag + " full torsion");
            std::map<std::pair<EcPoint, EcPoint>, FieldElement> psi;
            for (const auto& P : T)
                for (const auto& Q : T) {
                    const FieldElement e = weil_pairing_idelic(c, P, Q, fx.l).value;
                    psi[{P, Q}] = e;
                    t.expect(e == weil_pairing_miller(c, P, Q, fx.l).value, tag + " miller oracle");
                    t.expect(e.pow(fx.l).is_one(), tag + " root of unity");
                }
            int massey = 0;
            for (const auto& P : T) {
                t.expect(psi.at({P, P}).is_one(), tag + " alternating");
                for (const auto& Q : T) {
                    t.expect(psi.at({P, Q}) * psi.at({Q, P}) == FieldElement::one(c->base()), tag + " antisymmetry");
                    for (const auto& P2 : T)
                        t.expect(psi.at({ec_add(c, P, P2), Q}) == psi.at({P, Q}) * psi.at({P2, Q}), tag + " bilinearity");
                    // direct image realizes the pairing with exponent (-1)^d, d = 1
                    t.expect(massey_for_points(c, P, Q, fx.l, 0, opt.signs).direct_image == psi.at({P, Q}).inverse(), tag + " massey");
                    ++massey;
                }
            }
            t.expect(massey >= 3, tag + " massey configurations");
        }
        return t.result("weil-pairing");
    });
}

CheckResult chain_invariance(const SuiteOptions& opt) {
    return timed([&] {
        Tally t;
        for (const auto& fx : kTorsion) {
            auto c = torsion_curve(fx);
            const FieldPtr& k = c->base();
            const std::string tag = c->describe();
            const auto T = torsion_points(c, fx.l);
            EcPoint P, Q;
            bool found = false;
            for (const auto& a : T)
                for (const auto& b : T)
                    if (!found && !weil_pairing_miller(c, a, b, fx.l).value.is_one()) {
                        P = a;
                        Q = b;
                        found = true;
                    }
            t.expect(found, tag + " nontrivial pairing");
            if (!found) continue;
            const Representatives r = choose_representatives(c, P, Q);
            const MasseyClass alpha{r.D, miller_function(c, P, fx.l, r.R1)};
            const MasseyClass beta{r.E, miller_function(c, Q, fx.l, r.R2)};
            const FieldElement base = massey_triple_curve(alpha, beta, fx.l, opt.signs).direct_image;

            // functions whose divisors may move Z or serve as a trivial class
            std::vector<FunctionFieldElement> movers;
            for (int64_t a = 0; a < static_cast<int64_t>(k->characteristic()); ++a)
                for (int64_t b = 0; b < static_cast<int64_t>(k->characteristic()); ++b)
                    if (a != b)
                        movers.push_back((FunctionFieldElement::x(c) - FunctionFieldElement::constant(c, a)) /
                                         (FunctionFieldElement::x(c) - FunctionFieldElement::constant(c, b)));
            auto disjoint = [](const Divisor& A, const Divisor& B) {
                for (const auto& [v, m] : B.terms())
                    if (A[v] != 0) return false;
                return true;
            };

            int perturbations = 0;
            for (int skip = 1; skip <= 2; ++skip) {
                t.expect(massey_for_points(c, P, Q, fx.l, skip, opt.signs).direct_image == base, tag + " offset change");
                ++perturbations;
            }
            MasseyClass a2 = alpha, b2 = beta;
            a2.chain = a2.chain.scaled(FieldElement(k, 2));
            t.expect(massey_triple_curve(a2, beta, fx.l, opt.signs).direct_image == base, tag + " constant on f");
            b2.chain = b2.chain.scaled(FieldElement(k, 3));
            t.expect(massey_triple_curve(alpha, b2, fx.l, opt.signs).direct_image == base, tag + " constant on g");
            perturbations += 2;
            for (const auto& h : movers) {
                const Divisor Z = beta.representative + principal_divisor(h);
                if (!disjoint(alpha.representative, Z)) continue;
                const MasseyClass b3{Z, beta.chain * MillerFunction::of(h).pow(fx.l)};
                t.expect(massey_triple_curve(alpha, b3, fx.l, opt.signs).direct_image == base, tag + " principal divisor on Z");
                ++perturbations;
                break;
            }
            t.expect(perturbations == 5, tag + " five perturbations");
            bool trivial = false;
            for (const auto& h : movers) {
                const Divisor Z = principal_divisor(h);
                if (!disjoint(alpha.representative, Z)) continue;
                const MasseyClass b4{Z, MillerFunction::of(h).pow(fx.l)};
                t.expect(massey_triple_curve(alpha, b4, fx.l, opt.signs).direct_image.is_one(), tag + " trivial class");
                trivial = true;
                break;
            }
            t.expect(trivial, tag + " trivial class found");
        }
        return t.result("chain-invariance");
    });
}

CheckResult dlog_bounds(const SuiteOptions& opt) {
    return timed([&] {
        Tally t;
        std::mt19937_64 rng(opt.seed + 707);
        auto P1 = CurveModel::projective_line(FieldSpec::prime(7));
        for (int i = 0; i < 50; ++i) {
            const FunctionFieldElement f = random_rational(P1, rng, 4);
            if (f.is_constant()) {
                t.expect(dlog_pole_order_check(f) == 0, "constant");
                continue;
            }
            t.expect(dlog_pole_order_check(f) <= 1, "dlog pole order of " + f.to_string());
            const RationalOneForm w = dlog_k1(f);
            FieldElement sum = FieldElement::zero(P1->base());
            for (const auto& v : polar_places(w)) sum += form_residue(w, v);
            t.expect(sum.is_zero(), "residue sum of dlog " + f.to_string());
        }
        auto k = FieldSpec::prime(5);
        for (int i = 0; i < 50; ++i) t.expect(dlog2_pole_check(random_surface_symbol(k, rng)) <= 1, "dlog2 symbol " + std::to_string(i));
        return t.result("dlog-bounds");
    });
}

CheckResult sign_audit(const SuiteOptions& opt) {
    return timed([&] {
        Tally t;
        const SignAuditReport rep = adele::sign_audit(opt.signs);
        for (const auto& [name, passed] : rep.fixtures) t.expect(passed, "fixture " + name);
        t.expect(rep.consistent.size() == 1, "unique consistent assignment");
        t.expect(!rep.consistent.empty() && rep.consistent.front() == opt.signs, "configured signs are the consistent ones");
        return t.result("sign-audit");
    });
}

std::vector<CheckResult> run_suite(const SuiteOptions& opt) {
    return {riemann_roch(opt), weil_reciprocity(opt), intersection(opt), parshin(opt),
            weil_pairing(opt), chain_invariance(opt), dlog_bounds(opt), sign_audit(opt)};
}

}  // namespace adele::checks
