#include <random>

#include "adele/error.hpp"
#include "adele/surface.hpp"
#include "doctest.h"

using namespace adele;

namespace {

using Terms = std::vector<std::pair<Exponent, int64_t>>;

MultiPoly mp(const FieldPtr& k, const Terms& t) { return MultiPoly(k, t); }

PlaneCurve curve(const FieldPtr& k, const Terms& t) { return PlaneCurve(mp(k, t)); }

ProjectivePoint point(const FieldPtr& k, int64_t a, int64_t b, int64_t c) {
    return ProjectivePoint::normalized({FieldElement(k, a), FieldElement(k, b), FieldElement(k, c)});
}

// u = X0/X2, v = X1/X2 and friends
SurfaceFunction affine(const PlaneCurve& C, int e = 1) {
    const FieldPtr& k = C.form().field();
    SurfaceFunction f = SurfaceFunction::unit(k);
    f.factors[C] += e;
    f.factors[PlaneCurve::line(k, 0, 0, 1)] -= e * C.degree();
    std::erase_if(f.factors, [](const auto& t) { return t.second == 0; });
    return f;
}

PlaneCurve random_curve(const FieldPtr& k, std::mt19937_64& rng, int degree) {
    const int64_t p = k->characteristic();
    for (;;) {
        Terms t;
        for (int a = 0; a <= degree; ++a)
            for (int b = 0; a + b <= degree; ++b) t.push_back({{a, b, degree - a - b}, static_cast<int64_t>(rng() % p)});
        MultiPoly F = mp(k, t);
        if (F.is_zero() || F.total_degree() != degree) continue;
        try {
            return PlaneCurve(F);
        } catch (const Error&) {
        }
    }
}

}  // namespace

TEST_CASE("fulton multiplicity examples") {
    auto k = FieldSpec::prime(7);
    const MultiPoly u = MultiPoly::variable(k, 0), v = MultiPoly::variable(k, 1);
    CHECK(fulton_multiplicity(u, v) == Multiplicity{false, 1});
    CHECK(fulton_multiplicity(v, v - u * u) == Multiplicity{false, 2});
    CHECK(fulton_multiplicity(u, v * (v - u)) == Multiplicity{false, 2});
    CHECK(fulton_multiplicity(v * v - u * u * u, v) == Multiplicity{false, 3});
    CHECK(fulton_multiplicity(v - u * u, v - u * u * u) == Multiplicity{false, 2});
    CHECK(fulton_multiplicity(u + MultiPoly::constant(FieldElement(k, 1)), v) == Multiplicity{false, 0});
    CHECK(fulton_multiplicity(u * v, u * (v - u)).infinite);
    // translated point
    const FieldElement one(k, 1);
    CHECK(fulton_multiplicity(v - u * u, v - u.scaled(FieldElement(k, 2)) + MultiPoly::constant(one), one, one) ==
          Multiplicity{false, 2});
}

TEST_CASE("fulton multiplicity is symmetric and additive") {
    auto k = FieldSpec::prime(5);
    std::mt19937_64 rng(11);
    auto random_local = [&] {
        Terms t;
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; a + b <= 2; ++b)
                if (a + b > 0) t.push_back({{a, b, 0}, static_cast<int64_t>(rng() % 5)});
        return mp(k, t);
    };
    for (int trial = 0; trial < 40; ++trial) {
        MultiPoly F = random_local(), G = random_local(), H = random_local();
        Multiplicity fg = fulton_multiplicity(F, G), gf = fulton_multiplicity(G, F);
        CHECK(fg == gf);
        Multiplicity fh = fulton_multiplicity(F, H), f_gh = fulton_multiplicity(F, G * H);
        if (!fg.infinite && !fh.infinite) CHECK(f_gh == Multiplicity{false, fg.value + fh.value});
    }
}

TEST_CASE("plane curve validation") {
    auto k = FieldSpec::prime(7);
    CHECK_THROWS_WITH_AS(curve(k, {{{1, 1, 0}, 1}}), doctest::Contains("reducible"), Error);
    CHECK_THROWS_WITH_AS(curve(k, {{{1, 0, 0}, 1}, {{0, 0, 0}, 1}}), doctest::Contains("homogeneous"), Error);
    PlaneCurve c = curve(k, {{{0, 1, 1}, 3}, {{2, 0, 0}, 4}});
    CHECK(c.form().coeff({2, 0, 0}).is_one());
    CHECK(c.verified());
    CHECK(PlaneCurve::line(k, 0, 2, 0) == PlaneCurve::line(k, 0, 1, 0));
}

TEST_CASE("projective points and orbits") {
    auto K = FieldSpec::standard(7, 2);
    auto gen = FieldElement::generator(K);
    auto x = ProjectivePoint::normalized({gen, FieldElement(K, 3), FieldElement(K, 2)});
    CHECK(x.chart() == 2);
    CHECK(x.orbit_degree() == 2);
    CHECK(x.frobenius().frobenius() == x);
    CHECK(!(x.orbit_representative() < x.frobenius().orbit_representative()));
    CHECK(point(K, 1, 2, 0).chart() == 1);
}

TEST_CASE("flag residues and parshin reciprocity") {
    auto k = FieldSpec::prime(7);
    const PlaneCurve X0 = PlaneCurve::line(k, 1, 0, 0), X1 = PlaneCurve::line(k, 0, 1, 0);
    const SurfaceSymbol uv = SurfaceSymbol::single(affine(X0), affine(X1));
    const ProjectivePoint origin = point(k, 0, 0, 1);
    CHECK(flag_residue(uv, {X1, origin}) == 1);
    CHECK(flag_residue(uv, {X0, origin}) == -1);
    CHECK(parshin_point_reciprocity(uv, origin) == 0);

    const PlaneCurve conic = curve(k, {{{0, 1, 1}, 1}, {{2, 0, 0}, 6}});
    const SurfaceSymbol s = SurfaceSymbol::single(affine(conic), affine(X1) * SurfaceFunction::unit(k, 3));
    for (const auto& x : {origin, point(k, 1, 1, 1), point(k, 0, 1, 0), point(k, 2, 4, 1)})
        CHECK(parshin_point_reciprocity(s, x) == 0);

    CHECK_THROWS_WITH_AS(flag_residue(uv, {X1, point(k, 1, 1, 1)}), doctest::Contains("not on the curve"), Error);
    const PlaneCurve cusp = curve(k, {{{0, 2, 1}, 1}, {{3, 0, 0}, 6}});
    CHECK_THROWS_WITH_AS(flag_residue(SurfaceSymbol::single(affine(X0), affine(cusp, 1) * affine(X0, -2)), {cusp, origin}),
                         doctest::Contains("singular"), Error);
}

TEST_CASE("parshin reciprocity for random symbols") {
    auto k = FieldSpec::prime(5);
    std::mt19937_64 rng(5);
    const PlaneCurve X2 = PlaneCurve::line(k, 0, 0, 1);
    for (int trial = 0; trial < 15; ++trial) {
        PlaneCurve a = random_curve(k, rng, 1), b = random_curve(k, rng, 2), c = random_curve(k, rng, 1);
        if (a == X2 || c == X2 || a == c) continue;
        SurfaceFunction f = affine(a) * SurfaceFunction::unit(k, 2);
        SurfaceFunction g = SurfaceFunction::unit(k, 3) * affine(b) * affine(c, -1);
        SurfaceSymbol s = SurfaceSymbol::single(f, g);
        // a conic splitting over GF(25) is singular at one point
        for (int64_t x0 = 0; x0 < 5; ++x0)
            for (int64_t x1 = 0; x1 < 5; ++x1) {
                ProjectivePoint x = point(k, x0, x1, 1);
                try {
                    const int total = parshin_point_reciprocity(s, x);
                    CHECK(total == 0);
                } catch (const Error& e) {
                    CHECK(std::string(e.what()).find("singular") != std::string::npos);
                }
            }
    }
}

TEST_CASE("dlog2 pole orders") {
    auto k = FieldSpec::prime(7);
    const PlaneCurve X0 = PlaneCurve::line(k, 1, 0, 0), X1 = PlaneCurve::line(k, 0, 1, 0);
    const PlaneCurve one_minus_u = PlaneCurve::line(k, 1, 0, 6);
    CHECK(dlog2_pole_check(SurfaceSymbol::single(affine(X0), affine(X1))) == 1);
    CHECK(dlog2_pole_check(SurfaceSymbol::single(affine(X0), affine(one_minus_u))) == 0);
    CHECK(dlog2_pole_check(SurfaceSymbol::single(affine(X0, 2), affine(X1))) == 1);
    // {u, v} * {v, u} cancels
    SurfaceSymbol s = SurfaceSymbol::single(affine(X0), affine(X1));
    s.entries.push_back({affine(X1), affine(X0), 1});
    CHECK(dlog2_pole_check(s) == 0);
    auto orders = dlog2_pole_orders(SurfaceSymbol::single(affine(X0), affine(X1)));
    CHECK(orders.at(X0) == 1);
    CHECK(orders.at(X1) == 1);
    CHECK_THROWS_AS(dlog2_pole_check(SurfaceSymbol{{{SurfaceFunction::ratio(X0, X1) * SurfaceFunction::ratio(X0, X1),
                                                     SurfaceFunction{FieldElement(k, 1), {{X0, 1}}}, 1}}}),
                    Error);
}

TEST_CASE("intersection examples") {
    auto k = FieldSpec::prime(7);
    const PlaneCurve X0 = PlaneCurve::line(k, 1, 0, 0), X1 = PlaneCurve::line(k, 0, 1, 0);
    const PlaneCurve conic = curve(k, {{{0, 1, 1}, 1}, {{2, 0, 0}, 6}});

    auto lines = intersect(SurfaceDivisor::of(X0), SurfaceDivisor::of(X1));
    CHECK(lines.number == 1);
    CHECK(lines.cycle.size() == 1);
    CHECK(lines.cycle.at(point(k, 0, 0, 1)) == 1);

    auto tangent = intersect(SurfaceDivisor::of(conic), SurfaceDivisor::of(X1));
    CHECK(tangent.number == 2);
    CHECK(tangent.cycle.at(point(k, 0, 0, 1)) == 2);
    CHECK(intersect(SurfaceDivisor::of(X1), SurfaceDivisor::of(conic)).number == 2);

    const PlaneCurve conic2 = curve(k, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 6}});
    auto two = intersect(SurfaceDivisor::of(conic), SurfaceDivisor::of(conic2));
    CHECK(two.number == 4);
    CHECK(two.fulton_sum == 4);
    CHECK(two.bezout == 4);

    // v = u^2 against v = 3 meets in one point of degree 2
    const PlaneCurve v3 = PlaneCurve::line(k, 0, 1, 4);
    auto quad = intersect(SurfaceDivisor::of(conic), SurfaceDivisor::of(v3));
    CHECK(quad.field_degree == 2);
    CHECK(quad.number == 2);
    CHECK(quad.cycle.size() == 1);
    CHECK(quad.degrees.begin()->second == 2);
    IntersectionOptions tight;
    tight.ext_bound = 1;
    CHECK_THROWS_WITH_AS(intersect(SurfaceDivisor::of(conic), SurfaceDivisor::of(v3), tight), doctest::Contains("extension bound"),
                         Error);

    const PlaneCurve cubic = curve(k, {{{0, 2, 1}, 1}, {{3, 0, 0}, 6}, {{1, 0, 2}, 6}, {{0, 0, 3}, 6}});
    CHECK(intersect(SurfaceDivisor::of(cubic), SurfaceDivisor::of(X0)).number == 3);
    CHECK(intersect(SurfaceDivisor::of(cubic), SurfaceDivisor::of(conic)).number == 6);

    SurfaceDivisor D;
    D.add(X0, 2);
    D.add(conic, -1);
    CHECK(intersection_number(D, SurfaceDivisor::of(cubic)) == 0);
    CHECK_THROWS_WITH_AS(intersect(SurfaceDivisor::of(conic), SurfaceDivisor::of(conic)), doctest::Contains("improper"), Error);
}

TEST_CASE("intersection numbers agree with fulton and bezout") {
    std::mt19937_64 rng(2024);
    int pairs = 0;
    for (uint32_t p : {5u, 7u, 11u}) {
        auto k = FieldSpec::prime(p);
        for (int trial = 0; trial < 6; ++trial) {
            const int d1 = 1 + static_cast<int>(rng() % 2), d2 = 1 + static_cast<int>(rng() % 3);
            PlaneCurve a = random_curve(k, rng, d1), b = random_curve(k, rng, d2);
            if (a == b) continue;
            IntersectionReport r;
            try {
                r = intersect(SurfaceDivisor::of(a), SurfaceDivisor::of(b));
            } catch (const Error& e) {
                // a singular cubic point on a flag curve is out of scope
                INFO(e.what());
                CHECK(std::string(e.what()).find("extension bound") != std::string::npos);
                continue;
            }
            INFO(a.to_string() << " / " << b.to_string());
            CHECK(r.number == d1 * d2);
            CHECK(r.fulton_sum == d1 * d2);
            CHECK(r.bezout == d1 * d2);
            int cycle_degree = 0;
            for (const auto& [x, m] : r.cycle) cycle_degree += m * r.degrees.at(x);
            CHECK(cycle_degree == r.number);
            auto s = intersect_serial(SurfaceDivisor::of(a), SurfaceDivisor::of(b));
            CHECK(s.number == r.number);
            CHECK(s.cycle == r.cycle);
            ++pairs;
        }
    }
    CHECK(pairs >= 10);
}

TEST_CASE("intersection is bilinear and symmetric") {
    auto k = FieldSpec::prime(7);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        PlaneCurve a = random_curve(k, rng, 1), b = random_curve(k, rng, 2), c = random_curve(k, rng, 1);
        if (a == c) continue;
        SurfaceDivisor D1;
        D1.add(a, 2);
        SurfaceDivisor D2;
        D2.add(b, 1);
        D2.add(c, -3);
        const int n = intersection_number(D1, D2);
        CHECK(n == 2 * (2 - 3));
        CHECK(intersection_number(D2, D1) == n);
    }
}
