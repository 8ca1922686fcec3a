#include <algorithm>
#include <random>

#include "adele/elliptic.hpp"
#include "adele/error.hpp"
#include "adele/riemann_roch.hpp"
#include "doctest.h"

using namespace adele;

namespace {

Polynomial poly(const FieldPtr& f, std::vector<int64_t> c) { return Polynomial(f, c); }

Polynomial random_poly(const FieldPtr& f, int deg, std::mt19937_64& rng) {
    std::vector<int64_t> c(deg + 1);
    for (auto& x : c) x = static_cast<int64_t>(rng() % f->characteristic());
    return Polynomial(f, c);
}

FunctionFieldElement random_function(const CurvePtr& c, std::mt19937_64& rng) {
    const FieldPtr& k = c->base();
    for (;;) {
        Polynomial num = random_poly(k, static_cast<int>(rng() % 4), rng);
        Polynomial den = random_poly(k, static_cast<int>(rng() % 3), rng);
        if (den.is_zero()) continue;
        RationalFunction a(num, den);
        RationalFunction b = RationalFunction::zero(k);
        if (c->is_elliptic()) b = RationalFunction(random_poly(k, static_cast<int>(rng() % 2), rng));
        FunctionFieldElement f(c, a, b);
        if (!f.is_zero()) return f;
    }
}

std::vector<Place> place_pool(const CurvePtr& c) {
    std::vector<Place> out{Place::infinity(c)};
    const FieldPtr& k = c->base();
    const int64_t p = k->characteristic();
    for (int64_t r = 0; r < p; ++r)
        for (auto& v : Place::over(c, poly(k, {-r, 1}))) out.push_back(v);
    for (int64_t a = 0; a < p; ++a)
        for (int64_t b = 0; b < p; ++b) {
            Polynomial q = poly(k, {b, a, 1});
            if (factor_polynomial(q).factors.size() == 1 && factor_polynomial(q).factors[0].second == 1)
                for (auto& v : Place::over(c, q)) out.push_back(v);
            if (out.size() > 18) return out;
        }
    return out;
}

Divisor random_divisor(const CurvePtr& c, const std::vector<Place>& pool, std::mt19937_64& rng) {
    Divisor D(c);
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < terms; ++i) D.add(pool[rng() % pool.size()], static_cast<int>(rng() % 5) - 2);
    return D;
}

}  // namespace

TEST_CASE("valuation examples") {
    auto k = FieldSpec::prime(5);
    auto line = CurveModel::projective_line(k);
    FunctionFieldElement f(line, RationalFunction(poly(k, {0, 0, 1}), poly(k, {-1, 1})));
    CHECK(valuation(f, Place::finite(line, poly(k, {0, 1}))) == 2);
    FunctionFieldElement g(line, RationalFunction(poly(k, {1, 0, 1}), poly(k, {0, 1})));
    CHECK(valuation(g, Place::infinity(line)) == -1);

    auto E = CurveModel::elliptic(k, 1, 0);
    CHECK(valuation(FunctionFieldElement::x(E), Place::infinity(E)) == -2);
    CHECK(valuation(FunctionFieldElement::y(E), Place::infinity(E)) == -3);
    CHECK_THROWS_WITH(valuation(FunctionFieldElement::constant(E, 0), Place::infinity(E)), "valuation of zero undefined");
}

TEST_CASE("principal divisor examples") {
    auto k5 = FieldSpec::prime(5);
    auto line = CurveModel::projective_line(k5);
    Divisor d = principal_divisor(FunctionFieldElement::x(line));
    Divisor expect = Divisor::point(Place::finite(line, poly(k5, {0, 1}))) - Divisor::point(Place::infinity(line));
    CHECK(d == expect);

    auto k3 = FieldSpec::prime(3);
    auto line3 = CurveModel::projective_line(k3);
    Divisor d3 = principal_divisor(FunctionFieldElement(line3, RationalFunction(poly(k3, {1, 0, 1}))));
    Place q = Place::finite(line3, poly(k3, {1, 0, 1}));
    CHECK(d3[q] == 1);
    CHECK(q.degree() == 2);
    CHECK(d3[Place::infinity(line3)] == -2);
    CHECK(d3.terms().size() == 2);

    auto E = CurveModel::elliptic(k5, -1, 0);
    Divisor dy = principal_divisor(FunctionFieldElement::y(E));
    Divisor ey(E);
    for (int64_t r : {0, 1, 4}) ey.add(Place::from_point(E, FieldElement(k5, r), FieldElement::zero(k5)), 1);
    ey.add(Place::infinity(E), -3);
    CHECK(dy == ey);

    auto E2 = CurveModel::elliptic(k5, 1, 0);
    Divisor dx = principal_divisor(FunctionFieldElement::x(E2));
    CHECK(dx[Place::from_point(E2, FieldElement::zero(k5), FieldElement::zero(k5))] == 2);
    CHECK(dx[Place::infinity(E2)] == -2);
}

TEST_CASE("places over an irreducible polynomial") {
    auto k = FieldSpec::prime(5);
    auto E = CurveModel::elliptic(k, 1, 1);
    int total = 0;
    for (int64_t r = 0; r < 5; ++r) {
        auto vs = Place::over(E, poly(k, {-r, 1}));
        for (const auto& v : vs) {
            if (v.fibre() == Place::Fibre::Split) total += 1;
            if (v.fibre() == Place::Fibre::Ramified) total += 1;
        }
    }
    // the rational affine points of y^2 = x^3 + x + 1 over GF(5)
    CHECK(total + 1 == static_cast<int>(rational_points(E).size()));

    // a degree-2 point maps to a place of matching degree
    auto k25 = FieldSpec::standard(5, 2);
    for (const auto& P : rational_points(E, k25)) {
        if (P.infinity || P.x.is_prime_field_element()) continue;
        Place v = Place::from_point(E, P.x, P.y);
        CHECK(v.degree() == 2);
        ResiduePoint rp = residue_point(v);
        CHECK(rp.field->order() == 25);
        break;
    }
}

TEST_CASE("divisor of a function has degree zero and is additive") {
    std::mt19937_64 rng(7);
    for (auto c : {CurveModel::projective_line(FieldSpec::prime(7)), CurveModel::elliptic(FieldSpec::prime(5), 1, 1),
                   CurveModel::elliptic(FieldSpec::prime(7), 0, 1)}) {
        for (int i = 0; i < 12; ++i) {
            auto f = random_function(c, rng);
            auto g = random_function(c, rng);
            Divisor df = principal_divisor(f);
            CHECK(df.degree() == 0);
            CHECK(principal_divisor(f * g) == df + principal_divisor(g));
        }
    }
}

TEST_CASE("valuation is additive on products") {
    std::mt19937_64 rng(11);
    auto E = CurveModel::elliptic(FieldSpec::prime(5), 2, 1);
    auto pool = place_pool(E);
    for (int i = 0; i < 20; ++i) {
        auto f = random_function(E, rng);
        auto g = random_function(E, rng);
        const Place& v = pool[rng() % pool.size()];
        CHECK(valuation(f * g, v) == valuation(f, v) + valuation(g, v));
    }
}

TEST_CASE("local parameters have valuation one") {
    auto E = CurveModel::elliptic(FieldSpec::prime(5), -1, 0);
    for (const auto& v : place_pool(E)) CHECK(valuation(local_parameter(v), v) == 1);
    auto line = CurveModel::projective_line(FieldSpec::prime(3));
    for (const auto& v : place_pool(line)) CHECK(valuation(local_parameter(v), v) == 1);
}

TEST_CASE("riemann_roch_space examples") {
    auto k = FieldSpec::prime(5);
    auto line = CurveModel::projective_line(k);
    auto basis = riemann_roch_space(Divisor::point(Place::infinity(line), 2));
    REQUIRE(basis.size() == 3);
    CHECK(basis[0] == FunctionFieldElement::constant(line, 1));
    CHECK(basis[1] == FunctionFieldElement::x(line));
    CHECK(basis[2] == FunctionFieldElement::x(line).pow(2));

    auto E = CurveModel::elliptic(k, 1, 1);
    auto b0 = riemann_roch_space(Divisor(E));
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == FunctionFieldElement::constant(E, 1));

    auto b3 = riemann_roch_space(Divisor::point(Place::infinity(E), 3));
    REQUIRE(b3.size() == 3);
    CHECK(b3[0] == FunctionFieldElement::constant(E, 1));
    CHECK(b3[1] == FunctionFieldElement::x(E));
    CHECK(b3[2] == FunctionFieldElement::y(E));
}

TEST_CASE("riemann_roch_space dimensions and membership") {
    std::mt19937_64 rng(3);
    for (auto c : {CurveModel::projective_line(FieldSpec::prime(5)), CurveModel::elliptic(FieldSpec::prime(5), 1, 1),
                   CurveModel::elliptic(FieldSpec::prime(5), -1, 0)}) {
        auto pool = place_pool(c);
        const Divisor K = canonical_divisor(c);
        int checked = 0;
        while (checked < 25) {
            Divisor D = random_divisor(c, pool, rng);
            if (D.degree() < -3 || D.degree() > 6) continue;
            ++checked;
            auto L = riemann_roch_space(D);
            auto LK = riemann_roch_space(K - D);
            CHECK(static_cast<int>(L.size()) - static_cast<int>(LK.size()) == D.degree() + 1 - c->genus());
            for (const auto& f : L) {
                INFO(D.to_string(), " f=", f.to_string(), " div=", principal_divisor(f).to_string());
                CHECK((principal_divisor(f) + D).is_effective());
            }
            if (c->is_elliptic() && D.degree() >= 1) CHECK(static_cast<int>(L.size()) == D.degree());
        }
    }
}

TEST_CASE("elliptic group law examples") {
    auto k = FieldSpec::prime(5);
    auto E = CurveModel::elliptic(k, 1, 1);
    EcPoint P = EcPoint::affine(FieldElement(k, 0), FieldElement(k, 1));
    CHECK(ec_add(E, P, EcPoint::zero()) == P);
    CHECK(ec_add(E, P, ec_negate(P)).infinity);
    CHECK(scalar_multiple(E, 2, P) == EcPoint::affine(FieldElement(k, 4), FieldElement(k, 2)));
    CHECK_THROWS_AS(ec_add(E, EcPoint::affine(FieldElement(k, 0), FieldElement(k, 0)), P), Error);
}

TEST_CASE("group law associativity") {
    std::mt19937_64 rng(5);
    auto E = CurveModel::elliptic(FieldSpec::prime(7), 3, 2);
    auto pts = rational_points(E, FieldSpec::standard(7, 2));
    for (int i = 0; i < 40; ++i) {
        const auto& P = pts[rng() % pts.size()];
        const auto& Q = pts[rng() % pts.size()];
        const auto& R = pts[rng() % pts.size()];
        CHECK(ec_add(E, ec_add(E, P, Q), R) == ec_add(E, P, ec_add(E, Q, R)));
        CHECK(ec_add(E, P, Q) == ec_add(E, Q, P));
    }
    CHECK(scalar_multiple(E, static_cast<int64_t>(pts.size()), pts[3]).infinity);
}

TEST_CASE("torsion points") {
    auto k = FieldSpec::prime(5);
    auto E = CurveModel::elliptic(k, -1, 0);
    auto t2 = torsion_points(E, 2);
    REQUIRE(t2.size() == 4);
    CHECK(t2[0].infinity);
    CHECK(t2[1] == EcPoint::affine(FieldElement(k, 0), FieldElement(k, 0)));
    CHECK(t2[2] == EcPoint::affine(FieldElement(k, 1), FieldElement(k, 0)));
    CHECK(t2[3] == EcPoint::affine(FieldElement(k, 4), FieldElement(k, 0)));

    auto E2 = CurveModel::elliptic(k, 1, 1);
    CHECK(torsion_points(E2, 2).size() == 1);
    CHECK(torsion_points(E2, 1).size() == 1);
    CHECK_THROWS_WITH(torsion_points(E2, 10), "l must be prime to characteristic");

    for (int64_t l : {2, 3, 4, 6}) {
        auto t = torsion_points(E, l);
        CHECK((l * l) % static_cast<int64_t>(t.size()) == 0);
        for (const auto& P : t)
            for (const auto& Q : t) CHECK(std::find(t.begin(), t.end(), ec_add(E, P, Q)) != t.end());
    }
}

TEST_CASE("curve validation") {
    auto k = FieldSpec::prime(5);
    CHECK_THROWS_AS(CurveModel::elliptic(k, 0, 0), Error);
    CHECK_THROWS_AS(CurveModel::projective_line(FieldSpec::standard(5, 2)), Error);
}
