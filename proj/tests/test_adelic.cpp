#include <random>

#include "adele/adelic.hpp"
#include "adele/error.hpp"
#include "adele/riemann_roch.hpp"
#include "doctest.h"

using namespace adele;

namespace {

Polynomial poly(const FieldPtr& f, std::vector<int64_t> c) { return Polynomial(f, c); }

FunctionFieldElement fn(const CurvePtr& c, std::vector<int64_t> num, std::vector<int64_t> den = {1}) {
    return FunctionFieldElement(c, RationalFunction(poly(c->base(), num), poly(c->base(), den)));
}

std::vector<Place> small_places(const CurvePtr& c) {
    std::vector<Place> out{Place::infinity(c)};
    const FieldPtr& k = c->base();
    for (int64_t r = 0; r < static_cast<int64_t>(k->characteristic()); ++r)
        for (auto& v : Place::over(c, poly(k, {-r, 1}))) out.push_back(v);
    for (auto& v : Place::over(c, c->is_elliptic() ? poly(k, {2, 0, 1}) : poly(k, {2, 0, 1}))) out.push_back(v);
    return out;
}

Divisor random_divisor(const CurvePtr& c, std::mt19937_64& rng, int lo, int hi) {
    auto pool = small_places(c);
    for (;;) {
        Divisor D(c);
        const int terms = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < terms; ++i) D.add(pool[rng() % pool.size()], static_cast<int>(rng() % 7) - 3);
        if (D.degree() >= lo && D.degree() <= hi) return D;
    }
}

FunctionFieldElement random_function(const CurvePtr& c, std::mt19937_64& rng) {
    const int64_t p = c->base()->characteristic();
    for (;;) {
        std::vector<int64_t> num(1 + rng() % 3), den(1 + rng() % 3);
        for (auto& x : num) x = static_cast<int64_t>(rng() % p);
        for (auto& x : den) x = static_cast<int64_t>(rng() % p);
        if (poly(c->base(), num).is_zero() || poly(c->base(), den).is_zero()) continue;
        FunctionFieldElement f = fn(c, num, den);
        if (c->is_elliptic() && rng() % 2) f += FunctionFieldElement::y(c);
        if (!f.is_zero()) return f;
    }
}

}  // namespace

TEST_CASE("adelic differential examples") {
    auto k = FieldSpec::prime(5);
    auto P = CurveModel::projective_line(k);
    auto t = FunctionFieldElement::x(P);
    auto coeffs = AdeleCoefficients::coherent(Divisor(P));

    CHECK(adelic_differential(AdeleCochain::global(t, coeffs)).is_zero());

    auto c2 = AdeleCochain::global(t.inverse(), coeffs);
    c2.local_tail = FunctionFieldElement::constant(P, 0);
    auto d2 = adelic_differential(c2);
    CHECK(std::get<FunctionFieldElement>(d2.tail) == -t.inverse());
    CHECK(d2.exceptions.empty());

    auto c3 = AdeleCochain::global(FunctionFieldElement::constant(P, 0), coeffs);
    Place zero = Place::finite(P, poly(k, {0, 1}));
    c3.exceptions.emplace(zero, FunctionFieldElement::constant(P, 1));
    auto d3 = adelic_differential(c3);
    CHECK(std::get<FunctionFieldElement>(d3.tail).is_zero());
    REQUIRE(d3.exceptions.size() == 1);
    CHECK(std::get<FunctionFieldElement>(d3.exceptions.at(zero)) == FunctionFieldElement::constant(P, 1));
}

TEST_CASE("differential is additive and squares to zero") {
    std::mt19937_64 rng(4);
    auto P = CurveModel::projective_line(FieldSpec::prime(7));
    auto coeffs = AdeleCoefficients::coherent(Divisor(P));
    auto places = small_places(P);
    for (int i = 0; i < 20; ++i) {
        auto a = AdeleCochain::global(random_function(P, rng), coeffs);
        auto b = AdeleCochain::global(random_function(P, rng), coeffs);
        const Place& v = places[rng() % places.size()];
        a.exceptions.emplace(v, random_function(P, rng));
        AdeleCochain s = a;
        s.generic = std::get<FunctionFieldElement>(a.generic) + std::get<FunctionFieldElement>(b.generic);
        s.exceptions.clear();
        s.exceptions.emplace(v, std::get<FunctionFieldElement>(a.component(v)) + std::get<FunctionFieldElement>(b.component(v)));
        auto da = adelic_differential(a), db = adelic_differential(b), ds = adelic_differential(s);
        for (const auto& w : places)
            CHECK(std::get<FunctionFieldElement>(ds.component(w)) ==
                  std::get<FunctionFieldElement>(da.component(w)) + std::get<FunctionFieldElement>(db.component(w)));
        CHECK(adelic_differential(da).is_zero());
    }
}

TEST_CASE("cohomology examples") {
    auto k = FieldSpec::prime(5);
    auto P = CurveModel::projective_line(k);
    auto r1 = cohomology_dims(P, Divisor::point(Place::infinity(P), 3));
    CHECK(r1.h0 == 4);
    CHECK(r1.h1 == 0);
    auto r2 = cohomology_dims(P, Divisor::point(Place::finite(P, poly(k, {0, 1})), -2));
    CHECK(r2.h0 == 0);
    CHECK(r2.h1 == 1);
    auto E = CurveModel::elliptic(k, 1, 1);
    auto r3 = cohomology_dims(E, Divisor(E));
    CHECK(r3.h0 == 1);
    CHECK(r3.h1 == 1);
}

TEST_CASE("riemann-roch and serre duality through the adelic complex") {
    std::mt19937_64 rng(12);
    for (auto c : {CurveModel::projective_line(FieldSpec::prime(5)), CurveModel::elliptic(FieldSpec::prime(5), 1, 1)}) {
        const Divisor K = canonical_divisor(c);
        for (int i = 0; i < 12; ++i) {
            Divisor D = random_divisor(c, rng, -6, 6);
            auto rep = cohomology_dims(c, D);
            CHECK(rep.h0 - rep.h1 == D.degree() + 1 - c->genus());
            CHECK(rep.h1 == cohomology_dims(c, K - D).h0);
            auto serial = cohomology_dims_serial(c, D);
            CHECK(serial.h0 == rep.h0);
            CHECK(serial.h1 == rep.h1);
        }
    }
}

TEST_CASE("cohomology is invariant under linear equivalence") {
    std::mt19937_64 rng(13);
    for (auto c : {CurveModel::projective_line(FieldSpec::prime(7)), CurveModel::elliptic(FieldSpec::prime(5), -1, 0)}) {
        for (int i = 0; i < 6; ++i) {
            Divisor D = random_divisor(c, rng, -3, 4);
            auto f = random_function(c, rng);
            auto a = cohomology_dims(c, D), b = cohomology_dims(c, D + principal_divisor(f));
            CHECK(a.h0 == b.h0);
            CHECK(a.h1 == b.h1);
        }
    }
}

TEST_CASE("divisor cocycle examples") {
    auto k = FieldSpec::prime(5);
    auto P = CurveModel::projective_line(k);
    Place zero = Place::finite(P, poly(k, {0, 1}));
    Place one = Place::finite(P, poly(k, {-1, 1}));
    auto t = FunctionFieldElement::x(P);

    auto c1 = divisor_cocycle(Divisor::point(zero));
    CHECK(std::get<FunctionFieldElement>(c1.tail) == FunctionFieldElement::constant(P, 1));
    REQUIRE(c1.exceptions.size() == 1);
    CHECK(std::get<FunctionFieldElement>(c1.exceptions.at(zero)) == t.inverse());

    CHECK(divisor_cocycle(Divisor(P)).exceptions.empty());

    auto c3 = divisor_cocycle(Divisor::point(zero) - Divisor::point(one));
    CHECK(std::get<FunctionFieldElement>(c3.exceptions.at(zero)) == t.inverse());
    CHECK(std::get<FunctionFieldElement>(c3.exceptions.at(one)) == fn(P, {-1, 1}));
}

TEST_CASE("nu_curve examples") {
    auto k = FieldSpec::prime(5);
    auto P = CurveModel::projective_line(k);
    Place zero = Place::finite(P, poly(k, {0, 1}));
    auto g1 = nu_curve(divisor_cocycle(Divisor::point(zero)));
    CHECK(g1.cycle == Divisor::point(zero));

    auto c = AdeleCochain::zero_form(P, 1, AdeleCoefficients::k_weight(1));
    c.tail = FunctionFieldElement::x(P);
    auto g2 = nu_curve(c);
    CHECK(g2.cycle == Divisor::point(zero, -1) + Divisor::point(Place::infinity(P), 1));

    auto u = AdeleCochain::zero_form(P, 1, AdeleCoefficients::k_weight(1));
    u.tail = FunctionFieldElement::constant(P, 3);
    u.exceptions.emplace(zero, fn(P, {1, 1}));
    CHECK(nu_curve(u).cycle.empty());
}

TEST_CASE("nu of a divisor cocycle is the divisor") {
    std::mt19937_64 rng(14);
    for (auto c : {CurveModel::projective_line(FieldSpec::prime(7)), CurveModel::elliptic(FieldSpec::prime(5), 1, 1)}) {
        for (int i = 0; i < 15; ++i) {
            Divisor D = random_divisor(c, rng, -8, 8);
            CHECK(nu_curve(divisor_cocycle(D)).cycle == D);
        }
    }
}

TEST_CASE("cochain product examples") {
    auto k = FieldSpec::prime(7);
    auto P = CurveModel::projective_line(k);
    Place one = Place::finite(P, poly(k, {-1, 1}));
    auto two = AdeleCochain::global(FunctionFieldElement::constant(P, 2), AdeleCoefficients::k_weight(1));
    auto prod = cochain_product(two, divisor_cocycle(Divisor::point(one)));
    CHECK(prod.degree == 1);
    CHECK(prod.coefficients.weight == 2);
    REQUIRE(prod.exceptions.size() == 1);
    const auto& sym = std::get<MilnorSymbol>(prod.exceptions.at(one));
    REQUIRE(sym.entries().size() == 1);
    CHECK(sym.entries()[0].f == FunctionFieldElement::constant(P, 2));
    CHECK(sym.entries()[0].g == fn(P, {-1, 1}).inverse());

    auto img = nu_curve(prod);
    REQUIRE(img.units.size() == 1);
    CHECK(img.units.at(one) == FieldElement(k, 4));

    auto trivial = cochain_product(two, divisor_cocycle(Divisor(P)));
    CHECK(trivial.coefficients.weight == 2);
    CHECK(nu_curve(trivial).units.empty());

    CHECK_THROWS_WITH(cochain_product(divisor_cocycle(Divisor::point(one)), divisor_cocycle(Divisor::point(one))), "degree overflow");
}

TEST_CASE("leibniz rule for global units") {
    std::mt19937_64 rng(15);
    for (auto c : {CurveModel::projective_line(FieldSpec::prime(7)), CurveModel::elliptic(FieldSpec::prime(5), 1, 1)}) {
        const FieldPtr& k = c->base();
        for (int i = 0; i < 10; ++i) {
            const FieldElement u(k, 1 + static_cast<int64_t>(rng() % (k->characteristic() - 1)));
            auto cocycle = divisor_cocycle(random_divisor(c, rng, -4, 4));
            cocycle.tail = FunctionFieldElement::constant(c, 1);
            auto unit = AdeleCochain::global(FunctionFieldElement::constant(c, u), AdeleCoefficients::k_weight(1));
            auto lhs = nu_curve(cochain_product(unit, cocycle)).units;
            auto cyc = nu_curve(cocycle).cycle;
            PlaceUnits rhs;
            for (const auto& [v, m] : cyc.terms()) {
                FieldElement tw = tame_symbol(FunctionFieldElement::constant(c, u), std::get<FunctionFieldElement>(cocycle.component(v)), v);
                if (!tw.is_one()) rhs.emplace(v, tw);
            }
            REQUIRE(lhs.size() == rhs.size());
            for (const auto& [v, a] : rhs) {
                CHECK(lhs.at(v) == a);
                CHECK(a == u.lift_to(a.field()).pow(-cyc[v]));
            }
        }
    }
}
