#include <random>

#include "adele/error.hpp"
#include "adele/milnor.hpp"
#include "doctest.h"

using namespace adele;

namespace {

Polynomial poly(const FieldPtr& f, std::vector<int64_t> c) { return Polynomial(f, c); }

FunctionFieldElement fn(const CurvePtr& c, std::vector<int64_t> num, std::vector<int64_t> den = {1}) {
    return FunctionFieldElement(c, RationalFunction(poly(c->base(), num), poly(c->base(), den)));
}

FunctionFieldElement random_nonzero(const CurvePtr& c, std::mt19937_64& rng, int max_deg = 3) {
    const int64_t p = c->base()->characteristic();
    for (;;) {
        std::vector<int64_t> num(1 + rng() % (max_deg + 1)), den(1 + rng() % max_deg);
        for (auto& x : num) x = static_cast<int64_t>(rng() % p);
        for (auto& x : den) x = static_cast<int64_t>(rng() % p);
        if (poly(c->base(), num).is_zero() || poly(c->base(), den).is_zero()) continue;
        FunctionFieldElement f = fn(c, num, den);
        if (c->is_elliptic() && rng() % 2) f += FunctionFieldElement::y(c) * fn(c, {static_cast<int64_t>(rng() % p), 1});
        if (!f.is_zero()) return f;
    }
}

}  // namespace

TEST_CASE("tame symbol examples") {
    auto k5 = FieldSpec::prime(5);
    auto P5 = CurveModel::projective_line(k5);
    auto t = FunctionFieldElement::x(P5);
    Place zero5 = Place::finite(P5, poly(k5, {0, 1}));
    CHECK(tame_symbol(t, t, zero5) == FieldElement(k5, 4));
    CHECK(tame_symbol(t, FunctionFieldElement::constant(P5, 1) - t, zero5).is_one());

    auto k7 = FieldSpec::prime(7);
    auto P7 = CurveModel::projective_line(k7);
    auto t7 = FunctionFieldElement::x(P7);
    CHECK(tame_symbol(t7, fn(P7, {-2, 1}), Place::finite(P7, poly(k7, {-2, 1}))) == FieldElement(k7, 2));
    CHECK_THROWS_AS(MilnorSymbol::single(t7, FunctionFieldElement::constant(P7, 0)), Error);
}

TEST_CASE("gersten boundary examples") {
    auto k7 = FieldSpec::prime(7);
    auto P7 = CurveModel::projective_line(k7);
    auto t = FunctionFieldElement::x(P7);

    auto b = gersten_boundary(MilnorSymbol::single(t, fn(P7, {-1, 1})));
    REQUIRE(b.size() == 2);
    CHECK(b.at(Place::finite(P7, poly(k7, {0, 1}))) == FieldElement(k7, 6));
    CHECK(b.at(Place::infinity(P7)) == FieldElement(k7, 6));

    auto b2 = gersten_boundary(MilnorSymbol::single(FunctionFieldElement::constant(P7, 3), t));
    REQUIRE(b2.size() == 2);
    CHECK(b2.at(Place::finite(P7, poly(k7, {0, 1}))) == FieldElement(k7, 3));
    CHECK(b2.at(Place::infinity(P7)) == FieldElement(k7, 5));

    auto f = fn(P7, {3, 2, 1}, {1, 0, 5});
    CHECK(gersten_boundary(MilnorSymbol::single(f, -f)).empty());
}

TEST_CASE("weil reciprocity examples") {
    auto k7 = FieldSpec::prime(7);
    auto P7 = CurveModel::projective_line(k7);
    auto t = FunctionFieldElement::x(P7);
    CHECK(weil_reciprocity_check(MilnorSymbol::single(t, fn(P7, {-1, 1}))).is_one());
    CHECK(weil_reciprocity_check(MilnorSymbol::single(FunctionFieldElement::constant(P7, 3), fn(P7, {1, 2, 3}, {4, 1}))).is_one());
    auto P5 = CurveModel::projective_line(FieldSpec::prime(5));
    auto t5 = FunctionFieldElement::x(P5);
    CHECK(weil_reciprocity_check(MilnorSymbol::single(t5, t5)).is_one());
}

TEST_CASE("tame symbol properties") {
    std::mt19937_64 rng(21);
    for (auto c : {CurveModel::projective_line(FieldSpec::prime(7)), CurveModel::elliptic(FieldSpec::prime(5), 1, 1)}) {
        for (int i = 0; i < 25; ++i) {
            auto f = random_nonzero(c, rng), g = random_nonzero(c, rng), h = random_nonzero(c, rng);
            auto places = symbol_support(MilnorSymbol::single(f * g, h) * MilnorSymbol::single(f, h) * MilnorSymbol::single(g, h));
            const Place& v = places[rng() % places.size()];
            CHECK(tame_symbol(f * g, h, v) == tame_symbol(f, h, v) * tame_symbol(g, h, v));
            CHECK((tame_symbol(f, g, v) * tame_symbol(g, f, v)).is_one());
            auto one_minus = FunctionFieldElement::constant(c, 1) - f;
            if (!one_minus.is_zero()) {
                for (const auto& w : symbol_support(MilnorSymbol::single(f, one_minus))) CHECK(tame_symbol(f, one_minus, w).is_one());
            }
        }
    }
}

TEST_CASE("weil reciprocity on random symbols") {
    std::mt19937_64 rng(99);
    auto P7 = CurveModel::projective_line(FieldSpec::prime(7));
    for (int i = 0; i < 60; ++i) {
        MilnorSymbol s(P7);
        const int n = 1 + static_cast<int>(rng() % 3);
        for (int j = 0; j < n; ++j) s.add(random_nonzero(P7, rng), random_nonzero(P7, rng), static_cast<int>(rng() % 5) - 2);
        if (s.entries().empty()) continue;
        CHECK(weil_reciprocity_check(s).is_one());
    }
    auto E = CurveModel::elliptic(FieldSpec::prime(5), 1, 1);
    for (int i = 0; i < 10; ++i) {
        auto s = MilnorSymbol::single(random_nonzero(E, rng, 2), random_nonzero(E, rng, 2));
        CHECK(weil_reciprocity_check(s).is_one());
    }
}

TEST_CASE("direct image") {
    auto k5 = FieldSpec::prime(5);
    auto P5 = CurveModel::projective_line(k5);
    CHECK(direct_image({}, k5).is_one());
    PlaceUnits one{{Place::finite(P5, poly(k5, {-1, 1})), FieldElement(k5, 3)}};
    CHECK(direct_image(one, k5) == FieldElement(k5, 3));
    auto k25 = FieldSpec::standard(5, 2);
    auto a = FieldElement::generator(k25) + FieldElement(k25, 2);
    Place q = Place::from_root(P5, a);
    PlaceUnits two{{q, a}};
    CHECK(a.pow(6).is_prime_field_element());
    CHECK(direct_image(two, k5).prime_value() == a.pow(6).prime_value());
}

TEST_CASE("dlog examples") {
    auto k7 = FieldSpec::prime(7);
    auto P7 = CurveModel::projective_line(k7);
    auto t = FunctionFieldElement::x(P7);
    auto omega = dlog_k1(t);
    CHECK(omega.coefficient == RationalFunction(poly(k7, {1}), poly(k7, {0, 1})));
    CHECK(form_residue(omega, Place::finite(P7, poly(k7, {0, 1}))).is_one());
    CHECK(form_residue(omega, Place::infinity(P7)) == FieldElement(k7, -1));
    CHECK(form_residue(dlog_k1(fn(P7, {-1, 1}).pow(3)), Place::finite(P7, poly(k7, {-1, 1}))) == FieldElement(k7, 3));

    CHECK(dlog_pole_order_check(t.pow(5)) == 1);
    CHECK(dlog_pole_order_check(fn(P7, {-1, 1}) * fn(P7, {-2, 1})) == 1);
    CHECK(dlog_pole_order_check(FunctionFieldElement::constant(P7, 4)) == 0);
    CHECK_THROWS_AS(dlog_k1(FunctionFieldElement::constant(P7, 0)), Error);
}

TEST_CASE("dlog residues sum to zero and poles are simple") {
    std::mt19937_64 rng(8);
    for (uint32_t p : {5u, 7u, 11u}) {
        auto P = CurveModel::projective_line(FieldSpec::prime(p));
        for (int i = 0; i < 15; ++i) {
            auto f = random_nonzero(P, rng, 4);
            CHECK(dlog_pole_order_check(f) <= 1);
            auto omega = dlog_k1(f);
            FieldElement sum = FieldElement::zero(P->base());
            for (const auto& v : polar_places(omega)) sum += form_residue(omega, v);
            CHECK(sum.is_zero());
            for (const auto& v : candidate_places(f)) {
                if (v.degree() != 1) continue;
                CHECK(form_residue(omega, v) == FieldElement(P->base(), valuation(f, v)));
            }
        }
    }
}
