#include <random>

#include "adele/error.hpp"
#include "adele/weil.hpp"
#include "doctest.h"

using namespace adele;

namespace {

struct TorsionFixture {
    uint32_t p;
    int64_t a, b;
    int l;
};

const TorsionFixture kFixtures[] = {{5, -1, 0, 2}, {7, -1, 0, 2}, {7, 0, 2, 3}, {13, 0, 3, 3}};

EcPoint pt(const CurvePtr& c, int64_t x, int64_t y) { return EcPoint::affine(FieldElement(c->base(), x), FieldElement(c->base(), y)); }

}  // namespace

TEST_CASE("miller function examples") {
    auto c = CurveModel::elliptic(FieldSpec::prime(5), -1, 0);
    MillerFunction f = miller_function(c, pt(c, 0, 0), 2);
    CHECK(f.expanded() == FunctionFieldElement::x(c));
    Divisor expected(c);
    expected.add(place_of(c, pt(c, 0, 0)), 2);
    expected.add(base_point(c), -2);
    CHECK(f.divisor == expected);

    MillerFunction trivial = miller_function(c, EcPoint::zero(), 3, pt(c, 1, 0));
    CHECK(trivial.factors.empty());
    CHECK(trivial.constant.is_one());

    auto e = CurveModel::elliptic(FieldSpec::prime(7), 0, 1);
    MillerFunction g = miller_function(e, pt(e, 0, 1), 3);
    CHECK(g.expanded() == FunctionFieldElement::y(e) - FunctionFieldElement::constant(e, 1));
    CHECK(g.divisor == principal_divisor(g.expanded()));

    CHECK_THROWS_WITH_AS(miller_function(c, pt(c, 2, 1), 2), doctest::Contains("not 2-torsion"), Error);
}

TEST_CASE("miller functions with offsets have the declared divisor") {
    for (const auto& fx : kFixtures) {
        auto c = CurveModel::elliptic(FieldSpec::prime(fx.p), fx.a, fx.b);
        for (const auto& P : torsion_points(c, fx.l))
            for (const auto& R : rational_points(c)) {
                MillerFunction f = miller_function(c, P, fx.l, R);
                CHECK(principal_divisor(f.expanded()) == f.divisor);
            }
    }
}

TEST_CASE("weil pairing examples") {
    auto c = CurveModel::elliptic(FieldSpec::prime(5), -1, 0);
    const EcPoint P = pt(c, 0, 0), Q = pt(c, 1, 0);
    CHECK(weil_pairing_idelic(c, P, Q, 2).value == FieldElement(c->base(), 4));
    CHECK(weil_pairing_miller(c, P, Q, 2).value == FieldElement(c->base(), 4));
    CHECK(weil_pairing_idelic(c, P, Q, 2).order == 2);
    CHECK(weil_pairing_idelic(c, P, P, 2).value.is_one());
    CHECK(weil_pairing_idelic(c, P, EcPoint::zero(), 2).value.is_one());
    CHECK_THROWS_AS(weil_pairing_idelic(c, P, pt(c, 2, 1), 2), Error);
    CHECK_THROWS_WITH_AS(weil_pairing_miller(c, P, Q, 10), doctest::Contains("characteristic"), Error);
}

TEST_CASE("weil pairing is bilinear, alternating and matches miller") {
    for (const auto& fx : kFixtures) {
        auto c = CurveModel::elliptic(FieldSpec::prime(fx.p), fx.a, fx.b);
        const auto T = torsion_points(c, fx.l);
        REQUIRE(T.size() == static_cast<std::size_t>(fx.l * fx.l));
        bool nondegenerate = false;
        for (const auto& P : T) {
            CHECK(weil_pairing_idelic(c, P, P, fx.l).value.is_one());
            for (const auto& Q : T) {
                const FieldElement e = weil_pairing_idelic(c, P, Q, fx.l).value;
                CHECK(e == weil_pairing_miller(c, P, Q, fx.l).value);
                CHECK(e.pow(fx.l).is_one());
                CHECK(e * weil_pairing_idelic(c, Q, P, fx.l).value == FieldElement::one(c->base()));
                nondegenerate = nondegenerate || !e.is_one();
                for (const auto& P2 : T) {
                    const FieldElement lhs = weil_pairing_idelic(c, ec_add(c, P, P2), Q, fx.l).value;
                    CHECK(lhs == e * weil_pairing_idelic(c, P2, Q, fx.l).value);
                }
            }
        }
        CHECK(nondegenerate);
    }
}

TEST_CASE("pairing does not depend on the offsets") {
    auto c = CurveModel::elliptic(FieldSpec::prime(7), 0, 2);
    const auto T = torsion_points(c, 3);
    for (const auto& P : T)
        for (const auto& Q : T) {
            const FieldElement e = weil_pairing_idelic(c, P, Q, 3).value;
            for (int skip = 1; skip <= 4; ++skip) CHECK(weil_pairing_idelic(c, P, Q, 3, skip).value == e);
        }
}

TEST_CASE("direct image by norms") {
    auto k = FieldSpec::prime(5);
    auto c = CurveModel::projective_line(k);
    PlaceUnits one_place{{Place::finite(c, Polynomial(k, std::vector<int64_t>{1, 1})), FieldElement(k, 3)}};
    CHECK(direct_image(one_place, k) == FieldElement(k, 3));
    CHECK(direct_image({}, k).is_one());
    const Place quad = Place::finite(c, Polynomial(k, std::vector<int64_t>{2, 0, 1}));
    const FieldElement alpha = FieldElement::generator(residue_point(quad).field) + FieldElement(residue_point(quad).field, 1);
    CHECK(alpha.pow(6).is_prime_field_element());
    CHECK(direct_image({{quad, alpha}}, k).prime_value() == alpha.pow(6).prime_value());
}

TEST_CASE("massey triple product examples") {
    auto c = CurveModel::elliptic(FieldSpec::prime(5), -1, 0);
    const EcPoint P = pt(c, 0, 0), Q = pt(c, 1, 0);
    MasseyOutput m = massey_for_points(c, P, Q, 2);
    CHECK(m.direct_image == FieldElement(c->base(), 4));

    // beta trivial: Z = div h, chain h^2
    const FunctionFieldElement h = (FunctionFieldElement::x(c) - FunctionFieldElement::constant(c, 2)) /
                                   (FunctionFieldElement::x(c) - FunctionFieldElement::constant(c, 3));
    const Representatives r = choose_representatives(c, P, Q);
    MasseyClass alpha{r.D, miller_function(c, P, 2, r.R1)};
    MasseyClass trivial{principal_divisor(h), MillerFunction::of(h).pow(2)};
    CHECK(massey_triple_curve(alpha, trivial, 2).direct_image.is_one());

    MasseyClass beta{r.E, miller_function(c, Q, 2, r.R2)};
    CHECK_THROWS_WITH_AS(massey_triple_curve(alpha, alpha, 2), doctest::Contains("overlapping"), Error);
    beta.representative.add(base_point(c), 0);
    CHECK(massey_triple_curve(alpha, beta, 2).direct_image == m.direct_image);
    MasseyClass wrong = beta;
    wrong.chain = wrong.chain.pow(2);
    CHECK_THROWS_AS(massey_triple_curve(alpha, wrong, 2), Error);
}

TEST_CASE("massey direct image is the inverse pairing") {
    for (const auto& fx : kFixtures) {
        auto c = CurveModel::elliptic(FieldSpec::prime(fx.p), fx.a, fx.b);
        const auto T = torsion_points(c, fx.l);
        int configurations = 0;
        for (const auto& P : T)
            for (const auto& Q : T) {
                const FieldElement psi = weil_pairing_miller(c, P, Q, fx.l).value;
                CHECK(massey_for_points(c, P, Q, fx.l).direct_image == psi.inverse());
                ++configurations;
            }
        CHECK(configurations >= 3);
    }
}

TEST_CASE("massey direct image is invariant under chain and representative changes") {
    auto c = CurveModel::elliptic(FieldSpec::prime(7), 0, 2);
    const auto T = torsion_points(c, 3);
    const FunctionFieldElement h = FunctionFieldElement::x(c) + FunctionFieldElement::y(c) - FunctionFieldElement::constant(c, 2);
    int moved = 0;
    for (const auto& P : T)
        for (const auto& Q : T) {
            const Representatives r = choose_representatives(c, P, Q);
            const MasseyClass alpha{r.D, miller_function(c, P, 3, r.R1)};
            const MasseyClass beta{r.E, miller_function(c, Q, 3, r.R2)};
            const FieldElement base = massey_triple_curve(alpha, beta, 3).direct_image;
            // offsets
            for (int skip = 1; skip <= 3; ++skip) CHECK(massey_for_points(c, P, Q, 3, skip).direct_image == base);
            // constants on the chains
            MasseyClass a2 = alpha, b2 = beta;
            a2.chain = a2.chain.scaled(FieldElement(c->base(), 3));
            b2.chain = b2.chain.scaled(FieldElement(c->base(), 5));
            CHECK(massey_triple_curve(a2, b2, 3).direct_image == base);
            // principal divisor added to Z
            MasseyClass b3{beta.representative + principal_divisor(h), beta.chain * MillerFunction::of(h).pow(3)};
            bool disjoint = true;
            for (const auto& [v, m] : b3.representative.terms()) disjoint = disjoint && alpha.representative[v] == 0;
            if (!disjoint) continue;
            CHECK(massey_triple_curve(alpha, b3, 3).direct_image == base);
            ++moved;
        }
    CHECK(moved >= 5);
}

TEST_CASE("weil reciprocity for symbols of miller functions") {
    int count = 0;
    for (const auto& fx : kFixtures) {
        auto c = CurveModel::elliptic(FieldSpec::prime(fx.p), fx.a, fx.b);
        const auto T = torsion_points(c, fx.l);
        const auto R = rational_points(c);
        for (std::size_t i = 1; i < T.size() && count < 24; i += 2) {
            MillerFunction f = miller_function(c, T[i], fx.l, R[i % R.size()]);
            MillerFunction g = miller_function(c, T[(i + 1) % T.size()], fx.l, R[(3 * i) % R.size()]);
            if (f.factors.empty() || g.factors.empty()) continue;
            CHECK(weil_reciprocity_check(MilnorSymbol::single(f.expanded(), g.expanded())).is_one());
            ++count;
        }
    }
    CHECK(count >= 10);
}

TEST_CASE("sign audit") {
    SignAuditReport report = sign_audit();
    CHECK(report.ok());
    REQUIRE(report.consistent.size() == 1);
    CHECK(report.consistent.front() == kSignConventions);
    for (const auto& [name, passed] : report.fixtures) CHECK_MESSAGE(passed, name);

    SignConventions perturbed = kSignConventions;
    perturbed.massey = -perturbed.massey;
    CHECK(!sign_audit(perturbed).ok());
    perturbed = kSignConventions;
    perturbed.intersection = 1;
    CHECK(!sign_audit(perturbed).ok());
    perturbed = kSignConventions;
    perturbed.nu = 1;
    CHECK(!sign_audit(perturbed).ok());

    SignAuditReport again = sign_audit();
    CHECK(again.fixtures == report.fixtures);
    CHECK(again.consistent == report.consistent);
}
