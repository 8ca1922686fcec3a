#include <random>

#include "adele/error.hpp"
#include "adele/polynomial.hpp"
#include "adele/rational_function.hpp"
#include "doctest.h"

using namespace adele;

namespace {

Polynomial poly(const FieldPtr& f, std::vector<int64_t> c) { return Polynomial(f, c); }

FieldElement random_element(const FieldPtr& f, std::mt19937_64& rng) {
    gfp::Vec v(f->degree());
    for (auto& c : v) c = static_cast<uint32_t>(rng() % f->characteristic());
    return FieldElement(f, v);
}

Polynomial random_poly(const FieldPtr& f, int deg, std::mt19937_64& rng) {
    std::vector<FieldElement> c;
    for (int i = 0; i <= deg; ++i) c.push_back(random_element(f, rng));
    return Polynomial(f, c);
}

}  // namespace

TEST_CASE("factor_polynomial examples") {
    auto f5 = FieldSpec::prime(5);
    auto r = factor_polynomial(poly(f5, {1, 0, 1}));
    CHECK(r.leading.is_one());
    REQUIRE(r.factors.size() == 2);
    CHECK(r.factors[0].first == poly(f5, {2, 1}));
    CHECK(r.factors[1].first == poly(f5, {3, 1}));
    CHECK(r.factors[0].second == 1);

    auto f3 = FieldSpec::prime(3);
    auto r3 = factor_polynomial(poly(f3, {1, 0, 1}));
    REQUIRE(r3.factors.size() == 1);
    CHECK(r3.factors[0].first == poly(f3, {1, 0, 1}));

    auto f7 = FieldSpec::prime(7);
    auto r7 = factor_polynomial(poly(f7, {0, 0, 1}));
    REQUIRE(r7.factors.size() == 1);
    CHECK(r7.factors[0].first == poly(f7, {0, 1}));
    CHECK(r7.factors[0].second == 2);

    CHECK_THROWS_WITH_AS(factor_polynomial(Polynomial(f7)), "cannot factor zero", Error);
}

TEST_CASE("factorization round trip and irreducibility, p in {2,3,5,7,11}") {
    std::mt19937_64 rng(11);
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
        auto f = FieldSpec::prime(p);
        for (int trial = 0; trial < 25; ++trial) {
            int deg = 1 + static_cast<int>(rng() % 12);
            Polynomial a = random_poly(f, deg, rng);
            // force repeated factors some of the time
            if (trial % 3 == 0) a *= random_poly(f, 2, rng).pow(2);
            if (a.is_zero()) continue;
            auto fac = factor_polynomial(a, trial);
            Polynomial prod = Polynomial::constant(fac.leading);
            for (size_t i = 0; i < fac.factors.size(); ++i) {
                const auto& [q, m] = fac.factors[i];
                CHECK(q.is_monic());
                CHECK(gfp::is_irreducible(q.prime_coeffs(), p));
                if (i) CHECK(fac.factors[i - 1].first < q);
                prod *= q.pow(m);
            }
            CHECK(prod == a);
            // seed independence
            auto again = factor_polynomial(a, trial + 1000);
            CHECK(again.factors == fac.factors);
        }
    }
}

TEST_CASE("factorization over an extension field") {
    auto f9 = FieldSpec::extension(3, {1, 0, 1});  // GF(3)[i]/(i^2+1)
    // x^2 + 1 splits over GF(9)
    Polynomial a = poly(f9, {1, 0, 1});
    auto rts = roots(a);
    REQUIRE(rts.size() == 2);
    for (const auto& r : rts) CHECK(a(r).is_zero());
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial b = random_poly(f9, 1 + trial % 6, rng);
        if (b.is_zero()) continue;
        auto fac = factor_polynomial(b, trial);
        Polynomial prod = Polynomial::constant(fac.leading);
        for (const auto& [q, m] : fac.factors) prod *= q.pow(m);
        CHECK(prod == b);
    }
}

TEST_CASE("norm_to_prime_field examples") {
    auto f9 = FieldSpec::extension(3, {1, 0, 1});
    FieldElement i = FieldElement::generator(f9);
    CHECK(norm_to_prime_field(i).prime_value() == 1);
    CHECK(norm_to_prime_field(FieldElement::one(f9) + i).prime_value() == 2);
    CHECK(norm_to_prime_field(FieldElement(f9, 2)).prime_value() == 1);
    CHECK(norm_to_prime_field(FieldElement::zero(f9)).prime_value() == 0);
}

TEST_CASE("field axioms and norm multiplicativity") {
    std::mt19937_64 rng(3);
    for (auto f : {FieldSpec::prime(7), FieldSpec::extension(3, {1, 0, 1}), FieldSpec::standard(5, 3),
                   FieldSpec::standard(2, 5)}) {
        for (int trial = 0; trial < 200; ++trial) {
            FieldElement a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            CHECK(norm_to_prime_field(a * b) == norm_to_prime_field(a) * norm_to_prime_field(b));
        }
    }
}

TEST_CASE("field construction validation") {
    CHECK_THROWS_AS(FieldSpec::prime(9), Error);
    CHECK_THROWS_AS(FieldSpec::extension(5, {4, 0, 1}), Error);  // x^2 - 1 reducible
    CHECK_THROWS_AS(FieldSpec::extension(5, {2, 0, 2}), Error);  // not monic
    auto a = FieldSpec::standard(7, 2);
    auto b = FieldSpec::prime(7);
    CHECK_THROWS_AS(FieldElement(a, 1) + FieldElement(b, 1), Error);
    CHECK(FieldSpec::standard(7, 2)->degree() == 2);
    CHECK(*FieldSpec::standard(7, 2) == *a);
}

TEST_CASE("normalize_rational examples") {
    auto f5 = FieldSpec::prime(5);
    auto r = normalize_rational(poly(f5, {-1, 0, 1}), poly(f5, {-1, 1}));
    CHECK(r.num() == poly(f5, {1, 1}));
    CHECK(r.den().is_one());
    auto z = normalize_rational(Polynomial(f5), poly(f5, {0, 1}));
    CHECK(z.is_zero());
    CHECK(z.den().is_one());
    auto s = normalize_rational(poly(f5, {0, 2}), poly(f5, {4}));
    CHECK(s.num() == poly(f5, {0, 3}));
    CHECK(s.den().is_one());
    CHECK_THROWS_AS(normalize_rational(poly(f5, {1}), Polynomial(f5)), Error);
}

TEST_CASE("normalize_rational is idempotent and agrees with evaluation") {
    std::mt19937_64 rng(8);
    auto f = FieldSpec::prime(7);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial n = random_poly(f, static_cast<int>(rng() % 5), rng);
        Polynomial d = random_poly(f, static_cast<int>(rng() % 5), rng);
        if (d.is_zero()) continue;
        auto r = normalize_rational(n, d);
        CHECK(normalize_rational(r.num(), r.den()) == r);
        for (int x = 0; x < 7; ++x) {
            FieldElement at(f, x);
            if (d(at).is_zero()) continue;
            auto v = r.eval(at);
            REQUIRE(v.has_value());
            CHECK(*v == n(at) / d(at));
        }
    }
}

TEST_CASE("minimal polynomial of a generator recovers the modulus") {
    auto f = FieldSpec::standard(5, 3);
    Polynomial m = minimal_polynomial(FieldElement::generator(f));
    CHECK(m.prime_coeffs() == f->modulus());
}
