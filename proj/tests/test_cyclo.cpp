#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "esla/cyclo.hpp"

using namespace esla::cyclo;

namespace {

Cyc random_cyc(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::array<Rat, 8> c;
    for (auto& x : c) x = rat(num(rng), den(rng));
    return Cyc(c);
}

double dist(std::complex<double> a, std::complex<double> b) { return std::abs(a - b); }

} // namespace

TEST_CASE("roots of unity satisfy their defining relations") {
    const auto& k = constants();
    CHECK(k.omega * k.omega * k.omega == Cyc::one());
    CHECK(k.omega * k.omega + k.omega + Cyc::one() == Cyc::zero());
    CHECK(k.i * k.i == Cyc(-1));
    CHECK(k.half_one_plus_i * (Cyc::one() - k.i) == Cyc::one());
}

TEST_CASE("minimal polynomial vanishes at zeta") {
    CHECK(Cyc::zeta_pow(8) - Cyc::zeta_pow(4) + Cyc::one() == Cyc::zero());
}

TEST_CASE("(zeta^3 + zeta^-3)^2 = 2, cross-checked against the numeric embedding") {
    Cyc s = Cyc::zeta_pow(3) + Cyc::zeta_pow(-3);
    CHECK(s * s == Cyc(2));
    // independent check: evaluate both factors numerically
    auto z = std::polar(1.0, std::numbers::pi / 12.0);
    auto f = std::pow(z, 3) + std::pow(z, -3);
    CHECK(dist(s.embed(), f) < 1e-12);
    CHECK(dist((s * s).embed(), f * f) < 1e-12);
    CHECK(s == constants().sqrt2);
}

TEST_CASE("inverses") {
    CHECK(Cyc::one().inv() == Cyc::one());
    CHECK(Cyc(2).inv() == Cyc(rat(1, 2)));
    Cyc z = Cyc::zeta_pow(1);
    CHECK(z.inv() == Cyc::zeta_pow(23));
    CHECK(z * z.inv() == Cyc::one());
    CHECK_THROWS_AS(Cyc::zero().inv(), std::domain_error);
}

TEST_CASE("sqrt2 and sqrt3 constants square correctly") {
    const auto& k = constants();
    CHECK(k.sqrt2 * k.sqrt2 == Cyc(2));
    CHECK(k.sqrt3 * k.sqrt3 == Cyc(3));
    CHECK((k.sqrt2 * k.sqrt3) * (k.sqrt2 * k.sqrt3) == Cyc(6));
}

TEST_CASE("field axioms on random samples, exact") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 50; ++t) {
        Cyc a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) CHECK(a * a.inv() == Cyc::one());
    }
}

TEST_CASE("numeric embedding is a ring homomorphism to 1e-12") {
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        Cyc a = random_cyc(rng), b = random_cyc(rng);
        CHECK(dist((a * b).embed(), a.embed() * b.embed()) < 1e-12);
        CHECK(dist((a + b).embed(), a.embed() + b.embed()) < 1e-12);
    }
}

TEST_CASE("conjugation is the zeta -> zeta^-1 automorphism") {
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        Cyc a = random_cyc(rng), b = random_cyc(rng);
        CHECK(a.conj() * b.conj() == (a * b).conj());
        CHECK(dist(a.conj().embed(), std::conj(a.embed())) < 1e-12);
    }
}

TEST_CASE("square roots inside the field") {
    const auto& k = constants();
    auto r = sqrt_in_field(Cyc(-1));
    REQUIRE(r.has_value());
    CHECK(*r * *r == Cyc(-1));

    r = sqrt_in_field(k.omega);
    REQUIRE(r.has_value());
    CHECK(*r * *r == k.omega);

    r = sqrt_in_field(Cyc(-2));
    REQUIRE(r.has_value());
    CHECK(*r * *r == Cyc(-2));

    r = sqrt_in_field(Cyc(rat(-1, 2)));
    REQUIRE(r.has_value());
    CHECK(*r * *r == Cyc(rat(-1, 2)));

    r = sqrt_in_field(Cyc(rat(1, 3)));
    REQUIRE(r.has_value());
    CHECK(*r * *r == Cyc(rat(1, 3)));

    CHECK(sqrt_in_field(Cyc(6)).has_value());
    CHECK(sqrt_in_field(Cyc::zero()).has_value());
}

TEST_CASE("square roots outside the field are reported") {
    CHECK(!sqrt_in_field(Cyc(5)).has_value());
    CHECK(!sqrt_in_field(Cyc::zeta_pow(1)).has_value());
    CHECK(!sqrt_in_field(constants().sqrt2).has_value());  // 2^(1/4) is not in K
}

TEST_CASE("string serialization round-trips") {
    std::mt19937 rng(3);
    for (int t = 0; t < 10; ++t) {
        Cyc a = random_cyc(rng);
        CHECK(Cyc::from_strings(a.to_strings()) == a);
    }
    Cyc h(rat(1, 2));
    CHECK(h.to_strings()[0] == "1/2");
    CHECK_THROWS_AS(rat_from_string("x/y"), std::invalid_argument);
}
