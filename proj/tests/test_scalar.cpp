#include <doctest.h>

#include <random>

#include "kappa/scalar.hpp"

using namespace kappa;

namespace {

Scalar random_scalar(std::mt19937_64& rng, bool allow_denominator = true) {
    std::uniform_int_distribution<int> small(-4, 4);
    std::uniform_int_distribution<int> deg(0, 3);
    auto poly = [&]() {
        QPoly p;
        int d = deg(rng);
        for (int k = 0; k <= d; ++k) {
            GaussianRational c(mpq_class(small(rng)), mpq_class(small(rng)));
            p = p + QPoly::q_power(k, c);
        }
        return p;
    };
    QPoly num = poly();
    if (!allow_denominator) return Scalar(num);
    QPoly den = poly();
    if (den.is_zero()) den = QPoly(GaussianRational(1));
    return Scalar(num, den);
}

} // namespace

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK((i / i).is_one());
    GaussianRational z(mpq_class(3, 2), mpq_class(-1, 3));
    CHECK(z * z.conj() == GaussianRational(z.norm2()));
    CHECK_THROWS_AS(z / GaussianRational(0), DivisionByZero);
}

TEST_CASE("scalar examples") {
    Scalar iq = Scalar::i() * Scalar::q();
    CHECK(iq + iq == Scalar::iq(2, 1, 1, 1));
    CHECK(Scalar(1) - Scalar(4) * Scalar::q(2) * Scalar(0) == Scalar(1));
    CHECK(iq * iq == -Scalar::q(2));
}

TEST_CASE("scalar field axioms on random values") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    }
}

TEST_CASE("canonical form is idempotent and exact") {
    // (q^2 - 1) / (q - 1) must reduce to q + 1
    QPoly num = QPoly::q_power(2) - QPoly(GaussianRational(1));
    QPoly den = QPoly::q_power(1) - QPoly(GaussianRational(1));
    Scalar s(num, den);
    CHECK(s == Scalar::q() + Scalar(1));
    // denominator is monic after canonicalization
    Scalar t(QPoly(GaussianRational(1)), QPoly::q_power(1, GaussianRational(2)));
    CHECK(t.den().leading().is_one());
    CHECK(t * Scalar::q() == Scalar::of(1, 2));
}

TEST_CASE("division by zero is an explicit error") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
    CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
}

TEST_CASE("classical limit") {
    CHECK(Scalar(1) - Scalar(4) * Scalar::q(2) != Scalar(1));
    CHECK((Scalar(1) - Scalar(4) * Scalar::q(2)).classical_limit() == GaussianRational(1));
    CHECK((Scalar::i() * Scalar::q()).classical_limit() == GaussianRational(0));
    Scalar s = Scalar(3) * Scalar::q(2) / (Scalar(1) + Scalar::q());
    CHECK(s.classical_limit() == GaussianRational(0));
    Scalar pole = Scalar(1) / Scalar::q();
    CHECK_THROWS_AS(pole.classical_limit(), NoClassicalLimit);
}

TEST_CASE("classical limit is a ring homomorphism where defined") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        if (!a.has_classical_limit() || !b.has_classical_limit()) continue;
        CHECK((a * b).classical_limit() == a.classical_limit() * b.classical_limit());
        CHECK((a + b).classical_limit() == a.classical_limit() + b.classical_limit());
    }
}

TEST_CASE("scalar text rendering") {
    Scalar s = Scalar::of(3, 2) * Scalar::i() * Scalar::q(2);
    CHECK(s.str() == "3/2*i*q^2");
    CHECK(s.latex() == "\\frac{3i}{2\\kappa^{2}}");
    CHECK((Scalar(1) - Scalar(4) * Scalar::q(2)).str() == "1 - 4*q^2");
}
