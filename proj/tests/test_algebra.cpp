#include <doctest.h>

#include <random>

#include "kappa/algebra.hpp"
#include "kappa/hopf.hpp"
#include "kappa/render.hpp"

using namespace kappa;

namespace {

const AlgebraTag P4 = poincare(4);
const Scalar iq = Scalar::iq(1, 1, 1, 1);

Monomial random_monomial(AlgebraTag tag, std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    bool has_lambda = tag.kind == AlgebraKind::Poincare;
    int nvars = has_lambda ? tag.n * tag.n + tag.n : tag.n;
    std::uniform_int_distribution<int> var(0, nvars - 1);
    Monomial m;
    std::vector<int> lam_ids, x_ids;
    for (int k = 0; k < d; ++k) {
        int v = var(rng);
        if (has_lambda && v < tag.n * tag.n) lam_ids.push_back(v);
        else x_ids.push_back(has_lambda ? v - tag.n * tag.n : v);
    }
    std::sort(lam_ids.begin(), lam_ids.end());
    std::sort(x_ids.begin(), x_ids.end());
    for (int id : lam_ids) m.push_lambda(static_cast<std::uint16_t>(id));
    for (int id : x_ids) {
        if (!m.xs.empty() && m.xs.back().id == id) m.xs.back().exp++;
        else m.xs.push_back({static_cast<std::uint16_t>(id), 1});
    }
    return m;
}

} // namespace

TEST_CASE("normal ordering of coordinates") {
    // x^1 x^0 = x^0 x^1 - (i/kappa) x^1
    AlgebraElement lhs = product(gen_x(P4, 1), gen_x(P4, 0));
    AlgebraElement rhs = product(gen_x(P4, 0), gen_x(P4, 1)) - iq * gen_x(P4, 1);
    CHECK(lhs == rhs);
    CHECK(render_text(lhs) == "-i*q*x[1] + x[0]*x[1]");
    // spatial coordinates commute
    CHECK(product(gen_x(P4, 2), gen_x(P4, 1)) == product(gen_x(P4, 1), gen_x(P4, 2)));
}

TEST_CASE("normal ordering of x past Lambda") {
    // x^rho L^mu_nu = L^mu_nu x^rho + iq((L^mu_0 - d^mu_0) L^rho_nu + (L^0_nu - d^0_nu) g^{mu rho})
    for (int rho = 0; rho < 4; ++rho)
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                AlgebraElement lhs = product(gen_x(P4, rho), gen_lambda(P4, mu, nu));
                AlgebraElement corr =
                    product(gen_lambda(P4, mu, 0), gen_lambda(P4, rho, nu));
                if (mu == 0) corr -= gen_lambda(P4, rho, nu);
                if (mu == rho) {
                    AlgebraElement t = gen_lambda(P4, 0, nu);
                    if (nu == 0) t -= a_unit(P4);
                    corr += Scalar(metric_sign(mu)) * t;
                }
                AlgebraElement rhs =
                    product(gen_lambda(P4, mu, nu), gen_x(P4, rho)) + iq * corr;
                CHECK(lhs == rhs);
            }
}

TEST_CASE("commutator examples") {
    CHECK(commutator(gen_x(P4, 0), gen_x(P4, 1)) == iq * gen_x(P4, 1));
    CHECK(commutator(gen_x(P4, 1), gen_x(P4, 2)).is_zero());
    CHECK(commutator(gen_lambda(P4, 0, 0), gen_lambda(P4, 1, 1)).is_zero());
}

TEST_CASE("normal form is idempotent under multiplication by the unit") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 50; ++t) {
        Monomial m = random_monomial(P4, rng, 4);
        AlgebraElement e = mono_elem(P4, m);
        CHECK(product(e, a_unit(P4)) == e);
        CHECK(product(a_unit(P4), e) == e);
    }
}

TEST_CASE("associativity of the rewriting product") {
    std::mt19937_64 rng(2024);
    const AlgebraTag tags[2] = {P4, minkowski(4)};
    for (const auto& tag : tags) {
        for (int t = 0; t < 220; ++t) {
            AlgebraElement a(tag), b(tag), c(tag);
            a.add_term(random_monomial(tag, rng, 3), Scalar(1));
            b.add_term(random_monomial(tag, rng, 3), Scalar(1));
            c.add_term(random_monomial(tag, rng, 3), Scalar(1));
            CHECK(product(product(a, b), c) == product(a, product(b, c)));
        }
    }
}

TEST_CASE("mixed algebras are rejected") {
    AlgebraElement x = gen_x(P4, 0);
    AlgebraElement y = gen_x(minkowski(4), 1);
    CHECK_THROWS_AS(product(x, y), MixedAlgebra);
}

TEST_CASE("minkowski normal ordering") {
    const AlgebraTag M4 = minkowski(4);
    AlgebraElement lhs = product(gen_x(M4, 1), gen_x(M4, 0));
    AlgebraElement rhs = product(gen_x(M4, 0), gen_x(M4, 1)) - iq * gen_x(M4, 1);
    CHECK(lhs == rhs);
    CHECK(product(gen_x(M4, 2), gen_x(M4, 1)) == product(gen_x(M4, 1), gen_x(M4, 2)));
}

TEST_CASE("phi and the x^{mu nu} trace identity") {
    AlgebraElement phi = phi_element(P4);
    AlgebraElement expect = x_squared(P4) + Scalar::iq(3, 1, 1, 1) * gen_x(P4, 0);
    CHECK(phi == expect);
}

TEST_CASE("monomial basis counts") {
    CHECK(monomial_basis(minkowski(4), 5).size() == 126);
    CHECK(monomial_basis(P4, 2).size() == 231);
    CHECK(monomial_count(P4, 4) == 10626);
}
