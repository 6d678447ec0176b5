#include <doctest.h>

#include <random>

#include "kappa/hopf.hpp"
#include "kappa/lorentz.hpp"
#include "kappa/render.hpp"

using namespace kappa;

namespace {

const AlgebraTag P4 = poincare(4);
const AlgebraTag M4 = minkowski(4);

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

// m(S x id) Delta(a) and its mirror, compared against eps(a) I.
bool antipode_axiom_holds(AlgebraTag tag, const AlgebraElement& a, const SamplePool& pool) {
    TensorElement d = coproduct(a);
    AlgebraElement left(tag), right(tag);
    for (const auto& [k, c] : d.terms()) {
        left += c * mul_monomial_right(antipode_monomial(tag, k[0]), k[1]);
        right += c * product(mono_elem(tag, k[0]), antipode_monomial(tag, k[1]));
    }
    AlgebraElement target = a_scalar(tag, counit(a));
    return is_zero_mod_orth(left - target, pool) && is_zero_mod_orth(right - target, pool);
}

bool counit_axiom_holds(AlgebraTag tag, const AlgebraElement& a) {
    TensorElement d = coproduct(a);
    return counit_leg(d, 0) == a && counit_leg(d, 1) == a;
}

bool coassociativity_holds(const AlgebraElement& a) {
    return coproduct_leg(coproduct(a), 0) == coproduct_leg(coproduct(a), 1);
}

} // namespace

TEST_CASE("coproduct of generators") {
    // Delta(x^0) = Lambda^0_nu (x) x^nu + x^0 (x) I
    TensorElement d = coproduct(gen_x(P4, 0));
    TensorElement expect({P4, P4});
    for (int nu = 0; nu < 4; ++nu)
        expect.add_term({Monomial::lambda(4, 0, nu), Monomial::coordinate(nu)}, Scalar(1));
    expect.add_term({Monomial::coordinate(0), Monomial::unit()}, Scalar(1));
    CHECK(d == expect);
    CHECK(coproduct(a_unit(P4)) == tensor_unit({P4, P4}));
}

TEST_CASE("coproduct of a product expands multiplicatively") {
    AlgebraElement x0x1 = product(gen_x(P4, 0), gen_x(P4, 1));
    TensorElement lhs = coproduct(x0x1);
    TensorElement rhs = tensor_mult(coproduct(gen_x(P4, 0)), coproduct(gen_x(P4, 1)));
    CHECK(lhs == rhs);
}

TEST_CASE("counit examples") {
    CHECK(counit(gen_lambda(P4, 0, 1)).is_zero());
    CHECK(counit(product(gen_lambda(P4, 2, 2), gen_x(P4, 1))).is_zero());
    CHECK(counit(product(gen_lambda(P4, 0, 0), gen_lambda(P4, 1, 1))) == Scalar(1));
}

TEST_CASE("antipode examples") {
    // S(x^0) = -Lambda_nu^0 x^nu
    AlgebraElement s = antipode(gen_x(P4, 0));
    AlgebraElement expect(P4);
    for (int nu = 0; nu < 4; ++nu)
        expect -= product(lambda_lo_up(P4, nu, 0), gen_x(P4, nu));
    CHECK(s == expect);
    CHECK(antipode(a_unit(P4)) == a_unit(P4));
}

TEST_CASE("hopf axioms on generators and random monomials") {
    const SamplePool& pool = default_pool(4);
    std::vector<AlgebraElement> gens;
    for (int mu = 0; mu < 4; ++mu) {
        gens.push_back(gen_x(P4, mu));
        for (int nu = 0; nu < 4; ++nu) gens.push_back(gen_lambda(P4, mu, nu));
    }
    for (const auto& g : gens) {
        CHECK(coassociativity_holds(g));
        CHECK(counit_axiom_holds(P4, g));
        CHECK(antipode_axiom_holds(P4, g, pool));
    }
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        AlgebraElement a = mono_elem(P4, random_monomial(P4, rng, 3));
        CHECK(coassociativity_holds(a));
        CHECK(counit_axiom_holds(P4, a));
        CHECK(antipode_axiom_holds(P4, a, pool));
    }
}

TEST_CASE("coproduct and counit respect the defining relations") {
    const SamplePool& pool = default_pool(4);
    const Scalar iq = Scalar::iq(1, 1, 1, 1);
    // [x^mu, x^nu] - iq(d_0^mu x^nu - d_0^nu x^mu), pushed through Delta and eps
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            AlgebraElement rel = commutator(gen_x(P4, mu), gen_x(P4, nu));
            if (mu == 0) rel -= iq * gen_x(P4, nu);
            if (nu == 0) rel += iq * gen_x(P4, mu);
            CHECK(rel.is_zero());
            for (int rho = 0; rho < 4; ++rho) {
                AlgebraElement rel2 = commutator(gen_lambda(P4, mu, nu), gen_x(P4, rho));
                AlgebraElement c =
                    product(gen_lambda(P4, mu, 0), gen_lambda(P4, rho, nu));
                if (mu == 0) c -= gen_lambda(P4, rho, nu);
                if (mu == rho) {
                    AlgebraElement t = gen_lambda(P4, 0, nu);
                    if (nu == 0) t -= a_unit(P4);
                    c += Scalar(metric_sign(mu)) * t;
                }
                rel2 += iq * c;
                CHECK(rel2.is_zero());
                (void)pool;
            }
        }
}

TEST_CASE("star is an antilinear involution fixing generators") {
    const Scalar iq = Scalar::iq(1, 1, 1, 1);
    CHECK(star(iq * gen_x(P4, 1)) == -iq * gen_x(P4, 1));
    AlgebraElement x0x1 = product(gen_x(P4, 0), gen_x(P4, 1));
    CHECK(star(x0x1) == x0x1 - iq * gen_x(P4, 1));
    CHECK(star(a_unit(P4)) == a_unit(P4));
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
        AlgebraElement a = mono_elem(P4, random_monomial(P4, rng, 3));
        CHECK(star(star(a)) == a);
    }
}

TEST_CASE("star-antipode compatibility") {
    // star . S . star . S = id
    const SamplePool& pool = default_pool(4);
    std::vector<AlgebraElement> gens;
    for (int mu = 0; mu < 4; ++mu) {
        gens.push_back(gen_x(P4, mu));
        for (int nu = 0; nu < 4; ++nu) gens.push_back(gen_lambda(P4, mu, nu));
    }
    std::mt19937_64 rng(23);
    for (int t = 0; t < 15; ++t) gens.push_back(mono_elem(P4, random_monomial(P4, rng, 2)));
    for (const auto& g : gens) {
        AlgebraElement r = star(antipode(star(antipode(g))));
        CHECK(is_zero_mod_orth(r - g, pool));
    }
}

TEST_CASE("adjoint action") {
    // ad(I) = I (x) I
    CHECK(adjoint_action(a_unit(P4)) == tensor_unit({P4, P4}));
    // ad(Lambda^mu_nu) = Lambda^rho_sigma (x) Lambda_rho^mu Lambda^sigma_nu
    for (int mu = 0; mu < 4 && mu < 2; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            TensorElement ad = adjoint_action(gen_lambda(P4, mu, nu));
            TensorElement expect({P4, P4});
            for (int rho = 0; rho < 4; ++rho)
                for (int sig = 0; sig < 4; ++sig) {
                    AlgebraElement second =
                        product(lambda_lo_up(P4, rho, mu), gen_lambda(P4, sig, nu));
                    for (const auto& [m, c] : second.terms())
                        expect.add_term({Monomial::lambda(4, rho, sig), m}, c);
                }
            CHECK(ad == expect);
        }
    // ad of a primitive Minkowski coordinate: y^mu (x) I
    TensorElement ad_y = adjoint_action(gen_x(M4, 2));
    TensorElement expect({M4, M4});
    expect.add_term({Monomial::coordinate(2), Monomial::unit()}, Scalar(1));
    CHECK(ad_y == expect);
}

TEST_CASE("minkowski hopf structure") {
    AlgebraElement y0 = gen_x(M4, 0), y1 = gen_x(M4, 1);
    TensorElement d = coproduct(y0);
    TensorElement expect({M4, M4});
    expect.add_term({Monomial::coordinate(0), Monomial::unit()}, Scalar(1));
    expect.add_term({Monomial::unit(), Monomial::coordinate(0)}, Scalar(1));
    CHECK(d == expect);
    // S(y^0 y^1) = y^1 y^0 = y^0 y^1 - iq y^1
    AlgebraElement s = antipode(product(y0, y1));
    CHECK(s == product(y0, y1) - Scalar::iq(1, 1, 1, 1) * y1);
    CHECK(counit(phi_element(M4)).is_zero());
    std::mt19937_64 rng(31);
    const SamplePool& pool = default_pool(4);
    for (int t = 0; t < 40; ++t) {
        AlgebraElement a = mono_elem(M4, random_monomial(M4, rng, 5));
        CHECK(coassociativity_holds(a));
        CHECK(counit_axiom_holds(M4, a));
        CHECK(antipode_axiom_holds(M4, a, pool));
    }
}
