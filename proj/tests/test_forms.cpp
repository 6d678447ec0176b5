#include <doctest.h>

#include <random>

#include "kappa/forms.hpp"
#include "kappa/ideal.hpp"

using namespace kappa;

namespace {

const AlgebraTag P4 = poincare(4);

OneForm unit_form(int sym) {
    OneForm u(P4);
    u.add(sym, a_unit(P4));
    return u;
}

bool forms_equal_mod_orth(const OneForm& a, const OneForm& b, const SamplePool& pool) {
    return form_is_zero_mod_orth(a - b, pool);
}

Monomial random_monomial(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    std::uniform_int_distribution<int> var(0, 19);
    Monomial m;
    std::vector<int> lam_ids, x_ids;
    for (int k = 0; k < d; ++k) {
        int v = var(rng);
        if (v < 16) lam_ids.push_back(v);
        else x_ids.push_back(v - 16);
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

TEST_CASE("d on generators") {
    // d(x^a) = L^a_mu w^mu
    for (int a = 0; a < 4; ++a) {
        OneForm d = d_algebra(gen_x(P4, a));
        OneForm expect(P4);
        for (int mu = 0; mu < 4; ++mu) expect.add_ref(vec_up(mu), gen_lambda(P4, a, mu));
        CHECK(d == expect);
    }
    CHECK(d_algebra(a_unit(P4)).is_zero());
}

TEST_CASE("lambda commutes with the antisymmetric and pi blocks") {
    for (int sym : {0, 3, 5, 11, 14}) {
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                OneForm moved = move_coefficient_left(sym, gen_lambda(P4, mu, nu));
                OneForm expect(P4);
                expect.add(sym, gen_lambda(P4, mu, nu));
                CHECK(moved == expect);
            }
    }
}

TEST_CASE("moving the scalar form past a coordinate") {
    // w x^mu = x^mu w - 4/kappa^2 L^mu_rho w^rho
    const Scalar four_q2 = Scalar(4) * Scalar::q(2);
    for (int mu = 0; mu < 4; ++mu) {
        OneForm moved = move_coefficient_left(kFormScal, gen_x(P4, mu));
        OneForm expect(P4);
        expect.add(kFormScal, gen_x(P4, mu));
        for (int rho = 0; rho < 4; ++rho)
            expect.add_ref(vec_up(rho), -(four_q2 * gen_lambda(P4, mu, rho)));
        CHECK(moved == expect);
    }
}

TEST_CASE("bimodule moves compose over products") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> var(0, 19);
    for (int sym = 0; sym < kNumForms; ++sym) {
        for (int t = 0; t < 6; ++t) {
            int v1 = var(rng), v2 = var(rng);
            AlgebraElement a = v1 < 16 ? gen_lambda(P4, v1 / 4, v1 % 4) : gen_x(P4, v1 - 16);
            AlgebraElement b = v2 < 16 ? gen_lambda(P4, v2 / 4, v2 % 4) : gen_x(P4, v2 - 16);
            OneForm direct = move_coefficient_left(sym, product(a, b));
            OneForm stepped = form_times_element(move_coefficient_left(sym, a), b);
            CHECK(direct == stepped);
        }
    }
}

TEST_CASE("d is a derivation") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 25; ++t) {
        AlgebraElement a = mono_elem(P4, random_monomial(rng, 2));
        AlgebraElement b = mono_elem(P4, random_monomial(rng, 2));
        OneForm lhs = d_algebra(product(a, b));
        OneForm rhs = form_times_element(d_algebra(a), b);
        rhs += left_multiply(a, d_algebra(b));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("d phi reproduces the scalar invariant form") {
    const SamplePool& pool = default_pool(4);
    AlgebraElement phi = phi_element(P4);
    OneForm dphi = d_algebra(phi);
    OneForm expect = unit_form(kFormScal);
    for (int mu = 0; mu < 4; ++mu) {
        // + 2 x_mu dx^mu
        for (int rho = 0; rho < 4; ++rho) {
            AlgebraElement c =
                product(gen_x_lower(P4, mu), gen_lambda(P4, mu, rho));
            expect.add_ref(vec_up(rho), Scalar(2) * c);
        }
    }
    CHECK(forms_equal_mod_orth(dphi, expect, pool));
}

TEST_CASE("invariant form of the quotient basis elements") {
    const SamplePool& pool = default_pool(4);
    for (int mu = 0; mu < 4; ++mu)
        CHECK(forms_equal_mod_orth(invariant_form_of(gen_x(P4, mu)), unit_form(form_vec_index(mu)),
                                   pool));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            if (mu == nu) continue;
            AlgebraElement a = gen_lambda(P4, mu, nu);
            OneForm expect(P4);
            expect.add_ref(mat_updown(mu, nu), a_unit(P4));
            CHECK(forms_equal_mod_orth(invariant_form_of(a), expect, pool));
        }
    CHECK(forms_equal_mod_orth(invariant_form_of(phi_element(P4)), unit_form(kFormScal), pool));
    for (int mu = 0; mu < 4; ++mu) {
        OneForm w = invariant_form_of(phi_mu(P4, mu));
        CHECK(forms_equal_mod_orth(w, unit_form(form_pi_index(mu)), pool));
    }
}

TEST_CASE("right-invariant forms") {
    const SamplePool& pool = default_pool(4);
    const RightInvariantData& data = right_invariant_data();
    // eta = w
    CHECK(data.eta[kFormScal] == unit_form(kFormScal));
    // theta_mu at the counit specialization collapses to pi_mu
    for (int mu = 0; mu < 4; ++mu) {
        OneForm spec(P4);
        for (const auto& [sym, c] : data.eta[form_pi_index(mu)].terms())
            spec.add_ref(FormRef{sym, 1}, counit(c));
        CHECK(spec == unit_form(form_pi_index(mu)));
    }
    // W R = Id modulo the constraints
    for (int j = 0; j < kNumForms; ++j) {
        for (int i = 0; i < kNumForms; ++i) {
            AlgebraElement acc(P4);
            for (int k = 0; k < kNumForms; ++k) {
                const AlgebraElement& w = data.inverse[j][k];
                if (w.is_zero()) continue;
                AlgebraElement r = data.eta[k].coeff(i);
                if (r.is_zero()) continue;
                acc += product(w, r);
            }
            if (i == j) acc -= a_unit(P4);
            CHECK(is_zero_mod_orth(acc, pool));
        }
    }
}
