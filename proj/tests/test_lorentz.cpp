#include <doctest.h>

#include "kappa/algebra.hpp"
#include "kappa/lorentz.hpp"

using namespace kappa;

namespace {
const AlgebraTag P4 = poincare(4);
}

TEST_CASE("sample points satisfy the metric constraint exactly") {
    SamplePool pool(4, 42);
    CHECK(pool.points().size() == 12);
    for (const auto& pt : pool.points()) CHECK(is_lorentz(pt.matrix));
}

TEST_CASE("orthogonality polynomial vanishes on the variety") {
    SamplePool pool(4, 1);
    // Lambda_rho^mu Lambda^rho_nu - d^mu_nu
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            AlgebraElement p(P4);
            for (int rho = 0; rho < 4; ++rho)
                p += Scalar(metric_sign(rho) * metric_sign(mu)) *
                     product(gen_lambda(P4, rho, mu), gen_lambda(P4, rho, nu));
            if (mu == nu) p -= a_unit(P4);
            CHECK(lambda_poly_is_zero(p, pool));
        }
}

TEST_CASE("nonvanishing polynomials are detected") {
    SamplePool pool(4, 7);
    CHECK_FALSE(lambda_poly_is_zero(gen_lambda(P4, 0, 0), pool));
    // determinant-like alternating sum minus 1 fails on the det = -1 components
    AlgebraElement det(P4);
    int perm[4];
    for (perm[0] = 0; perm[0] < 4; ++perm[0])
        for (perm[1] = 0; perm[1] < 4; ++perm[1])
            for (perm[2] = 0; perm[2] < 4; ++perm[2])
                for (perm[3] = 0; perm[3] < 4; ++perm[3]) {
                    int sgn = eps4_lower(perm[0], perm[1], perm[2], perm[3]);
                    if (sgn == 0) continue;
                    AlgebraElement t = a_unit(P4);
                    for (int r = 0; r < 4; ++r) t = product(t, gen_lambda(P4, r, perm[r]));
                    det += Scalar(sgn) * t;
                }
    AlgebraElement det_minus_1 = det - a_unit(P4);
    CHECK_FALSE(lambda_poly_is_zero(det_minus_1, pool));
    // but it does vanish on the proper components
    for (const auto& pt : pool.points()) {
        Scalar v = evaluate_lambda_poly(det_minus_1, pt);
        bool proper = pt.component == 0 || pt.component == 2;
        CHECK(v.is_zero() == proper);
    }
}

TEST_CASE("directed contraction agrees with the sample test") {
    SamplePool pool(4, 3);
    // sum_rho g_rho Lambda^rho_mu Lambda^rho_nu - g_{mu nu}, times a cofactor
    AlgebraElement p(P4);
    for (int rho = 0; rho < 4; ++rho) {
        AlgebraElement t = product(gen_lambda(P4, rho, 1), gen_lambda(P4, rho, 2));
        p += Scalar(metric_sign(rho)) * product(gen_lambda(P4, 3, 3), t);
    }
    AlgebraElement reduced = contract_orthogonality(p);
    CHECK(reduced.is_zero());
    CHECK(lambda_poly_is_zero(p, pool));
}

TEST_CASE("zero test modulo the constraints for mixed elements") {
    SamplePool pool(4, 11);
    // (sum_rho g_rho Lambda^rho_0 Lambda^rho_0 - 1) x^1  vanishes mod the constraints
    AlgebraElement p(P4);
    for (int rho = 0; rho < 4; ++rho)
        p += Scalar(metric_sign(rho)) *
             product(gen_lambda(P4, rho, 0), gen_lambda(P4, rho, 0));
    p -= a_unit(P4);
    AlgebraElement e = product(p, gen_x(P4, 1));
    CHECK_FALSE(e.is_zero());
    CHECK(is_zero_mod_orth(e, pool));
    CHECK_FALSE(is_zero_mod_orth(gen_x(P4, 1), pool));
}
