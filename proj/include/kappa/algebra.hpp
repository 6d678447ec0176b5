#ifndef KAPPA_ALGEBRA_HPP
#define KAPPA_ALGEBRA_HPP

#include "kappa/element.hpp"
#include "kappa/metric.hpp"

namespace kappa {

// Generator factories. gen_x produces the coordinate generator of the active
// algebra (x^mu on the Poincare side, y^mu on the Minkowski side).
AlgebraElement a_unit(AlgebraTag tag);
AlgebraElement a_scalar(AlgebraTag tag, const Scalar& c);
AlgebraElement gen_lambda(AlgebraTag tag, int mu, int nu);
AlgebraElement gen_x(AlgebraTag tag, int mu);

// Lambda with indices moved by the metric; single signed generator.
AlgebraElement lambda_lo_up(AlgebraTag tag, int mu, int nu); // Lambda_mu^nu
AlgebraElement lambda_upup(AlgebraTag tag, int mu, int nu);  // Lambda^{mu nu}

// x_mu = g_{mu nu} x^nu
AlgebraElement gen_x_lower(AlgebraTag tag, int mu);

// Product of normal forms, renormalized.
AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement product_monomials(AlgebraTag tag, const Monomial& a, const Monomial& b);
AlgebraElement power(const AlgebraElement& a, int k);
AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);

// Multiply an element by a single monomial on the right/left.
AlgebraElement mul_monomial_right(const AlgebraElement& a, const Monomial& m);

// x^2 = x_mu x^mu and the quotient-space scalar phi of the active algebra:
// phi = x^2 + (n-1) i/kappa x^0 (same shape on the Minkowski side).
AlgebraElement x_squared(AlgebraTag tag);
AlgebraElement phi_element(AlgebraTag tag);

// Counit-style evaluation used by rewriting internals (full version in hopf).
// Enumeration of all normal-form monomials of total degree <= deg.
std::vector<Monomial> monomial_basis(AlgebraTag tag, int max_degree);
std::size_t monomial_count(AlgebraTag tag, int max_degree);

} // namespace kappa

#endif
