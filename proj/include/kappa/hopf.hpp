#ifndef KAPPA_HOPF_HPP
#define KAPPA_HOPF_HPP

#include "kappa/algebra.hpp"

namespace kappa {

AlgebraElement mono_elem(AlgebraTag tag, const Monomial& m);

TensorElement tensor_unit(std::vector<AlgebraTag> tags);
TensorElement tensor_product(const AlgebraElement& a, const AlgebraElement& b);
TensorElement tensor_product3(const AlgebraElement& a, const AlgebraElement& b,
                              const AlgebraElement& c);
// Leg-wise product; legs commute with one another.
TensorElement tensor_mult(const TensorElement& a, const TensorElement& b);

// Comultiplication, extended multiplicatively from the generators.
TensorElement coproduct(const AlgebraElement& a);
// Apply the coproduct to one leg of a tensor (expanding it into two legs).
TensorElement coproduct_leg(const TensorElement& t, std::size_t leg);
// (Delta x id) Delta
TensorElement coproduct2(const AlgebraElement& a);

Scalar counit(const AlgebraElement& a);
Scalar counit_monomial(AlgebraTag tag, const Monomial& m);

AlgebraElement antipode(const AlgebraElement& a);
AlgebraElement antipode_monomial(AlgebraTag tag, const Monomial& m);

// Antilinear anti-automorphism fixing every generator.
AlgebraElement star(const AlgebraElement& a);

// ad(a) = sum b_k (x) S(a_k) c_k built from the twofold coproduct; asserts
// coassociativity of the expansion it consumes.
TensorElement adjoint_action(const AlgebraElement& a);

// Multiply all legs of each term together (the multiplication map).
AlgebraElement multiply_out(const TensorElement& t);
// Apply counit to the given leg, collapsing a 2-leg tensor to an element.
AlgebraElement counit_leg(const TensorElement& t, std::size_t leg);
// Apply the antipode to one leg.
TensorElement antipode_leg(const TensorElement& t, std::size_t leg);

} // namespace kappa

#endif
