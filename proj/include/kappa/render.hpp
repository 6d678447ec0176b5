#ifndef KAPPA_RENDER_HPP
#define KAPPA_RENDER_HPP

#include <string>

#include "kappa/element.hpp"

namespace kappa {

std::string render_text_monomial(AlgebraTag tag, const Monomial& m);
std::string render_text(const AlgebraElement& e);
std::string render_text(const TensorElement& t);

std::string render_latex_monomial(AlgebraTag tag, const Monomial& m);
std::string render_latex(const AlgebraElement& e);

// Translate the LaTeX rendering back into the plain expression grammar
// (used to check that LaTeX output encodes the element faithfully).
std::string latex_to_text(const std::string& latex);

} // namespace kappa

#endif
