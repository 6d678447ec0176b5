#ifndef KAPPA_FORMS_HPP
#define KAPPA_FORMS_HPP

#include <array>

#include "kappa/hopf.hpp"
#include "kappa/lorentz.hpp"

namespace kappa {

// The 15 left-invariant 1-forms of the four-dimensional calculus, indexed as
//   0..5   w^{mu nu}, both indices up, mu < nu (antisymmetric matrix block)
//   6..9   w^mu (vector block)
//   10     w (scalar form)
//   11..14 pi_mu (lower index)
inline constexpr int kNumForms = 15;
inline constexpr int kFormScal = 10;

int form_mat_index(int mu, int nu); // requires mu < nu
inline int form_vec_index(int mu) { return 6 + mu; }
inline int form_pi_index(int mu) { return 11 + mu; }
// Inverse of form_mat_index.
std::pair<int, int> form_mat_pair(int sym);

// A reference to +/- one basis symbol, or zero.
struct FormRef {
    int sym = -1;
    int sign = 0;
    bool is_zero() const { return sym < 0 || sign == 0; }
};

FormRef mat_upup(int mu, int nu);
FormRef mat_updown(int mu, int nu);  // w^mu_nu
FormRef mat_downup(int mu, int nu);  // w_mu^nu
FormRef mat_downdown(int mu, int nu);
inline FormRef vec_up(int mu) { return {form_vec_index(mu), 1}; }
inline FormRef vec_down(int mu) { return {form_vec_index(mu), metric_sign(mu)}; }
inline FormRef scal() { return {kFormScal, 1}; }
inline FormRef pi_down(int mu) { return {form_pi_index(mu), 1}; }
inline FormRef pi_up(int mu) { return {form_pi_index(mu), metric_sign(mu)}; }

std::string form_symbol_name(int sym);

// Degree-1 differential form with left algebra coefficients on the invariant
// basis.
class OneForm {
public:
    OneForm() : tag_(poincare(4)) {}
    explicit OneForm(AlgebraTag tag) : tag_(tag) {}

    const AlgebraTag& tag() const { return tag_; }
    const std::map<int, AlgebraElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(int sym, const AlgebraElement& coeff);
    void add_ref(const FormRef& ref, const AlgebraElement& coeff);
    void add_ref(const FormRef& ref, const Scalar& coeff);
    AlgebraElement coeff(int sym) const;

    OneForm operator-() const;
    OneForm& operator+=(const OneForm& o);
    OneForm& operator-=(const OneForm& o);
    OneForm& operator*=(const Scalar& c);
    friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
    friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
    friend bool operator==(const OneForm& a, const OneForm& b) {
        return a.terms_ == b.terms_;
    }

private:
    AlgebraTag tag_;
    std::map<int, AlgebraElement> terms_;
};

OneForm left_multiply(const AlgebraElement& a, const OneForm& u);

// Commutator [g, f] of a single generator with a basis form, Eq-driven; the
// returned form carries left coefficients.
OneForm form_generator_commutator(AlgebraTag tag, bool g_is_lambda, int g1, int g2, int sym);

// f . m with the coefficient moved to the left; memoized.
OneForm symbol_times_monomial(AlgebraTag tag, int sym, const Monomial& m);
// u . a for a full form and element.
OneForm form_times_element(const OneForm& u, const AlgebraElement& a);
// Spec-level entry point: f . a for one basis symbol.
OneForm move_coefficient_left(int sym, const AlgebraElement& a);

// Exterior derivative on the algebra, extended from the generators by the
// Leibniz rule; memoized per monomial.
OneForm d_monomial(AlgebraTag tag, const Monomial& m);
OneForm d_algebra(const AlgebraElement& a);

// The left-invariant form attached to the class of a: sum S(a_(1)) d a_(2).
OneForm invariant_form_of(const AlgebraElement& a);

// Right-invariant basis expressed over the left-invariant one (index scheme
// shared with the left basis), plus the inverse change of basis W with
// W . R = Id modulo the Lorentz constraints.
struct RightInvariantData {
    std::array<OneForm, kNumForms> eta;
    std::array<std::array<AlgebraElement, kNumForms>, kNumForms> inverse; // W[j][k]
};
const RightInvariantData& right_invariant_data();

bool form_is_zero_mod_orth(const OneForm& u, const SamplePool& pool);

std::string render_text(const OneForm& u);

} // namespace kappa

#endif
