#ifndef KAPPA_IDEAL_HPP
#define KAPPA_IDEAL_HPP

#include <memory>
#include <unordered_map>

#include "kappa/hopf.hpp"
#include "kappa/linalg.hpp"
#include "kappa/report.hpp"

namespace kappa {

enum class Membership { Yes, No, Inconclusive };

// Bijection between the normal-form monomials of degree <= max_degree and
// column indices, ordered by the graded monomial order.
class ColumnIndex {
public:
    ColumnIndex(AlgebraTag tag, int max_degree);
    std::int32_t index_of(const Monomial& m) const; // -1 if absent
    const Monomial& monomial_at(std::int32_t i) const { return basis_[i]; }
    std::size_t size() const { return basis_.size(); }
    SparseVec to_vec(const AlgebraElement& e) const; // throws if out of range

private:
    std::vector<Monomial> basis_;
    std::unordered_map<Monomial, std::int32_t, MonomialHash> lookup_;
};

// Exact row-echelon data for the intersection of a right ideal with a
// filtration level: the span of g * m over all generators g (plus ambient
// presentation relations) and monomials m with deg(g m) <= degree.
class FiltrationBasis {
public:
    FiltrationBasis(AlgebraTag tag, int degree,
                    const std::vector<AlgebraElement>& generators,
                    const std::vector<AlgebraElement>& ambient);

    int degree() const { return degree_; }
    const ColumnIndex& columns() const { return cols_; }
    std::size_t rank() const { return ech_.rank(); }
    const Echelon& echelon() const { return ech_; }

    Membership contains(const AlgebraElement& e) const;
    SparseVec reduce(const AlgebraElement& e) const;

private:
    AlgebraTag tag_;
    int degree_;
    ColumnIndex cols_;
    Echelon ech_;
};

class RightIdeal {
public:
    RightIdeal(AlgebraTag tag, std::vector<AlgebraElement> generators,
               std::vector<AlgebraElement> ambient = {});

    const AlgebraTag& tag() const { return tag_; }
    const std::vector<AlgebraElement>& generators() const { return gens_; }
    const std::vector<AlgebraElement>& ambient() const { return ambient_; }

    // Cached per degree; construction is the only heavy step.
    const FiltrationBasis& filtration(int max_degree) const;

private:
    AlgebraTag tag_;
    std::vector<AlgebraElement> gens_;
    std::vector<AlgebraElement> ambient_;
    mutable std::map<int, std::unique_ptr<FiltrationBasis>> cache_;
};

Membership ideal_membership(const AlgebraElement& e, const RightIdeal& R, int max_degree);

// Generator sets. theta-poincare requires n = 4.
AlgebraElement x_munu(AlgebraTag tag, int mu, int nu);       // x^{mu nu}
AlgebraElement x_munu_tilde(AlgebraTag tag, int mu, int nu); // trace-free part
AlgebraElement delta_munualpha(AlgebraTag tag, int mu, int nu, int alpha);
AlgebraElement delta_munualpha_tilde(AlgebraTag tag, int mu, int nu, int alpha);
AlgebraElement phi_mu(AlgebraTag tag, int mu); // eps_{mu nu a b} Delta^{nu a b}

std::vector<AlgebraElement> theorem1_generators();
std::vector<AlgebraElement> orthogonality_relations(AlgebraTag tag);
RightIdeal theorem1_ideal();
std::vector<AlgebraElement> theorem1_claimed_span();

AlgebraElement y_munu_tilde(AlgebraTag tag, int mu, int nu);
RightIdeal theorem2_ideal(int n);
std::vector<AlgebraElement> theorem2_claimed_span(int n);

// Verification ops. Labels carry the generator identity; ad-invariance is
// checked on both tensor legs and the report records which leg carries the
// ideal.
Report verify_ad_invariance(const RightIdeal& R, int max_degree);
Report verify_star_compatibility(const RightIdeal& R, int max_degree);

struct QuotientSpanReport {
    Report report;
    std::size_t quotient_dimension = 0;
    std::size_t span_rank = 0;
};
QuotientSpanReport verify_quotient_span(const RightIdeal& R,
                                        const std::vector<AlgebraElement>& claimed,
                                        int max_degree);

} // namespace kappa

#endif
