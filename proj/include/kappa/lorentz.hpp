#ifndef KAPPA_LORENTZ_HPP
#define KAPPA_LORENTZ_HPP

#include <gmpxx.h>
#include <vector>

#include "kappa/element.hpp"

namespace kappa {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

// Exact rational point on the Lorentz group variety, labeled by connected
// component: 0 proper orthochronous, 1 improper orthochronous,
// 2 proper non-orthochronous, 3 improper non-orthochronous.
struct LorentzSamplePoint {
    RationalMatrix matrix;
    int component = 0;
};

// Verifies Lambda^T g Lambda = g exactly.
bool is_lorentz(const RationalMatrix& m);

// Pool of sample points, generated once from a seed via Cayley transforms of
// random g-skew rational matrices composed with reflections. Degenerate
// Cayley parameters are resampled.
class SamplePool {
public:
    SamplePool(int n, unsigned long seed, int per_component = 3);
    const std::vector<LorentzSamplePoint>& points() const { return points_; }
    int n() const { return n_; }

private:
    int n_;
    std::vector<LorentzSamplePoint> points_;
};

// Evaluate a polynomial in Lambda variables (no coordinate factors) at a
// sample point; coefficients stay rational functions of q.
Scalar evaluate_lambda_poly(const AlgebraElement& p, const LorentzSamplePoint& pt);

// Greedy sound reduction: replaces complete orthogonality contraction
// patterns sum_rho g_rho Lambda^rho_mu Lambda^rho_nu (and the second-index
// family) by their metric value when present with exactly matching
// coefficients. Works per monomial cofactor; terminates.
AlgebraElement contract_orthogonality(const AlgebraElement& p);

// True iff p (a pure Lambda polynomial) vanishes identically on the group
// variety, decided by the contraction fast path plus exact evaluation at the
// pool's points.
bool lambda_poly_is_zero(const AlgebraElement& p, const SamplePool& pool);

// Zero test for a general element modulo the Lorentz constraints: the
// coefficient of every coordinate word must vanish on the variety.
bool is_zero_mod_orth(const AlgebraElement& a, const SamplePool& pool);
bool equal_mod_orth(const AlgebraElement& a, const AlgebraElement& b, const SamplePool& pool);

// Shared default pool for the ambient dimension (seeded deterministically).
const SamplePool& default_pool(int n);

} // namespace kappa

#endif
