#ifndef KAPPA_LINALG_HPP
#define KAPPA_LINALG_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "kappa/scalar.hpp"

namespace kappa {

// Sparse vector over Scalar, sorted by index; the leading entry is the one
// with the largest index.
using SparseVec = std::vector<std::pair<std::int32_t, Scalar>>;

void sparse_axpy(SparseVec& dst, const Scalar& c, const SparseVec& src);
SparseVec sparse_scale(SparseVec v, const Scalar& c);

// Row echelon structure keyed by leading index. Rows are monic; inserted
// rows are reduced against existing pivots only (no back-substitution), which
// keeps rows sparse while reduce() still decides span membership exactly.
class Echelon {
public:
    // Returns true if the vector added a new pivot (rank grew).
    bool insert(SparseVec v);
    // Fully reduce v against the stored pivots; zero result means v is in
    // the row span.
    SparseVec reduce(SparseVec v) const;
    bool in_span(SparseVec v) const;
    std::size_t rank() const { return rows_.size(); }
    const std::map<std::int32_t, SparseVec>& rows() const { return rows_; }

private:
    std::map<std::int32_t, SparseVec> rows_;
};

// Dense exact matrix helpers for the small wedge-table systems.
using DenseMatrix = std::vector<std::vector<Scalar>>;

// Inverse of a square matrix; throws if singular.
DenseMatrix dense_inverse(const DenseMatrix& a);

} // namespace kappa

#endif
