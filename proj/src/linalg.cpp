#include "kappa/linalg.hpp"

#include "kappa/error.hpp"

namespace kappa {

void sparse_axpy(SparseVec& dst, const Scalar& c, const SparseVec& src) {
    if (c.is_zero() || src.empty()) return;
    SparseVec out;
    out.reserve(dst.size() + src.size());
    auto a = dst.begin();
    auto b = src.begin();
    while (a != dst.end() || b != src.end()) {
        if (b == src.end() || (a != dst.end() && a->first < b->first)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == dst.end() || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Scalar v = a->second + c * b->second;
            if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    dst = std::move(out);
}

SparseVec sparse_scale(SparseVec v, const Scalar& c) {
    for (auto& [i, s] : v) s *= c;
    return v;
}

bool Echelon::insert(SparseVec v) {
    while (!v.empty()) {
        auto it = rows_.find(v.back().first);
        if (it == rows_.end()) {
            Scalar lead = v.back().second;
            if (!lead.is_one()) {
                Scalar inv = lead.inverse();
                for (auto& [i, s] : v) s *= inv;
            }
            std::int32_t key = v.back().first;
            rows_.emplace(key, std::move(v));
            return true;
        }
        Scalar c = -v.back().second; // pivot row is monic
        sparse_axpy(v, c, it->second);
    }
    return false;
}

SparseVec Echelon::reduce(SparseVec v) const {
    SparseVec residual;
    while (!v.empty()) {
        auto it = rows_.find(v.back().first);
        if (it == rows_.end()) {
            residual.push_back(std::move(v.back()));
            v.pop_back();
            continue;
        }
        Scalar c = -v.back().second;
        sparse_axpy(v, c, it->second);
    }
    std::reverse(residual.begin(), residual.end());
    return residual;
}

bool Echelon::in_span(SparseVec v) const {
    while (!v.empty()) {
        auto it = rows_.find(v.back().first);
        if (it == rows_.end()) return false;
        Scalar c = -v.back().second;
        sparse_axpy(v, c, it->second);
    }
    return true;
}

DenseMatrix dense_inverse(const DenseMatrix& a) {
    const std::size_t n = a.size();
    DenseMatrix m = a;
    DenseMatrix inv(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Scalar(1);
    for (std::size_t col = 0; col < n; ++col) {
        // prefer a constant pivot to keep entries small
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            if (pivot == n || (m[r][col].is_constant() && !m[pivot][col].is_constant())) pivot = r;
            if (m[r][col].is_one()) { pivot = r; break; }
        }
        if (pivot == n) throw Error("singular matrix");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Scalar p = m[col][col].inverse();
        for (std::size_t c = 0; c < n; ++c) {
            m[col][c] *= p;
            inv[col][c] *= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Scalar f = m[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                if (!m[col][c].is_zero()) m[r][c] -= f * m[col][c];
                if (!inv[col][c].is_zero()) inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

} // namespace kappa
