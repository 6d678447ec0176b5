#include "kappa/lorentz.hpp"

#include <map>
#include <random>

#include "kappa/metric.hpp"

namespace kappa {

namespace {

RationalMatrix identity_matrix(int n) {
    RationalMatrix m(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

bool invert(const RationalMatrix& a, RationalMatrix& inv) {
    const int n = static_cast<int>(a.size());
    RationalMatrix m = a;
    inv = identity_matrix(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) return false;
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        mpq_class p = m[col][col];
        for (int c = 0; c < n; ++c) { m[col][c] /= p; inv[col][c] /= p; }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            mpq_class f = m[r][col];
            for (int c = 0; c < n; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return true;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
    const int n = static_cast<int>(a.size());
    RationalMatrix r(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

} // namespace

bool is_lorentz(const RationalMatrix& m) {
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpq_class s = 0;
            for (int k = 0; k < n; ++k) s += mpq_class(metric_sign(k)) * m[k][i] * m[k][j];
            if (s != (i == j ? mpq_class(metric_sign(i)) : mpq_class(0))) return false;
        }
    return true;
}

SamplePool::SamplePool(int n, unsigned long seed, int per_component) : n_(n) {
    std::mt19937_64 rng(seed ^ 0x6b617070616c6f72ULL);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 4);
    auto random_base = [&]() {
        for (;;) {
            // g-skew M = g A with A antisymmetric
            RationalMatrix m(n, std::vector<mpq_class>(n, 0));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    mpq_class a(num(rng), den(rng));
                    a.canonicalize();
                    m[i][j] = mpq_class(metric_sign(i)) * a;
                    m[j][i] = mpq_class(metric_sign(j)) * -a;
                }
            RationalMatrix ipm = identity_matrix(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) ipm[i][j] += m[i][j];
            RationalMatrix inv;
            if (!invert(ipm, inv)) continue; // degenerate parameter: resample
            RationalMatrix imm = identity_matrix(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) imm[i][j] -= m[i][j];
            return matmul(imm, inv);
        }
    };
    // reflections reaching the other three components
    RationalMatrix refl_space = identity_matrix(n); // det -1, orthochronous
    refl_space[1][1] = -1;
    RationalMatrix refl_time = identity_matrix(n); // det -1, time reversing
    refl_time[0][0] = -1;
    for (int comp = 0; comp < 4; ++comp) {
        for (int k = 0; k < per_component; ++k) {
            RationalMatrix base = random_base();
            LorentzSamplePoint pt;
            pt.component = comp;
            switch (comp) {
                case 0: pt.matrix = base; break;
                case 1: pt.matrix = matmul(refl_space, base); break;
                case 2: pt.matrix = matmul(matmul(refl_time, refl_space), base); break;
                default: pt.matrix = matmul(refl_time, base); break;
            }
            if (!is_lorentz(pt.matrix)) throw Error("sample point failed the metric constraint");
            points_.push_back(std::move(pt));
        }
    }
}

Scalar evaluate_lambda_poly(const AlgebraElement& p, const LorentzSamplePoint& pt) {
    const int n = static_cast<int>(pt.matrix.size());
    Scalar acc;
    for (const auto& [m, c] : p.terms()) {
        if (!m.xs.empty()) throw Error("lambda_poly_is_zero: polynomial has coordinate factors");
        mpq_class v(1);
        for (const auto& f : m.lam) {
            const mpq_class& e = pt.matrix[f.id / n][f.id % n];
            for (int k = 0; k < f.exp; ++k) v *= e;
        }
        acc += c * Scalar(GaussianRational(v));
    }
    return acc;
}

namespace {

// Remove one instance of factor id from a lambda monomial.
bool remove_factor(Monomial& m, std::uint16_t id) {
    for (size_t k = 0; k < m.lam.size(); ++k) {
        if (m.lam[k].id != id) continue;
        if (m.lam[k].exp == 1) m.lam.erase(m.lam.begin() + k);
        else m.lam[k].exp--;
        return true;
    }
    return false;
}

} // namespace

AlgebraElement contract_orthogonality(const AlgebraElement& p) {
    const int n = p.tag().n;
    AlgebraElement cur = p;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [m, c] : cur.terms()) {
            if (m.lam_degree() < 2) continue;
            // candidate pairs of factor instances within this monomial
            for (size_t i = 0; i < m.lam.size() && !changed; ++i) {
                for (size_t j = i; j < m.lam.size() && !changed; ++j) {
                    if (i == j && m.lam[i].exp < 2) continue;
                    int a1 = m.lam[i].id / n, b1 = m.lam[i].id % n;
                    int a2 = m.lam[j].id / n, b2 = m.lam[j].id % n;
                    for (int family = 0; family < 2 && !changed; ++family) {
                        int rho = family == 0 ? a1 : b1;
                        if (family == 0 && a1 != a2) continue;
                        if (family == 1 && b1 != b2) continue;
                        int mu = family == 0 ? b1 : a1;
                        int nu = family == 0 ? b2 : a2;
                        // cofactor with the two instances removed
                        Monomial cof = m;
                        if (!remove_factor(cof, m.lam[i].id)) continue;
                        if (!remove_factor(cof, m.lam[j].id)) continue;
                        Scalar base = c / Scalar(metric_sign(rho));
                        // check the complete pattern
                        bool full = true;
                        for (int r = 0; r < n && full; ++r) {
                            Monomial probe = cof;
                            if (family == 0) {
                                probe.push_lambda(static_cast<std::uint16_t>(r * n + mu));
                                probe.push_lambda(static_cast<std::uint16_t>(r * n + nu));
                            } else {
                                probe.push_lambda(static_cast<std::uint16_t>(mu * n + r));
                                probe.push_lambda(static_cast<std::uint16_t>(nu * n + r));
                            }
                            Scalar want = base * Scalar(metric_sign(r));
                            if (cur.coefficient(probe) != want) full = false;
                        }
                        if (!full) continue;
                        // subtract base * (pattern - g_{mu nu} cofactor)
                        for (int r = 0; r < n; ++r) {
                            Monomial probe = cof;
                            if (family == 0) {
                                probe.push_lambda(static_cast<std::uint16_t>(r * n + mu));
                                probe.push_lambda(static_cast<std::uint16_t>(r * n + nu));
                            } else {
                                probe.push_lambda(static_cast<std::uint16_t>(mu * n + r));
                                probe.push_lambda(static_cast<std::uint16_t>(nu * n + r));
                            }
                            cur.add_term(probe, -(base * Scalar(metric_sign(r))));
                        }
                        if (mu == nu) cur.add_term(cof, base * Scalar(metric_sign(mu)));
                        changed = true;
                    }
                }
            }
            if (changed) break;
        }
    }
    return cur;
}

bool lambda_poly_is_zero(const AlgebraElement& p, const SamplePool& pool) {
    AlgebraElement reduced = contract_orthogonality(p);
    if (reduced.is_zero()) return true;
    for (const auto& pt : pool.points()) {
        if (!evaluate_lambda_poly(reduced, pt).is_zero()) return false;
    }
    return true;
}

bool is_zero_mod_orth(const AlgebraElement& a, const SamplePool& pool) {
    if (a.is_zero()) return true;
    if (a.tag().kind == AlgebraKind::Minkowski) return a.is_zero();
    // split by coordinate word
    std::map<std::vector<Factor>, AlgebraElement> by_word;
    for (const auto& [m, c] : a.terms()) {
        Monomial lam_only;
        lam_only.lam = m.lam;
        auto it = by_word.find(m.xs);
        if (it == by_word.end()) it = by_word.emplace(m.xs, AlgebraElement(a.tag())).first;
        it->second.add_term(lam_only, c);
    }
    for (const auto& [word, poly] : by_word)
        if (!lambda_poly_is_zero(poly, pool)) return false;
    return true;
}

bool equal_mod_orth(const AlgebraElement& a, const AlgebraElement& b, const SamplePool& pool) {
    return is_zero_mod_orth(a - b, pool);
}

const SamplePool& default_pool(int n) {
    static std::map<int, SamplePool> pools;
    auto it = pools.find(n);
    if (it == pools.end()) it = pools.emplace(n, SamplePool(n, 0xd1cebeef + n)).first;
    return it->second;
}

} // namespace kappa
