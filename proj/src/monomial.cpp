#include "kappa/monomial.hpp"

#include <algorithm>

namespace kappa {

void Monomial::push_lambda(std::uint16_t id, std::uint16_t exp) {
    auto it = std::lower_bound(lam.begin(), lam.end(), id,
                               [](const Factor& f, std::uint16_t v) { return f.id < v; });
    if (it != lam.end() && it->id == id) {
        it->exp = static_cast<std::uint16_t>(it->exp + exp);
    } else {
        lam.insert(it, Factor{id, exp});
    }
}

std::size_t Monomial::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (const auto& f : lam) mix((std::size_t(f.id) << 16) | f.exp);
    mix(0xffffULL);
    for (const auto& f : xs) mix((std::size_t(f.id) << 16) | f.exp);
    return h;
}

namespace {

int lex_cmp(const std::vector<Factor>& a, const std::vector<Factor>& b) {
    const size_t n = std::min(a.size(), b.size());
    for (size_t k = 0; k < n; ++k) {
        if (a[k].id != b[k].id) return a[k].id < b[k].id ? -1 : 1;
        if (a[k].exp != b[k].exp) return a[k].exp > b[k].exp ? -1 : 1;
    }
    if (a.size() != b.size()) return a.size() > b.size() ? -1 : 1;
    return 0;
}

} // namespace

bool monomial_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    int xa = a.x_degree(), xb = b.x_degree();
    if (xa != xb) return xa < xb;
    int c = lex_cmp(a.lam, b.lam);
    if (c != 0) return c < 0;
    return lex_cmp(a.xs, b.xs) < 0;
}

} // namespace kappa
