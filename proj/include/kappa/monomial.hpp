#ifndef KAPPA_MONOMIAL_HPP
#define KAPPA_MONOMIAL_HPP

#include <cstdint>
#include <vector>
#include <string>

namespace kappa {

// One generator factor with multiplicity. For the Lorentz block the id is
// mu*n + nu (Lambda^mu_nu); for the translation block it is the coordinate
// index of x^mu (or y^mu in the Minkowski algebra).
struct Factor {
    std::uint16_t id;
    std::uint16_t exp;
    friend bool operator==(const Factor& a, const Factor& b) { return a.id == b.id && a.exp == b.exp; }
    friend auto operator<=>(const Factor& a, const Factor& b) = default;
};

// Normal-form monomial: commutative Lambda block (sorted by id) followed by
// the translation word in canonical order (x^0 powers first, then spatial
// indices ascending) which is again a sorted exponent vector.
class Monomial {
public:
    std::vector<Factor> lam;
    std::vector<Factor> xs;

    bool is_unit() const { return lam.empty() && xs.empty(); }
    int lam_degree() const {
        int d = 0;
        for (const auto& f : lam) d += f.exp;
        return d;
    }
    int x_degree() const {
        int d = 0;
        for (const auto& f : xs) d += f.exp;
        return d;
    }
    int degree() const { return lam_degree() + x_degree(); }

    static Monomial unit() { return Monomial{}; }
    static Monomial lambda(int n, int mu, int nu) {
        Monomial m;
        m.lam.push_back({static_cast<std::uint16_t>(mu * n + nu), 1});
        return m;
    }
    static Monomial coordinate(int mu) {
        Monomial m;
        m.xs.push_back({static_cast<std::uint16_t>(mu), 1});
        return m;
    }

    // Multiply by one lambda factor (commutative insert).
    void push_lambda(std::uint16_t id, std::uint16_t exp = 1);

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.lam == b.lam && a.xs == b.xs;
    }

    std::size_t hash() const;
};

// Graded order: total degree first, then x-degree, then lexicographic blocks.
// Strict weak order suitable for std::map keys and pivot selection.
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(a, b); }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace kappa

#endif
