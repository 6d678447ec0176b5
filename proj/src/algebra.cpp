#include "kappa/algebra.hpp"

#include <algorithm>

namespace kappa {

AlgebraElement a_unit(AlgebraTag tag) {
    AlgebraElement e(tag);
    e.add_term(Monomial::unit(), Scalar(1));
    return e;
}

AlgebraElement a_scalar(AlgebraTag tag, const Scalar& c) {
    AlgebraElement e(tag);
    e.add_term(Monomial::unit(), c);
    return e;
}

AlgebraElement gen_lambda(AlgebraTag tag, int mu, int nu) {
    if (tag.kind != AlgebraKind::Poincare)
        throw Error("Lambda generators only exist in the Poincare algebra");
    if (mu < 0 || mu >= tag.n || nu < 0 || nu >= tag.n)
        throw Error("Lambda index out of range");
    AlgebraElement e(tag);
    e.add_term(Monomial::lambda(tag.n, mu, nu), Scalar(1));
    return e;
}

AlgebraElement gen_x(AlgebraTag tag, int mu) {
    if (mu < 0 || mu >= tag.n) throw Error("coordinate index out of range");
    AlgebraElement e(tag);
    e.add_term(Monomial::coordinate(mu), Scalar(1));
    return e;
}

AlgebraElement lambda_lo_up(AlgebraTag tag, int mu, int nu) {
    int sign = metric_sign(mu) * metric_sign(nu);
    AlgebraElement e = gen_lambda(tag, mu, nu);
    return e *= Scalar(sign);
}

AlgebraElement lambda_upup(AlgebraTag tag, int mu, int nu) {
    AlgebraElement e = gen_lambda(tag, mu, nu);
    return e *= Scalar(metric_sign(nu));
}

AlgebraElement gen_x_lower(AlgebraTag tag, int mu) {
    AlgebraElement e = gen_x(tag, mu);
    return e *= Scalar(metric_sign(mu));
}

namespace {

using Word = std::vector<std::uint16_t>;

Word expand_word(const std::vector<Factor>& xs) {
    Word w;
    for (const auto& f : xs)
        for (int k = 0; k < f.exp; ++k) w.push_back(f.id);
    return w;
}

std::vector<Factor> collect_word(const Word& w) {
    std::vector<Factor> xs;
    for (auto id : w) {
        if (!xs.empty() && xs.back().id == id) xs.back().exp++;
        else xs.push_back({id, 1});
    }
    return xs;
}

// Canonical reordering of a coordinate word. The only non-commuting pair is
// x^i x^0 -> x^0 x^i - i/kappa x^i (spatial i); spatial letters commute.
void normalize_xword(AlgebraTag tag, Word w, const Scalar& coeff,
                     const Monomial& lam_part, AlgebraElement& out) {
    size_t k = 0;
    while (k + 1 < w.size()) {
        if (w[k] <= w[k + 1]) {
            ++k;
            continue;
        }
        if (w[k + 1] == 0) {
            // x^i x^0 = x^0 x^i - iq x^i
            Word swapped = w;
            std::swap(swapped[k], swapped[k + 1]);
            normalize_xword(tag, std::move(swapped), coeff, lam_part, out);
            Word dropped;
            dropped.reserve(w.size() - 1);
            for (size_t j = 0; j < w.size(); ++j)
                if (j != k + 1) dropped.push_back(w[j]);
            normalize_xword(tag, std::move(dropped), coeff * Scalar::iq(-1, 1, 1, 1), lam_part, out);
            return;
        }
        // both spatial: free swap, then recheck the previous pair
        std::swap(w[k], w[k + 1]);
        if (k > 0) --k;
    }
    Monomial m;
    m.lam = lam_part.lam;
    m.xs = collect_word(w);
    out.add_term(m, coeff);
}

// Derivation part of moving one coordinate letter past a single Lambda:
// x^rho Lambda^mu_nu = Lambda^mu_nu x^rho + iq [ (Lambda^mu_0 - d^mu_0) Lambda^rho_nu
//                                               + (Lambda^0_nu - d^0_nu) g^{mu rho} ].
void lambda_move_correction(AlgebraTag tag, int rho, int mu, int nu,
                            std::vector<std::pair<Scalar, Monomial>>& out) {
    const int n = tag.n;
    const Scalar iq = Scalar::iq(1, 1, 1, 1);
    {
        Monomial m = Monomial::lambda(n, mu, 0);
        m.push_lambda(static_cast<std::uint16_t>(rho * n + nu));
        out.emplace_back(iq, m);
    }
    if (mu == 0) {
        out.emplace_back(-iq, Monomial::lambda(n, rho, nu));
    }
    int g_mu_rho = (mu == rho) ? metric_sign(mu) : 0;
    if (g_mu_rho != 0) {
        out.emplace_back(iq * Scalar(g_mu_rho), Monomial::lambda(n, 0, nu));
        if (nu == 0) out.emplace_back(-(iq * Scalar(g_mu_rho)), Monomial::unit());
    }
}

// Derivation extended to a Lambda monomial.
void lambda_monomial_correction(AlgebraTag tag, int rho, const Monomial& L,
                                std::vector<std::pair<Scalar, Monomial>>& out) {
    const int n = tag.n;
    for (size_t k = 0; k < L.lam.size(); ++k) {
        const Factor f = L.lam[k];
        int mu = f.id / n, nu = f.id % n;
        std::vector<std::pair<Scalar, Monomial>> base;
        lambda_move_correction(tag, rho, mu, nu, base);
        // cofactor: L with one power of this factor removed
        Monomial cof;
        cof.lam.reserve(L.lam.size());
        for (size_t j = 0; j < L.lam.size(); ++j) {
            Factor g = L.lam[j];
            if (j == k) {
                if (g.exp == 1) continue;
                g.exp--;
            }
            cof.lam.push_back(g);
        }
        for (auto& [c, m] : base) {
            Monomial full = cof;
            for (const auto& lf : m.lam) full.push_lambda(lf.id, lf.exp);
            out.emplace_back(c * Scalar(static_cast<long>(f.exp)), std::move(full));
        }
    }
}

// word . L  ->  sum of (lambda monomial, surviving subword) with coefficients.
struct MovedTerm {
    Scalar coeff;
    Monomial lam;
    Word word;
};

void move_word_past_lambda(AlgebraTag tag, const Word& word, const Monomial& L,
                           const Scalar& coeff, std::vector<MovedTerm>& out) {
    if (word.empty() || L.lam.empty()) {
        out.push_back({coeff, L, word});
        return;
    }
    int rho = word.back();
    Word prefix(word.begin(), word.end() - 1);
    // prefix . L . x^rho
    {
        std::vector<MovedTerm> sub;
        move_word_past_lambda(tag, prefix, L, coeff, sub);
        for (auto& t : sub) {
            t.word.push_back(static_cast<std::uint16_t>(rho));
            out.push_back(std::move(t));
        }
    }
    // prefix . D^rho(L)
    std::vector<std::pair<Scalar, Monomial>> corr;
    lambda_monomial_correction(tag, rho, L, corr);
    for (auto& [c, K] : corr) {
        move_word_past_lambda(tag, prefix, K, coeff * c, out);
    }
}

} // namespace

AlgebraElement product_monomials(AlgebraTag tag, const Monomial& a, const Monomial& b) {
    AlgebraElement out(tag);
    Word xa = expand_word(a.xs);
    Word xb = expand_word(b.xs);
    if (tag.kind == AlgebraKind::Minkowski || b.lam.empty()) {
        Monomial lam = a;
        for (const auto& f : b.lam) lam.push_lambda(f.id, f.exp);
        Monomial lam_only;
        lam_only.lam = lam.lam;
        Word w = xa;
        w.insert(w.end(), xb.begin(), xb.end());
        normalize_xword(tag, std::move(w), Scalar(1), lam_only, out);
        return out;
    }
    // a.xs must be moved past b.lam
    std::vector<MovedTerm> moved;
    move_word_past_lambda(tag, xa, [&] {
        Monomial lam_only;
        lam_only.lam = b.lam;
        return lam_only;
    }(), Scalar(1), moved);
    for (auto& t : moved) {
        Monomial lam_only;
        lam_only.lam = t.lam.lam;
        for (const auto& f : a.lam) lam_only.push_lambda(f.id, f.exp);
        Word w = t.word;
        w.insert(w.end(), xb.begin(), xb.end());
        normalize_xword(tag, std::move(w), t.coeff, lam_only, out);
    }
    return out;
}

AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    a.check_same_tag(b);
    AlgebraElement out(a.tag());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            AlgebraElement p = product_monomials(a.tag(), ma, mb);
            Scalar c = ca * cb;
            for (const auto& [m, pc] : p.terms()) out.add_term(m, c * pc);
        }
    }
    return out;
}

AlgebraElement mul_monomial_right(const AlgebraElement& a, const Monomial& m) {
    AlgebraElement out(a.tag());
    for (const auto& [ma, ca] : a.terms()) {
        AlgebraElement p = product_monomials(a.tag(), ma, m);
        for (const auto& [mm, pc] : p.terms()) out.add_term(mm, ca * pc);
    }
    return out;
}

AlgebraElement power(const AlgebraElement& a, int k) {
    if (k < 0) throw Error("negative power of an algebra element");
    AlgebraElement r = a_unit(a.tag());
    for (int j = 0; j < k; ++j) r = product(r, a);
    return r;
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
    return product(a, b) - product(b, a);
}

AlgebraElement x_squared(AlgebraTag tag) {
    AlgebraElement r(tag);
    for (int mu = 0; mu < tag.n; ++mu) {
        AlgebraElement t = product(gen_x(tag, mu), gen_x(tag, mu));
        r += Scalar(metric_sign(mu)) * t;
    }
    return r;
}

AlgebraElement phi_element(AlgebraTag tag) {
    return x_squared(tag) + Scalar::iq(tag.n - 1, 1, 1, 1) * gen_x(tag, 0);
}

std::vector<Monomial> monomial_basis(AlgebraTag tag, int max_degree) {
    std::vector<std::uint16_t> vars;
    const int n = tag.n;
    bool has_lambda = tag.kind == AlgebraKind::Poincare;
    if (has_lambda)
        for (int id = 0; id < n * n; ++id) vars.push_back(static_cast<std::uint16_t>(id));
    for (int id = 0; id < n; ++id) vars.push_back(static_cast<std::uint16_t>(id));
    // recursive enumeration: lambda vars first, then coordinates
    std::vector<Monomial> out;
    Monomial cur;
    struct Rec {
        const std::vector<std::uint16_t>& vars;
        int lam_count;
        std::vector<Monomial>& out;
        void go(size_t idx, int budget, Monomial& cur) {
            if (idx == vars.size()) {
                out.push_back(cur);
                return;
            }
            go(idx + 1, budget, cur);
            for (int e = 1; e <= budget; ++e) {
                Factor f{vars[idx], static_cast<std::uint16_t>(e)};
                bool is_lam = idx < static_cast<size_t>(lam_count);
                (is_lam ? cur.lam : cur.xs).push_back(f);
                go(idx + 1, budget - e, cur);
                (is_lam ? cur.lam : cur.xs).pop_back();
            }
        }
    } rec{vars, has_lambda ? n * n : 0, out};
    rec.go(0, max_degree, cur);
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

std::size_t monomial_count(AlgebraTag tag, int max_degree) {
    // C(v + d, d) summed is equivalent; enumeration sizes here stay small
    // enough that direct counting is never the bottleneck.
    std::size_t vars = tag.kind == AlgebraKind::Poincare
                           ? static_cast<std::size_t>(tag.n) * tag.n + tag.n
                           : static_cast<std::size_t>(tag.n);
    // binomial(vars + max_degree, max_degree) accumulated by degree
    std::size_t total = 0;
    for (int d = 0; d <= max_degree; ++d) {
        // C(vars - 1 + d, d)
        std::size_t c = 1;
        for (int k = 1; k <= d; ++k) c = c * (vars - 1 + k) / k;
        total += c;
    }
    return total;
}

} // namespace kappa
