#include "kappa/hopf.hpp"

namespace kappa {

AlgebraElement mono_elem(AlgebraTag tag, const Monomial& m) {
    AlgebraElement e(tag);
    e.add_term(m, Scalar(1));
    return e;
}

TensorElement tensor_unit(std::vector<AlgebraTag> tags) {
    TensorElement t(std::move(tags));
    TensorElement::Key key(t.legs(), Monomial::unit());
    t.add_term(key, Scalar(1));
    return t;
}

TensorElement tensor_product(const AlgebraElement& a, const AlgebraElement& b) {
    TensorElement t({a.tag(), b.tag()});
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            t.add_term({ma, mb}, ca * cb);
    return t;
}

TensorElement tensor_product3(const AlgebraElement& a, const AlgebraElement& b,
                              const AlgebraElement& c) {
    TensorElement t({a.tag(), b.tag(), c.tag()});
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            for (const auto& [mc, cc] : c.terms())
                t.add_term({ma, mb, mc}, ca * cb * cc);
    return t;
}

TensorElement tensor_mult(const TensorElement& a, const TensorElement& b) {
    if (a.tags() != b.tags()) throw MixedAlgebra("tensor legs do not match");
    TensorElement out(a.tags());
    const std::size_t legs = a.legs();
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            // per-leg normalized products, then the cartesian expansion
            std::vector<AlgebraElement> leg_products;
            leg_products.reserve(legs);
            bool zero = false;
            for (std::size_t l = 0; l < legs; ++l) {
                AlgebraElement p = product_monomials(a.tags()[l], ka[l], kb[l]);
                if (p.is_zero()) { zero = true; break; }
                leg_products.push_back(std::move(p));
            }
            if (zero) continue;
            TensorElement::Key key(legs, Monomial::unit());
            Scalar base = ca * cb;
            struct Rec {
                const std::vector<AlgebraElement>& lp;
                TensorElement& out;
                TensorElement::Key& key;
                void go(std::size_t l, const Scalar& c) {
                    if (l == lp.size()) {
                        out.add_term(key, c);
                        return;
                    }
                    for (const auto& [m, mc] : lp[l].terms()) {
                        key[l] = m;
                        go(l + 1, c * mc);
                    }
                }
            } rec{leg_products, out, key};
            rec.go(0, base);
        }
    }
    return out;
}

namespace {

TensorElement coproduct_generator(AlgebraTag tag, bool is_lambda, int mu, int nu) {
    TensorElement t({tag, tag});
    if (tag.kind == AlgebraKind::Minkowski) {
        // primitive coordinates
        t.add_term({Monomial::coordinate(mu), Monomial::unit()}, Scalar(1));
        t.add_term({Monomial::unit(), Monomial::coordinate(mu)}, Scalar(1));
        return t;
    }
    if (is_lambda) {
        for (int rho = 0; rho < tag.n; ++rho)
            t.add_term({Monomial::lambda(tag.n, mu, rho), Monomial::lambda(tag.n, rho, nu)},
                       Scalar(1));
    } else {
        for (int rho = 0; rho < tag.n; ++rho)
            t.add_term({Monomial::lambda(tag.n, mu, rho), Monomial::coordinate(rho)}, Scalar(1));
        t.add_term({Monomial::coordinate(mu), Monomial::unit()}, Scalar(1));
    }
    return t;
}

TensorElement coproduct_monomial(AlgebraTag tag, const Monomial& m) {
    TensorElement acc = tensor_unit({tag, tag});
    const int n = tag.n;
    for (const auto& f : m.lam) {
        TensorElement g = coproduct_generator(tag, true, f.id / n, f.id % n);
        for (int e = 0; e < f.exp; ++e) acc = tensor_mult(acc, g);
    }
    for (const auto& f : m.xs) {
        TensorElement g = coproduct_generator(tag, false, f.id, -1);
        for (int e = 0; e < f.exp; ++e) acc = tensor_mult(acc, g);
    }
    return acc;
}

} // namespace

TensorElement coproduct(const AlgebraElement& a) {
    TensorElement out({a.tag(), a.tag()});
    for (const auto& [m, c] : a.terms()) {
        TensorElement t = coproduct_monomial(a.tag(), m);
        t *= c;
        out += t;
    }
    return out;
}

TensorElement coproduct_leg(const TensorElement& t, std::size_t leg) {
    std::vector<AlgebraTag> tags;
    for (std::size_t l = 0; l < t.legs(); ++l) {
        tags.push_back(t.tags()[l]);
        if (l == leg) tags.push_back(t.tags()[l]);
    }
    TensorElement out(tags);
    for (const auto& [k, c] : t.terms()) {
        TensorElement dm = coproduct_monomial(t.tags()[leg], k[leg]);
        for (const auto& [dk, dc] : dm.terms()) {
            TensorElement::Key key;
            key.reserve(k.size() + 1);
            for (std::size_t l = 0; l < k.size(); ++l) {
                if (l == leg) {
                    key.push_back(dk[0]);
                    key.push_back(dk[1]);
                } else {
                    key.push_back(k[l]);
                }
            }
            out.add_term(key, c * dc);
        }
    }
    return out;
}

TensorElement coproduct2(const AlgebraElement& a) {
    return coproduct_leg(coproduct(a), 0);
}

Scalar counit_monomial(AlgebraTag tag, const Monomial& m) {
    if (!m.xs.empty()) return Scalar();
    const int n = tag.n;
    for (const auto& f : m.lam)
        if (f.id / n != f.id % n) return Scalar();
    return Scalar(1);
}

Scalar counit(const AlgebraElement& a) {
    Scalar r;
    for (const auto& [m, c] : a.terms()) {
        if (!counit_monomial(a.tag(), m).is_zero()) r += c;
    }
    return r;
}

AlgebraElement antipode_monomial(AlgebraTag tag, const Monomial& m) {
    // anti-homomorphism: reverse the generator word, substituting per generator
    AlgebraElement acc = a_unit(tag);
    const int n = tag.n;
    // normal order is lambda-block then coordinates, so the reversed word is
    // coordinates in reverse, then lambdas (their order is immaterial).
    for (auto it = m.xs.rbegin(); it != m.xs.rend(); ++it) {
        AlgebraElement s(tag);
        if (tag.kind == AlgebraKind::Minkowski) {
            s = -gen_x(tag, it->id);
        } else {
            // S(x^mu) = -Lambda_nu^mu x^nu
            for (int nu = 0; nu < n; ++nu) {
                AlgebraElement t = product(lambda_lo_up(tag, nu, it->id), gen_x(tag, nu));
                s -= t;
            }
        }
        for (int e = 0; e < it->exp; ++e) acc = product(acc, s);
    }
    for (const auto& f : m.lam) {
        AlgebraElement s = lambda_lo_up(tag, f.id % n, f.id / n); // S(L^mu_nu) = L_nu^mu
        for (int e = 0; e < f.exp; ++e) acc = product(acc, s);
    }
    return acc;
}

AlgebraElement antipode(const AlgebraElement& a) {
    AlgebraElement out(a.tag());
    for (const auto& [m, c] : a.terms()) {
        AlgebraElement s = antipode_monomial(a.tag(), m);
        out += c * s;
    }
    return out;
}

AlgebraElement star(const AlgebraElement& a) {
    AlgebraElement out(a.tag());
    for (const auto& [m, c] : a.terms()) {
        // generators are self-adjoint; reverse the word and renormalize
        AlgebraElement acc = a_unit(a.tag());
        for (auto it = m.xs.rbegin(); it != m.xs.rend(); ++it)
            for (int e = 0; e < it->exp; ++e) acc = product(acc, gen_x(a.tag(), it->id));
        if (!m.lam.empty()) {
            Monomial lm;
            lm.lam = m.lam;
            acc = product(acc, mono_elem(a.tag(), lm));
        }
        out += c.conj() * acc;
    }
    return out;
}

TensorElement adjoint_action(const AlgebraElement& a) {
    TensorElement d2 = coproduct2(a);
    TensorElement alt = coproduct_leg(coproduct(a), 1);
    if (d2 != alt) throw Error("coproduct is not coassociative");
    TensorElement out({a.tag(), a.tag()});
    for (const auto& [k, c] : d2.terms()) {
        AlgebraElement sa = antipode_monomial(a.tag(), k[0]);
        AlgebraElement right = mul_monomial_right(sa, k[2]);
        for (const auto& [m, mc] : right.terms()) out.add_term({k[1], m}, c * mc);
    }
    return out;
}

AlgebraElement multiply_out(const TensorElement& t) {
    for (std::size_t l = 1; l < t.legs(); ++l)
        if (t.tags()[l] != t.tags()[0])
            throw MixedAlgebra("cannot multiply legs of different algebras");
    AlgebraElement out(t.tags().empty() ? AlgebraTag{} : t.tags()[0]);
    for (const auto& [k, c] : t.terms()) {
        AlgebraElement acc = mono_elem(t.tags()[0], k[0]);
        for (std::size_t l = 1; l < k.size(); ++l)
            acc = mul_monomial_right(acc, k[l]);
        out += c * acc;
    }
    return out;
}

AlgebraElement counit_leg(const TensorElement& t, std::size_t leg) {
    if (t.legs() != 2) throw Error("counit_leg expects a 2-leg tensor");
    std::size_t other = 1 - leg;
    AlgebraElement out(t.tags()[other]);
    for (const auto& [k, c] : t.terms()) {
        Scalar e = counit_monomial(t.tags()[leg], k[leg]);
        if (e.is_zero()) continue;
        out.add_term(k[other], c * e);
    }
    return out;
}

TensorElement antipode_leg(const TensorElement& t, std::size_t leg) {
    TensorElement out(t.tags());
    for (const auto& [k, c] : t.terms()) {
        AlgebraElement s = antipode_monomial(t.tags()[leg], k[leg]);
        for (const auto& [m, mc] : s.terms()) {
            TensorElement::Key key = k;
            key[leg] = m;
            out.add_term(key, c * mc);
        }
    }
    return out;
}

} // namespace kappa
