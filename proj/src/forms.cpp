#include "kappa/forms.hpp"

#include <sstream>
#include <unordered_map>

#include "kappa/render.hpp"

namespace kappa {

namespace {

constexpr int kMatPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

void require_p4(AlgebraTag tag) {
    if (tag.kind != AlgebraKind::Poincare || tag.n != 4)
        throw Error("the invariant-form calculus requires the 4-dimensional Poincare algebra");
}

} // namespace

int form_mat_index(int mu, int nu) {
    for (int p = 0; p < 6; ++p)
        if (kMatPairs[p][0] == mu && kMatPairs[p][1] == nu) return p;
    throw Error("bad antisymmetric index pair");
}

std::pair<int, int> form_mat_pair(int sym) {
    return {kMatPairs[sym][0], kMatPairs[sym][1]};
}

FormRef mat_upup(int mu, int nu) {
    if (mu == nu) return {};
    if (mu < nu) return {form_mat_index(mu, nu), 1};
    return {form_mat_index(nu, mu), -1};
}

FormRef mat_updown(int mu, int nu) {
    FormRef r = mat_upup(mu, nu);
    r.sign *= metric_sign(nu);
    return r;
}

FormRef mat_downup(int mu, int nu) {
    FormRef r = mat_upup(mu, nu);
    r.sign *= metric_sign(mu);
    return r;
}

FormRef mat_downdown(int mu, int nu) {
    FormRef r = mat_upup(mu, nu);
    r.sign *= metric_sign(mu) * metric_sign(nu);
    return r;
}

std::string form_symbol_name(int sym) {
    std::ostringstream os;
    if (sym < 6) {
        os << "w[" << kMatPairs[sym][0] << "," << kMatPairs[sym][1] << "]";
    } else if (sym < 10) {
        os << "w[" << sym - 6 << "]";
    } else if (sym == kFormScal) {
        os << "w";
    } else {
        os << "pi[" << sym - 11 << "]";
    }
    return os.str();
}

void OneForm::add(int sym, const AlgebraElement& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(sym, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void OneForm::add_ref(const FormRef& ref, const AlgebraElement& coeff) {
    if (ref.is_zero()) return;
    add(ref.sym, ref.sign == 1 ? coeff : Scalar(ref.sign) * coeff);
}

void OneForm::add_ref(const FormRef& ref, const Scalar& coeff) {
    if (ref.is_zero()) return;
    add_ref(ref, a_scalar(tag_, coeff));
}

AlgebraElement OneForm::coeff(int sym) const {
    auto it = terms_.find(sym);
    return it == terms_.end() ? AlgebraElement(tag_) : it->second;
}

OneForm OneForm::operator-() const {
    OneForm r(tag_);
    for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
    return r;
}

OneForm& OneForm::operator+=(const OneForm& o) {
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

OneForm& OneForm::operator-=(const OneForm& o) {
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
}

OneForm& OneForm::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, coeff] : terms_) coeff *= c;
    return *this;
}

OneForm left_multiply(const AlgebraElement& a, const OneForm& u) {
    OneForm r(u.tag());
    for (const auto& [s, c] : u.terms()) r.add(s, product(a, c));
    return r;
}

OneForm form_generator_commutator(AlgebraTag tag, bool g_is_lambda, int g1, int g2, int sym) {
    require_p4(tag);
    OneForm out(tag);
    const Scalar iq = Scalar::iq(1, 1, 1, 1);
    const Scalar four_q2 = Scalar(4) * Scalar::q(2);
    const Scalar three_q2 = Scalar(3) * Scalar::q(2);
    const Scalar sixth = Scalar::of(1, 6);

    if (sym < 6) {
        // antisymmetric block: [L, w^{mu nu}] = 0; the coordinate case comes
        // from the mixed-index rule via w^{mu nu} = g^{nu nu} w^mu_nu
        if (g_is_lambda) return out;
        auto [mu, nu] = form_mat_pair(sym);
        const int alpha = g1;
        const int gnn = metric_sign(nu);
        // [x^a, w^mu_nu] with the overall g^{nu nu} conversion
        if (nu == 0) {
            for (int rho = 0; rho < 4; ++rho)
                out.add_ref(mat_upup(mu, rho),
                            Scalar(-gnn) * iq * gen_lambda(tag, alpha, rho));
        }
        if (mu == 0) {
            for (int rho = 0; rho < 4; ++rho)
                out.add_ref(mat_updown(rho, nu),
                            Scalar(-gnn) * iq * gen_lambda(tag, alpha, rho));
        }
        out.add_ref(mat_updown(mu, 0), Scalar(gnn) * iq * gen_lambda(tag, alpha, nu));
        out.add_ref(mat_updown(0, nu), Scalar(gnn) * iq * lambda_upup(tag, alpha, mu));
        for (int rho = 0; rho < 4; ++rho)
            for (int gam = 0; gam < 4; ++gam) {
                int e = eps4(mu, nu, rho, gam, true, false, true, true);
                if (e == 0) continue;
                out.add_ref(pi_down(gam),
                            Scalar(-gnn * e) * sixth * gen_lambda(tag, alpha, rho));
            }
        return out;
    }
    if (sym < 10) {
        const int alpha = sym - 6;
        if (g_is_lambda) {
            const int mu = g1, nu = g2;
            if (nu == 0) {
                for (int rho = 0; rho < 4; ++rho)
                    out.add_ref(mat_upup(rho, alpha), -(iq * gen_lambda(tag, mu, rho)));
            }
            out.add_ref(mat_updown(alpha, nu), -(iq * gen_lambda(tag, mu, 0)));
            for (int rho = 0; rho < 4; ++rho)
                for (int gam = 0; gam < 4; ++gam) {
                    int e = eps4(rho, nu, alpha, gam, true, false, true, true);
                    if (e == 0) continue;
                    out.add_ref(pi_down(gam), Scalar(-e) * sixth * gen_lambda(tag, mu, rho));
                }
            return out;
        }
        const int mu = g1;
        out.add_ref(scal(), Scalar::of(-1, 4) * lambda_upup(tag, mu, alpha));
        out.add_ref(vec_up(0), iq * lambda_upup(tag, mu, alpha));
        if (alpha == 0) {
            for (int beta = 0; beta < 4; ++beta)
                out.add_ref(vec_up(beta), -(iq * gen_lambda(tag, mu, beta)));
        }
        return out;
    }
    if (sym == kFormScal) {
        if (g_is_lambda) {
            const int mu = g1, nu = g2;
            for (int rho = 0; rho < 4; ++rho)
                out.add_ref(mat_updown(rho, nu), four_q2 * gen_lambda(tag, mu, rho));
        } else {
            const int mu = g1;
            for (int rho = 0; rho < 4; ++rho)
                out.add_ref(vec_up(rho), four_q2 * gen_lambda(tag, mu, rho));
        }
        return out;
    }
    // pi block
    if (g_is_lambda) return out;
    const int alpha = g1;
    const int m = sym - 11;
    for (int beta = 0; beta < 4; ++beta)
        for (int rho = 0; rho < 4; ++rho)
            for (int tau = 0; tau < 4; ++tau) {
                int e = eps4_lower(m, beta, rho, tau);
                if (e == 0) continue;
                out.add_ref(mat_upup(rho, tau), Scalar(e) * three_q2 * lambda_upup(tag, alpha, beta));
            }
    if (m == 0) {
        for (int beta = 0; beta < 4; ++beta)
            out.add_ref(pi_down(beta), -(iq * lambda_upup(tag, alpha, beta)));
    }
    out.add_ref(pi_down(0), iq * gen_lambda(tag, alpha, m));
    return out;
}

namespace {

struct SymMonoKey {
    int sym;
    Monomial m;
    bool operator==(const SymMonoKey& o) const { return sym == o.sym && m == o.m; }
};

struct SymMonoHash {
    std::size_t operator()(const SymMonoKey& k) const {
        return k.m.hash() * 31 + static_cast<std::size_t>(k.sym);
    }
};

// first generator of a monomial in normal order; remainder in `rest`
bool split_first_generator(const Monomial& m, bool& is_lambda, int& g1, int& g2, int n,
                           Monomial& rest) {
    if (!m.lam.empty()) {
        is_lambda = true;
        const Factor f = m.lam.front();
        g1 = f.id / n;
        g2 = f.id % n;
        rest = m;
        if (f.exp == 1) rest.lam.erase(rest.lam.begin());
        else rest.lam.front().exp--;
        return true;
    }
    if (!m.xs.empty()) {
        is_lambda = false;
        const Factor f = m.xs.front();
        g1 = f.id;
        g2 = -1;
        rest = m;
        if (f.exp == 1) rest.xs.erase(rest.xs.begin());
        else rest.xs.front().exp--;
        return true;
    }
    return false;
}

AlgebraElement single_generator(AlgebraTag tag, bool is_lambda, int g1, int g2) {
    return is_lambda ? gen_lambda(tag, g1, g2) : gen_x(tag, g1);
}

} // namespace

OneForm symbol_times_monomial(AlgebraTag tag, int sym, const Monomial& m) {
    require_p4(tag);
    static std::unordered_map<SymMonoKey, OneForm, SymMonoHash> memo;
    SymMonoKey key{sym, m};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    OneForm out(tag);
    bool is_lambda;
    int g1, g2;
    Monomial rest;
    if (!split_first_generator(m, is_lambda, g1, g2, tag.n, rest)) {
        out.add(sym, a_unit(tag));
    } else {
        // f (g rest) = g (f rest) - [g, f] rest
        AlgebraElement g = single_generator(tag, is_lambda, g1, g2);
        OneForm inner = symbol_times_monomial(tag, sym, rest);
        out += left_multiply(g, inner);
        OneForm comm = form_generator_commutator(tag, is_lambda, g1, g2, sym);
        for (const auto& [fsym, c] : comm.terms()) {
            OneForm moved = symbol_times_monomial(tag, fsym, rest);
            out -= left_multiply(c, moved);
        }
    }
    memo.emplace(std::move(key), out);
    return out;
}

OneForm form_times_element(const OneForm& u, const AlgebraElement& a) {
    OneForm out(u.tag());
    for (const auto& [sym, cu] : u.terms()) {
        OneForm tmp(u.tag());
        for (const auto& [m, ca] : a.terms()) {
            OneForm moved = symbol_times_monomial(u.tag(), sym, m);
            moved *= ca;
            tmp += moved;
        }
        out += left_multiply(cu, tmp);
    }
    return out;
}

OneForm move_coefficient_left(int sym, const AlgebraElement& a) {
    OneForm u(a.tag());
    u.add(sym, a_unit(a.tag()));
    return form_times_element(u, a);
}

namespace {

OneForm d_generator(AlgebraTag tag, bool is_lambda, int g1, int g2) {
    OneForm out(tag);
    if (is_lambda) {
        // d L^a_nu = L^a_mu w^mu_nu
        for (int mu = 0; mu < 4; ++mu)
            out.add_ref(mat_updown(mu, g2), gen_lambda(tag, g1, mu));
    } else {
        for (int mu = 0; mu < 4; ++mu)
            out.add_ref(vec_up(mu), gen_lambda(tag, g1, mu));
    }
    return out;
}

} // namespace

OneForm d_monomial(AlgebraTag tag, const Monomial& m) {
    require_p4(tag);
    static std::unordered_map<Monomial, OneForm, MonomialHash> memo;
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;

    OneForm out(tag);
    bool is_lambda;
    int g1, g2;
    Monomial rest;
    if (split_first_generator(m, is_lambda, g1, g2, tag.n, rest)) {
        // d(g rest) = d(g) rest + g d(rest)
        OneForm dg = d_generator(tag, is_lambda, g1, g2);
        for (const auto& [sym, c] : dg.terms()) {
            OneForm moved = symbol_times_monomial(tag, sym, rest);
            out += left_multiply(c, moved);
        }
        AlgebraElement g = single_generator(tag, is_lambda, g1, g2);
        out += left_multiply(g, d_monomial(tag, rest));
    }
    memo.emplace(m, out);
    return out;
}

OneForm d_algebra(const AlgebraElement& a) {
    OneForm out(a.tag());
    for (const auto& [m, c] : a.terms()) {
        OneForm dm = d_monomial(a.tag(), m);
        dm *= c;
        out += dm;
    }
    return out;
}

OneForm invariant_form_of(const AlgebraElement& a) {
    require_p4(a.tag());
    OneForm out(a.tag());
    TensorElement d = coproduct(a);
    for (const auto& [k, c] : d.terms()) {
        AlgebraElement s = antipode_monomial(a.tag(), k[0]);
        OneForm dm = d_monomial(a.tag(), k[1]);
        dm *= c;
        out += left_multiply(s, dm);
    }
    return out;
}

const RightInvariantData& right_invariant_data() {
    static RightInvariantData data = [] {
        const AlgebraTag tag = poincare(4);
        RightInvariantData d;
        for (auto& u : d.eta) u = OneForm(tag);
        for (auto& row : d.inverse)
            for (auto& e : row) e = AlgebraElement(tag);

        // eta^{mu nu} = g^{nu nu'} w^beta_gamma L^mu_beta L_nu'^gamma
        for (int p = 0; p < 6; ++p) {
            auto [mu, nu] = form_mat_pair(p);
            OneForm u(tag);
            for (int beta = 0; beta < 4; ++beta)
                for (int gam = 0; gam < 4; ++gam) {
                    FormRef ref = mat_updown(beta, gam);
                    if (ref.is_zero()) continue;
                    AlgebraElement coeff =
                        product(gen_lambda(tag, mu, beta), lambda_lo_up(tag, nu, gam));
                    coeff *= Scalar(metric_sign(nu) * ref.sign);
                    u.add(ref.sym, coeff);
                }
            d.eta[p] = u;
        }
        // eta^mu = -w^beta_gamma L_rho^gamma x^rho L^mu_beta + w^beta L^mu_beta
        for (int mu = 0; mu < 4; ++mu) {
            OneForm u(tag);
            for (int beta = 0; beta < 4; ++beta) {
                for (int gam = 0; gam < 4; ++gam) {
                    FormRef ref = mat_updown(beta, gam);
                    if (ref.is_zero()) continue;
                    AlgebraElement coeff(tag);
                    for (int rho = 0; rho < 4; ++rho)
                        coeff += product(product(lambda_lo_up(tag, rho, gam), gen_x(tag, rho)),
                                         gen_lambda(tag, mu, beta));
                    OneForm single(tag);
                    single.add(ref.sym, a_scalar(tag, Scalar(ref.sign)));
                    u -= form_times_element(single, coeff);
                }
                u.add_ref(vec_up(beta), gen_lambda(tag, mu, beta));
            }
            d.eta[form_vec_index(mu)] = u;
        }
        // eta = w
        {
            OneForm u(tag);
            u.add(kFormScal, a_unit(tag));
            d.eta[kFormScal] = u;
        }
        // theta_mu = pi_nu L_mu^nu
        for (int mu = 0; mu < 4; ++mu) {
            OneForm u(tag);
            for (int nu = 0; nu < 4; ++nu) u.add_ref(pi_down(nu), lambda_lo_up(tag, mu, nu));
            d.eta[form_pi_index(mu)] = u;
        }

        // inverse change of basis
        auto& W = d.inverse;
        // antisymmetric block: w^{beta delta} over eta^{mu nu}
        for (int p = 0; p < 6; ++p) {
            auto [beta, del] = form_mat_pair(p);
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = 0; nu < 4; ++nu) {
                    FormRef ref = mat_upup(mu, nu);
                    if (ref.is_zero()) continue;
                    int sgn = metric_sign(del) * metric_sign(beta) * metric_sign(mu) *
                              metric_sign(nu) * ref.sign;
                    AlgebraElement coeff =
                        product(gen_lambda(tag, mu, beta), gen_lambda(tag, nu, del));
                    W[p][ref.sym] += Scalar(sgn) * coeff;
                }
        }
        // scalar block
        W[kFormScal][kFormScal] = a_unit(tag);
        // pi block: pi_nu = L^mu_nu theta_mu
        for (int nu = 0; nu < 4; ++nu)
            for (int mu = 0; mu < 4; ++mu)
                W[form_pi_index(nu)][form_pi_index(mu)] = gen_lambda(tag, mu, nu);
        // vector block
        for (int del = 0; del < 4; ++del) {
            std::array<AlgebraElement, kNumForms> corr;
            for (auto& e : corr) e = AlgebraElement(tag);
            for (int mu = 0; mu < 4; ++mu) {
                AlgebraElement inv_vv =
                    Scalar(metric_sign(del) * metric_sign(mu)) * gen_lambda(tag, mu, del);
                W[form_vec_index(del)][form_vec_index(mu)] += inv_vv;
                // subtract the MAT and PI components of eta^mu (its vector
                // part is exactly L^mu_beta w^beta)
                for (const auto& [sym, r] : d.eta[form_vec_index(mu)].terms()) {
                    if (sym >= 6 && sym < 10) continue;
                    corr[sym] += product(inv_vv, r);
                }
            }
            for (int sym = 0; sym < kNumForms; ++sym) {
                if (corr[sym].is_zero()) continue;
                for (int k = 0; k < kNumForms; ++k) {
                    if (W[sym][k].is_zero()) continue;
                    W[form_vec_index(del)][k] -= product(corr[sym], W[sym][k]);
                }
            }
        }
        return d;
    }();
    return data;
}

bool form_is_zero_mod_orth(const OneForm& u, const SamplePool& pool) {
    for (const auto& [sym, c] : u.terms())
        if (!is_zero_mod_orth(c, pool)) return false;
    return true;
}

std::string render_text(const OneForm& u) {
    if (u.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [sym, c] : u.terms()) {
        if (!first) os << " + ";
        os << "(" << render_text(c) << ") " << form_symbol_name(sym);
        first = false;
    }
    return os.str();
}

} // namespace kappa
