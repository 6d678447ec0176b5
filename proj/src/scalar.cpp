#include "kappa/scalar.hpp"

#include <sstream>

namespace kappa {

QPoly QPoly::q_power(int k, GaussianRational c) {
    QPoly p;
    if (c.is_zero()) return p;
    p.coeffs_.assign(k + 1, GaussianRational());
    p.coeffs_[k] = std::move(c);
    return p;
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPoly QPoly::operator-() const {
    QPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    const size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    r.coeffs_.resize(n);
    for (size_t k = 0; k < n; ++k) {
        if (k < a.coeffs_.size()) r.coeffs_[k] += a.coeffs_[k];
        if (k < b.coeffs_.size()) r.coeffs_[k] += b.coeffs_[k];
    }
    r.trim();
    return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    QPoly r;
    const size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    r.coeffs_.resize(n);
    for (size_t k = 0; k < n; ++k) {
        if (k < a.coeffs_.size()) r.coeffs_[k] += a.coeffs_[k];
        if (k < b.coeffs_.size()) r.coeffs_[k] -= b.coeffs_[k];
    }
    r.trim();
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, GaussianRational());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

QPoly QPoly::conj() const {
    QPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(c.conj());
    return r;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    rem = a;
    quot = QPoly();
    if (a.degree() < b.degree()) return;
    quot.coeffs_.assign(a.degree() - b.degree() + 1, GaussianRational());
    const GaussianRational& lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        GaussianRational c = rem.leading() / lead;
        quot.coeffs_[shift] += c;
        for (int k = 0; k <= b.degree(); ++k) {
            rem.coeffs_[k + shift] -= c * b.coeffs_[k];
        }
        rem.trim();
    }
    quot.trim();
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    QPoly r;
    r.coeffs_.reserve(coeffs_.size());
    const GaussianRational& lead = leading();
    for (const auto& c : coeffs_) r.coeffs_.push_back(c / lead);
    return r;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Scalar::Scalar(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("scalar with zero denominator");
    reduce();
}

Scalar Scalar::iq(long num, long den, int ipow, int qpow) {
    GaussianRational c = GaussianRational::of(num, den);
    switch (((ipow % 4) + 4) % 4) {
        case 1: c *= GaussianRational::i(); break;
        case 2: c = -c; break;
        case 3: c *= -GaussianRational::i(); break;
        default: break;
    }
    return Scalar(QPoly::q_power(qpow, c));
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = QPoly(GaussianRational(1));
        return;
    }
    if (den_.degree() > 0 || num_.degree() > 0) {
        QPoly g = QPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            QPoly q, r;
            QPoly::divmod(num_, g, q, r);
            num_ = std::move(q);
            QPoly::divmod(den_, g, q, r);
            den_ = std::move(q);
        }
    }
    // normalize denominator to be monic
    GaussianRational lead = den_.leading();
    if (!lead.is_one()) {
        den_ = den_.monic();
        QPoly scaled;
        auto& raw = num_.raw();
        for (auto& c : raw) c = c / lead;
    }
}

bool Scalar::is_one() const {
    return num_.degree() == 0 && den_.degree() == 0 && num_.leading().is_one();
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) { *this = o; return *this; }
    QPoly n = num_ * o.den_ + o.num_ * den_;
    QPoly d = den_ * o.den_;
    num_ = std::move(n);
    den_ = std::move(d);
    reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (o.is_zero()) return *this;
    QPoly n = num_ * o.den_ - o.num_ * den_;
    QPoly d = den_ * o.den_;
    num_ = std::move(n);
    den_ = std::move(d);
    reduce();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) { *this = Scalar(); return *this; }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero("scalar division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    reduce();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::conj() const {
    Scalar r;
    r.num_ = num_.conj();
    r.den_ = den_.conj();
    r.reduce();
    return r;
}

GaussianRational Scalar::classical_limit() const {
    GaussianRational d0 = den_.eval_at_zero();
    if (d0.is_zero()) throw NoClassicalLimit(str());
    return num_.eval_at_zero() / d0;
}

GaussianRational Scalar::eval(const GaussianRational& qval) const {
    GaussianRational n, d, p(1);
    for (const auto& c : num_.coeffs()) { n += c * p; p *= qval; }
    p = GaussianRational(1);
    for (const auto& c : den_.coeffs()) { d += c * p; p *= qval; }
    if (d.is_zero()) throw DivisionByZero("denominator vanishes at sample value");
    return n / d;
}

namespace {

void render_term(std::ostringstream& os, const GaussianRational& c, int k, bool first) {
    std::string cs = c.str();
    bool negated = false;
    if (!first) {
        if (cs.size() && cs[0] == '-' && cs.find('(') == std::string::npos) {
            os << " - ";
            cs = cs.substr(1);
            negated = true;
        } else {
            os << " + ";
        }
    }
    if (k == 0) {
        os << cs;
        return;
    }
    if (cs == "1") {
        // bare power
    } else if (cs == "-1" && !negated) {
        os << "-";
    } else {
        os << cs << "*";
    }
    os << "q";
    if (k > 1) os << "^" << k;
}

std::string poly_str(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        GaussianRational c = p.coeff(k);
        if (c.is_zero()) continue;
        render_term(os, c, k, first);
        first = false;
    }
    return os.str();
}

int nonzero_count(const QPoly& p) {
    int n = 0;
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) ++n;
    return n;
}

} // namespace

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string n = poly_str(num_);
    if (den_.degree() == 0 && den_.leading().is_one()) {
        return n;
    }
    std::string d = poly_str(den_);
    std::string ns = (nonzero_count(num_) > 1) ? "(" + n + ")" : n;
    std::string ds = (nonzero_count(den_) > 1 || den_.degree() > 0) ? "(" + d + ")" : d;
    return ns + "/" + ds;
}

namespace {

// LaTeX for a single Gaussian rational times q^k, with q^k rendered as a kappa
// power in the denominator: 3/2 i q^2 -> \frac{3i}{2\kappa^{2}}.
std::string latex_monomial(const GaussianRational& c, int k) {
    std::ostringstream num, den;
    mpq_class re = c.re(), im = c.im();
    bool neg = false;
    std::string body;
    auto part = [](const mpq_class& v, std::ostream& n, std::ostream& d, bool imag) {
        mpz_class nn = v.get_num(), dd = v.get_den();
        std::ostringstream t;
        if (nn == 1 && imag) t << "i";
        else if (nn == -1 && imag) t << "-i";
        else {
            t << nn.get_str();
            if (imag) t << "i";
        }
        n << t.str();
        if (dd != 1) d << dd.get_str();
    };
    if (im == 0) {
        neg = re < 0;
        if (neg) re = -re;
        part(re, num, den, false);
    } else if (re == 0) {
        neg = im < 0;
        if (neg) im = -im;
        part(im, num, den, true);
    } else {
        std::ostringstream t;
        t << "(" << re.get_str();
        if (im > 0) t << "+";
        t << im.get_str() << "i" << ")";
        num << t.str();
    }
    std::string n = num.str(), d = den.str();
    if (k > 0) {
        std::ostringstream kp;
        kp << "\\kappa";
        kp << "^{" << k << "}";
        d = d.empty() ? kp.str() : d + kp.str();
    }
    std::string out;
    if (d.empty()) out = n;
    else out = "\\frac{" + n + "}{" + d + "}";
    if (neg) out = "-" + out;
    return out;
}

std::string poly_latex(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        GaussianRational c = p.coeff(k);
        if (c.is_zero()) continue;
        std::string t = latex_monomial(c, k);
        if (!first) {
            if (t.size() && t[0] == '-') {
                os << " - ";
                t = t.substr(1);
            } else {
                os << " + ";
            }
        }
        os << t;
        first = false;
    }
    return os.str();
}

} // namespace

std::string Scalar::latex() const {
    if (is_zero()) return "0";
    if (den_.degree() == 0 && den_.leading().is_one()) {
        return poly_latex(num_);
    }
    return "\\frac{" + poly_latex(num_) + "}{" + poly_latex(den_) + "}";
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, char op) {
    switch (op) {
        case '+': return a + b;
        case '*': return a * b;
        case '/': return a / b;
        case 'n': return -a;
        default: throw Error("unknown scalar operation");
    }
}

} // namespace kappa
