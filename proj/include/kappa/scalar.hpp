#ifndef KAPPA_SCALAR_HPP
#define KAPPA_SCALAR_HPP

#include <vector>
#include <string>

#include "kappa/gaussian.hpp"
#include "kappa/error.hpp"

namespace kappa {

// Polynomial in the formal deformation parameter q = 1/kappa, with
// GaussianRational coefficients. Dense, low degree; no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    QPoly(GaussianRational c) { // constant
        if (!c.is_zero()) coeffs_.push_back(std::move(c));
    }
    static QPoly q_power(int k, GaussianRational c = GaussianRational(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for 0
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    GaussianRational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return GaussianRational();
        return coeffs_[k];
    }
    const GaussianRational& leading() const { return coeffs_.back(); }

    GaussianRational eval_at_zero() const { return coeff(0); }

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    QPoly conj() const; // coefficient-wise complex conjugation (q is real)

    // Euclidean division; b must be nonzero.
    static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
    static QPoly gcd(QPoly a, QPoly b); // monic gcd
    QPoly monic() const;

    void trim();
    std::vector<GaussianRational>& raw() { return coeffs_; }

private:
    std::vector<GaussianRational> coeffs_;
};

// Exact coefficient: rational function in q over the Gaussian rationals.
// Canonical form: gcd(num, den) = 1 and den monic. Equality is
// representation equality, which canonicality makes exact.
class Scalar {
public:
    Scalar() : num_(), den_(GaussianRational(1)) {}
    Scalar(long v) : num_(GaussianRational(v)), den_(GaussianRational(1)) {}
    Scalar(GaussianRational c) : num_(std::move(c)), den_(GaussianRational(1)) {}
    Scalar(QPoly num, QPoly den);
    explicit Scalar(QPoly num) : num_(std::move(num)), den_(GaussianRational(1)) {}

    static Scalar i() { return Scalar(GaussianRational::i()); }
    static Scalar q(int power = 1) { return Scalar(QPoly::q_power(power)); }
    // c * i^ipow * q^qpow, handy for building structure constants
    static Scalar iq(long num, long den, int ipow, int qpow);
    static Scalar of(long num, long den) { return Scalar(GaussianRational::of(num, den)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;
    Scalar conj() const; // complex conjugation; q fixed

    // Evaluation at q = 0; throws NoClassicalLimit if den(0) = 0.
    GaussianRational classical_limit() const;
    bool has_classical_limit() const { return !den_.eval_at_zero().is_zero(); }

    // Substitute a Gaussian-rational value for q (exact).
    GaussianRational eval(const GaussianRational& qval) const;

    std::string str() const;
    std::string latex() const;

private:
    void reduce();
    QPoly num_, den_;
};

Scalar scalar_arith(const Scalar& a, const Scalar& b, char op); // '+', '*', '/', 'n' (negate a)

} // namespace kappa

#endif
