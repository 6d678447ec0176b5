#ifndef KAPPA_ELEMENT_HPP
#define KAPPA_ELEMENT_HPP

#include <map>
#include <vector>
#include <string>

#include "kappa/monomial.hpp"
#include "kappa/scalar.hpp"
#include "kappa/error.hpp"

namespace kappa {

enum class AlgebraKind : std::uint8_t { Poincare, Minkowski };

struct AlgebraTag {
    AlgebraKind kind = AlgebraKind::Poincare;
    int n = 4;
    friend bool operator==(const AlgebraTag& a, const AlgebraTag& b) {
        return a.kind == b.kind && a.n == b.n;
    }
    friend bool operator!=(const AlgebraTag& a, const AlgebraTag& b) { return !(a == b); }
    std::string name() const {
        return (kind == AlgebraKind::Poincare ? "poincare(" : "minkowski(") + std::to_string(n) + ")";
    }
};

inline AlgebraTag poincare(int n = 4) { return AlgebraTag{AlgebraKind::Poincare, n}; }
inline AlgebraTag minkowski(int n = 4) { return AlgebraTag{AlgebraKind::Minkowski, n}; }

// Normal-form linear combination of monomials. Zero coefficients are never
// stored; addition and multiplication keep elements in normal form.
class AlgebraElement {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialLess>;

    AlgebraElement() = default;
    explicit AlgebraElement(AlgebraTag tag) : tag_(tag) {}

    const AlgebraTag& tag() const { return tag_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    void add_term(const Monomial& m, const Scalar& c);
    Scalar coefficient(const Monomial& m) const;

    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const Scalar& c);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Scalar& c) { return a *= c; }
    friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }

    // Representation equality (both sides normal forms of the same rewrite
    // system). Equality modulo the Lorentz constraints lives in lorentz.hpp.
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.tag_ == b.tag_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    void check_same_tag(const AlgebraElement& o) const {
        if (tag_ != o.tag_)
            throw MixedAlgebra("elements of " + tag_.name() + " and " + o.tag_.name() +
                               " combined without a tensor constructor");
    }

private:
    AlgebraTag tag_;
    TermMap terms_;
};

// Element of a tensor product of algebras; legs commute with one another and
// each leg is kept in normal form.
class TensorElement {
public:
    using Key = std::vector<Monomial>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            for (size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
                if (monomial_less(a[k], b[k])) return true;
                if (monomial_less(b[k], a[k])) return false;
            }
            return a.size() < b.size();
        }
    };
    using TermMap = std::map<Key, Scalar, KeyLess>;

    TensorElement() = default;
    explicit TensorElement(std::vector<AlgebraTag> tags) : tags_(std::move(tags)) {}

    const std::vector<AlgebraTag>& tags() const { return tags_; }
    std::size_t legs() const { return tags_.size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& key, const Scalar& c);

    TensorElement operator-() const;
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement& operator*=(const Scalar& c);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Scalar& c, TensorElement a) { return a *= c; }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.tags_ == b.tags_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

    // Extract the element formed by one leg of a single term.
    AlgebraElement leg_element(const Key& key, std::size_t leg) const;

private:
    std::vector<AlgebraTag> tags_;
    TermMap terms_;
};

} // namespace kappa

#endif
