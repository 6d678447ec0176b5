#include "kappa/element.hpp"

namespace kappa {

void AlgebraElement::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar AlgebraElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(tag_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (!o.terms_.empty() && !terms_.empty()) check_same_tag(o);
    if (terms_.empty() && !o.terms_.empty()) tag_ = o.tag_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    if (!o.terms_.empty() && !terms_.empty()) check_same_tag(o);
    if (terms_.empty() && !o.terms_.empty()) tag_ = o.tag_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

void TensorElement::add_term(const Key& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator-() const {
    TensorElement r(tags_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    if (terms_.empty() && tags_.empty()) tags_ = o.tags_;
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    if (terms_.empty() && tags_.empty()) tags_ = o.tags_;
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, coeff] : terms_) coeff *= c;
    return *this;
}

AlgebraElement TensorElement::leg_element(const Key& key, std::size_t leg) const {
    AlgebraElement e(tags_.at(leg));
    e.add_term(key.at(leg), Scalar(1));
    return e;
}

} // namespace kappa
