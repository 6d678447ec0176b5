#include "kappa/gaussian.hpp"

#include <sstream>

#include "kappa/error.hpp"

namespace kappa {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DivisionByZero("Gaussian rational division by zero");
    mpq_class n2 = o.norm2();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n2;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n2;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::string GaussianRational::str() const {
    std::ostringstream os;
    if (is_zero()) return "0";
    if (im_ == 0) {
        os << re_;
    } else if (re_ == 0) {
        if (im_ == 1) os << "i";
        else if (im_ == -1) os << "-i";
        else os << im_ << "*i";
    } else {
        os << "(" << re_;
        if (im_ > 0) os << "+";
        if (im_ == 1) os << "i";
        else if (im_ == -1) os << "-i";
        else os << im_ << "*i";
        os << ")";
    }
    return os.str();
}

} // namespace kappa
