#include "siegel/exact/scalar.hpp"

#include <stdexcept>

namespace siegel {

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero scalar");
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    return *this *= Scalar(o.re_ / n, -o.im_ / n);
}

Scalar Scalar::pow(long n) const {
    if (n < 0) return Scalar(1) / pow(-n);
    Scalar r(1), b = *this;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

std::string qstr(const mpq_class& q) { return q.get_str(); }

std::string Scalar::str() const {
    if (sgn(im_) == 0) return qstr(re_);
    std::string ip;
    if (im_ == 1) ip = "i";
    else if (im_ == -1) ip = "-i";
    else ip = qstr(im_) + "*i";
    if (sgn(re_) == 0) return ip;
    std::string s = "(" + qstr(re_);
    if (ip[0] != '-') s += "+";
    return s + ip + ")";
}

}  // namespace siegel
