#include "siegel/exact/ratfunc.hpp"

#include <stdexcept>

namespace siegel {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Scalar(1), num_.registry()) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    num_.check_registry(den_);
    normalize();
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Scalar(1), num_.registry());
        return;
    }
    Scalar lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Scalar inv = Scalar(1) / lc;
        num_ *= inv;
        den_ *= inv;
    }
    if (den_.is_constant()) return;
    if (auto q = num_.divide_exact(den_)) {
        num_ = std::move(*q);
        den_ = Poly(Scalar(1), num_.registry());
    }
}

Poly RatFunc::as_poly() const {
    if (!is_poly()) throw std::logic_error("not a polynomial: " + str());
    return num_;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    if (b.is_poly()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_);
    if (a.is_poly()) return RatFunc(b.num_ + a.num_ * b.den_, b.den_);
    if (auto q = a.den_.divide_exact(b.den_)) return RatFunc(a.num_ + b.num_ * *q, a.den_);
    if (auto q = b.den_.divide_exact(a.den_)) return RatFunc(b.num_ + a.num_ * *q, b.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_poly() && b.is_poly()) return RatFunc(a.num_ * b.num_);
    // cheap cancellations before multiplying out
    Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!bd.is_constant())
        if (auto q = an.divide_exact(bd)) {
            an = *q;
            bd = Poly(Scalar(1), an.registry());
        }
    if (!ad.is_constant())
        if (auto q = bn.divide_exact(ad)) {
            bn = *q;
            ad = Poly(Scalar(1), an.registry());
        }
    return RatFunc(an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return a * RatFunc(b.den_, b.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

RatFunc RatFunc::pow(int n) const {
    if (n < 0) return RatFunc(Poly(Scalar(1), registry())) / pow(-n);
    return RatFunc(num_.pow(n), den_.pow(n));
}

RatFunc RatFunc::subs(const std::string& var, const Poly& value) const {
    return RatFunc(num_.subs(var, value), den_.subs(var, value));
}

RatFunc RatFunc::subs(const std::string& var, const RatFunc& value) const {
    std::size_t i = registry()->index(var);
    int d = std::max(num_.degree_in(i), den_.degree_in(i));
    // homogenize: p(n/m) * m^d
    auto hom = [&](const Poly& p) {
        Poly r(registry());
        std::vector<Poly> pn{Poly(Scalar(1), registry())}, pm{Poly(Scalar(1), registry())};
        for (int e = 1; e <= d; ++e) {
            pn.push_back(pn.back() * value.num());
            pm.push_back(pm.back() * value.den());
        }
        for (int e = 0; e <= d; ++e) {
            Poly c = p.coeff(i, e);
            if (!c.is_zero()) r += c * pn[e] * pm[d - e];
        }
        return r;
    };
    return RatFunc(hom(num_), hom(den_));
}

std::string RatFunc::str() const {
    if (is_poly()) return num_.str();
    auto wrap = [](const Poly& p) {
        std::string s = p.str();
        return p.size() > 1 || s.find('*') != std::string::npos || s[0] == '-' ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

}  // namespace siegel
