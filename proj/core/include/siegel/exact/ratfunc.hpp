#pragma once

#include <string>

#include "siegel/exact/poly.hpp"

namespace siegel {

// num/den with monic den (leading coefficient 1). Equality by cross-multiplication.
class RatFunc {
public:
    RatFunc() : RatFunc(Poly()) {}
    RatFunc(Poly num);
    RatFunc(Poly num, Poly den);
    RatFunc(long c) : RatFunc(Poly(c)) {}
    RatFunc(const Scalar& c) : RatFunc(Poly(c)) {}

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const RegPtr& registry() const { return num_.registry(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_constant(); }
    Poly as_poly() const;  // throws unless the denominator is 1

    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc pow(int n) const;
    RatFunc subs(const std::string& var, const RatFunc& value) const;
    RatFunc subs(const std::string& var, const Poly& value) const;

    std::complex<double> eval(const std::map<std::string, std::complex<double>>& values) const {
        return num_.eval(values) / den_.eval(values);
    }

    std::string str() const;

private:
    void normalize();
    Poly num_, den_;
};

}  // namespace siegel
