#pragma once

#include <map>
#include <string>

#include "siegel/exact/poly.hpp"

namespace siegel {

// c + sum_j a_j * sym_j with rational a_j, c
class Affine {
public:
    Affine() = default;
    Affine(long c) : c_(c) {}
    Affine(mpq_class c) : c_(std::move(c)) {}
    static Affine sym(const std::string& name, mpq_class coef = 1);
    static Affine from_poly(const Poly& p);  // throws if not affine with rational coefficients

    const mpq_class& constant() const { return c_; }
    mpq_class coef(const std::string& name) const;
    const std::map<std::string, mpq_class>& coefs() const { return a_; }
    bool is_constant() const { return a_.empty(); }

    Affine operator-() const;
    Affine& operator+=(const Affine& o);
    Affine& operator-=(const Affine& o) { return *this += -o; }
    friend Affine operator+(Affine a, const Affine& b) { return a += b; }
    friend Affine operator-(Affine a, const Affine& b) { return a -= b; }
    friend Affine operator*(const mpq_class& q, const Affine& a);
    friend bool operator==(const Affine& a, const Affine& b) { return a.c_ == b.c_ && a.a_ == b.a_; }
    friend bool operator!=(const Affine& a, const Affine& b) { return !(a == b); }
    friend bool operator<(const Affine& a, const Affine& b);

    Affine with_constant(mpq_class c) const;
    Affine subs(const std::string& name, const Affine& value) const;
    Poly to_poly(RegPtr reg = Registry::standard()) const;
    double eval(const std::map<std::string, double>& values) const;

    std::string str() const;

private:
    std::map<std::string, mpq_class> a_;
    mpq_class c_{0};
};

mpq_class floor_q(const mpq_class& q);

}  // namespace siegel
