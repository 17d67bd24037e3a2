#include "siegel/exact/affine.hpp"

#include <stdexcept>

namespace siegel {

mpq_class floor_q(const mpq_class& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return mpq_class(f);
}

Affine Affine::sym(const std::string& name, mpq_class coef) {
    Affine a;
    if (sgn(coef) != 0) a.a_[name] = std::move(coef);
    return a;
}

Affine Affine::from_poly(const Poly& p) {
    Affine a;
    const Registry& reg = *p.registry();
    for (auto& [m, c] : p.terms()) {
        if (!c.is_real()) throw std::invalid_argument("complex affine coefficient: " + p.str());
        int deg = 0;
        std::size_t at = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) {
                deg += m[i];
                at = i;
            }
        if (deg == 0) a.c_ = c.re();
        else if (deg == 1) a.a_[reg.name(at)] = c.re();
        else throw std::invalid_argument("not affine: " + p.str());
    }
    return a;
}

mpq_class Affine::coef(const std::string& name) const {
    auto it = a_.find(name);
    return it == a_.end() ? mpq_class(0) : it->second;
}

Affine Affine::operator-() const {
    Affine r = *this;
    r.c_ = -r.c_;
    for (auto& [n, q] : r.a_) q = -q;
    return r;
}

Affine& Affine::operator+=(const Affine& o) {
    c_ += o.c_;
    for (auto& [n, q] : o.a_) {
        mpq_class& t = a_[n];
        t += q;
        if (sgn(t) == 0) a_.erase(n);
    }
    return *this;
}

Affine operator*(const mpq_class& q, const Affine& a) {
    if (sgn(q) == 0) return Affine();
    Affine r = a;
    r.c_ *= q;
    for (auto& [n, x] : r.a_) x *= q;
    return r;
}

bool operator<(const Affine& a, const Affine& b) {
    if (a.a_ != b.a_) return a.a_ < b.a_;
    return a.c_ < b.c_;
}

Affine Affine::with_constant(mpq_class c) const {
    Affine r = *this;
    r.c_ = std::move(c);
    return r;
}

Affine Affine::subs(const std::string& name, const Affine& value) const {
    auto it = a_.find(name);
    if (it == a_.end()) return *this;
    Affine r = *this;
    mpq_class q = it->second;
    r.a_.erase(name);
    return r + q * value;
}

Poly Affine::to_poly(RegPtr reg) const {
    Poly p(Scalar(c_), reg);
    for (auto& [n, q] : a_) p += Poly::var(n, reg) * Scalar(q);
    return p;
}

double Affine::eval(const std::map<std::string, double>& values) const {
    double r = c_.get_d();
    for (auto& [n, q] : a_) {
        auto it = values.find(n);
        if (it == values.end()) throw std::invalid_argument("no value for symbol " + n);
        r += q.get_d() * it->second;
    }
    return r;
}

std::string Affine::str() const { return to_poly().str(); }

}  // namespace siegel
