#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "siegel/exact/scalar.hpp"

namespace siegel {

class Registry {
public:
    explicit Registry(std::vector<std::string> names);

    // u v s1 s2 k s kappa alpha L1 L2 pi sqrtpi tau aT y11 y12 y22 t11 t12 t22 x
    static std::shared_ptr<const Registry> standard();

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::optional<std::size_t> find(const std::string& n) const;
    std::size_t index(const std::string& n) const;  // throws on unknown symbol
    bool same(const Registry& o) const { return this == &o || names_ == o.names_; }

    // sqrtpi^2 -> pi when both symbols are present
    std::optional<std::size_t> sqrtpi() const { return sqrtpi_; }
    std::optional<std::size_t> pi() const { return pi_; }

private:
    std::vector<std::string> names_;
    std::optional<std::size_t> sqrtpi_, pi_;
};

using RegPtr = std::shared_ptr<const Registry>;
using Mono = std::vector<std::int16_t>;

struct GrlexDesc {
    bool operator()(const Mono& a, const Mono& b) const;
};

// Sparse multivariate polynomial with Gaussian-rational coefficients.
// Terms iterate from the leading monomial down (graded lex, registry order).
class Poly {
public:
    using Terms = std::map<Mono, Scalar, GrlexDesc>;

    Poly() : Poly(Registry::standard()) {}
    explicit Poly(RegPtr reg) : reg_(std::move(reg)) {}
    Poly(const Scalar& c, RegPtr reg = Registry::standard());
    Poly(long c) : Poly(Scalar(c)) {}
    Poly(int c) : Poly(Scalar(c)) {}

    static Poly var(const std::string& name, RegPtr reg = Registry::standard());
    static Poly monomial(const Mono& m, const Scalar& c, RegPtr reg);

    const RegPtr& registry() const { return reg_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_value() const;  // coefficient of the empty monomial
    Scalar leading_coeff() const;
    const Mono& leading_mono() const;

    int total_degree() const;
    int degree_in(std::size_t var) const;
    int degree_in(const std::string& n) const { return degree_in(reg_->index(n)); }
    int low_degree_in(std::size_t var) const;
    bool depends_on(std::size_t var) const { return degree_in(var) > 0; }
    bool depends_on(const std::string& n) const { return depends_on(reg_->index(n)); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Scalar& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned n) const;

    // coefficient of var^p, as polynomial in the remaining symbols
    Poly coeff(std::size_t var, int p) const;
    Poly coeff(const std::string& n, int p) const { return coeff(reg_->index(n), p); }

    Poly subs(std::size_t var, const Poly& value) const;
    Poly subs(const std::string& n, const Poly& value) const { return subs(reg_->index(n), value); }
    Poly subs(const std::map<std::string, Poly>& values) const;  // simultaneous
    Poly derivative(std::size_t var) const;
    Poly derivative(const std::string& n) const { return derivative(reg_->index(n)); }

    // exact quotient if d divides *this, nullopt otherwise
    std::optional<Poly> divide_exact(const Poly& d) const;

    Poly conj() const;

    std::complex<double> eval(const std::map<std::string, std::complex<double>>& values) const;

    std::string str() const;

    void check_registry(const Poly& o) const;

private:
    void add_term(const Mono& m, const Scalar& c);
    RegPtr reg_;
    Terms terms_;
};

Poly operator*(const Poly& a, const Poly& b);
std::string mono_str(const Registry& reg, const Mono& m);

}  // namespace siegel
