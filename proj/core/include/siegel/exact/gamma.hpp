#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "siegel/exact/affine.hpp"
#include "siegel/exact/ratfunc.hpp"

namespace siegel {

// pre * prod Gamma(num_i) / prod Gamma(den_j) * (4*pi)^fourPi * tau^detT
class GammaProduct {
public:
    GammaProduct() : pre(1) {}
    GammaProduct(RatFunc p) : pre(std::move(p)) {}
    static GammaProduct gamma(const Affine& arg);

    RatFunc pre;
    std::vector<Affine> num, den;
    Affine fourPi, detT;

    bool is_zero() const { return pre.is_zero(); }
    bool factor_free() const { return num.empty() && den.empty() && fourPi == Affine() && detT == Affine(); }

    GammaProduct inverse() const;
    GammaProduct operator*(const GammaProduct& o) const;
    GammaProduct operator*(const RatFunc& r) const;

    // shift every argument's constant into [0,1); integer exponent parts go into pre
    GammaProduct normalized() const;
    GammaProduct subs(const std::string& name, const Affine& value) const;

    bool same_shape(const GammaProduct& o) const;  // both normalized
    friend bool operator==(const GammaProduct& a, const GammaProduct& b);

    // numeric value; pi, sqrtpi are filled in, everything else must be given
    std::complex<double> eval(std::map<std::string, double> values) const;

    // pre ; Gamma[a, b] ; InvGamma[c] ; FourPi[e] ; DetT[f]
    std::string str() const;
    static GammaProduct parse(const std::string& text);

    // Gamma argument with no symbols and constant 0 stands for a pole marker Gamma(0)
};

struct GammaLimit {
    enum class Kind { Value, Pole };
    Kind kind = Kind::Value;
    int poleOrder = 0;
    GammaProduct value;  // var-free; factor-free when fully evaluated

    bool is_zero() const { return kind == Kind::Value && value.is_zero(); }
    std::string str() const;
};

// limit var -> 0 by matching prefactor zero order against Gamma poles (Gamma(a*x) ~ 1/(a*x))
GammaLimit gamma_limit(const GammaProduct& g, const std::string& var = "s");

struct GammaCase {
    std::string region;  // "k = 1" or "k >= 2"
    GammaLimit result;
};

// symbolic parameter left in the arguments: explicit cases below the threshold, generic above
std::vector<GammaCase> gamma_limit_cases(const GammaProduct& g, const std::string& param, long pmin,
                                         const std::string& var = "s");

class GammaSum {
public:
    GammaSum() = default;
    GammaSum(GammaProduct g) { add(std::move(g)); }
    void add(GammaProduct g);
    const std::vector<GammaProduct>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // single product when all terms share a normalized shape
    std::optional<GammaProduct> as_product() const;
    std::string str() const;

private:
    std::vector<GammaProduct> terms_;  // normalized, pairwise distinct shapes
};

Scalar gamma_half_integer(const mpq_class& c, int& sqrtpi_power);  // Gamma(c), c in 1/2 Z, c > 0

}  // namespace siegel
