#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "siegel/exact/affine.hpp"
#include "siegel/exact/poly.hpp"

namespace siegel::half {

// index pair codes: 0 = (1,1), 1 = (1,2), 2 = (2,2)
using Jet = std::vector<std::uint8_t>;  // sorted multiset of derivative indices of h
std::string jet_str(const Jet& j);

// poly * det(Y)^detExp * h_jet * exp(2 pi i tr(TZ))^expPow
struct HalfTerm {
    Poly poly;
    Affine detExp;
    Jet jet;
    int expPow = 0;
    bool hasH = false;  // jet present (possibly h itself, with empty jet)
};

class HalfExpr {
public:
    HalfExpr() = default;
    HalfExpr(const Poly& p);
    static HalfExpr term(const Poly& p, const Affine& detExp = Affine(), int expPow = 0);
    static HalfExpr h(const Jet& jet = {}, const Poly& p = Poly(1));  // derivative of the formal holomorphic h
    static HalfExpr det_power(const Affine& e);
    static HalfExpr exp_seed();

    const std::vector<HalfTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend HalfExpr operator+(const HalfExpr& a, const HalfExpr& b);
    friend HalfExpr operator-(const HalfExpr& a, const HalfExpr& b);
    friend HalfExpr operator*(const HalfExpr& a, const HalfExpr& b);
    friend HalfExpr operator*(const Poly& c, const HalfExpr& a);
    friend bool operator==(const HalfExpr& a, const HalfExpr& b) { return a.str() == b.str(); }

    HalfExpr subs(const std::string& var, const Poly& value) const;  // in poly and exponents

    // one term per line: poly | det^e | jet | exp^n
    std::string str() const;
    static HalfExpr parse(const std::string& text);

    static HalfExpr canonical(std::vector<HalfTerm> raw);

private:
    std::vector<HalfTerm> terms_;
};

Poly detY();    // y11*y22 - y12^2
Poly detT();    // t11*t22 - t12^2
Poly trYT();    // y11*t11 + 2*y12*t12 + y22*t22
Poly adjY(int code);  // det(Y) * (Y^-1)_ij
Poly tvar(int code);
Poly yvar(int code);

int code(int i, int j);

// weighted entries 1/2 (1 + delta_ij) d/dZ_ij etc.
HalfExpr dY(const HalfExpr& e, int code);  // Y-dependence only; rejects exp and h
HalfExpr dZ(const HalfExpr& e, int code);
HalfExpr dZbar(const HalfExpr& e, int code);

enum class Op { dZ, dZbar, dY };
HalfExpr apply(Op op, const HalfExpr& e, int code);
HalfExpr det2(Op op, const HalfExpr& e);  // op11 op22 - op12 op12

struct Sym2 {
    HalfExpr a11, a12, a22;
    const HalfExpr& at(int code) const { return code == 0 ? a11 : code == 1 ? a12 : a22; }
};
Sym2 gradient(Op op, const HalfExpr& e);
HalfExpr cap2(const Sym2& a, const Sym2& b);  // A11 B22 + A22 B11 - A12 B21 - A21 B12
Sym2 inverse_Y();
Sym2 matrix_T();

// -4 det(Y)^-(k-1/2) det(dZ) (det(Y)^(k-1/2) e)
HalfExpr delta_plus2(const HalfExpr& e, const Affine& weight);
// -4 det(Y)^(5/2) det(dZbar) (det(Y)^(-1/2) e)
HalfExpr delta_minus2(const HalfExpr& e);

// b(T,Y) exp-term in the displayed form, det(T) expanded in the t entries
HalfExpr fourier_coeff_display(const Affine& k);
// 1/2 det^-1 h + c det^-1 tr(Y dZ h) - 4 det(dZ) h
HalfExpr weight_one_display(const Poly& middle);

}  // namespace siegel::half
