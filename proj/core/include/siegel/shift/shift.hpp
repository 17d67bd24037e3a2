#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "siegel/exact/poly.hpp"

namespace siegel::shift {

using Shift = std::pair<int, int>;  // (du, dv)

// sum over shifts of coeff(u, v) * P(g, u+du, v+dv)
class ShiftOperator {
public:
    using Terms = std::map<Shift, Poly>;

    ShiftOperator() = default;
    static ShiftOperator identity();
    static ShiftOperator scalar(const Poly& p);
    static ShiftOperator term(Shift s, const Poly& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Poly coeff(Shift s) const;

    void add(Shift s, const Poly& c);
    ShiftOperator& operator+=(const ShiftOperator& o);
    ShiftOperator& operator-=(const ShiftOperator& o);
    friend ShiftOperator operator+(ShiftOperator a, const ShiftOperator& b) { return a += b; }
    friend ShiftOperator operator-(ShiftOperator a, const ShiftOperator& b) { return a -= b; }
    // coefficient-wise multiplication by a scalar in the unshifted parameters
    friend ShiftOperator operator*(const Poly& p, const ShiftOperator& f);
    friend bool operator==(const ShiftOperator& a, const ShiftOperator& b) { return a.terms_ == b.terms_; }

    ShiftOperator subs(const std::string& var, const Poly& value) const;

    // "(du,dv): coefficient" per line, shifts ascending
    std::string str() const;
    static ShiftOperator parse(const std::string& text);

private:
    Terms terms_;
};

// (f o g)_w = sum_{a+b=w} g_b(u,v) * f_a(u+b_u, v+b_v)
ShiftOperator compose(const ShiftOperator& f, const ShiftOperator& g);
ShiftOperator commutator(const ShiftOperator& f, const ShiftOperator& g);

Poly s1();  // (v - 2u - 1)/2
Poly s2();  // (u - 1)/2
Poly expand_s(const Poly& p);  // substitutes s1, s2

enum class Table { Literal, Repaired };
const char* table_name(Table t);

ShiftOperator casimir_rule_c1();
ShiftOperator casimir_rule_c2(Table t = Table::Literal);

// D+(a) = 1/2 (C1^2 - C2 + 11 C1 - 2(a^2-1) C1 + 2(a^2-1)(a^2-4))
ShiftOperator dplus_op(const ShiftOperator& c1, const ShiftOperator& c2, const Poly& a);
// D-(b) = 2 C2 - C1^2 - 34 C1 - 2(b^2-9) C1 + (b^2-9)(b^2-1)
ShiftOperator dminus_op(const ShiftOperator& c1, const ShiftOperator& c2, const Poly& b);

ShiftOperator dplus_display();
ShiftOperator dminus_display();

// C2 solved from the D+ display: C1^2 + 11 C1 - 2(u^2-1) C1 + 2(u^2-1)(u^2-4) - 2 D+
ShiftOperator c2_from_dplus_display();

// v -> 2u+1 in every coefficient, zero coefficients dropped
std::vector<std::pair<Shift, Poly>> restrict_line(const ShiftOperator& op);

std::string shift_str(Shift s);

}  // namespace siegel::shift
