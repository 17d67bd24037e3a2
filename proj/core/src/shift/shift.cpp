#include "siegel/shift/shift.hpp"

#include <sstream>
#include <stdexcept>

#include "siegel/exact/parse.hpp"

namespace siegel::shift {

ShiftOperator ShiftOperator::identity() { return term({0, 0}, Poly(1)); }
ShiftOperator ShiftOperator::scalar(const Poly& p) { return term({0, 0}, p); }

ShiftOperator ShiftOperator::term(Shift s, const Poly& c) {
    ShiftOperator f;
    f.add(s, c);
    return f;
}

Poly ShiftOperator::coeff(Shift s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Poly(0) : it->second;
}

void ShiftOperator::add(Shift s, const Poly& c) {
    if (c.is_zero()) return;
    if (s.first < 0 || s.second < 0 || s.first % 2 || s.second % 2)
        throw std::invalid_argument("shift must be even and nonnegative: " + shift_str(s));
    auto [it, fresh] = terms_.try_emplace(s, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

ShiftOperator& ShiftOperator::operator+=(const ShiftOperator& o) {
    for (auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

ShiftOperator& ShiftOperator::operator-=(const ShiftOperator& o) {
    for (auto& [s, c] : o.terms_) add(s, -c);
    return *this;
}

ShiftOperator operator*(const Poly& p, const ShiftOperator& f) {
    ShiftOperator r;
    for (auto& [s, c] : f.terms_) r.add(s, p * c);
    return r;
}

ShiftOperator ShiftOperator::subs(const std::string& var, const Poly& value) const {
    ShiftOperator r;
    for (auto& [s, c] : terms_) r.add(s, c.subs(var, value));
    return r;
}

std::string shift_str(Shift s) { return "(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")"; }

std::string ShiftOperator::str() const {
    std::string out;
    for (auto& [s, c] : terms_) out += shift_str(s) + ": " + c.str() + "\n";
    return out;
}

ShiftOperator ShiftOperator::parse(const std::string& text) {
    ShiftOperator f;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        int a = 0, b = 0;
        std::size_t colon = line.find("): ");
        if (line[0] != '(' || colon == std::string::npos || std::sscanf(line.c_str(), "(%d,%d)", &a, &b) != 2)
            throw std::invalid_argument("malformed shift line: " + line);
        f.add({a, b}, parse_poly(line.substr(colon + 3)));
    }
    return f;
}

ShiftOperator compose(const ShiftOperator& f, const ShiftOperator& g) {
    ShiftOperator r;
    Poly u = Poly::var("u"), v = Poly::var("v");
    for (auto& [b, gc] : g.terms()) {
        std::map<std::string, Poly> sh{{"u", u + Poly(b.first)}, {"v", v + Poly(b.second)}};
        for (auto& [a, fc] : f.terms()) r.add({a.first + b.first, a.second + b.second}, gc * fc.subs(sh));
    }
    return r;
}

ShiftOperator commutator(const ShiftOperator& f, const ShiftOperator& g) { return compose(f, g) - compose(g, f); }

Poly s1() { return P("(v - 2*u - 1)/2"); }
Poly s2() { return P("(u - 1)/2"); }
Poly expand_s(const Poly& p) { return p.subs({{"s1", s1()}, {"s2", s2()}}); }

const char* table_name(Table t) { return t == Table::Literal ? "literal" : "repaired"; }

namespace {

ShiftOperator table(const std::vector<std::pair<Shift, const char*>>& rows) {
    ShiftOperator f;
    for (auto& [s, text] : rows) f.add(s, expand_s(P(text)));
    return f;
}

}  // namespace

ShiftOperator casimir_rule_c1() {
    return table({{{0, 0}, "4*(s1^2 + 2*s1*s2 + 2*s2^2 + 2*s1 + 3*s2)"},
                  {{0, 2}, "-16*pi*(s1 + s2)"},
                  {{2, 0}, "-8*tau*s1*(s1 - 1)"},
                  {{2, 2}, "32*pi*tau*s1"}});
}

ShiftOperator casimir_rule_c2(Table t) {
    std::vector<std::pair<Shift, const char*>> rows = {
        {{0, 0}, "17*u^4 + 2*v^4 - 12*u*v^3 + 30*u^2*v^2 - 36*u^3*v + 15*u^2 + 6*v^2 - 18*u*v - 32"},
        {{0, 4}, "256*pi^2*(s1 + s2)*(s1 + s2 + 1)"},
        {{0, 2}, "-128*pi*(s1 + s2)*((s1 + s2)^2 + 3*(s1 + s2) + 23/8)"},
        {{4, 0}, "32*tau^2*s1*(s1 - 1)*(s1 - 2)*(s1 - 3)"},
        {{4, 2}, "-256*pi*tau^2*s1*(s1 - 1)*(s1 - 2)"},
        {{2, 0}, "-16*tau*s1*(s1 - 1)*(7*u^2 + 3*v^2 - 9*u*v - u + 7/2)"},
        {{4, 4}, "512*pi^2*tau^2*s1*(s1 - 1)"},
        {{2, 2}, "-64*pi*tau*s1*(4*u^2 - 3*u*v - 10*u + 9*v - 8)"},
        {{2, 4}, "-256*pi^2*tau*(s1 + s2)*(4*s1 + 2*s2 + 1)"}};
    if (t == Table::Repaired) {
        for (auto& [s, text] : rows) {
            if (s == Shift{0, 0}) text = "2*u^4 - 4*u^3*v + 6*u^2*v^2 + 6*u^2 - 4*u*v^3 - 6*u*v + v^4 + 3*v^2 - 32";
            if (s == Shift{2, 0}) text = "-2*tau*(2*u - v + 1)*(2*u - v + 3)*(2*u^2 - 2*u*v + 4*u + 2*v^2 - 2*v + 7)";
            if (s == Shift{2, 2}) text = "-16*pi*tau*(2*u - v + 1)*(4*u^2 - 7*u*v + 7*u + 4*v^2 - 8*v + 5)";
        }
    }
    return table(rows);
}

ShiftOperator dplus_op(const ShiftOperator& c1, const ShiftOperator& c2, const Poly& a) {
    Poly q = a.pow(2) - Poly(1);
    ShiftOperator r = compose(c1, c1) - c2 + Poly(11) * c1 - Poly(2) * q * c1 +
                      ShiftOperator::scalar(Poly(2) * q * (a.pow(2) - Poly(4)));
    return P("1/2") * r;
}

ShiftOperator dminus_op(const ShiftOperator& c1, const ShiftOperator& c2, const Poly& b) {
    Poly q = b.pow(2) - Poly(9);
    return Poly(2) * c2 - compose(c1, c1) - Poly(34) * c1 - Poly(2) * q * c1 +
           ShiftOperator::scalar(q * (b.pow(2) - Poly(1)));
}

ShiftOperator dplus_display() {
    return table({{{4, 0}, "16*tau^2*s1*(s1 - 1)*(s1 - 2)*(s1 - 3)"},
                  {{4, 2}, "-128*pi*tau^2*s1*(s1 - 1)*(s1 - 2)"},
                  {{4, 4}, "256*pi^2*tau^2*s1*(s1 - 1)"},
                  {{2, 0}, "8*tau*s1*(s1 - 1)*(u + 1)*(v - 2)"},
                  {{2, 2}, "-32*pi*tau*s1*(6*s1*s2 + 3*s1 + 8*s2^2 - 8)"},
                  {{2, 4}, "64*pi^2*tau*(v - u - 2)*(u - 2)"}});
}

ShiftOperator dminus_display() {
    return table({{{0, 4}, "64*pi^2*(v - u)*(v - u - 2)"},
                  {{0, 2}, "32*pi*(u - 1)*(v + 1)*(v - u - 2)"},
                  {{2, 2}, "128*pi*tau*s1*(s1 - 2)*(v + 1)"},
                  {{2, 4}, "-256*pi^2*tau*(v - u - 2)^2"}});
}

ShiftOperator c2_from_dplus_display() {
    ShiftOperator c1 = casimir_rule_c1();
    Poly q = P("u^2 - 1");
    return compose(c1, c1) + Poly(11) * c1 - Poly(2) * q * c1 + ShiftOperator::scalar(Poly(2) * q * P("u^2 - 4")) -
           Poly(2) * dplus_display();
}

std::vector<std::pair<Shift, Poly>> restrict_line(const ShiftOperator& op) {
    std::vector<std::pair<Shift, Poly>> out;
    Poly line = P("2*u + 1");
    for (auto& [s, c] : op.terms()) {
        Poly r = c.subs("v", line);
        if (!r.is_zero()) out.emplace_back(s, r);
    }
    return out;
}

}  // namespace siegel::shift
