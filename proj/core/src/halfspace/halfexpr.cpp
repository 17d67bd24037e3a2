#include "siegel/halfspace/halfexpr.hpp"

#include <map>
#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "siegel/exact/parse.hpp"

namespace siegel::half {

namespace {

const char* kCode[3] = {"11", "12", "22"};

using Key = std::tuple<bool, Jet, int, Affine>;

}  // namespace

int code(int i, int j) {
    if (i > j) std::swap(i, j);
    return i == 1 ? (j == 1 ? 0 : 1) : 2;
}

std::string jet_str(const Jet& j) {
    std::string s;
    for (std::size_t t = 0; t < j.size(); ++t) s += (t ? "," : "") + std::string(kCode[j[t]]);
    return s;
}

Poly detY() { return P("y11*y22 - y12^2"); }
Poly detT() { return P("t11*t22 - t12^2"); }
Poly trYT() { return P("y11*t11 + 2*y12*t12 + y22*t22"); }
Poly yvar(int c) { return Poly::var(std::string("y") + kCode[c]); }
Poly tvar(int c) { return Poly::var(std::string("t") + kCode[c]); }
Poly adjY(int c) { return c == 0 ? P("y22") : c == 1 ? P("-y12") : P("y11"); }

HalfExpr::HalfExpr(const Poly& p) { *this = term(p); }

HalfExpr HalfExpr::term(const Poly& p, const Affine& detExp, int expPow) {
    return canonical({HalfTerm{p, detExp, {}, expPow, false}});
}

HalfExpr HalfExpr::h(const Jet& jet, const Poly& p) {
    Jet j = jet;
    std::sort(j.begin(), j.end());
    return canonical({HalfTerm{p, Affine(), j, 0, true}});
}

HalfExpr HalfExpr::det_power(const Affine& e) { return term(Poly(1), e); }
HalfExpr HalfExpr::exp_seed() { return term(Poly(1), Affine(), 1); }

HalfExpr HalfExpr::canonical(std::vector<HalfTerm> raw) {
    std::map<Key, std::vector<std::pair<long, Poly>>> groups;
    for (auto& t : raw) {
        if (t.poly.is_zero()) continue;
        mpq_class c = t.detExp.constant(), n = floor_q(c);
        std::sort(t.jet.begin(), t.jet.end());
        groups[Key{t.hasH, t.jet, t.expPow, t.detExp.with_constant(c - n)}].emplace_back(n.get_num().get_si(),
                                                                                        t.poly);
    }
    HalfExpr out;
    Poly d = detY();
    for (auto& [key, parts] : groups) {
        long m = parts.front().first;
        for (auto& p : parts) m = std::min(m, p.first);
        Poly sum(0);
        for (auto& [off, p] : parts) sum += off == m ? p : p * d.pow(static_cast<unsigned>(off - m));
        if (sum.is_zero()) continue;
        while (auto q = sum.divide_exact(d)) {
            sum = *q;
            ++m;
        }
        const auto& [hasH, jet, expPow, cls] = key;
        out.terms_.push_back(HalfTerm{sum, cls + Affine(m), jet, expPow, hasH});
    }
    return out;
}

HalfExpr operator+(const HalfExpr& a, const HalfExpr& b) {
    std::vector<HalfTerm> r = a.terms_;
    r.insert(r.end(), b.terms_.begin(), b.terms_.end());
    return HalfExpr::canonical(std::move(r));
}

HalfExpr operator-(const HalfExpr& a, const HalfExpr& b) { return a + Poly(-1) * b; }

HalfExpr operator*(const Poly& c, const HalfExpr& a) {
    std::vector<HalfTerm> r = a.terms_;
    for (auto& t : r) t.poly = c * t.poly;
    return HalfExpr::canonical(std::move(r));
}

HalfExpr operator*(const HalfExpr& a, const HalfExpr& b) {
    std::vector<HalfTerm> r;
    for (auto& x : a.terms_)
        for (auto& y : b.terms_) {
            if (x.hasH && y.hasH) throw std::invalid_argument("product of two h-jets is not representable");
            Jet j = x.hasH ? x.jet : y.jet;
            r.push_back(HalfTerm{x.poly * y.poly, x.detExp + y.detExp, j, x.expPow + y.expPow, x.hasH || y.hasH});
        }
    return HalfExpr::canonical(std::move(r));
}

HalfExpr HalfExpr::subs(const std::string& var, const Poly& value) const {
    std::vector<HalfTerm> r = terms_;
    for (auto& t : r) {
        t.poly = t.poly.subs(var, value);
        if (t.detExp.coef(var) != 0) t.detExp = t.detExp.subs(var, Affine::from_poly(value));
    }
    return canonical(std::move(r));
}

std::string HalfExpr::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& t : terms_) {
        std::string line = "(" + t.poly.str() + ")";
        if (t.detExp != Affine()) line += " * det^(" + t.detExp.str() + ")";
        if (t.hasH) line += t.jet.empty() ? " * h" : " * h_{" + jet_str(t.jet) + "}";
        if (t.expPow) line += " * exp^" + std::to_string(t.expPow);
        out += line + "\n";
    }
    return out;
}

HalfExpr HalfExpr::parse(const std::string& text) {
    if (text == "0" || text.empty()) return HalfExpr();
    std::vector<HalfTerm> r;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] != '(') throw std::invalid_argument("malformed term: " + line);
        int depth = 0;
        std::size_t close = 0;
        for (std::size_t p = 0; p < line.size(); ++p) {
            if (line[p] == '(') ++depth;
            if (line[p] == ')' && --depth == 0) {
                close = p;
                break;
            }
        }
        HalfTerm t{parse_poly(line.substr(1, close - 1)), Affine(), {}, 0, false};
        std::string rest = line.substr(close + 1);
        std::size_t p = 0;
        while (p < rest.size()) {
            if (rest.compare(p, 3, " * ") != 0) throw std::invalid_argument("malformed term: " + line);
            p += 3;
            if (rest.compare(p, 5, "det^(") == 0) {
                std::size_t e = rest.find(')', p);
                t.detExp = Affine::from_poly(parse_poly(rest.substr(p + 5, e - p - 5)));
                p = e + 1;
            } else if (rest.compare(p, 4, "exp^") == 0) {
                std::size_t e = rest.find(' ', p);
                t.expPow = std::stoi(rest.substr(p + 4, e == std::string::npos ? std::string::npos : e - p - 4));
                p = e == std::string::npos ? rest.size() : e;
            } else if (rest.compare(p, 1, "h") == 0) {
                t.hasH = true;
                ++p;
                if (rest.compare(p, 2, "_{") == 0) {
                    std::size_t e = rest.find('}', p);
                    std::string js = rest.substr(p + 2, e - p - 2);
                    for (std::size_t q = 0; q < js.size(); q += 3) {
                        std::string c = js.substr(q, 2);
                        t.jet.push_back(c == "11" ? 0 : c == "12" ? 1 : 2);
                    }
                    p = e + 1;
                }
            } else {
                throw std::invalid_argument("malformed term: " + line);
            }
        }
        r.push_back(std::move(t));
    }
    return canonical(std::move(r));
}

namespace {

Poly weighted_partial(const Poly& p, int c) {
    Poly d = p.derivative("y" + std::string(kCode[c]));
    return c == 1 ? P("1/2") * d : d;
}

// weighted d/dY on the Y-dependence of one term
std::vector<HalfTerm> dY_term(const HalfTerm& t, int c) {
    std::vector<HalfTerm> r;
    HalfTerm a = t;
    a.poly = weighted_partial(t.poly, c);
    r.push_back(a);
    if (t.detExp != Affine()) {
        HalfTerm b = t;
        b.poly = t.poly * t.detExp.to_poly() * adjY(c);
        b.detExp = t.detExp - Affine(1);
        r.push_back(b);
    }
    return r;
}

}  // namespace

HalfExpr dY(const HalfExpr& e, int c) {
    std::vector<HalfTerm> r;
    for (auto& t : e.terms()) {
        if (t.hasH || t.expPow) throw std::invalid_argument("dY acts on Y-dependence only");
        auto v = dY_term(t, c);
        r.insert(r.end(), v.begin(), v.end());
    }
    return HalfExpr::canonical(std::move(r));
}

HalfExpr dZ(const HalfExpr& e, int c) {
    std::vector<HalfTerm> r;
    const Poly mi2 = P("-i/2"), tpi = P("2*pi*i");
    for (auto& t : e.terms()) {
        for (auto x : dY_term(t, c)) {
            x.poly = mi2 * x.poly;
            r.push_back(x);
        }
        if (t.expPow) {
            HalfTerm x = t;
            x.poly = Poly(t.expPow) * tpi * tvar(c) * t.poly;
            r.push_back(x);
        }
        if (t.hasH) {
            HalfTerm x = t;
            x.jet.push_back(static_cast<std::uint8_t>(c));
            r.push_back(x);
        }
    }
    return HalfExpr::canonical(std::move(r));
}

HalfExpr dZbar(const HalfExpr& e, int c) {
    std::vector<HalfTerm> r;
    const Poly pi2 = P("i/2");
    for (auto& t : e.terms())
        for (auto x : dY_term(t, c)) {
            x.poly = pi2 * x.poly;
            r.push_back(x);
        }
    return HalfExpr::canonical(std::move(r));
}

HalfExpr apply(Op op, const HalfExpr& e, int c) {
    switch (op) {
        case Op::dZ: return dZ(e, c);
        case Op::dZbar: return dZbar(e, c);
        default: return dY(e, c);
    }
}

HalfExpr det2(Op op, const HalfExpr& e) {
    return apply(op, apply(op, e, 2), 0) - apply(op, apply(op, e, 1), 1);
}

Sym2 gradient(Op op, const HalfExpr& e) { return {apply(op, e, 0), apply(op, e, 1), apply(op, e, 2)}; }

HalfExpr cap2(const Sym2& a, const Sym2& b) {
    return a.a11 * b.a22 + a.a22 * b.a11 - Poly(2) * (a.a12 * b.a12);
}

Sym2 inverse_Y() {
    Affine m1(-1);
    return {HalfExpr::term(adjY(0), m1), HalfExpr::term(adjY(1), m1), HalfExpr::term(adjY(2), m1)};
}

Sym2 matrix_T() { return {HalfExpr(tvar(0)), HalfExpr(tvar(1)), HalfExpr(tvar(2))}; }

HalfExpr delta_plus2(const HalfExpr& e, const Affine& weight) {
    Affine w = weight - Affine(mpq_class(1, 2));
    return Poly(-4) * (HalfExpr::det_power(-w) * det2(Op::dZ, HalfExpr::det_power(w) * e));
}

HalfExpr delta_minus2(const HalfExpr& e) {
    return Poly(-4) * (HalfExpr::det_power(Affine(mpq_class(5, 2))) *
                       det2(Op::dZbar, HalfExpr::det_power(Affine(mpq_class(-1, 2))) * e));
}

HalfExpr fourier_coeff_display(const Affine& k) {
    Poly kk = k.to_poly(), fp = P("4*pi"), tau = detT();
    Poly half = P("1/2");
    // (4pi)^2 aT tau (k(k-1/2)/(4pi)^2 det(TY)^-1 - (k-1/2)/(4pi) det(TY)^-1 tr(YT) + 1), det(TY) = tau det(Y)
    HalfExpr inner = HalfExpr::term(kk * (kk - half), Affine(-1)) -
                     HalfExpr::term(fp * (kk - half) * trYT(), Affine(-1)) + HalfExpr(fp.pow(2) * tau);
    return P("aT") * (inner * HalfExpr::exp_seed());
}

HalfExpr weight_one_display(const Poly& middle) {
    HalfExpr tr = HalfExpr::h({0}, yvar(0)) + HalfExpr::h({1}, Poly(2) * yvar(1)) + HalfExpr::h({2}, yvar(2));
    HalfExpr dd = HalfExpr::h({0, 2}) - HalfExpr::h({1, 1});
    return HalfExpr::det_power(Affine(-1)) * (P("1/2") * HalfExpr::h() + middle * tr) - Poly(4) * dd;
}

}  // namespace siegel::half
