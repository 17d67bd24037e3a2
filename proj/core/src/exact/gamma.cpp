#include "siegel/exact/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "siegel/exact/parse.hpp"

namespace siegel {

namespace {

bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

Poly sym(const char* n) { return Poly::var(n); }

RatFunc four_pi_pow(long n) {
    RatFunc b(Poly(4) * sym("pi"));
    return b.pow(static_cast<int>(n));
}

RatFunc tau_pow(long n) { return RatFunc(sym("tau")).pow(static_cast<int>(n)); }

}  // namespace

Scalar gamma_half_integer(const mpq_class& c, int& sqrtpi_power) {
    if (is_integer(c)) {
        if (sgn(c) <= 0) throw std::domain_error("Gamma pole at " + c.get_str());
        sqrtpi_power = 0;
        Scalar r(1);
        for (long j = 2; j < c.get_num().get_si(); ++j) r *= Scalar(j);
        return r;
    }
    mpq_class two_c = 2 * c;
    if (!is_integer(two_c)) throw std::domain_error("Gamma argument outside 1/2 Z: " + c.get_str());
    sqrtpi_power = 1;
    Scalar r(1);
    mpq_class x(1, 2);
    if (c > x) {
        for (; x < c; x += 1) r *= Scalar(x);
    } else {
        for (; x > c; x -= 1) r /= Scalar(x - 1);
    }
    return r;
}

GammaProduct GammaProduct::gamma(const Affine& arg) {
    GammaProduct g;
    g.num.push_back(arg);
    return g;
}

GammaProduct GammaProduct::inverse() const {
    GammaProduct r;
    r.pre = RatFunc(1) / pre;
    r.num = den;
    r.den = num;
    r.fourPi = -fourPi;
    r.detT = -detT;
    return r;
}

GammaProduct GammaProduct::operator*(const GammaProduct& o) const {
    GammaProduct r = *this;
    r.pre *= o.pre;
    r.num.insert(r.num.end(), o.num.begin(), o.num.end());
    r.den.insert(r.den.end(), o.den.begin(), o.den.end());
    r.fourPi += o.fourPi;
    r.detT += o.detT;
    return r;
}

GammaProduct GammaProduct::operator*(const RatFunc& r) const {
    GammaProduct g = *this;
    g.pre *= r;
    return g;
}

GammaProduct GammaProduct::normalized() const {
    GammaProduct r;
    r.pre = pre;
    if (pre.is_zero()) return r;
    std::vector<Affine> N, D;
    auto process = [&](const Affine& a, bool in_num) {
        auto apply = [&](const RatFunc& f, bool multiply) {
            r.pre = multiply ? r.pre * f : r.pre / f;
        };
        const mpq_class& c = a.constant();
        if (a.is_constant()) {
            if (is_integer(c) && sgn(c) <= 0) {
                // Gamma(-m) = Gamma(0) / prod_{j=1..m} (-j)
                Scalar f(1);
                for (long j = 1; j <= -c.get_num().get_si(); ++j) f *= Scalar(-j);
                apply(RatFunc(f), !in_num);
                (in_num ? N : D).push_back(Affine());
                return;
            }
            int sp = 0;
            Scalar v = gamma_half_integer(c, sp);
            Poly val = Poly(v) * (sp ? sym("sqrtpi") : Poly(1));
            apply(RatFunc(val), in_num);
            return;
        }
        mpq_class n = floor_q(c);
        Affine x = a.with_constant(c - n);
        Poly xp = x.to_poly();
        long ni = n.get_num().get_si();
        Poly prod(1);
        if (ni > 0) {
            for (long j = 0; j < ni; ++j) prod *= xp + Poly(j);
            apply(RatFunc(prod), in_num);
        } else if (ni < 0) {
            for (long j = 1; j <= -ni; ++j) prod *= xp - Poly(j);
            apply(RatFunc(prod), !in_num);
        }
        (in_num ? N : D).push_back(x);
    };
    for (auto& a : num) process(a, true);
    for (auto& a : den) process(a, false);
    for (auto it = N.begin(); it != N.end();) {
        auto jt = std::find(D.begin(), D.end(), *it);
        if (jt != D.end()) {
            D.erase(jt);
            it = N.erase(it);
        } else {
            ++it;
        }
    }
    std::sort(N.begin(), N.end());
    std::sort(D.begin(), D.end());
    r.num = std::move(N);
    r.den = std::move(D);

    mpq_class n4 = floor_q(fourPi.constant());
    r.pre *= four_pi_pow(n4.get_num().get_si());
    r.fourPi = fourPi.with_constant(fourPi.constant() - n4);
    if (r.fourPi.is_constant() && r.fourPi.constant() == mpq_class(1, 2)) {
        r.pre *= RatFunc(Poly(2) * sym("sqrtpi"));
        r.fourPi = Affine();
    }
    mpq_class nt = floor_q(detT.constant());
    r.pre *= tau_pow(nt.get_num().get_si());
    r.detT = detT.with_constant(detT.constant() - nt);
    if (r.pre.is_zero()) return GammaProduct(RatFunc(0));
    return r;
}

GammaProduct GammaProduct::subs(const std::string& name, const Affine& value) const {
    GammaProduct r;
    r.pre = pre.subs(name, value.to_poly());
    for (auto& a : num) r.num.push_back(a.subs(name, value));
    for (auto& a : den) r.den.push_back(a.subs(name, value));
    r.fourPi = fourPi.subs(name, value);
    r.detT = detT.subs(name, value);
    return r;
}

bool GammaProduct::same_shape(const GammaProduct& o) const {
    return num == o.num && den == o.den && fourPi == o.fourPi && detT == o.detT;
}

bool operator==(const GammaProduct& a, const GammaProduct& b) {
    GammaProduct x = a.normalized(), y = b.normalized();
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
    return x.same_shape(y) && x.pre == y.pre;
}

std::complex<double> GammaProduct::eval(std::map<std::string, double> values) const {
    values.emplace("pi", std::numbers::pi);
    values.emplace("sqrtpi", std::sqrt(std::numbers::pi));
    std::map<std::string, std::complex<double>> cv(values.begin(), values.end());
    std::complex<double> r = pre.eval(cv);
    for (auto& a : num) r *= std::tgamma(a.eval(values));
    for (auto& a : den) r /= std::tgamma(a.eval(values));
    r *= std::pow(4 * std::numbers::pi, fourPi.eval(values));
    if (detT != Affine()) r *= std::pow(values.at("tau"), detT.eval(values));
    return r;
}

std::string GammaProduct::str() const {
    auto list = [](const std::vector<Affine>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
        return s;
    };
    return pre.str() + " ; Gamma[" + list(num) + "] ; InvGamma[" + list(den) + "] ; FourPi[" + fourPi.str() +
           "] ; DetT[" + detT.str() + "]";
}

GammaProduct GammaProduct::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t p = 0;
    for (;;) {
        std::size_t q = text.find(" ; ", p);
        parts.push_back(text.substr(p, q == std::string::npos ? std::string::npos : q - p));
        if (q == std::string::npos) break;
        p = q + 3;
    }
    if (parts.size() != 5) throw std::invalid_argument("malformed gamma product: " + text);
    auto inner = [&](const std::string& s, const std::string& tag) {
        if (s.rfind(tag + "[", 0) != 0 || s.back() != ']') throw std::invalid_argument("expected " + tag + ": " + s);
        return s.substr(tag.size() + 1, s.size() - tag.size() - 2);
    };
    auto list = [&](const std::string& s) {
        std::vector<Affine> v;
        std::size_t b = 0;
        if (s.empty()) return v;
        for (;;) {
            std::size_t e = s.find(", ", b);
            v.push_back(Affine::from_poly(parse_poly(s.substr(b, e == std::string::npos ? std::string::npos : e - b))));
            if (e == std::string::npos) break;
            b = e + 2;
        }
        return v;
    };
    GammaProduct g;
    g.pre = parse_ratfunc(parts[0]);
    g.num = list(inner(parts[1], "Gamma"));
    g.den = list(inner(parts[2], "InvGamma"));
    g.fourPi = Affine::from_poly(parse_poly(inner(parts[3], "FourPi")));
    g.detT = Affine::from_poly(parse_poly(inner(parts[4], "DetT")));
    return g;
}

std::string GammaLimit::str() const {
    if (kind == Kind::Pole) return "pole of order " + std::to_string(poleOrder);
    if (value.factor_free()) return value.pre.str();
    return value.str();
}

GammaLimit gamma_limit(const GammaProduct& g, const std::string& var) {
    GammaProduct n = g.normalized();
    GammaLimit out;
    if (n.is_zero()) {
        out.value = GammaProduct(RatFunc(0));
        return out;
    }
    std::size_t vi = n.pre.registry()->index(var);
    int on = n.pre.num().low_degree_in(vi), od = n.pre.den().low_degree_in(vi);
    int order = on - od;
    GammaProduct v(RatFunc(n.pre.num().coeff(vi, on), n.pre.den().coeff(vi, od)));
    auto factor = [&](const Affine& a, bool in_num) {
        mpq_class alpha = a.coef(var);
        Affine r = a.subs(var, Affine());
        if (!r.is_constant()) {
            (in_num ? v.num : v.den).push_back(r);
            return;
        }
        const mpq_class& c = r.constant();
        if (sgn(c) == 0) {
            // Gamma(alpha*x) ~ 1/(alpha*x); a bare Gamma(0) counts as a simple pole
            order += in_num ? -1 : 1;
            if (sgn(alpha) != 0) v.pre = in_num ? v.pre / RatFunc(Scalar(alpha)) : v.pre * RatFunc(Scalar(alpha));
            return;
        }
        int sp = 0;
        Scalar gv = gamma_half_integer(c, sp);
        RatFunc f(Poly(gv) * (sp ? sym("sqrtpi") : Poly(1)));
        v.pre = in_num ? v.pre * f : v.pre / f;
    };
    for (auto& a : n.num) factor(a, true);
    for (auto& a : n.den) factor(a, false);
    v.fourPi = n.fourPi.subs(var, Affine());
    v.detT = n.detT.subs(var, Affine());
    if (order > 0) {
        out.value = GammaProduct(RatFunc(0));
    } else if (order < 0) {
        out.kind = GammaLimit::Kind::Pole;
        out.poleOrder = -order;
    } else {
        out.value = v.normalized();
    }
    return out;
}

std::vector<GammaCase> gamma_limit_cases(const GammaProduct& g, const std::string& param, long pmin,
                                         const std::string& var) {
    GammaProduct n = g.normalized();
    long t = pmin;
    auto bound = [&](const Affine& a) {
        mpq_class beta = a.coef(param);
        if (sgn(beta) == 0) return;
        Affine rest = a.subs(var, Affine()).subs(param, Affine());
        if (!rest.is_constant()) return;
        if (sgn(beta) < 0) throw std::domain_error("parameter enters a Gamma argument with negative slope");
        mpq_class edge = -rest.constant() / beta;
        long ta = floor_q(edge).get_num().get_si() + 1;
        t = std::max(t, ta);
    };
    for (auto& a : g.num) bound(a);
    for (auto& a : g.den) bound(a);

    std::vector<GammaCase> cases;
    for (long p = pmin; p < t; ++p)
        cases.push_back({param + " = " + std::to_string(p), gamma_limit(n.subs(param, Affine(p)), var)});
    GammaLimit generic = gamma_limit(n, var);
    for (long p = t; p < t + 64; ++p) {
        GammaLimit sp = gamma_limit(n.subs(param, Affine(p)), var);
        if (sp.kind != generic.kind || sp.is_zero() != generic.is_zero())
            cases.push_back({param + " = " + std::to_string(p), sp});
    }
    cases.push_back({param + " >= " + std::to_string(t), generic});
    return cases;
}

void GammaSum::add(GammaProduct g) {
    g = g.normalized();
    if (g.is_zero()) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
        if (it->same_shape(g)) {
            it->pre += g.pre;
            if (it->pre.is_zero()) terms_.erase(it);
            return;
        }
    terms_.push_back(std::move(g));
}

std::optional<GammaProduct> GammaSum::as_product() const {
    if (terms_.empty()) return GammaProduct(RatFunc(0));
    if (terms_.size() == 1) return terms_.front();
    return std::nullopt;
}

std::string GammaSum::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) s += (i ? "\n+ " : "") + terms_[i].str();
    return s;
}

}  // namespace siegel
