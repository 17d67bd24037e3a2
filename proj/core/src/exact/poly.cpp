#include "siegel/exact/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace siegel {

Registry::Registry(std::vector<std::string> names) : names_(std::move(names)) {
    sqrtpi_ = find("sqrtpi");
    pi_ = find("pi");
    if (!pi_) sqrtpi_.reset();
}

RegPtr Registry::standard() {
    static const RegPtr reg = std::make_shared<const Registry>(std::vector<std::string>{
        "u", "v", "s1", "s2", "k", "s", "kappa", "alpha", "L1", "L2", "pi", "sqrtpi", "tau", "aT",
        "y11", "y12", "y22", "t11", "t12", "t22", "x"});
    return reg;
}

std::optional<std::size_t> Registry::find(const std::string& n) const {
    auto it = std::find(names_.begin(), names_.end(), n);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Registry::index(const std::string& n) const {
    auto i = find(n);
    if (!i) throw std::invalid_argument("unknown symbol: " + n);
    return *i;
}

static int mdeg(const Mono& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

bool GrlexDesc::operator()(const Mono& a, const Mono& b) const {
    int da = mdeg(a), db = mdeg(b);
    if (da != db) return da > db;
    return a > b;
}

Poly::Poly(const Scalar& c, RegPtr reg) : reg_(std::move(reg)) {
    if (!c.is_zero()) terms_.emplace(Mono(reg_->size(), 0), c);
}

Poly Poly::var(const std::string& name, RegPtr reg) {
    Mono m(reg->size(), 0);
    m[reg->index(name)] = 1;
    return monomial(m, Scalar(1), reg);
}

Poly Poly::monomial(const Mono& m, const Scalar& c, RegPtr reg) {
    Poly p(reg);
    p.add_term(m, c);
    return p;
}

void Poly::check_registry(const Poly& o) const {
    if (!reg_->same(*o.reg_)) throw std::invalid_argument("symbol registry mismatch");
}

void Poly::add_term(const Mono& m0, const Scalar& c) {
    if (c.is_zero()) return;
    const Mono* mp = &m0;
    Mono red;
    Scalar cc = c;
    if (auto sp = reg_->sqrtpi(); sp && m0[*sp] >= 2) {
        red = m0;
        red[*reg_->pi()] += red[*sp] / 2;
        red[*sp] %= 2;
        mp = &red;
    }
    auto [it, fresh] = terms_.try_emplace(*mp, cc);
    if (!fresh) {
        it->second += cc;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mdeg(terms_.begin()->first) == 0);
}

Scalar Poly::constant_value() const {
    auto it = terms_.find(Mono(reg_->size(), 0));
    return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Poly::leading_coeff() const {
    if (terms_.empty()) return Scalar(0);
    return terms_.begin()->second;
}

const Mono& Poly::leading_mono() const {
    if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
    return terms_.begin()->first;
}

int Poly::total_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, mdeg(m));
    return d;
}

int Poly::degree_in(std::size_t var) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max<int>(d, m[var]);
    return d;
}

int Poly::low_degree_in(std::size_t var) const {
    int d = -1;
    for (auto& [m, c] : terms_)
        if (d < 0 || m[var] < d) d = m[var];
    return d;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_registry(o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_registry(o);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_registry(b);
    Poly r(a.reg_);
    Mono m(a.reg_->size());
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    a.check_registry(b);
    return a.terms_ == b.terms_;
}

Poly Poly::pow(unsigned n) const {
    Poly r(Scalar(1), reg_), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

Poly Poly::coeff(std::size_t var, int p) const {
    Poly r(reg_);
    for (auto& [m, c] : terms_)
        if (m[var] == p) {
            Mono mm = m;
            mm[var] = 0;
            r.add_term(mm, c);
        }
    return r;
}

Poly Poly::subs(std::size_t var, const Poly& value) const {
    check_registry(value);
    int d = degree_in(var);
    std::vector<Poly> pw;
    pw.reserve(d + 1);
    pw.emplace_back(Scalar(1), reg_);
    for (int i = 1; i <= d; ++i) pw.push_back(pw.back() * value);
    Poly r(reg_);
    for (auto& [m, c] : terms_) {
        Mono mm = m;
        int e = mm[var];
        mm[var] = 0;
        if (e == 0) r.add_term(mm, c);
        else r += monomial(mm, c, reg_) * pw[e];
    }
    return r;
}

Poly Poly::subs(const std::map<std::string, Poly>& values) const {
    std::vector<std::pair<std::size_t, const Poly*>> vs;
    for (auto& [n, p] : values) {
        check_registry(p);
        vs.emplace_back(reg_->index(n), &p);
    }
    Poly r(reg_);
    for (auto& [m, c] : terms_) {
        Mono mm = m;
        Poly t(reg_);
        for (auto& [i, p] : vs) mm[i] = 0;
        t = monomial(mm, c, reg_);
        for (auto& [i, p] : vs)
            if (m[i]) t = t * p->pow(m[i]);
        r += t;
    }
    return r;
}

Poly Poly::derivative(std::size_t var) const {
    Poly r(reg_);
    for (auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono mm = m;
        mm[var] -= 1;
        r.add_term(mm, c * Scalar(static_cast<long>(m[var])));
    }
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    check_registry(d);
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly q(reg_), r = *this;
    const Mono& ld = d.leading_mono();
    const Scalar& lc = d.leading_coeff();
    Mono t(reg_->size());
    while (!r.is_zero()) {
        const Mono& lr = r.leading_mono();
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (lr[i] < ld[i]) return std::nullopt;
            t[i] = lr[i] - ld[i];
        }
        Poly term = monomial(t, r.leading_coeff() / lc, reg_);
        q += term;
        r -= term * d;
    }
    return q;
}

Poly Poly::conj() const {
    Poly r(reg_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
    return r;
}

std::complex<double> Poly::eval(const std::map<std::string, std::complex<double>>& values) const {
    std::vector<std::complex<double>> v(reg_->size(), 0.0);
    std::vector<bool> have(reg_->size(), false);
    for (auto& [n, x] : values)
        if (auto i = reg_->find(n)) {
            v[*i] = x;
            have[*i] = true;
        }
    std::complex<double> s = 0;
    for (auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!have[i]) throw std::invalid_argument("no value for symbol " + reg_->name(i));
            t *= std::pow(v[i], static_cast<int>(m[i]));
        }
        s += t;
    }
    return s;
}

std::string mono_str(const Registry& reg, const Mono& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += "*";
        s += reg.name(i);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        std::string ms = mono_str(*reg_, m);
        Scalar a = c;
        bool neg = false;
        if (a.is_real() && sgn(a.re()) < 0) {
            neg = true;
            a = -a;
        } else if (sgn(a.re()) == 0 && sgn(a.im()) < 0) {
            neg = true;
            a = -a;
        }
        std::string cs;
        if (ms.empty()) cs = a.str();
        else if (a.is_one()) cs = ms;
        else cs = a.str() + "*" + ms;
        if (first) out = (neg ? "-" : "") + cs;
        else out += (neg ? " - " : " + ") + cs;
        first = false;
    }
    return out;
}

}  // namespace siegel
