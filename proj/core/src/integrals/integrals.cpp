#include "siegel/integrals/integrals.hpp"

#include <stdexcept>

#include "siegel/exact/parse.hpp"

namespace siegel::integrals {

namespace {

const char* kYT[6] = {"y11", "y12", "y22", "t11", "t12", "t22"};

GammaProduct gamma2(const Affine& a) {
    GammaProduct g = GammaProduct::gamma(a) * GammaProduct::gamma(a - Affine(mpq_class(1, 2)));
    g.pre = RatFunc(P("sqrtpi"));
    return g;
}

}  // namespace

std::string InvariantIntegrand::str() const {
    std::string out;
    for (auto& t : terms)
        out += "(" + t.coeff.str() + ") * detT^(" + t.tauExp.str() + ") * det(TY)^(" + t.detExp.str() +
               ") * tr(TY)^" + std::to_string(t.trPow) + " * exp(-" + std::to_string(t.c) + "*pi*tr(TY))\n";
    return out;
}

InvariantIntegrand from_halfexpr(const half::HalfExpr& e) {
    const RegPtr& reg = Registry::standard();
    std::size_t idx[6];
    for (int j = 0; j < 6; ++j) idx[j] = reg->index(kYT[j]);
    Poly tr = half::trYT(), dty = half::detT() * half::detY();
    InvariantIntegrand out;
    for (auto& t : e.terms()) {
        if (t.hasH) throw std::invalid_argument("h-jet terms have no invariant integrand");
        if (t.expPow != 1) throw std::invalid_argument("only single exp-seed terms are supported");
        Poly p = t.poly;
        while (!p.is_zero()) {
            // largest monomial in the y, t variables alone
            Mono best;
            bool have = false;
            for (auto& [m, c] : p.terms()) {
                Mono yt(6);
                for (int j = 0; j < 6; ++j) yt[j] = m[idx[j]];
                if (!have || GrlexDesc{}(yt, best)) best = yt, have = true;
            }
            Poly coeff(0);
            for (auto& [m, c] : p.terms()) {
                bool match = true;
                for (int j = 0; j < 6; ++j) match = match && m[idx[j]] == best[j];
                if (!match) continue;
                Mono rest = m;
                for (int j = 0; j < 6; ++j) rest[idx[j]] = 0;
                coeff += Poly::monomial(rest, c, reg);
            }
            int i = best[0] - best[2], jj = best[2];
            if (best[1] || best[4] || best[3] != best[0] || best[5] != best[2] || i < 0) {
                Mono m(reg->size());
                for (int j = 0; j < 6; ++j) m[idx[j]] = best[j];
                throw std::invalid_argument("non-invariant monomial " + mono_str(*reg, m));
            }
            if (i > 1) throw std::invalid_argument("trace powers above 1 are not supported");
            p -= coeff * tr.pow(i) * dty.pow(jj);
            out.terms.push_back({coeff, -t.detExp, t.detExp + Affine(jj), i, 2});
        }
    }
    return out;
}

GammaProduct base_moment(const Affine& a, int b) {
    GammaProduct g = gamma2(a);
    if (b == 0) return g;
    if (b == 1) return g * RatFunc(Poly(2) * a.to_poly());
    throw std::invalid_argument("trace power must be 0 or 1");
}

GammaProduct base_integral(const Affine& e) {
    Affine s = e + Affine(mpq_class(3, 2));
    GammaProduct g = gamma2(s);
    g.detT = -s;
    return g;
}

GammaProduct trace_moment(const Affine& e) {
    Affine s = e + Affine(mpq_class(3, 2));
    Poly sp = s.to_poly();
    std::map<std::string, Poly> at_E{{"t11", Poly(1)}, {"t12", Poly(0)}, {"t22", Poly(1)}};
    // -d/dT_ij det(T)^-s = s det(T)^(-s-1) (weighted d det(T)/dT_ij), evaluated at T = E
    Poly d = half::detT();
    Poly m11 = sp * d.derivative("t11").subs(at_E);
    Poly m22 = sp * d.derivative("t22").subs(at_E);
    GammaProduct viaT = gamma2(s) * RatFunc(m11 + m22);
    // scaling law: -d/dlambda lambda^(-2s) at lambda = 1
    GammaProduct viaScale = gamma2(s) * RatFunc(Poly(2) * sp);
    if (!(viaT == viaScale)) throw std::logic_error("trace moment derivations disagree");
    return viaT;
}

GammaProduct entry_moment(const Affine& s) {
    Poly d = half::detT();
    std::map<std::string, Poly> at_E{{"t11", Poly(1)}, {"t12", Poly(0)}, {"t22", Poly(1)}};
    return gamma2(s) * RatFunc(s.to_poly() * d.derivative("t11").subs(at_E));
}

ChangedTerm change_of_variables(const InvariantTerm& t) {
    ChangedTerm r{t.coeff, t.tauExp, t.detExp, t.trPow, Affine(), Poly(1)};
    Affine n = -(mpq_class(2) * t.detExp) - Affine(t.trPow);
    r.fourPi = n;
    if (t.c == 4) return r;
    if (t.c != 2) throw std::invalid_argument("exponential rate must be 2 pi or 4 pi");
    if (!n.is_constant() || n.constant().get_den() != 1)
        throw std::invalid_argument("rate 2 pi needs an integral constant power of 2");
    long k = n.constant().get_num().get_si();
    r.scale = RatFunc(Poly(2)).pow(static_cast<int>(-k)).as_poly();
    return r;
}

GammaProduct c_kappa(const Affine& kappa) {
    GammaProduct g = GammaProduct::gamma(kappa - Affine(mpq_class(3, 2))) * GammaProduct::gamma(kappa - Affine(2));
    g.pre = RatFunc(P("sqrtpi"));
    g.fourPi = Affine(3) - kappa;
    return g;
}

bool SturmResult::converges_for_positive_s(const std::string& param, long pmin) const {
    for (auto& g : raw)
        for (auto& a : g.num) {
            Affine at = a.subs(param, Affine(pmin)).subs("s", Affine());
            if (!at.is_constant() || sgn(at.constant()) < 0) return false;
        }
    return true;
}

SturmResult sturm_value(const InvariantIntegrand& A, const Affine& kappa, long offset, bool regularize) {
    SturmResult out;
    Affine shift = kappa - Affine(mpq_class(3, 2)) + Affine(offset);
    if (regularize) shift += Affine::sym("s");
    for (auto& t : A.terms) {
        InvariantTerm it = t;
        it.detExp = t.detExp + shift;
        it.c = t.c + 2;
        ChangedTerm ct = change_of_variables(it);
        GammaProduct g = base_moment(ct.a, ct.b) * RatFunc(ct.coeff * ct.scale);
        g.fourPi += ct.fourPi;
        g.detT += ct.tauExp;
        out.raw.push_back(g);
        out.value.add(g);
    }
    return out;
}

GammaProduct sturm_closed_form() {
    GammaProduct g = GammaProduct::gamma(Affine::from_poly(P("s + k - 1/2"))) *
                     GammaProduct::gamma(Affine::from_poly(P("s + k - 1")));
    g.pre = RatFunc(P("s*(s - 1/2)"));
    return g;
}

}  // namespace siegel::integrals
