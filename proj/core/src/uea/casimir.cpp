#include "siegel/uea/casimir.hpp"

#include "siegel/exact/parse.hpp"

namespace siegel::uea {

namespace {

const int kM = 2;

using Fn = int (*)(int, int);

int bl(int k, int l) { return Bkl(k, l); }
int bt(int k, int l) { return Bkl(l, k); }

struct Builder {
    Element e;
    std::size_t raw = 0;
    // sum over cyclic index chains of f0(i0,i1) f1(i1,i2) ... f_{n-1}(i_{n-1},i0)
    void trace(const std::vector<Fn>& fs, const Poly& c) {
        std::size_t n = fs.size();
        std::vector<int> idx(n, 1);
        for (;;) {
            Word w;
            for (std::size_t j = 0; j < n; ++j) w.push_back(static_cast<std::uint8_t>(fs[j](idx[j], idx[(j + 1) % n])));
            e.add(w, c);
            ++raw;
            std::size_t p = 0;
            while (p < n && idx[p] == 2) idx[p++] = 1;
            if (p == n) break;
            ++idx[p];
        }
    }
};

}  // namespace

const char* orientation_name(BOrientation o) { return o == BOrientation::Literal ? "literal" : "transposed"; }

Element formal_trace(const std::vector<Fn>& factors) {
    Builder b;
    b.trace(factors, Poly(1));
    return b.e;
}

Element trace_EpEm() { return formal_trace({Eplus, Eminus}); }
Element trace_EpEmEpEm() { return formal_trace({Eplus, Eminus, Eplus, Eminus}); }

CasimirBuild build_casimir(Casimir which, BOrientation orient) {
    Fn B = orient == BOrientation::Literal ? bl : bt;
    Fn Bs = orient == BOrientation::Literal ? bt : bl;  // B*
    Builder b;
    const Poly half = P("1/2");
    if (which == Casimir::C1) {
        b.trace({Eplus, Eminus}, half);
        b.trace({Eminus, Eplus}, half);
        b.trace({B, B}, Poly(1));
        return {b.e, b.raw};
    }
    b.trace({Eplus, Eminus, Eplus, Eminus}, half);
    b.trace({Eminus, Eplus, Eminus, Eplus}, half);
    b.trace({B, B, B, B}, half);
    b.trace({Bs, Bs, Bs, Bs}, half);
    b.trace({Eplus, Eminus, B, B}, Poly(2));
    b.trace({Eminus, Eplus, Bs, Bs}, Poly(2));
    // -sum {E+_kl, E-_ij} B_jk B_il
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l) {
                    auto u8 = [](int x) { return static_cast<std::uint8_t>(x); };
                    b.e.add({u8(Eplus(k, l)), u8(Eminus(i, j)), u8(B(j, k)), u8(B(i, l))}, Poly(-1));
                    b.e.add({u8(Eminus(i, j)), u8(Eplus(k, l)), u8(B(j, k)), u8(B(i, l))}, Poly(-1));
                    b.raw += 2;
                }
    Poly c = Poly((kM + 1) * (kM + 1)) * half;
    b.trace({Eplus, Eminus}, c);
    b.trace({Eminus, Eplus}, c);
    return {b.e, b.raw};
}

bool is_central(const Element& c) {
    Normalizer n(Ordering::ScalarK);
    for (int x = 0; x < kDim; ++x) {
        Element X = Element::letter(x);
        if (!n.normalize(c * X - X * c).is_zero()) return false;
    }
    return true;
}

std::optional<BOrientation> fit_orientation() {
    for (auto o : {BOrientation::Literal, BOrientation::Transposed})
        if (is_central(build_casimir(Casimir::C1, o).element) && is_central(build_casimir(Casimir::C2, o).element))
            return o;
    return std::nullopt;
}

Element scalar_ktype_eval(const Element& e, const Scalar& sigma) {
    Element out;
    Poly kappa = Poly::var("kappa");
    for (auto& [w, c] : e.terms()) {
        std::size_t j = w.size();
        while (j > 0 && is_compact(w[j - 1])) --j;
        Poly val = c;
        for (std::size_t t = j; t < w.size() && !val.is_zero(); ++t)
            val = is_cartan(w[t]) ? val * (Poly(sigma) * kappa) : Poly(0);
        out.add(Word(w.begin(), w.begin() + j), val);
    }
    return out;
}

RestrictionCheck verify_scalar_restriction(Casimir which, BOrientation orient, const Scalar& sigma) {
    Normalizer n(Ordering::ScalarK);
    Poly kappa = Poly::var("kappa"), m(kM);
    Element C = scalar_ktype_eval(n.normalize(build_casimir(which, orient).element), sigma);
    Element W2 = scalar_ktype_eval(n.normalize(trace_EpEm()), sigma);
    Element lhs = C;
    Element rhs;
    if (which == Casimir::C1) {
        rhs = W2 - Element(kappa * m * (m + Poly(1) - kappa));
    } else {
        Element W4 = scalar_ktype_eval(n.normalize(trace_EpEmEpEm()), sigma);
        Poly f = (m + Poly(1)).pow(2) - Poly(2) * kappa * (m + Poly(1)) + Poly(2) * kappa.pow(2);
        rhs = W4 + Element(m * kappa.pow(4)) + f * (W2 - Element(kappa * m * (m + Poly(1))));
    }
    return {lhs - rhs};
}

std::optional<Scalar> fit_sigma(BOrientation orient) {
    for (const Scalar& s : {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()})
        if (verify_scalar_restriction(Casimir::C1, orient, s).ok()) return s;
    return std::nullopt;
}

std::string hc_convention_str(const HCConvention& c) {
    return std::string("B_jj -> ") + (c.phase == 1 ? "" : "-") + "(L_j " + (c.shift == 1 ? "-" : "+") +
           " delta_j), delta = (2,1)";
}

Poly hc_image(const Element& e, const HCConvention& c) {
    Element n = normalize(e, Ordering::BorelHC);
    Poly l1 = Poly(c.phase) * (Poly::var("L1") - Poly(2 * c.shift));
    Poly l2 = Poly(c.phase) * (Poly::var("L2") - Poly(c.shift));
    Poly out(0);
    for (auto& [w, coef] : n.terms()) {
        bool cartan = true;
        for (auto x : w) cartan = cartan && is_cartan(x);
        if (!cartan) continue;
        Poly t = coef;
        for (auto x : w) t *= x == B11 ? l1 : l2;
        out += t;
    }
    return out;
}

Poly hc_expected(Casimir which) {
    return which == Casimir::C1 ? P("L1^2 + L2^2 - 5") : P("L1^4 + L2^4 - 17 + 3*(L1^2 + L2^2 - 5)");
}

std::optional<HCConvention> fit_hc(BOrientation orient) {
    Element C1 = build_casimir(Casimir::C1, orient).element;
    for (int phase : {1, -1})
        for (int shift : {1, -1}) {
            HCConvention c{phase, shift};
            if (hc_image(C1, c) == hc_expected(Casimir::C1)) return c;
        }
    return std::nullopt;
}

}  // namespace siegel::uea
