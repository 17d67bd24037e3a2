#include "siegel/verify/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

#include "siegel/exact/parse.hpp"
#include "siegel/halfspace/halfexpr.hpp"
#include "siegel/integrals/integrals.hpp"
#include "siegel/integrals/quadrature.hpp"
#include "siegel/rep/tables.hpp"
#include "siegel/shift/shift.hpp"
#include "siegel/uea/casimir.hpp"
#include "siegel/uea/lie.hpp"

#ifndef SIEGEL_VERSION
#define SIEGEL_VERSION "0.0.0"
#endif

namespace siegel::verify {

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Finding: return "finding";
    }
    return "fail";
}

bool SuiteReport::failed() const { return count(Status::Fail) > 0; }

std::size_t SuiteReport::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

std::string engine_version() { return SIEGEL_VERSION; }

namespace {

using half::HalfExpr;
using shift::ShiftOperator;
using shift::Table;

struct Outcome {
    std::string lhs, rhs, residual;
    bool ok = false;
};

std::string or0(std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s.empty() ? "0" : s;
}

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

Outcome same(const std::string& lhs, const std::string& rhs) {
    return {lhs, rhs, lhs == rhs ? "0" : "lhs differs from rhs", lhs == rhs};
}

Outcome poly_eq(const Poly& a, const Poly& b) {
    Poly r = a - b;
    return {a.str(), b.str(), r.str(), r.is_zero()};
}

Outcome half_eq(const HalfExpr& a, const HalfExpr& b) {
    HalfExpr r = a - b;
    return {or0(a.str()), or0(b.str()), or0(r.str()), r.is_zero()};
}

Outcome op_eq(const ShiftOperator& a, const ShiftOperator& b) {
    ShiftOperator r = a - b;
    return {or0(a.str()), or0(b.str()), or0(r.str()), r.is_zero()};
}

Outcome numeric(double lhs, double rhs, double tol) {
    double d = std::abs(lhs - rhs);
    return {num(lhs), num(rhs), num(lhs - rhs), d <= tol * std::abs(rhs)};
}

class Builder {
public:
    explicit Builder(const Options& o) : opt_(o) {}

    void add(const std::string& name, const std::string& citation, const std::function<Outcome()>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r = {"", "", std::string("exception: ") + e.what(), false};
        }
        Check c{name, Status::Pass, citation, r.lhs, r.rhs, r.residual, std::nullopt};
        if (!r.ok) c.status = opt_.findings.count(name) ? Status::Finding : Status::Fail;
        if (opt_.timings)
            c.elapsedMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        checks_.push_back(std::move(c));
    }

    const Options& opt() const { return opt_; }
    std::vector<Check> take() { return std::move(checks_); }

private:
    const Options& opt_;
    std::vector<Check> checks_;
};

std::optional<std::string> read_golden(const Options& opt, const std::string& file) {
    if (opt.goldensDir.empty()) return std::nullopt;
    std::ifstream in(opt.goldensDir + "/" + file, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome golden_text(const Options& opt, const std::string& file, const std::string& computed) {
    auto g = read_golden(opt, file);
    if (!g) return {computed, "", "missing golden file " + file, false};
    if (*g == computed) return {file, file, "0", true};
    std::istringstream a(computed), b(*g);
    std::string la, lb;
    for (int line = 1;; ++line) {
        bool ea = !std::getline(a, la), eb = !std::getline(b, lb);
        if (ea && eb) break;
        if (ea || eb || la != lb)
            return {file, file, "line " + std::to_string(line) + ": computed '" + la + "', golden '" + lb + "'", false};
    }
    return {file, file, "trailing bytes differ", false};
}

// structured diff for action tables: offending shifts with difference coefficients
Outcome golden_table(const Options& opt, const std::string& file, const ShiftOperator& computed) {
    auto g = read_golden(opt, file);
    if (!g) return {or0(computed.str()), "", "missing golden file " + file, false};
    ShiftOperator golden;
    try {
        golden = ShiftOperator::parse(*g);
    } catch (const std::exception& e) {
        return {or0(computed.str()), "", "unparsable golden " + file + ": " + e.what(), false};
    }
    ShiftOperator r = computed - golden;
    return {file, file, or0(r.str()), r.is_zero() && *g == computed.str()};
}

uea::Element random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> let(0, uea::kDim - 1), len(1, 3), co(-3, 3);
    uea::Element e;
    for (int t = 0; t < 3; ++t) {
        uea::Word w;
        int n = len(rng);
        for (int j = 0; j < n; ++j) w.push_back(static_cast<std::uint8_t>(let(rng)));
        e.add(w, Poly(co(rng)));
    }
    return e;
}

Affine aff(const char* t) { return Affine::from_poly(P(t)); }

// ------------------------------------------------------------------ hc

void suite_hc(Builder& b) {
    auto facts = rep::verify_hc_factorizations();
    for (const auto& f : facts) {
        std::string tag = f.name == "D+" ? "dplus" : "dminus";
        b.add("hc." + tag + "_factorization", f.name + " through Lambda(C1), Lambda(C2) equals its root factorization",
              [&] { return poly_eq(f.definition, f.factored); });
        b.add("hc." + tag + "_root_product", f.name + " as product over long/short coroots",
              [&] { return poly_eq(f.definition, f.rootProduct); });
    }
    b.add("hc.sanity_point", "D+ factorization vanishes at Lambda = (2,1), u = 1", [&] {
        Poly v = facts[0].factored.subs({{"L1", Poly(2)}, {"L2", Poly(1)}, {"u", Poly(1)}});
        return poly_eq(v, Poly(0));
    });
    auto orient = uea::fit_orientation();
    if (!orient) {
        b.add("hc.orientation", "Casimir orientation fit", [] { return Outcome{"none", "central C1, C2", "no fit", false}; });
        return;
    }
    auto conv = uea::fit_hc(*orient);
    b.add("hc.convention", "Harish-Chandra convention fitted on Lambda(C1)", [&] {
        return Outcome{conv ? uea::hc_convention_str(*conv) : "none", "Lambda(C1) = L1^2 + L2^2 - 5", conv ? "0" : "no fit",
                       conv.has_value()};
    });
    if (!conv) return;
    uea::Element C1 = uea::build_casimir(uea::Casimir::C1, *orient).element;
    uea::Element C2 = uea::build_casimir(uea::Casimir::C2, *orient).element;
    b.add("hc.image_c1", "Harish-Chandra image of C1",
          [&] { return poly_eq(uea::hc_image(C1, *conv), uea::hc_expected(uea::Casimir::C1)); });
    b.add("hc.image_c2", "Harish-Chandra image of C2",
          [&] { return poly_eq(uea::hc_image(C2, *conv), uea::hc_expected(uea::Casimir::C2)); });
    b.add("hc.image_c1_c2_product", "Harish-Chandra map is multiplicative on C1*C2", [&] {
        return poly_eq(uea::hc_image(C1 * C2, *conv), uea::hc_expected(uea::Casimir::C1) * uea::hc_expected(uea::Casimir::C2));
    });
}

// ------------------------------------------------------------------ uea

void suite_uea(Builder& b) {
    using namespace uea;
    b.add("uea.bracket_matrix_identity", "structure constants reproduce matrix commutators", [] {
        int bad = 0;
        for (int x = 0; x < kDim; ++x)
            for (int y = 0; y < kDim; ++y) {
                Mat4 X = basis_matrix(x), Y = basis_matrix(y);
                if (!mat_equal(to_matrix(bracket(x, y)), X * Y - Y * X)) ++bad;
            }
        return Outcome{std::to_string(bad) + " mismatched pairs", "0 mismatched pairs", std::to_string(bad), bad == 0};
    });
    b.add("uea.jacobi", "Jacobi identity on all basis triples", [] {
        int bad = 0;
        auto L = [](int x) { return LinComb{{x, Scalar(1)}}; };
        for (int x = 0; x < kDim; ++x)
            for (int y = x + 1; y < kDim; ++y)
                for (int z = y + 1; z < kDim; ++z) {
                    Mat4 s = to_matrix(bracket(L(x), bracket(y, z))) + to_matrix(bracket(L(y), bracket(z, x))) +
                             to_matrix(bracket(L(z), bracket(x, y)));
                    if (!mat_equal(s, mat_zero())) ++bad;
                }
        return Outcome{std::to_string(bad) + " failing triples", "0 failing triples", std::to_string(bad), bad == 0};
    });
    b.add("uea.golden.structure_constants", "structure constant table",
          [&] { return golden_text(b.opt(), "structure_constants.txt", structure_constants_text()); });
    b.add("uea.pbw_matrix_image", "normal ordering preserves the 4x4 matrix image (seeded random elements)", [&] {
        std::mt19937_64 rng(b.opt().seed);
        int bad = 0;
        for (int t = 0; t < 40; ++t) {
            Element e = random_element(rng);
            for (auto o : {Ordering::ScalarK, Ordering::BorelHC}) {
                Element n = normalize(e, o);
                bool ordered = std::all_of(n.terms().begin(), n.terms().end(),
                                           [o](const auto& kv) { return is_ordered(kv.first, o); });
                if (!ordered || !mat_equal(n.matrix(), e.matrix()) || !(normalize(n, o) == n)) ++bad;
            }
        }
        return Outcome{std::to_string(bad) + " failures", "0 failures", std::to_string(bad), bad == 0};
    });
    for (auto [c, tag] : {std::pair{Casimir::C1, "c1"}, std::pair{Casimir::C2, "c2"}}) {
        b.add(std::string("uea.literal_orientation.") + tag + "_central",
              "Casimir with B_kl read literally commutes with every basis letter", [c = c] {
                  bool ok = is_central(build_casimir(c, BOrientation::Literal).element);
                  return Outcome{ok ? "central" : "not central", "central", ok ? "0" : "nonzero commutator", ok};
              });
    }
    auto orient = fit_orientation();
    b.add("uea.orientation_fit", "B orientation making C1 and C2 central", [&] {
        return Outcome{orient ? orientation_name(*orient) : "none", "C1, C2 central", orient ? "0" : "no fit",
                       orient.has_value()};
    });
    if (!orient) return;
    auto raw = build_casimir(Casimir::C1, *orient);
    b.add("uea.c1_raw_terms", "index terms of the C1 formal traces at m = 2", [&] {
        return Outcome{std::to_string(raw.rawTerms) + " terms, " + std::to_string(raw.element.size()) + " words",
                       "12 terms, 10 words", raw.rawTerms == 12 && raw.element.size() == 10 ? "0" : "count differs",
                       raw.rawTerms == 12 && raw.element.size() == 10};
    });
    for (auto [c, tag] : {std::pair{Casimir::C1, "c1"}, std::pair{Casimir::C2, "c2"}}) {
        b.add(std::string("uea.") + tag + "_central", "Casimir commutes with every basis letter", [&, c = c] {
            bool ok = is_central(build_casimir(c, *orient).element);
            return Outcome{ok ? "central" : "not central", "central", ok ? "0" : "nonzero commutator", ok};
        });
    }
    auto sigma = fit_sigma(*orient);
    b.add("uea.sigma_fit", "global phase for the scalar K-type character", [&] {
        return Outcome{sigma ? sigma->str() : "none", "C1 restriction holds", sigma ? "0" : "no fit", sigma.has_value()};
    });
    if (!sigma) return;
    for (auto [c, tag] : {std::pair{Casimir::C1, "c1"}, std::pair{Casimir::C2, "c2"}}) {
        b.add(std::string("uea.scalar_restriction.") + tag, "scalar K-type restriction formula at m = 2, symbolic kappa",
              [&, c = c] {
                  auto r = verify_scalar_restriction(c, *orient, *sigma);
                  return Outcome{"pi(" + std::string(tag) + ")", "K-type formula", or0(r.residual.str()), r.ok()};
              });
    }
}

// ------------------------------------------------------------------ shift

void suite_shift(Builder& b) {
    using namespace shift;
    ShiftOperator c1 = casimir_rule_c1();
    ShiftOperator lit = casimir_rule_c2(Table::Literal), rep = casimir_rule_c2(Table::Repaired);
    b.add("shift.golden.c1_table", "transcribed C1 action", [&] { return golden_table(b.opt(), "c1_table.txt", c1); });
    b.add("shift.golden.c2_table", "transcribed C2 action", [&] { return golden_table(b.opt(), "c2_table.txt", lit); });
    b.add("shift.golden.c2_table_repaired", "C2 action solved from the D+ display",
          [&] { return golden_table(b.opt(), "c2_table_repaired.txt", rep); });
    b.add("shift.c2_repair_consistency", "repaired C2 equals C2 solved from the D+ display",
          [&] { return op_eq(rep, c2_from_dplus_display()); });
    for (auto [t, c2] : {std::pair{Table::Literal, &lit}, std::pair{Table::Repaired, &rep}}) {
        std::string tn = table_name(t);
        ShiftOperator dp = dplus_op(c1, *c2, P("u")), dm = dminus_op(c1, *c2, P("v"));
        b.add("shift.dplus." + tn, "D+(u) acting on P(g,u,v)", [=] { return op_eq(dp, dplus_display()); });
        b.add("shift.dminus." + tn, "D-(v) acting on P(g,u,v)", [=] { return op_eq(dm, dminus_display()); });
        b.add("shift.dminus_spot." + tn, "D-(v) coefficient at shift (0,4)", [=] {
            return poly_eq(dm.coeff({0, 4}), P("64*pi^2*(v - u)*(v - u - 2)"));
        });
        b.add("shift.term_counts." + tn, "D+ has 6 shift terms, D- has 4", [=] {
            std::string l = std::to_string(dp.size()) + ", " + std::to_string(dm.size());
            bool ok = dp.size() == 6 && dm.size() == 4;
            return Outcome{l, "6, 4", ok ? "0" : "term counts differ", ok};
        });
        b.add("shift.restrict_line." + tn, "D+(u) on the line v = 2u+1", [=] {
            auto r = restrict_line(dp);
            std::string l;
            for (auto& [s, c] : r) l += shift_str(s) + ": " + c.str() + "\n";
            std::string want = "(2,4): " + P("64*pi*pi*tau*(u - 1)*(u - 2)").str() + "\n";
            Outcome o = same(or0(l), or0(want));
            if (!o.ok) {
                ShiftOperator got, exp;
                for (auto& [s, c] : r) got.add(s, c);
                exp.add({2, 4}, P("64*pi^2*tau*(u - 1)*(u - 2)"));
                o.residual = or0((got - exp).str());
            }
            return o;
        });
        b.add("shift.commutator." + tn, "[C1, C2] = 0", [=] {
            ShiftOperator r = commutator(c1, *c2);
            return Outcome{or0(r.str()), "0", or0(r.str()), r.is_zero()};
        });
    }
    ShiftOperator x = P("u^2 - 1") * (c1 - ShiftOperator::scalar(P("u^2 - 4")));
    ShiftOperator d1 = dplus_op(c1, rep, Poly(1)), du = dplus_op(c1, rep, P("u"));
    b.add("shift.dplus1_relation.stated", "D+(1) = D+(u) - (u^2-1)(C1-(u^2-4))", [=] { return op_eq(d1, du - x); });
    b.add("shift.dplus1_relation.corrected", "D+(1) = D+(u) + (u^2-1)(C1-(u^2-4))", [=] { return op_eq(d1, du + x); });
    b.add("shift.dminus_divisibility", "D-(v) - D-(3) divisible by v^2 - 9", [=] {
        ShiftOperator dm = dminus_op(c1, rep, P("v")) - dminus_op(c1, rep, Poly(3));
        int bad = 0;
        for (auto& [s, c] : dm.terms())
            if (!c.divide_exact(P("v^2 - 9"))) ++bad;
        return Outcome{std::to_string(dm.size()) + " coefficients", "all divisible", std::to_string(bad), bad == 0};
    });
    b.add("shift.associativity", "composition is associative (seeded random operators)", [&] {
        std::mt19937_64 rng(b.opt().seed + 1);
        std::uniform_int_distribution<int> sh(0, 2), co(-3, 3);
        const char* mons[] = {"1", "u", "v", "u*v", "u^2"};
        auto rnd = [&] {
            ShiftOperator f;
            for (int t = 0; t < 3; ++t) {
                Poly c(0);
                for (auto m : mons) c += Poly(co(rng)) * P(m);
                f.add({2 * sh(rng), 2 * sh(rng)}, c);
            }
            return f;
        };
        int bad = 0;
        for (int t = 0; t < 8; ++t) {
            ShiftOperator f = rnd(), g = rnd(), h = rnd();
            if (!(compose(compose(f, g), h) - compose(f, compose(g, h))).is_zero()) ++bad;
        }
        return Outcome{std::to_string(bad) + " failures", "0 failures", std::to_string(bad), bad == 0};
    });
}

// ------------------------------------------------------------------ maass

void suite_maass(Builder& b) {
    using namespace half;
    HalfExpr d = HalfExpr::det_power(aff("alpha"));
    b.add("maass.freitag.h1", "dY det(Y)^alpha = alpha det(Y)^alpha Y^-1", [&] {
        HalfExpr r;
        for (int c = 0; c < 3; ++c) r = r + (dY(d, c) - HalfExpr::term(P("alpha") * adjY(c), aff("alpha - 1")));
        return Outcome{or0(dY(d, 0).str()), "alpha det(Y)^(alpha-1) adj(Y)", or0(r.str()), r.is_zero()};
    });
    b.add("maass.freitag.h2", "det(dY) det(Y)^alpha = alpha(alpha+1/2) det(Y)^(alpha-1)",
          [&] { return half_eq(det2(Op::dY, d), HalfExpr::term(P("alpha*(alpha + 1/2)"), aff("alpha - 1"))); });
    b.add("maass.cap_identity", "2 (Y^-1 cap T) = tr(YT)/det(Y)",
          [&] { return half_eq(cap2(inverse_Y(), matrix_T()), HalfExpr::term(trYT(), Affine(-1))); });
    auto rule = [](const HalfExpr& f, const HalfExpr& g) {
        return det2(Op::dZ, f * g) -
               (det2(Op::dZ, f) * g + cap2(gradient(Op::dZ, f), gradient(Op::dZ, g)) + f * det2(Op::dZ, g));
    };
    b.add("maass.product_rule.seed", "product rule for det(dZ) on det(Y)^(k-1/2) exp(2 pi i tr TZ)", [&] {
        HalfExpr r = rule(HalfExpr::det_power(aff("k - 1/2")), HalfExpr::exp_seed());
        return Outcome{"det(dZ)(f g)", "expanded product rule", or0(r.str()), r.is_zero()};
    });
    b.add("maass.product_rule.random", "product rule for det(dZ) on seeded random polynomials in Y", [&] {
        std::mt19937_64 rng(b.opt().seed + 2);
        std::uniform_int_distribution<int> co(-4, 4);
        const char* mons[] = {"1", "y11", "y12", "y22", "y11^2", "y11*y12", "y12*y22", "y22^2", "y11*y22"};
        int bad = 0;
        for (int t = 0; t < 10; ++t) {
            Poly f(0), g(0);
            for (auto m : mons) {
                f += Poly(co(rng)) * P(m);
                g += Poly(co(rng)) * P(m);
            }
            if (!rule(HalfExpr(f), HalfExpr(g)).is_zero()) ++bad;
        }
        return Outcome{std::to_string(bad) + " failures", "0 failures", std::to_string(bad), bad == 0};
    });
    HalfExpr seed = P("aT") * HalfExpr::exp_seed();
    HalfExpr img = delta_plus2(seed, aff("k"));
    b.add("maass.delta_plus_seed", "Delta+^[2] of a(T) exp(2 pi i tr TZ) against the displayed b(T,Y)",
          [&] { return half_eq(img, fourier_coeff_display(aff("k"))); });
    b.add("maass.golden.delta_plus_seed", "Delta+^[2] seed image",
          [&] { return golden_text(b.opt(), "delta_plus_seed.txt", img.str()); });
    for (auto [kk, tag] : {std::pair{"1/2", "k_half"}, std::pair{"0", "k_zero"}}) {
        b.add(std::string("maass.vanishing.") + tag, "Fourier coefficient vanishes at this weight",
              [&, kk = kk] { return half_eq(delta_plus2(seed, aff(kk)), HalfExpr()); });
    }
    HalfExpr hp = delta_plus2(HalfExpr::h(), Affine(1));
    b.add("maass.weight_one.display", "Delta+^[2](h) at weight (1,1) with middle constant 2i",
          [&] { return half_eq(hp, weight_one_display(P("2*i"))); });
    b.add("maass.weight_one.computed", "Delta+^[2](h) at weight (1,1) with middle constant i",
          [&] { return half_eq(hp, weight_one_display(P("i"))); });
    b.add("maass.golden.weight_one_intermediate", "Delta+^[2](h) at weight (1,1)",
          [&] { return golden_text(b.opt(), "weight_one_intermediate.txt", hp.str()); });
    b.add("maass.three_quarters", "Delta-^[2] Delta+^[2](h) = 3/4 h",
          [&] { return half_eq(delta_minus2(hp), P("3/4") * HalfExpr::h()); });
    b.add("maass.commutation", "dZ and dZbar commute", [&] {
        HalfExpr e = HalfExpr::term(P("y11*y12 + 3*y22"), aff("k - 1/2"), 1) + HalfExpr::h({1}, P("y12"));
        int bad = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (!(dZ(dZbar(e, i), j) == dZbar(dZ(e, j), i))) ++bad;
        return Outcome{std::to_string(bad) + " failures", "0 failures", std::to_string(bad), bad == 0};
    });
}

// ------------------------------------------------------------------ sturm

std::string sturm_closed_form_text() { return integrals::sturm_closed_form().str(); }

void suite_sturm(Builder& b) {
    using namespace integrals;
    HalfExpr img = half::delta_plus2(P("aT") * HalfExpr::exp_seed(), aff("k"));
    InvariantIntegrand A = from_halfexpr(img);
    b.add("sturm.integrand", "Fourier coefficient A(T,Y) as invariant terms", [&] {
        bool ok = A.terms.size() == 3;
        return Outcome{or0(A.str()), "3 invariant terms", ok ? "0" : "term count differs", ok};
    });
    auto value = [&](long offset) { return sturm_value(A, aff("k + 2"), offset); };
    SturmResult main = value(0);
    b.add("sturm.convergence", "all Gamma arguments positive at s = 0 for k >= 1", [&] {
        bool ok = main.converges_for_positive_s();
        return Outcome{ok ? "convergent" : "divergent", "convergent", ok ? "0" : "nonpositive argument", ok};
    });
    auto quotient = [](const SturmResult& r) -> std::optional<GammaProduct> {
        auto p = r.value.as_product();
        if (!p) return std::nullopt;
        return (*p * sturm_closed_form().inverse()).normalized();
    };
    auto unit_check = [&](const SturmResult& r) {
        auto q = quotient(r);
        if (!q) return Outcome{or0(r.value.str()), sturm_closed_form_text(), "not a single Gamma product", false};
        bool ok = q->num.empty() && q->den.empty() && q->pre == RatFunc(P("4*pi*sqrtpi*aT*tau")) &&
                  q->fourPi == aff("-2*k - 2*s");
        return Outcome{q->str(), "4 pi sqrt(pi) a(T) det(T) (4 pi)^(-2k-2s)", ok ? "0" : q->str(), ok};
    };
    b.add("sturm.factorization", "transform = unit * s(s-1/2) Gamma(s+k-1/2) Gamma(s+k-1)", [&] { return unit_check(main); });
    b.add("sturm.footnote_exponent", "footnote exponent det(TY)^(k-1/2+s) reproduces the closed form",
          [&] { return unit_check(value(-1)); });
    b.add("sturm.bare_limit_k1", "lim s(s-1/2) Gamma(s+1/2) Gamma(s) = -1/2 Gamma(1/2)", [&] {
        GammaLimit l = gamma_limit(sturm_closed_form().subs("k", Affine(1)));
        GammaProduct v = l.value.normalized();
        bool ok = l.kind == GammaLimit::Kind::Value && v.factor_free() && v.pre == RatFunc(P("-sqrtpi/2"));
        return Outcome{l.str(), "-1/2 sqrtpi", ok ? "0" : l.str(), ok};
    });
    auto limits = [&](long offset) {
        auto p = value(offset).value.as_product();
        std::map<long, GammaLimit> out;
        for (long k = 1; k <= 5; ++k)
            if (p) out[k] = gamma_limit(p->subs("k", Affine(k)));
        return out;
    };
    auto lim0 = limits(0);
    for (long k : b.opt().k) {
        if (k < 1 || k > 5) continue;
        b.add("sturm.limit.k" + std::to_string(k), k == 1 ? "limit s -> 0 is nonzero" : "limit s -> 0 vanishes", [&, k] {
            if (!lim0.count(k)) return Outcome{"", "", "transform is not a single product", false};
            const GammaLimit& l = lim0.at(k);
            bool zero = l.is_zero();
            bool ok = l.kind == GammaLimit::Kind::Value && (k == 1 ? !zero : zero);
            return Outcome{l.str(), k == 1 ? "nonzero" : "0", ok ? "0" : l.str(), ok};
        });
    }
    auto q1 = lim0.count(1) ? (lim0.at(1).value * c_kappa(Affine(3)).inverse()).normalized() : GammaProduct();
    b.add("sturm.k1_constant", "Sturm operator at kappa = 3 maps A(T,Y) to -1/(4 pi) a(T) det(T)", [&] {
        GammaProduct want(RatFunc(P("-aT*tau")) * RatFunc(P("4*pi")).pow(-1));
        return Outcome{q1.str(), want.str(), q1 == want ? "0" : (q1 * want.inverse()).normalized().str(), q1 == want};
    });
    b.add("sturm.golden.k1_constant", "engine constant at kappa = 3",
          [&] { return golden_text(b.opt(), "sturm_k1_constant.txt", q1.str() + "\n"); });
    for (long off : {-1L, 1L}) {
        std::string tag = off < 0 ? "minus1" : "plus1";
        b.add("sturm.offset_stability." + tag, "vanishing pattern (k=1 nonzero, k=2..5 zero) under exponent offset", [&, off] {
            auto l = limits(off);
            std::string s;
            bool pattern = l.size() == 5;
            for (auto& [k, v] : l) {
                s += "k=" + std::to_string(k) + ": " + (v.kind == GammaLimit::Kind::Pole ? "pole" : v.is_zero() ? "0" : "nonzero") + "; ";
                pattern = pattern && v.kind == GammaLimit::Kind::Value && (k == 1 ? !v.is_zero() : v.is_zero());
            }
            return Outcome{or0(s), "k=1: nonzero; k=2..5: 0", pattern ? "0" : "pattern differs", pattern};
        });
    }
    b.add("sturm.c3", "c(3) = pi/2", [&] {
        GammaProduct c = c_kappa(Affine(3)).normalized();
        bool ok = c.factor_free() && c.pre == RatFunc(P("pi/2"));
        return Outcome{c.str(), "pi/2", ok ? "0" : c.str(), ok};
    });
    InvariantIntegrand H{{{P("aT"), Affine(), Affine(), 0, 2}}};
    auto seed_ratio = (*sturm_value(H, aff("kappa"), 0, false).value.as_product() * c_kappa(aff("kappa")).inverse()).normalized();
    b.add("sturm.holomorphic_seed", "holomorphic seed transform over c(kappa) is s-free and proportional to a(T)", [&] {
        bool ok = seed_ratio.num.empty() && seed_ratio.den.empty() && seed_ratio.pre == RatFunc(P("aT")) &&
                  seed_ratio.fourPi == aff("-kappa") && !seed_ratio.pre.num().depends_on("s");
        return Outcome{seed_ratio.str(), "a(T) (4 pi)^(-kappa)", ok ? "0" : seed_ratio.str(), ok};
    });
    b.add("sturm.holomorphic_seed_regularized", "regularized seed transform at s -> 0 agrees with the bare one", [&] {
        auto p = sturm_value(H, Affine(3), 0, true).value.as_product();
        GammaLimit l = gamma_limit(*p);
        GammaProduct r = (l.value * c_kappa(Affine(3)).inverse()).normalized();
        GammaProduct want = seed_ratio.subs("kappa", Affine(3)).normalized();
        return Outcome{r.str(), want.str(), r == want ? "0" : "differs", r == want};
    });
    b.add("sturm.golden.holomorphic_seed_constant", "holomorphic seed constant at kappa = 3",
          [&] { return golden_text(b.opt(), "holomorphic_seed_constant.txt", seed_ratio.subs("kappa", Affine(3)).normalized().str() + "\n"); });
}

// ------------------------------------------------------------------ gamma-numeric

void suite_gamma(Builder& b) {
    using namespace integrals;
    QuadratureConfig cfg;
    cfg.tol = b.opt().tol;
    cfg.seed = b.opt().seed;
    auto rel = [&](double got, double want) { return numeric(got, want, b.opt().tol); };
    b.add("gamma.base_s2", "integral exp(-tr Y) det(Y)^(1/2) dY = pi/2", [&] {
        return rel(cone_integral(gamma_integrand({1, 0, 1}, 0.5, 0), cfg).estimate, M_PI / 2);
    });
    const std::pair<const char*, std::array<double, 3>> Ts[] = {{"E", {1, 0, 1}}, {"T2", {1, 0.5, 1}}};
    const std::pair<const char*, double> Ss[] = {{"1.1", 1.1}, {"1.5", 1.5}, {"2.0", 2.0}, {"3.0", 3.0}};
    for (auto& [tn, T] : Ts)
        for (auto& [sn, s] : Ss) {
            b.add(std::string("gamma.display1.") + tn + ".s" + sn, "sqrt(pi) det(T)^-s Gamma(s) Gamma(s-1/2) by quadrature",
                  [&, T = T, s = s] {
                      double detT = T[0] * T[2] - T[1] * T[1];
                      double want = base_integral(aff("s - 3/2")).eval({{"s", s}, {"tau", detT}}).real();
                      return rel(cone_integral(gamma_integrand(T, s - 1.5, 0), cfg).estimate, want);
                  });
        }
    for (auto& [sn, s] : Ss) {
        b.add(std::string("gamma.display2.s") + sn, "2 sqrt(pi) (s+1/2) Gamma(s) Gamma(s+1/2) by quadrature", [&, s = s] {
            double want = trace_moment(aff("s - 1")).eval({{"s", s}}).real();
            return rel(cone_integral(gamma_integrand({1, 0, 1}, s - 1, 1), cfg).estimate, want);
        });
    }
}

// ------------------------------------------------------------------ reptables

std::string weights_str(const std::vector<rep::Weight>& ws) {
    std::string s;
    for (const auto& w : ws) s += (s.empty() ? "" : " ") + w.str();
    return s;
}

void suite_rep(Builder& b) {
    using namespace rep;
    for (auto [w, n] : {std::pair{Weight(2, 1), 8u}, std::pair{Weight(0, 0), 1u}, std::pair{Weight(1, 1), 4u}}) {
        b.add("rep.weyl_orbit." + w.str(), "Weyl orbit under signed permutations", [w = w, n = n] {
            auto o = weyl_orbit(w);
            bool closed = true;
            for (const Weight& x : o)
                for (const Weight& a : {Weight(0, 2), Weight(1, -1)})
                    closed = closed && std::binary_search(o.begin(), o.end(), reflect(x, a));
            bool ok = o.size() == n && closed;
            return Outcome{weights_str(o), std::to_string(n) + " elements, closed", ok ? "0" : "orbit differs", ok};
        });
    }
    b.add("rep.representative", "(0,1) and (1,0) are Weyl conjugate", [] {
        auto o = weyl_orbit({1, 0});
        bool ok = std::binary_search(o.begin(), o.end(), Weight(0, 1));
        return Outcome{weights_str(o), "contains (0,1)", ok ? "0" : "not conjugate", ok};
    });
    b.add("rep.blattner_shift.delta1", "half sum of Delta1+ minus compact positive root",
          [] { return same(blattner_shift(System::Delta1).str(), "(1,2)"); });
    b.add("rep.blattner_shift.delta2", "half sum of Delta2+ minus compact positive root",
          [] { return same(blattner_shift(System::Delta2).str(), "(1,0)"); });
    b.add("rep.blattner.(2,1)", "minimal K-type of the Delta1+ discrete series at (2,1)",
          [] { return same(blattner({2, 1}, System::Delta1).str(), "(3,3)"); });
    b.add("rep.blattner.(5,-1)", "minimal K-type of the Delta2+ discrete series at (5,-1)",
          [] { return same(blattner({5, -1}, System::Delta2).str(), "(6,-1)"); });
    b.add("rep.ktype_scan", "K-type (3,3) in the cone of (L1+1,3), 2 <= L1 <= 50", [] {
        std::string hits;
        for (const auto& r : ktype_scan({3, 3}, 2, 50))
            if (r.occurs) hits += (hits.empty() ? "" : " ") + std::to_string(r.l1);
        return same(or0(hits), "2");
    });
    b.add("rep.ktype_occurs.(3,-1)", "K-type (3,3) in the cone of k = (3,-1) for Delta2+",
          [] { return same(ktype_occurs({3, -1}, {3, 3}, System::Delta2) ? "true" : "false", "true"); });
    auto cands = langlands_enumerate();
    for (const char* p : {"Siegel", "Klingen", "Borel"}) {
        std::string want = std::string(p) == "Siegel" ? "(1,-1)" : std::string(p) == "Klingen" ? "(1,0) (1,2)" : "(1,0) (2,1)";
        b.add(std::string("rep.langlands.") + p, "infinitesimal characters of Langlands quotients", [&, p, want] {
            std::vector<Weight> got;
            for (const auto& c : cands)
                if (c.parabolic == p) got.push_back(c.lambda);
            return same(weights_str(got), want);
        });
    }
    b.add("rep.langlands.union", "union of candidate infinitesimal characters", [&] {
        std::set<Weight> u;
        for (const auto& c : cands) u.insert(c.lambda);
        return same(weights_str({u.begin(), u.end()}), "(1,-1) (1,0) (1,2) (2,1)");
    });
    b.add("rep.parity", "odd scalar K-type 3 excluded from types in 2 + 2Z",
          [] { return same(parity_excludes(3, 2, 2) ? "excluded" : "allowed", "excluded"); });
    M0Result m = m0_check();
    b.add("rep.m0.det", "det(Ci + D) for m0", [=] { return same(m.det.str(), (-Scalar::i()).str()); });
    b.add("rep.m0.det_cubed", "det(Ci + D)^3 = +-i", [=] {
        bool ok = m.det3 == Scalar::i() || m.det3 == -Scalar::i();
        return Outcome{m.det3.str(), "+-i", ok ? "0" : m.det3.str(), ok};
    });
    b.add("rep.m0.unit", "|det(Ci + D)| = 1", [=] { return same(m.norm.str(), "1"); });
    b.add("rep.m0.in_k", "m0 is symplectic and lies in K", [=] {
        bool ok = m.symplectic && m.inK;
        return Outcome{ok ? "in K" : "not in K", "in K", ok ? "0" : "membership fails", ok};
    });
}

using SuiteFn = void (*)(Builder&);

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> r{
        {"hc", suite_hc},         {"uea", suite_uea},     {"shift", suite_shift},
        {"maass", suite_maass},   {"sturm", suite_sturm}, {"gamma-numeric", suite_gamma},
        {"reptables", suite_rep},
    };
    return r;
}

std::vector<Check> run_one(const std::string& name, const Options& opt) {
    Builder b(opt);
    registry().at(name)(b);
    return b.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> n{"gamma-numeric", "hc", "maass", "reptables", "shift", "sturm", "uea"};
    return n;
}

bool is_suite(const std::string& name) { return name == "all" || registry().count(name) > 0; }

SuiteReport run_suite(const std::string& name, const Options& opt) {
    if (!is_suite(name)) throw std::invalid_argument("unknown suite " + name);
    SuiteReport rep{name, {}};
    std::vector<std::string> names = name == "all" ? suite_names() : std::vector<std::string>{name};
    unsigned jobs = std::max(1u, opt.jobs);
    std::vector<std::vector<Check>> parts(names.size());
    for (std::size_t start = 0; start < names.size(); start += jobs) {
        std::vector<std::future<std::vector<Check>>> fs;
        for (std::size_t i = start; i < std::min(names.size(), start + jobs); ++i)
            fs.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, run_one, names[i], std::cref(opt)));
        for (std::size_t i = 0; i < fs.size(); ++i) parts[start + i] = fs[i].get();
    }
    for (auto& p : parts) rep.checks.insert(rep.checks.end(), p.begin(), p.end());
    std::sort(rep.checks.begin(), rep.checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
    return rep;
}

std::map<std::string, std::string> golden_files() {
    std::map<std::string, std::string> g;
    g["structure_constants.txt"] = uea::structure_constants_text();
    g["c1_table.txt"] = shift::casimir_rule_c1().str();
    g["c2_table.txt"] = shift::casimir_rule_c2(Table::Literal).str();
    g["c2_table_repaired.txt"] = shift::casimir_rule_c2(Table::Repaired).str();
    g["delta_plus_seed.txt"] = half::delta_plus2(P("aT") * HalfExpr::exp_seed(), aff("k")).str();
    g["weight_one_intermediate.txt"] = half::delta_plus2(HalfExpr::h(), Affine(1)).str();
    {
        using namespace integrals;
        InvariantIntegrand A = from_halfexpr(half::delta_plus2(P("aT") * HalfExpr::exp_seed(), aff("k")));
        auto p = sturm_value(A, aff("k + 2")).value.as_product();
        GammaLimit l = gamma_limit(p->subs("k", Affine(1)));
        g["sturm_k1_constant.txt"] = (l.value * c_kappa(Affine(3)).inverse()).normalized().str() + "\n";
        InvariantIntegrand H{{{P("aT"), Affine(), Affine(), 0, 2}}};
        auto r = (*sturm_value(H, aff("kappa"), 0, false).value.as_product() * c_kappa(aff("kappa")).inverse()).normalized();
        g["holomorphic_seed_constant.txt"] = r.subs("kappa", Affine(3)).normalized().str() + "\n";
    }
    {
        std::ostringstream s;
        for (const auto& c : rep::langlands_enumerate())
            s << c.parabolic << " " << c.lambda.str() << " sigma=" << c.sigma << " nu=" << c.nu << "\n";
        for (const auto& r : rep::ktype_scan({3, 3}, 2, 50))
            s << "scan L1=" << r.l1 << " k=" << r.k.str() << " " << (r.occurs ? "occurs" : "-") << "\n";
        g["langlands_tables.txt"] = s.str();
    }
    return g;
}

}  // namespace siegel::verify
