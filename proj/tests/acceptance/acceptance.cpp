#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <unistd.h>
#include <sstream>
#include <string>
#include <vector>

#include "siegel/exact/parse.hpp"
#include "siegel/halfspace/halfexpr.hpp"
#include "siegel/integrals/integrals.hpp"
#include "siegel/integrals/quadrature.hpp"
#include "siegel/rep/tables.hpp"
#include "siegel/shift/shift.hpp"
#include "siegel/uea/casimir.hpp"

using namespace siegel;

namespace {

struct Result {
    bool pass = true;
    std::string note;
    void require(bool ok, const std::string& why) {
        if (!ok) {
            pass = false;
            note += (note.empty() ? "" : "; ") + why;
        }
    }
};

Affine aff(const char* t) { return Affine::from_poly(P(t)); }

std::string flat(std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    for (char& c : s)
        if (c == '\n') c = ' ';
    return s;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const std::string kGoldens = std::string(SIEGEL_SOURCE_DIR) + "/goldens/";

Result c1_hc() {
    Result r;
    for (const auto& f : rep::verify_hc_factorizations())
        r.require(f.residual.is_zero(), f.name + " residual " + f.residual.str());
    return r;
}

Result c2_casimir_recursion() {
    using namespace shift;
    Result r;
    ShiftOperator c1 = casimir_rule_c1(), c2 = casimir_rule_c2(Table::Literal);
    ShiftOperator dp = dplus_op(c1, c2, P("u")), dm = dminus_op(c1, c2, P("v"));
    r.require((dp - dplus_display()).is_zero(), "transcribed C2 table leaves a D+ residual at " +
                                                    std::to_string((dp - dplus_display()).size()) + " shifts");
    r.require((dm - dminus_display()).is_zero(), "D- residual at " + std::to_string((dm - dminus_display()).size()) + " shifts");
    r.require(dp.size() == 6 && dm.size() == 4,
              "term counts " + std::to_string(dp.size()) + "/" + std::to_string(dm.size()) + " instead of 6/4");
    r.require(dm.coeff({0, 4}) == P("64*pi^2*(v - u)*(v - u - 2)"), "spot coefficient at (0,4) differs");
    ShiftOperator c2r = casimir_rule_c2(Table::Repaired);
    bool repaired = dplus_op(c1, c2r, P("u")) == dplus_display() && dminus_op(c1, c2r, P("v")) == dminus_display() &&
                    dplus_op(c1, c2r, P("u")).size() == 6 && dminus_op(c1, c2r, P("v")).size() == 4;
    if (!r.pass) r.note += std::string("; repaired table at (0,0),(2,0),(2,2): ") + (repaired ? "passes" : "fails");
    return r;
}

Result c3_line_and_continuation() {
    using namespace shift;
    Result r;
    ShiftOperator c1 = casimir_rule_c1(), c2 = casimir_rule_c2(Table::Literal);
    auto line = restrict_line(dplus_op(c1, c2, P("u")));
    bool single = line.size() == 1 && line[0].first == Shift{2, 4} && line[0].second == P("64*pi^2*tau*(u - 1)*(u - 2)");
    r.require(single, "v = 2u+1 restriction has " + std::to_string(line.size()) + " terms");
    ShiftOperator x = P("u^2 - 1") * (c1 - ShiftOperator::scalar(P("u^2 - 4")));
    r.require(dplus_op(c1, c2, Poly(1)) == dplus_op(c1, c2, P("u")) - x, "D+(1) = D+(u) - (u^2-1)(C1-(u^2-4)) does not hold");
    r.require(commutator(c1, c2).is_zero(), "[C1,C2] != 0");
    if (!r.pass) {
        ShiftOperator c2r = casimir_rule_c2(Table::Repaired);
        auto l2 = restrict_line(dplus_op(c1, c2r, P("u")));
        bool rep = l2.size() == 1 && commutator(c1, c2r).is_zero() &&
                   dplus_op(c1, c2r, Poly(1)) == dplus_op(c1, c2r, P("u")) + x;
        r.note += std::string("; repaired table with the + sign: ") + (rep ? "passes" : "fails");
    }
    return r;
}

Result c4_uea() {
    using namespace uea;
    Result r;
    auto o = fit_orientation();
    r.require(o.has_value(), "no B orientation makes C1, C2 central");
    if (!o) return r;
    auto s = fit_sigma(*o);
    r.require(s.has_value(), "no phase sigma");
    if (!s) return r;
    r.require(verify_scalar_restriction(Casimir::C1, *o, *s).ok(), "C1 K-type formula");
    r.require(verify_scalar_restriction(Casimir::C2, *o, *s).ok(), "C2 K-type formula");
    auto h = fit_hc(*o);
    r.require(h.has_value(), "no HC convention");
    if (!h) return r;
    r.require(hc_image(build_casimir(Casimir::C1, *o).element, *h) == hc_expected(Casimir::C1), "hc_image(C1)");
    r.require(hc_image(build_casimir(Casimir::C2, *o).element, *h) == hc_expected(Casimir::C2), "hc_image(C2)");
    return r;
}

Result c5_maass() {
    using namespace half;
    Result r;
    auto rule = [](const HalfExpr& f, const HalfExpr& g) {
        return (det2(Op::dZ, f * g) -
                (det2(Op::dZ, f) * g + cap2(gradient(Op::dZ, f), gradient(Op::dZ, g)) + f * det2(Op::dZ, g)))
            .is_zero();
    };
    r.require(rule(HalfExpr::det_power(aff("k - 1/2")), HalfExpr::exp_seed()), "product rule on the seed");
    r.require(rule(HalfExpr(P("y11*y22 + 3*y12")), HalfExpr(P("y11^2 - y22"))), "product rule on polynomials");
    HalfExpr d = HalfExpr::det_power(aff("alpha"));
    bool h1 = true;
    for (int c = 0; c < 3; ++c) h1 = h1 && dY(d, c) == HalfExpr::term(P("alpha") * adjY(c), aff("alpha - 1"));
    r.require(h1, "C_1(alpha) lemma");
    r.require(det2(Op::dY, d) == HalfExpr::term(P("alpha*(alpha + 1/2)"), aff("alpha - 1")), "C_2(alpha) lemma");
    HalfExpr seed = P("aT") * HalfExpr::exp_seed();
    r.require(delta_plus2(seed, aff("k")) == fourier_coeff_display(aff("k")), "Delta+ seed image differs from display");
    HalfExpr half = delta_plus2(seed, aff("1/2"));
    r.require(half.is_zero(), "coefficient at k=1/2 is " + flat(half.str()) + " (bracket leaves the constant 1)");
    HalfExpr hp = delta_plus2(HalfExpr::h(), Affine(1));
    r.require(delta_minus2(hp) == P("3/4") * HalfExpr::h(), "Delta- Delta+ h != 3/4 h");
    return r;
}

Result c6_sturm() {
    using namespace integrals;
    Result r;
    InvariantIntegrand A = from_halfexpr(half::delta_plus2(P("aT") * half::HalfExpr::exp_seed(), aff("k")));
    auto limits = [&](long off) {
        std::vector<GammaLimit> out;
        auto p = sturm_value(A, aff("k + 2"), off).value.as_product();
        if (!p) return out;
        for (long k = 1; k <= 5; ++k) out.push_back(gamma_limit(p->subs("k", Affine(k))));
        return out;
    };
    auto p = sturm_value(A, aff("k + 2")).value.as_product();
    r.require(p.has_value(), "transform is not a single product");
    if (!p) return r;
    GammaProduct q = (*p * sturm_closed_form().inverse()).normalized();
    r.require(q.num.empty() && q.den.empty() && !q.pre.num().depends_on("s"), "quotient by the closed form is not a unit");
    auto pattern = [](const std::vector<GammaLimit>& l) {
        if (l.size() != 5) return false;
        bool ok = l[0].kind == GammaLimit::Kind::Value && !l[0].is_zero();
        for (int i = 1; i < 5; ++i) ok = ok && l[i].is_zero();
        return ok;
    };
    auto l0 = limits(0);
    r.require(pattern(l0), "vanishing pattern at offset 0");
    GammaLimit bare = gamma_limit(sturm_closed_form().subs("k", Affine(1)));
    r.require(bare.value.normalized().pre == RatFunc(P("-sqrtpi/2")), "bare limit " + bare.str());
    GammaProduct c = (l0[0].value * c_kappa(Affine(3)).inverse()).normalized();
    r.require(slurp(kGoldens + "sturm_k1_constant.txt") == c.str() + "\n", "k=1 constant differs from golden");
    GammaProduct expected(RatFunc(P("-aT*tau")) * RatFunc(P("4*pi")).pow(-1));
    std::string agree = c == expected ? "agrees with -1/(4 pi) a(T) det(T)" : "disagrees with -1/(4 pi)";
    for (long off : {-1L, 1L})
        r.require(pattern(limits(off)), "offset " + std::to_string(off) + " breaks the vanishing pattern");
    r.note += (r.note.empty() ? "" : "; ") + std::string("k=1 constant ") + agree;
    return r;
}

Result c7_gamma_oracle(double tol) {
    using namespace integrals;
    Result r;
    QuadratureConfig cfg;
    cfg.tol = tol;
    auto rel = [&](double got, double want) { return std::abs(got - want) <= tol * std::abs(want); };
    r.require(rel(cone_integral(gamma_integrand({1, 0, 1}, 0.5, 0), cfg).estimate, M_PI / 2), "base case s=2");
    for (std::array<double, 3> T : {std::array<double, 3>{1, 0, 1}, std::array<double, 3>{1, 0.5, 1}})
        for (double s : {1.1, 1.5, 2.0, 3.0}) {
            double detT = T[0] * T[2] - T[1] * T[1];
            double want = base_integral(aff("s - 3/2")).eval({{"s", s}, {"tau", detT}}).real();
            r.require(rel(cone_integral(gamma_integrand(T, s - 1.5, 0), cfg).estimate, want), "first display at s=" + std::to_string(s));
        }
    for (double s : {1.1, 1.5, 2.0, 3.0}) {
        double want = trace_moment(aff("s - 1")).eval({{"s", s}}).real();
        r.require(rel(cone_integral(gamma_integrand({1, 0, 1}, s - 1, 1), cfg).estimate, want), "second display at s=" + std::to_string(s));
    }
    return r;
}

Result c8_rep() {
    using namespace rep;
    Result r;
    std::vector<long> hits;
    for (const auto& row : ktype_scan({3, 3}, 2, 50))
        if (row.occurs) hits.push_back(row.l1);
    r.require(hits == std::vector<long>{2}, "scan hits differ from {2}");
    std::set<Weight> chars;
    for (const auto& c : langlands_enumerate()) chars.insert(c.lambda);
    r.require(chars == std::set<Weight>{{1, -1}, {1, 0}, {1, 2}, {2, 1}}, "Langlands characters differ");
    M0Result m = m0_check();
    r.require((m.det3 == Scalar::i() || m.det3 == -Scalar::i()) && m.norm == Scalar(1), "m0 determinant");
    return r;
}

Result c9_normalization() {
    using namespace integrals;
    Result r;
    GammaProduct c3 = c_kappa(Affine(3)).normalized();
    r.require(c3.factor_free() && c3.pre == RatFunc(P("pi/2")), "c(3) = " + c3.str());
    InvariantIntegrand H{{{P("aT"), Affine(), Affine(), 0, 2}}};
    GammaProduct g = (*sturm_value(H, aff("kappa"), 0, false).value.as_product() * c_kappa(aff("kappa")).inverse()).normalized();
    r.require(g.num.empty() && g.den.empty() && !g.pre.num().depends_on("s") && g.fourPi.coef("s") == 0, "seed transform not s-free");
    r.require(g.pre == RatFunc(P("aT")), "seed transform not proportional to a(T)");
    r.require(slurp(kGoldens + "holomorphic_seed_constant.txt") == g.subs("kappa", Affine(3)).normalized().str() + "\n",
              "seed constant differs from golden");
    return r;
}

Result c10_determinism() {
    Result r;
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("siegel_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::string exe = SIEGEL_VERIFY_EXE;
    auto run = [&](const std::string& out) {
        std::string cmd = "\"" + exe + "\" verify all --json \"" + (dir / out).string() + "\" > /dev/null";
        return std::system(cmd.c_str());
    };
    int a = run("a.json"), b = run("b.json");
    r.require(a == 0 && b == 0, "verify all exit codes " + std::to_string(a) + ", " + std::to_string(b));
    std::string ja = slurp((dir / "a.json").string()), jb = slurp((dir / "b.json").string());
    r.require(!ja.empty() && ja == jb, "reports differ");
    fs::remove_all(dir);
    return r;
}

}  // namespace

int main() {
    struct Item {
        int id;
        const char* title;
        double budget;
        std::function<Result()> fn;
    };
    std::vector<Item> items{
        {1, "Harish-Chandra factorization", 1, c1_hc},
        {2, "Casimir recursion (transcribed C2 table)", 10, c2_casimir_recursion},
        {3, "line specialization and continuation algebra", 10, c3_line_and_continuation},
        {4, "enveloping-algebra restriction", 30, c4_uea},
        {5, "Maass calculus", 5, c5_maass},
        {6, "phantom Sturm computation", 5, c6_sturm},
        {7, "Gamma-integral oracle", 30, [] { return c7_gamma_oracle(1e-6); }},
        {8, "representation tables", 1, c8_rep},
        {9, "normalization", 5, c9_normalization},
        {10, "whole-suite determinism", 60, c10_determinism},
    };
    int failures = 0;
    for (auto& it : items) {
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = it.fn();
        } catch (const std::exception& e) {
            r.require(false, std::string("exception: ") + e.what());
        }
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.require(sec < it.budget, "runtime " + std::to_string(sec) + " s over budget");
        if (!r.pass) ++failures;
        std::printf("criterion %2d %s  %s (%.2f s)%s%s\n", it.id, r.pass ? "PASS" : "FAIL", it.title, sec,
                    r.note.empty() ? "" : ": ", r.note.c_str());
    }
    return failures ? 1 : 0;
}
