#include "siegel/rep/tables.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "siegel/exact/parse.hpp"

namespace siegel::rep {

std::string Weight::str() const { return "(" + qstr(l1) + "," + qstr(l2) + ")"; }

mpq_class dot(const Weight& a, const Weight& b) { return a.l1 * b.l1 + a.l2 * b.l2; }

std::string system_name(System s) { return s == System::Delta1 ? "Delta1+" : "Delta2+"; }

const RootDatum& root_datum() {
    static const RootDatum d{
        {{0, 2}, {0, -2}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {2, 0}, {-2, 0}},
        {{1, -1}},
    };
    return d;
}

std::vector<Weight> RootDatum::positive(System s) const {
    if (s == System::Delta1) return {{0, 2}, {1, -1}, {1, 1}, {2, 0}};
    return {{0, -2}, {1, -1}, {1, 1}, {2, 0}};
}

Weight reflect(const Weight& w, const Weight& a) {
    mpq_class c = 2 * dot(w, a) / dot(a, a);
    return {w.l1 - c * a.l1, w.l2 - c * a.l2};
}

std::vector<Weight> weyl_orbit(const Weight& w) {
    const Weight a1{0, 2}, a2{1, -1};
    std::set<Weight> seen{w};
    std::vector<Weight> todo{w};
    while (!todo.empty()) {
        Weight x = todo.back();
        todo.pop_back();
        for (const Weight& a : {a1, a2}) {
            Weight y = reflect(x, a);
            if (seen.insert(y).second) todo.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<HCFactorization> verify_hc_factorizations() {
    Poly c1 = P("L1^2 + L2^2 - 5");
    Poly c2 = P("L1^4 + L2^4 - 17") + Poly(3) * c1;
    Poly u2 = P("u^2"), v2 = P("v^2");
    Poly dplus = Poly(Scalar::frac(1, 2)) *
                 (c1 * c1 - c2 + Poly(11) * c1 - Poly(2) * (u2 - Poly(1)) * c1 +
                  Poly(2) * (u2 - Poly(1)) * (u2 - Poly(4)));
    Poly dminus = Poly(2) * c2 - c1 * c1 - Poly(34) * c1 - Poly(2) * (v2 - Poly(9)) * c1 +
                  (v2 - Poly(9)) * (v2 - Poly(1));
    Poly lam = P("L1"), mu = P("L2");
    auto coroot = [&](const Weight& a) {
        mpq_class n = dot(a, a);
        return Poly(Scalar(2 * a.l1 / n)) * lam + Poly(Scalar(2 * a.l2 / n)) * mu;
    };
    Poly longProd(1), shortProd(1);
    for (const Weight& a : root_datum().roots) {
        if (dot(a, a) == 4) longProd = longProd * (coroot(a) - P("u"));
        else shortProd = shortProd * (coroot(a) - P("v"));
    }
    HCFactorization p{"D+", dplus, P("(L1^2 - u^2)*(L2^2 - u^2)"), longProd, {}};
    p.residual = p.definition - p.factored;
    HCFactorization m{"D-", dminus, P("((L1 + L2)^2 - v^2)*((L1 - L2)^2 - v^2)"), shortProd, {}};
    m.residual = m.definition - m.factored;
    return {p, m};
}

bool is_dominant_regular(const Weight& w, System s) {
    for (const Weight& a : root_datum().positive(s))
        if (dot(w, a) <= 0) return false;
    return true;
}

Weight blattner_shift(System s) {
    Weight sum{0, 0};
    for (const Weight& a : root_datum().positive(s)) sum = sum + a;
    Weight b{sum.l1 / 2, sum.l2 / 2};
    for (const Weight& a : root_datum().compactPositive) b = b - a;
    return b;
}

Weight blattner(const Weight& w, System s) {
    if (!is_dominant_regular(w, s))
        throw std::invalid_argument(w.str() + " is not dominant regular for " + system_name(s));
    return w + blattner_shift(s);
}

std::pair<Weight, Weight> cone_generators(System s) {
    if (s == System::Delta1) return {{0, 2}, {1, -1}};
    return {{1, 1}, {0, -2}};
}

namespace {

bool in_cone(const Weight& d, const Weight& g1, const Weight& g2) {
    mpq_class det = g1.l1 * g2.l2 - g1.l2 * g2.l1;
    mpq_class n1 = (d.l1 * g2.l2 - d.l2 * g2.l1) / det;
    mpq_class n2 = (g1.l1 * d.l2 - g1.l2 * d.l1) / det;
    return n1 >= 0 && n2 >= 0 && n1.get_den() == 1 && n2.get_den() == 1;
}

}  // namespace

bool ktype_occurs(const Weight& k, const Weight& target, System s) {
    auto [g1, g2] = cone_generators(s);
    return in_cone(target - k, g1, g2) || in_cone(-target - k, g1, g2);
}

std::vector<ScanRow> ktype_scan(const Weight& target, long lo, long hi) {
    std::vector<ScanRow> out;
    for (long l1 = lo; l1 <= hi; ++l1) {
        Weight k = blattner(Weight(l1, 1), System::Delta1);
        out.push_back({l1, k, ktype_occurs(k, target, System::Delta1)});
    }
    return out;
}

namespace {

using CWeight = std::array<Scalar, 2>;

// some Weyl conjugate has first coordinate 1
bool in_orbit_of_one(const CWeight& w) {
    for (const Scalar& c : w)
        if (c == Scalar(1) || c == Scalar(-1)) return true;
    return false;
}

bool is_real(const CWeight& w) { return w[0].is_real() && w[1].is_real(); }

const char* kSiegelUnitary = "Siegel parabolic: unitary range 0 <= z <= 1 with n odd";
const char* kSiegelOrbit = "Siegel parabolic: Lambda = (n+z, -n+z) in the orbit of (1,s) forces z integral";
const char* kKlingenOrbit = "Klingen parabolic: Lambda = (2z, 2n) in the orbit of (1,s) forces 2z = +-1";
const char* kKlingenUnitary = "Klingen parabolic: sigma = (sigma_n, -) for n >= 0 or (sigma_1, +)";
const char* kKlingenEisenstein = "Klingen parabolic: residual bound |Lambda|^2 <= |delta|^2 = 5";
const char* kBorelUnitary = "Borel: unitary nu is imaginary, (x+iy, x-iy) with 0 < x <= 1/2, (x, iy) with 0 < x <= 1 and y != 0, real z1 >= z2 >= 0 with z1 + z2 <= 1, or (2,1) with sigma = 1";
const char* kBorelReal = "Borel: residual spectrum requires a real infinitesimal character";

}  // namespace

std::vector<Candidate> langlands_enumerate() {
    std::vector<Candidate> out;
    const long N = 12;

    // Siegel: sigma_n^+, nu = z(e1 - e2)
    {
        std::set<Weight> seen;
        for (long n = 0; n <= N; ++n)
            for (long z2 = -2 * N; z2 <= 2 * N; ++z2) {
                mpq_class z(z2, 2);
                z.canonicalize();
                CWeight w{Scalar(n + z), Scalar(-n + z)};
                if (z.get_den() != 1 || !in_orbit_of_one(w)) continue;
                if (!(z >= 0 && z <= 1 && n % 2 == 1)) continue;
                Weight lam(n + z, -n + z);
                if (!seen.insert(lam).second) continue;
                out.push_back({"Siegel", lam, "sigma_" + std::to_string(n + 1) + "^+",
                               "z = " + qstr(z), {kSiegelOrbit, kSiegelUnitary},
                               "odd scalar K-type excluded by Frobenius reciprocity (parity check)"});
            }
    }

    // Klingen: (sigma_n^e, eps), nu = 2z e1
    {
        std::map<Weight, std::vector<std::string>> found;
        for (long n = 0; n <= N; ++n)
            for (long z2 = -2 * N; z2 <= 2 * N; ++z2) {
                mpq_class z(z2, 2);
                z.canonicalize();
                CWeight w{Scalar(2 * z), Scalar(2 * n)};
                if (2 * z != 1 && 2 * z != -1) continue;
                if (!in_orbit_of_one(w)) continue;
                for (int eps : {1, -1})
                    for (char e : {'+', '-'}) {
                        bool unitary = eps == -1 || n == 1;
                        if (!unitary) continue;
                        mpq_class norm = 4 * z * z + 4 * n * n;
                        if (norm > 5) continue;
                        // sign of 2z is a Weyl reflection; keep 2z = 1
                        Weight lam(abs(2 * z), mpq_class(2 * n));
                        std::string s = std::string("(sigma_") + std::to_string(n) + "^" + e + "," +
                                        (eps > 0 ? "+" : "-") + ")";
                        auto& v = found[lam];
                        if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
                    }
            }
        for (auto& [lam, sigmas] : found) {
            std::string s;
            for (const auto& x : sigmas) s += (s.empty() ? "" : " | ") + x;
            out.push_back({"Klingen", lam, s, "e1", {kKlingenOrbit, kKlingenUnitary, kKlingenEisenstein},
                           "residual Eisenstein bound taken as given"});
        }
    }

    // Borel: nu = (z1, z2), z_j = a + ib on a half-integer grid
    {
        std::vector<Scalar> grid;
        for (long a = -6; a <= 6; ++a)
            for (long b = -2; b <= 2; ++b) grid.emplace_back(mpq_class(a, 2), mpq_class(b, 2));
        std::map<Weight, std::set<std::string>> found;
        for (const Scalar& z1 : grid)
            for (const Scalar& z2 : grid)
                for (int e1 : {1, -1})
                    for (int e2 : {1, -1}) {
                        CWeight w{z1, z2};
                        const mpq_class &x1 = z1.re(), &y1 = z1.im(), &x2 = z2.re(), &y2 = z2.im();
                        bool triv = e1 == 1 && e2 == 1;
                        bool unitary = (x1 == 0 && x2 == 0) ||
                                       (x1 == x2 && y1 == -y2 && x1 > 0 && x1 <= mpq_class(1, 2)) ||
                                       (y1 == 0 && x1 > 0 && x1 <= 1 && x2 == 0 && y2 != 0) ||
                                       (y1 == 0 && y2 == 0 && x1 >= x2 && x2 >= 0 && x1 + x2 <= 1) ||
                                       (y1 == 0 && y2 == 0 && x1 == 2 && x2 == 1 && triv);
                        if (!unitary || !in_orbit_of_one(w) || !is_real(w)) continue;
                        found[Weight(x1, x2)].insert(std::string("sigma^{") + (e1 > 0 ? "+" : "-") + "," +
                                                     (e2 > 0 ? "+" : "-") + "}");
                    }
        for (auto& [lam, sigmas] : found) {
            std::string s;
            for (const auto& x : sigmas) s += (s.empty() ? "" : " | ") + x;
            out.push_back({"Borel", lam, s, lam.str(), {kBorelUnitary, kBorelReal},
                           "sigma = 1 selected by the K-type (3,3) requirement"});
        }
    }
    return out;
}

bool parity_excludes(long w, long residue, long modulus) {
    long r = ((w - residue) % modulus + modulus) % modulus;
    return r != 0;
}

M0Result m0_check() {
    // m(lambda, g) with lambda = 1, g = [[0,1],[-1,0]]
    const long lambda = 1, a = 0, b = 1, c = -1, d = 0, nu = a * d - b * c;
    std::array<std::array<long, 4>, 4> m{{{lambda, 0, 0, 0}, {0, a, 0, b}, {0, 0, nu / lambda, 0}, {0, c, 0, d}}};
    // symplectic blocks [[A,B],[C,D]] on coordinates (1,2 | 3,4)
    auto block = [&](int r, int s) {
        std::array<long, 4> x{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) x[2 * i + j] = m[2 * r + i][2 * s + j];
        return x;
    };
    auto A = block(0, 0), B = block(0, 1), C = block(1, 0), D = block(1, 1);
    M0Result r;
    std::array<Scalar, 4> e;
    for (int i = 0; i < 4; ++i) e[i] = Scalar(C[i]) * Scalar::i() + Scalar(D[i]);
    r.det = e[0] * e[3] - e[1] * e[2];
    r.det3 = r.det * r.det * r.det;
    r.norm = r.det * r.det.conj();
    // M^T J M = J
    long J[4][4] = {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
    bool sym = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            long s = 0;
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) s += m[k][i] * J[k][l] * m[l][j];
            sym = sym && s == J[i][j];
        }
    r.symplectic = sym;
    r.inK = sym && A == D && B == std::array<long, 4>{-C[0], -C[1], -C[2], -C[3]};
    return r;
}

}  // namespace siegel::rep
