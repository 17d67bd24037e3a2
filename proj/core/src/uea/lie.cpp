#include "siegel/uea/lie.hpp"

#include <map>
#include <stdexcept>

namespace siegel::uea {

namespace {

const std::array<std::string, kDim> kNames = {"Ep11", "Ep12", "Ep22", "Em11", "Em12",
                                              "Em22", "B11",  "B12",  "B21",  "B22"};

Mat4 build_matrix(int x) {
    Mat4 m = mat_zero();
    auto e = [](int k, int l) {
        std::array<std::array<Scalar, 2>, 2> r{};
        r[k][l] = Scalar(1);
        return r;
    };
    auto put = [&](int bi, int bj, const std::array<std::array<Scalar, 2>, 2>& b) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m[2 * bi + i][2 * bj + j] = b[i][j];
    };
    auto lin = [](const Scalar& a, const std::array<std::array<Scalar, 2>, 2>& p, const Scalar& b,
                  const std::array<std::array<Scalar, 2>, 2>& q) {
        std::array<std::array<Scalar, 2>, 2> r{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r[i][j] = a * p[i][j] + b * q[i][j];
        return r;
    };
    const Scalar half = Scalar::frac(1, 2), I = Scalar::i();
    if (x <= Em22) {
        static const int kk[3] = {0, 0, 1}, ll[3] = {0, 1, 1};
        int idx = x % 3;
        Scalar sg = x < Em11 ? Scalar(1) : Scalar(-1);
        auto X = lin(half, e(kk[idx], ll[idx]), half, e(ll[idx], kk[idx]));
        auto zero = lin(0, X, 0, X);
        put(0, 0, X);
        put(0, 1, lin(sg * I, X, 0, X));
        put(1, 0, lin(sg * I, X, 0, X));
        put(1, 1, lin(-1, X, 0, zero));
    } else {
        int idx = x - B11;
        int k = idx / 2, l = idx % 2;
        auto A = lin(half, e(k, l), -half, e(l, k));
        auto S = lin(half * I, e(k, l), half * I, e(l, k));
        put(0, 0, A);
        put(0, 1, S);
        put(1, 0, lin(-1, S, 0, S));
        put(1, 1, A);
    }
    return m;
}

struct Tables {
    std::array<Mat4, kDim> mats;
    std::array<std::array<LinComb, kDim>, kDim> br;
};

const Tables& tables() {
    static const Tables t = [] {
        Tables t;
        for (int x = 0; x < kDim; ++x) t.mats[x] = build_matrix(x);
        return t;
    }();
    return t;
}

const std::array<std::array<LinComb, kDim>, kDim>& bracket_table() {
    static const auto table = [] {
        std::array<std::array<LinComb, kDim>, kDim> br;
        const auto& m = tables().mats;
        for (int x = 0; x < kDim; ++x)
            for (int y = 0; y < kDim; ++y) br[x][y] = decompose(m[x] * m[y] - m[y] * m[x]);
        return br;
    }();
    return table;
}

}  // namespace

const std::string& letter_name(int x) { return kNames.at(x); }

int letter_from_name(const std::string& n) {
    for (int x = 0; x < kDim; ++x)
        if (kNames[x] == n) return x;
    throw std::invalid_argument("unknown Lie basis letter " + n);
}

int Eplus(int k, int l) {
    if (k > l) std::swap(k, l);
    return k == 1 ? (l == 1 ? Ep11 : Ep12) : Ep22;
}
int Eminus(int k, int l) { return Eplus(k, l) + 3; }
int Bkl(int k, int l) { return B11 + 2 * (k - 1) + (l - 1); }

bool is_compact(int x) { return x >= B11; }
bool is_positive_root(int x) { return x == B12 || x == Em11 || x == Em12 || x == Em22; }
bool is_negative_root(int x) { return x == B21 || x == Ep11 || x == Ep12 || x == Ep22; }
bool is_cartan(int x) { return x == B11 || x == B22; }

const Mat4& basis_matrix(int x) { return tables().mats.at(x); }

Mat4 mat_zero() {
    Mat4 m;
    for (auto& r : m) r.fill(Scalar(0));
    return m;
}
Mat4 mat_identity() {
    Mat4 m = mat_zero();
    for (int i = 0; i < 4; ++i) m[i][i] = Scalar(1);
    return m;
}
Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r = mat_zero();
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}
Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r = a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] += b[i][j];
    return r;
}
Mat4 operator-(const Mat4& a, const Mat4& b) { return a + Scalar(-1) * b; }
Mat4 operator*(const Scalar& c, const Mat4& a) {
    Mat4 r = a;
    for (auto& row : r)
        for (auto& v : row) v *= c;
    return r;
}
bool mat_equal(const Mat4& a, const Mat4& b) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (a[i][j] != b[i][j]) return false;
    return true;
}

bool is_symplectic_algebra(const Mat4& m) {
    Mat4 W = mat_zero();
    W[0][2] = W[1][3] = Scalar(-1);
    W[2][0] = W[3][1] = Scalar(1);
    Mat4 mt;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) mt[i][j] = m[j][i];
    return mat_equal(mt * W + W * m, mat_zero());
}

LinComb decompose(const Mat4& m) {
    // 16 equations, 10 unknowns, augmented column at index 10
    std::vector<std::array<Scalar, kDim + 1>> rows(16);
    const auto& mats = tables().mats;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            auto& r = rows[4 * i + j];
            for (int x = 0; x < kDim; ++x) r[x] = mats[x][i][j];
            r[kDim] = m[i][j];
        }
    std::vector<int> pivcol;
    std::size_t row = 0;
    for (int c = 0; c < kDim && row < rows.size(); ++c) {
        std::size_t p = row;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[row]);
        Scalar inv = Scalar(1) / rows[row][c];
        for (auto& v : rows[row]) v *= inv;
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q == row || rows[q][c].is_zero()) continue;
            Scalar f = rows[q][c];
            for (int t = 0; t <= kDim; ++t) rows[q][t] -= f * rows[row][t];
        }
        pivcol.push_back(c);
        ++row;
    }
    for (std::size_t q = row; q < rows.size(); ++q)
        if (!rows[q][kDim].is_zero()) throw std::logic_error("matrix outside the span of the Lie basis");
    if (pivcol.size() != static_cast<std::size_t>(kDim)) throw std::logic_error("Lie basis matrices are dependent");
    LinComb out;
    for (std::size_t q = 0; q < pivcol.size(); ++q)
        if (!rows[q][kDim].is_zero()) out.emplace_back(pivcol[q], rows[q][kDim]);
    return out;
}

Mat4 to_matrix(const LinComb& c) {
    Mat4 r = mat_zero();
    for (auto& [x, a] : c) r = r + a * basis_matrix(x);
    return r;
}

const LinComb& bracket(int x, int y) { return bracket_table().at(x).at(y); }

LinComb bracket(const LinComb& a, const LinComb& b) {
    std::map<int, Scalar> acc;
    for (auto& [x, p] : a)
        for (auto& [y, q] : b)
            for (auto& [z, r] : bracket(x, y)) acc[z] += p * q * r;
    LinComb out;
    for (auto& [z, c] : acc)
        if (!c.is_zero()) out.emplace_back(z, c);
    return out;
}

std::string lincomb_str(const LinComb& c) {
    if (c.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [x, a] : c) {
        std::string coef;
        bool neg = false;
        Scalar v = a;
        if (v.is_real() && sgn(v.re()) < 0) {
            neg = true;
            v = -v;
        }
        s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (!v.is_one()) s += v.str() + "*";
        s += letter_name(x);
        first = false;
    }
    return s;
}

std::string structure_constants_text() {
    std::string out;
    for (int x = 0; x < kDim; ++x)
        for (int y = x + 1; y < kDim; ++y)
            out += "[" + letter_name(x) + ", " + letter_name(y) + "] = " + lincomb_str(bracket(x, y)) + "\n";
    return out;
}

}  // namespace siegel::uea
