#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "siegel/exact/scalar.hpp"

namespace siegel::uea {

using Mat4 = std::array<std::array<Scalar, 4>, 4>;

// basis order; also the scalarK ordering (E+ < E- < B)
enum Letter : std::uint8_t { Ep11, Ep12, Ep22, Em11, Em12, Em22, B11, B12, B21, B22 };
inline constexpr int kDim = 10;

const std::string& letter_name(int x);
int letter_from_name(const std::string& n);  // throws on unknown

// E+(k,l), E-(k,l) symmetric in k,l; B(k,l); indices 1-based
int Eplus(int k, int l);
int Eminus(int k, int l);
int Bkl(int k, int l);

bool is_compact(int x);        // B letters
bool is_positive_root(int x);  // B12, Em11, Em12, Em22
bool is_negative_root(int x);  // B21, Ep11, Ep12, Ep22
bool is_cartan(int x);         // B11, B22

const Mat4& basis_matrix(int x);

Mat4 mat_zero();
Mat4 mat_identity();
Mat4 operator*(const Mat4& a, const Mat4& b);
Mat4 operator+(const Mat4& a, const Mat4& b);
Mat4 operator-(const Mat4& a, const Mat4& b);
Mat4 operator*(const Scalar& c, const Mat4& a);
bool mat_equal(const Mat4& a, const Mat4& b);
bool is_symplectic_algebra(const Mat4& m);  // M'W + WM = 0

using LinComb = std::vector<std::pair<int, Scalar>>;  // sorted by letter, no zeros

// exact coordinates of m in the basis; throws if m is outside the span
LinComb decompose(const Mat4& m);
Mat4 to_matrix(const LinComb& c);

// structure constants, computed once from the matrices
const LinComb& bracket(int x, int y);
LinComb bracket(const LinComb& a, const LinComb& b);

std::string lincomb_str(const LinComb& c);

// one line per ordered pair x<y: "[x, y] = ..."
std::string structure_constants_text();

}  // namespace siegel::uea
