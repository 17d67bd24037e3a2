#pragma once

#include <string>
#include <vector>

#include "siegel/exact/gamma.hpp"
#include "siegel/halfspace/halfexpr.hpp"

namespace siegel::integrals {

// coeff * det(T)^tauExp * det(TY)^detExp * tr(TY)^trPow * exp(-c pi tr(TY))
struct InvariantTerm {
    Poly coeff;
    Affine tauExp;
    Affine detExp;
    int trPow = 0;
    int c = 2;
};

struct InvariantIntegrand {
    std::vector<InvariantTerm> terms;
    std::string str() const;
};

// the X-Fourier coefficient A(T,Y) of an exp-term HalfExpr: b(T,Y) exp(2 pi i tr TZ) -> b(T,Y) exp(-2 pi tr TY)
// throws on h-jets or non-invariant monomials
InvariantIntegrand from_halfexpr(const half::HalfExpr& e);

// integral of exp(-tr Y) det(Y)^a tr(Y)^b dY / det(Y)^(3/2), b in {0,1}
GammaProduct base_moment(const Affine& a, int b);

// integral of exp(-tr(TY)) det(Y)^(e) dY: sqrt(pi) det(T)^-s Gamma(s) Gamma(s-1/2) with e = s - 3/2
GammaProduct base_integral(const Affine& e);
// integral of exp(-tr Y) tr(Y) det(Y)^e dY via d/dT_ij of det(T)^-s at T = E
GammaProduct trace_moment(const Affine& e);
// entrywise moment: coefficient of E in the integral of exp(-tr Y) Y det(Y)^(s-3/2) dY
GammaProduct entry_moment(const Affine& s);

// exp(-c pi tr(TY)) det(TY)^a tr(TY)^b dY/det(Y)^(3/2) -> (c pi)^(-2a-b) times the T-free moment
struct ChangedTerm {
    Poly coeff;
    Affine tauExp;
    Affine a;
    int b;
    Affine fourPi;   // accumulated (4 pi) power
    Poly scale;      // remaining rational factor (powers of 2 when c = 2)
};
ChangedTerm change_of_variables(const InvariantTerm& t);

// c(kappa) = sqrt(pi) (4 pi)^(3 - kappa) Gamma(kappa - 3/2) Gamma(kappa - 2)
GammaProduct c_kappa(const Affine& kappa);

struct SturmResult {
    GammaSum value;
    std::vector<GammaProduct> raw;  // one unnormalized product per integrand term
    // every Gamma argument has nonnegative constant part at s = 0 once the parameter is at pmin
    bool converges_for_positive_s(const std::string& param = "k", long pmin = 1) const;
};

// integral of A exp(-2 pi tr TY) det(TY)^(kappa + s - 3/2 + offset) dY/det(Y)^(3/2); s omitted unless regularize
SturmResult sturm_value(const InvariantIntegrand& A, const Affine& kappa, long offset = 0, bool regularize = true);

// s (s - 1/2) Gamma(s + k - 1/2) Gamma(s + k - 1)
GammaProduct sturm_closed_form();

}  // namespace siegel::integrals
