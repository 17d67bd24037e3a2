#pragma once

#include <optional>
#include <string>
#include <vector>

#include "siegel/uea/element.hpp"

namespace siegel::uea {

enum class Casimir { C1, C2 };

// how the B block enters the formal traces: B_kl read as the letter B(k,l) or B(l,k)
enum class BOrientation { Literal, Transposed };
const char* orientation_name(BOrientation o);

// formal traces expanded in written letter order
Element formal_trace(const std::vector<int (*)(int, int)>& factors);
Element trace_EpEm();      // tr(E+E-)
Element trace_EpEmEpEm();  // tr(E+E-E+E-)

struct CasimirBuild {
    Element element;
    std::size_t rawTerms = 0;  // index terms before merging
};
CasimirBuild build_casimir(Casimir which, BOrientation orient);

// [C, x] normalizes to zero for every basis letter
bool is_central(const Element& c);

// first orientation (Literal, Transposed) making both Casimirs central
std::optional<BOrientation> fit_orientation();

// trailing B block replaced through chi(B_kl) = sigma*kappa*delta_kl; input scalarK-normal
Element scalar_ktype_eval(const Element& e, const Scalar& sigma);

struct RestrictionCheck {
    Element residual;  // over E-letters, coefficients in kappa
    bool ok() const { return residual.is_zero(); }
};
// pi(C1) - pi(trE+E-) + kappa*m*(m+1-kappa), and the C2 analogue, at m = 2
RestrictionCheck verify_scalar_restriction(Casimir which, BOrientation orient, const Scalar& sigma);

std::optional<Scalar> fit_sigma(BOrientation orient);  // first of 1, -1, i, -i passing the C1 check

struct HCConvention {
    int phase = 1;  // B_jj -> phase * (L_j - shift * delta_j)
    int shift = 1;  // +1: Lambda - delta, -1: Lambda + delta
};
std::string hc_convention_str(const HCConvention& c);

Poly hc_image(const Element& e, const HCConvention& c);
Poly hc_expected(Casimir which);  // L1^2+L2^2-5 and L1^4+L2^4-17+3(L1^2+L2^2-5)
std::optional<HCConvention> fit_hc(BOrientation orient);  // first matching hc_image(C1)

}  // namespace siegel::uea
