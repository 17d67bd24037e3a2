#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "siegel/exact/poly.hpp"

namespace siegel::rep {

struct Weight {
    mpq_class l1, l2;
    Weight() = default;
    Weight(mpq_class a, mpq_class b) : l1(std::move(a)), l2(std::move(b)) {}
    Weight(long a, long b) : l1(a), l2(b) {}
    friend bool operator==(const Weight& a, const Weight& b) { return a.l1 == b.l1 && a.l2 == b.l2; }
    friend bool operator<(const Weight& a, const Weight& b) {
        return a.l1 != b.l1 ? a.l1 < b.l1 : a.l2 < b.l2;
    }
    Weight operator+(const Weight& o) const { return {l1 + o.l1, l2 + o.l2}; }
    Weight operator-(const Weight& o) const { return {l1 - o.l1, l2 - o.l2}; }
    Weight operator-() const { return {-l1, -l2}; }
    std::string str() const;
};

mpq_class dot(const Weight& a, const Weight& b);

enum class System { Delta1, Delta2 };
std::string system_name(System s);

struct RootDatum {
    std::vector<Weight> roots;
    std::vector<Weight> compactPositive;
    std::vector<Weight> positive(System s) const;
};
const RootDatum& root_datum();

Weight reflect(const Weight& w, const Weight& alpha);
std::vector<Weight> weyl_orbit(const Weight& w);  // sorted
inline void PrintTo(const Weight& w, std::ostream* os) { *os << w.str(); }

struct HCFactorization {
    std::string name;
    Poly definition;   // D(u) or D(v) with Lambda(C1), Lambda(C2) substituted
    Poly factored;
    Poly rootProduct;  // product over long or short coroots
    Poly residual;
    bool ok() const { return residual.is_zero() && (definition - rootProduct).is_zero(); }
};
std::vector<HCFactorization> verify_hc_factorizations();

bool is_dominant_regular(const Weight& w, System s);
Weight blattner_shift(System s);     // half sum of positive roots minus compact positive roots
Weight blattner(const Weight& w, System s);  // throws std::invalid_argument unless dominant regular

std::pair<Weight, Weight> cone_generators(System s);
// target or -target in k + Z>=0 g1 + Z>=0 g2
bool ktype_occurs(const Weight& k, const Weight& target, System s);

struct ScanRow {
    long l1;
    Weight k;
    bool occurs;
};
std::vector<ScanRow> ktype_scan(const Weight& target, long lo, long hi);

struct Candidate {
    std::string parabolic;
    Weight lambda;
    std::string sigma;
    std::string nu;
    std::vector<std::string> citations;
    std::string assumption;
};
std::vector<Candidate> langlands_enumerate();

// scalar K-type of weight w restricted to a group whose types lie in residue + modulus Z
bool parity_excludes(long w, long residue, long modulus);

struct M0Result {
    Scalar det;
    Scalar det3;
    Scalar norm;  // det * conj(det)
    bool symplectic = false;
    bool inK = false;
};
M0Result m0_check();

}  // namespace siegel::rep
