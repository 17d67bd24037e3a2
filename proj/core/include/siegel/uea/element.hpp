#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "siegel/exact/poly.hpp"
#include "siegel/uea/lie.hpp"

namespace siegel::uea {

using Word = std::vector<std::uint8_t>;

// linear combination of words in the basis letters, polynomial coefficients
class Element {
public:
    using Terms = std::map<Word, Poly>;

    Element() = default;
    Element(const Poly& c);
    static Element letter(int x);
    static Element word(const Word& w, const Poly& c = Poly(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const Word& w, const Poly& c);
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);  // concatenation
    friend Element operator*(const Poly& c, const Element& a);
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

    Poly coeff(const Word& w) const;

    // image in the defining 4x4 representation (coefficients must be constants)
    Mat4 matrix() const;

    std::string str() const;

private:
    Terms terms_;
};

std::string word_str(const Word& w);

enum class Ordering { ScalarK, BorelHC };
const char* ordering_name(Ordering o);
std::array<int, kDim> ordering_rank(Ordering o);

bool is_ordered(const Word& w, Ordering o);

// PBW normal ordering with a per-instance memo of normalized words
class Normalizer {
public:
    explicit Normalizer(Ordering o);
    Element normalize(const Element& e);
    Ordering ordering() const { return ord_; }

private:
    using WordForm = std::map<Word, Scalar>;
    const WordForm& word_form(const Word& w);
    Ordering ord_;
    std::array<int, kDim> rank_;
    std::map<Word, WordForm> memo_;
};

Element normalize(const Element& e, Ordering o);

}  // namespace siegel::uea
