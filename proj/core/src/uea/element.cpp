#include "siegel/uea/element.hpp"

#include <stdexcept>

namespace siegel::uea {

Element::Element(const Poly& c) {
    if (!c.is_zero()) terms_.emplace(Word{}, c);
}

Element Element::letter(int x) { return word(Word{static_cast<std::uint8_t>(x)}); }

Element Element::word(const Word& w, const Poly& c) {
    Element e;
    e.add(w, c);
    return e;
}

void Element::add(const Word& w, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
    for (auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    Element r;
    for (auto& [w1, c1] : a.terms_)
        for (auto& [w2, c2] : b.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add(w, c1 * c2);
        }
    return r;
}

Element operator*(const Poly& c, const Element& a) {
    Element r;
    if (c.is_zero()) return r;
    for (auto& [w, x] : a.terms_) r.add(w, c * x);
    return r;
}

Poly Element::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Poly(0) : it->second;
}

Mat4 Element::matrix() const {
    Mat4 r = mat_zero();
    for (auto& [w, c] : terms_) {
        if (!c.is_constant()) throw std::invalid_argument("matrix image needs constant coefficients");
        Mat4 m = mat_identity();
        for (auto x : w) m = m * basis_matrix(x);
        r = r + c.constant_value() * m;
    }
    return r;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + letter_name(w[i]);
    return s;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [w, c] : terms_) {
        if (!first) s += " + ";
        s += "(" + c.str() + ")*" + word_str(w);
        first = false;
    }
    return s;
}

const char* ordering_name(Ordering o) { return o == Ordering::ScalarK ? "scalarK" : "borelHC"; }

std::array<int, kDim> ordering_rank(Ordering o) {
    std::array<int, kDim> r{};
    if (o == Ordering::ScalarK) {
        for (int x = 0; x < kDim; ++x) r[x] = x;
        return r;
    }
    const int order[kDim] = {B21, Ep11, Ep12, Ep22, B11, B22, B12, Em11, Em12, Em22};
    for (int i = 0; i < kDim; ++i) r[order[i]] = i;
    return r;
}

bool is_ordered(const Word& w, Ordering o) {
    auto r = ordering_rank(o);
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (r[w[i]] > r[w[i + 1]]) return false;
    return true;
}

Normalizer::Normalizer(Ordering o) : ord_(o), rank_(ordering_rank(o)) {}

const Normalizer::WordForm& Normalizer::word_form(const Word& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    WordForm out;
    std::size_t i = 0;
    while (i + 1 < w.size() && rank_[w[i]] <= rank_[w[i + 1]]) ++i;
    if (i + 1 >= w.size()) {
        out.emplace(w, Scalar(1));
    } else {
        // x y = y x + [x, y]
        auto accumulate = [&](const WordForm& f, const Scalar& c) {
            for (auto& [v, a] : f) {
                Scalar& t = out[v];
                t += c * a;
            }
        };
        Word sw = w;
        std::swap(sw[i], sw[i + 1]);
        accumulate(WordForm(word_form(sw)), Scalar(1));
        for (auto& [z, c] : bracket(w[i], w[i + 1])) {
            Word lw(w.begin(), w.begin() + i);
            lw.push_back(static_cast<std::uint8_t>(z));
            lw.insert(lw.end(), w.begin() + i + 2, w.end());
            accumulate(WordForm(word_form(lw)), c);
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    return memo_.emplace(w, std::move(out)).first->second;
}

Element Normalizer::normalize(const Element& e) {
    Element r;
    for (auto& [w, c] : e.terms()) {
        const WordForm& f = word_form(w);
        for (auto& [v, a] : f) r.add(v, c * a);
    }
    return r;
}

Element normalize(const Element& e, Ordering o) {
    Normalizer n(o);
    return n.normalize(e);
}

}  // namespace siegel::uea
