#include "siegel/exact/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace siegel {

namespace {

class Parser {
public:
    Parser(const std::string& t, RegPtr reg) : t_(t), reg_(std::move(reg)) {}

    RatFunc run() {
        RatFunc r = expr();
        skip();
        if (p_ != t_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error (" + what + ") at " + std::to_string(p_) + " in: " + t_);
    }
    void skip() {
        while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
    }
    bool eat(char c) {
        skip();
        if (p_ < t_.size() && t_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }

    RatFunc expr() {
        RatFunc r = term();
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }
    RatFunc term() {
        RatFunc r = factor();
        for (;;) {
            if (eat('*')) r *= factor();
            else if (eat('/')) r = r / factor();
            else return r;
        }
    }
    RatFunc factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        RatFunc b = atom();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            skip();
            std::size_t st = p_;
            while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
            if (st == p_) fail("exponent");
            int e = std::stoi(t_.substr(st, p_ - st));
            b = b.pow(neg ? -e : e);
        }
        return b;
    }
    RatFunc atom() {
        skip();
        if (p_ >= t_.size()) fail("unexpected end");
        char c = t_[p_];
        if (c == '(') {
            ++p_;
            RatFunc r = expr();
            if (!eat(')')) fail("missing )");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = p_;
            while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
            mpq_class q(mpz_class(t_.substr(st, p_ - st)));
            return RatFunc(Poly(Scalar(q), reg_));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t st = p_;
            while (p_ < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[p_])) || t_[p_] == '_')) ++p_;
            std::string name = t_.substr(st, p_ - st);
            if (name == "i") return RatFunc(Poly(Scalar::i(), reg_));
            if (!reg_->find(name)) fail("unknown symbol " + name);
            return RatFunc(Poly::var(name, reg_));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const std::string& t_;
    RegPtr reg_;
    std::size_t p_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text, RegPtr reg) { return Parser(text, std::move(reg)).run(); }

Poly parse_poly(const std::string& text, RegPtr reg) { return parse_ratfunc(text, std::move(reg)).as_poly(); }

}  // namespace siegel
