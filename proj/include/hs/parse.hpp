#pragma once

#include "hs/base_ring.hpp"
#include "hs/error.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace hs {

// Recursive-descent reader for expressions such as `3*x^2*y - 1/2` or `x^2*d[2] + d[1]`.
// The context supplies the value type and its arithmetic:
//   Value number(const Int&), atom(const std::string&, const std::vector<int>* bracket),
//   add, sub, mul, neg, pow(Value, unsigned), div(Value, const Int&).
// Division is only allowed by an integer literal.
template <class Ctx>
class ExpressionReader {
public:
    using Value = typename Ctx::Value;

    ExpressionReader(std::string_view text, Ctx& ctx) : s_(text), ctx_(ctx) {}

    Value read() {
        skip();
        if (pos_ >= s_.size())
            fail("empty expression");
        Value v = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Int integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return Int(std::string(s_.substr(start, pos_ - start)));
    }

    Value expr() {
        bool negate = eat('-');
        if (!negate)
            eat('+');
        Value v = term();
        if (negate)
            v = ctx_.neg(v);
        for (;;) {
            if (eat('+'))
                v = ctx_.add(v, term());
            else if (eat('-'))
                v = ctx_.sub(v, term());
            else
                return v;
        }
    }
    Value term() {
        Value v = factor();
        for (;;) {
            if (eat('*')) {
                v = ctx_.mul(v, factor());
            } else if (eat('/')) {
                Int d = integer();
                if (d == 0)
                    fail("division by zero");
                v = ctx_.div(v, d);
            } else {
                return v;
            }
        }
    }
    Value factor() {
        Value v = primary();
        if (eat('^')) {
            Int e = integer();
            if (!e.fits_uint_p())
                fail("exponent too large");
            v = ctx_.pow(v, static_cast<unsigned>(e.get_ui()));
        }
        return v;
    }
    Value primary() {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!eat(')'))
                fail("expected ')'");
            return v;
        }
        if (c == '-') {
            ++pos_;
            return ctx_.neg(factor());
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return ctx_.number(integer());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (pos_ < s_.size() && s_[pos_] == '[') {
                ++pos_;
                std::vector<int> idx;
                do {
                    Int v = integer();
                    if (!v.fits_sint_p())
                        fail("index too large");
                    idx.push_back(static_cast<int>(v.get_si()));
                } while (eat(','));
                if (!eat(']'))
                    fail("expected ']'");
                return ctx_.atom(name, &idx);
            }
            return ctx_.atom(name, nullptr);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    Ctx& ctx_;
    std::size_t pos_ = 0;
};

template <class Ctx>
typename Ctx::Value read_expression(std::string_view text, Ctx& ctx) {
    return ExpressionReader<Ctx>(text, ctx).read();
}

} // namespace hs
